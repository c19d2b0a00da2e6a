#pragma once

#include <stdexcept>
#include <string>

namespace nbce {

// Invalid input data: malformed files, vocabulary mismatches, empty corpora.
// The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A per-chunk context would exceed the model's context window.
class ContextWindowError : public ValidationError {
public:
    ContextWindowError(const std::string& what, int source_index)
        : ValidationError(what), source_index_(source_index) {}

    int source_index() const { return source_index_; }

private:
    int source_index_;
};

} // namespace nbce
