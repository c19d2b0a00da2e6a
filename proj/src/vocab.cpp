#include "nbce/vocab.hpp"

#include <fstream>

#include "nbce/errors.hpp"

namespace nbce {

Vocabulary::Vocabulary() {
    add(kEosMarker);
    add(kUnkMarker);
}

const std::string& Vocabulary::token(TokenId id) const {
    if (id >= tokens_.size()) {
        throw ValidationError("token id " + std::to_string(id) +
                              " out of range for vocabulary of size " +
                              std::to_string(tokens_.size()));
    }
    return tokens_[id];
}

std::optional<TokenId> Vocabulary::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

TokenId Vocabulary::add(std::string_view token) {
    auto it = index_.find(std::string(token));
    if (it != index_.end()) return it->second;
    TokenId id = static_cast<TokenId>(tokens_.size());
    tokens_.emplace_back(token);
    index_.emplace(tokens_.back(), id);
    return id;
}

void Vocabulary::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open vocabulary file for writing: " + path.string());
    for (const auto& tok : tokens_) {
        if (tok.find('\n') != std::string::npos) {
            throw ValidationError("vocabulary token contains a newline: " + tok);
        }
        out << tok << '\n';
    }
    if (!out) throw ValidationError("failed writing vocabulary file: " + path.string());
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open vocabulary file: " + path.string());

    Vocabulary vocab;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != kEosMarker) {
                throw ValidationError("vocabulary file must start with " +
                                      std::string(kEosMarker) + " on line 1");
            }
            continue;
        }
        if (line_no == 2) {
            if (line != kUnkMarker) {
                throw ValidationError("vocabulary file must have " +
                                      std::string(kUnkMarker) + " on line 2");
            }
            continue;
        }
        if (vocab.find(line)) {
            throw ValidationError("duplicate vocabulary token on line " +
                                  std::to_string(line_no) + ": " + line);
        }
        vocab.add(line);
    }
    if (line_no < 2) {
        throw ValidationError("vocabulary file too short, needs the reserved markers: " +
                              path.string());
    }
    return vocab;
}

} // namespace nbce
