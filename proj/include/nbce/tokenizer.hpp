#pragma once

#include <string>
#include <string_view>

#include "nbce/vocab.hpp"

namespace nbce {

enum class VocabMode {
    open,   // unseen tokens extend the vocabulary
    closed, // unseen tokens map to unk_id
};

// Lowercases, splits on whitespace and detaches each punctuation character
// as its own token. Empty text yields an empty sequence.
TokenSeq tokenize(std::string_view text, Vocabulary& vocab, VocabMode mode);

// Closed-mode tokenization against a fixed vocabulary.
TokenSeq tokenize(std::string_view text, const Vocabulary& vocab);

// Splits text into token strings without touching any vocabulary.
std::vector<std::string> split_tokens(std::string_view text);

// Joins tokens with single spaces. Throws ValidationError on ids that are
// not valid in vocab.
std::string detokenize(const TokenSeq& seq, const Vocabulary& vocab);

} // namespace nbce
