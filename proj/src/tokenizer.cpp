#include "nbce/tokenizer.hpp"

#include <cctype>

namespace nbce {

namespace {

inline bool is_space(unsigned char c) { return std::isspace(c) != 0; }
inline bool is_punct(unsigned char c) { return std::ispunct(c) != 0; }

} // namespace

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            out.push_back(current);
            current.clear();
        }
    };
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (is_space(c)) {
            flush();
        } else if (is_punct(c)) {
            flush();
            out.emplace_back(1, ch);
        } else {
            current.push_back(static_cast<char>(std::tolower(c)));
        }
    }
    flush();
    return out;
}

TokenSeq tokenize(std::string_view text, Vocabulary& vocab, VocabMode mode) {
    TokenSeq ids;
    for (const auto& tok : split_tokens(text)) {
        if (mode == VocabMode::open) {
            ids.push_back(vocab.add(tok));
        } else {
            auto id = vocab.find(tok);
            ids.push_back(id ? *id : vocab.unk_id());
        }
    }
    return ids;
}

TokenSeq tokenize(std::string_view text, const Vocabulary& vocab) {
    TokenSeq ids;
    for (const auto& tok : split_tokens(text)) {
        auto id = vocab.find(tok);
        ids.push_back(id ? *id : vocab.unk_id());
    }
    return ids;
}

std::string detokenize(const TokenSeq& seq, const Vocabulary& vocab) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i != 0) out.push_back(' ');
        out += vocab.token(seq[i]);
    }
    return out;
}

} // namespace nbce
