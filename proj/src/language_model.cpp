#include "nbce/language_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nbce/errors.hpp"

namespace nbce {

void validate_distribution(const Distribution& d, std::size_t vocab_size,
                           double tolerance) {
    if (d.size() != vocab_size) {
        throw ValidationError("distribution size " + std::to_string(d.size()) +
                              " does not match vocabulary size " +
                              std::to_string(vocab_size));
    }
    double sum = 0.0;
    for (double p : d) {
        if (p < 0.0 || !std::isfinite(p)) {
            throw ValidationError("distribution has a negative or non-finite entry");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > tolerance) {
        throw ValidationError("distribution sums to " + std::to_string(sum) +
                              ", expected 1");
    }
}

namespace {

std::u32string context_key(const TokenSeq& tokens, std::size_t begin, std::size_t end) {
    std::u32string key;
    key.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        key.push_back(static_cast<char32_t>(tokens[i]));
    }
    return key;
}

void add_count(std::vector<std::pair<TokenId, std::uint32_t>>& counts, TokenId token) {
    auto it = std::lower_bound(counts.begin(), counts.end(), token,
                               [](const auto& p, TokenId t) { return p.first < t; });
    if (it != counts.end() && it->first == token) {
        ++it->second;
    } else {
        counts.insert(it, {token, 1});
    }
}

} // namespace

NgramLm train_ngram(const std::vector<TokenSeq>& corpus, const Vocabulary& vocab,
                    int order, double alpha) {
    if (order < 1) throw std::invalid_argument("n-gram order must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("smoothing alpha must be > 0");
    if (corpus.empty()) throw ValidationError("cannot train an n-gram model on an empty corpus");

    NgramLm lm;
    lm.vocab_ = vocab;
    lm.order_ = order;
    lm.alpha_ = alpha;

    const std::size_t vocab_size = vocab.size();
    std::vector<std::uint64_t> unigram_counts(vocab_size, 0);
    std::uint64_t total_tokens = 0;

    for (const auto& seq : corpus) {
        TokenSeq tokens = seq;
        tokens.push_back(vocab.eos_id());
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (tokens[i] >= vocab_size) {
                throw ValidationError("training token id out of vocabulary range");
            }
            ++unigram_counts[tokens[i]];
            ++total_tokens;
            const std::size_t max_ctx = std::min<std::size_t>(order - 1, i);
            for (std::size_t k = 1; k <= max_ctx; ++k) {
                auto& cont = lm.contexts_[context_key(tokens, i - k, i)];
                cont.total += 1;
                add_count(cont.counts, tokens[i]);
            }
        }
    }

    lm.unigram_.resize(vocab_size);
    const double denom = static_cast<double>(total_tokens) + alpha * static_cast<double>(vocab_size);
    for (std::size_t w = 0; w < vocab_size; ++w) {
        lm.unigram_[w] = (static_cast<double>(unigram_counts[w]) + alpha) / denom;
    }
    return lm;
}

Distribution NgramLm::next_distribution(const TokenSeq& context) const {
    // The distribution is tracked as scale * unigram + sparse deltas so each
    // backoff level costs O(continuations) instead of O(|V|).
    double scale = 1.0;
    std::vector<std::pair<TokenId, double>> deltas; // sorted by token

    const std::size_t max_ctx = std::min<std::size_t>(order_ - 1, context.size());
    for (std::size_t k = 1; k <= max_ctx; ++k) {
        auto it = contexts_.find(context_key(context, context.size() - k, context.size()));
        // A longer context cannot occur if its own suffix never did.
        if (it == contexts_.end()) break;
        const Continuations& cont = it->second;
        const double denom = static_cast<double>(cont.total) + alpha_;
        const double shrink = alpha_ / denom;

        scale *= shrink;
        for (auto& [tok, weight] : deltas) {
            (void)tok;
            weight *= shrink;
        }
        std::vector<std::pair<TokenId, double>> merged;
        merged.reserve(deltas.size() + cont.counts.size());
        std::size_t a = 0, b = 0;
        while (a < deltas.size() || b < cont.counts.size()) {
            if (b == cont.counts.size() ||
                (a < deltas.size() && deltas[a].first < cont.counts[b].first)) {
                merged.push_back(deltas[a++]);
            } else if (a == deltas.size() || cont.counts[b].first < deltas[a].first) {
                merged.emplace_back(cont.counts[b].first,
                                    static_cast<double>(cont.counts[b].second) / denom);
                ++b;
            } else {
                merged.emplace_back(deltas[a].first,
                                    deltas[a].second +
                                        static_cast<double>(cont.counts[b].second) / denom);
                ++a;
                ++b;
            }
        }
        deltas = std::move(merged);
    }

    Distribution probs(vocab_.size());
    for (std::size_t w = 0; w < probs.size(); ++w) {
        probs[w] = scale * unigram_[w];
    }
    for (const auto& [tok, weight] : deltas) {
        probs[tok] += weight;
    }
    return probs;
}

} // namespace nbce
