#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nbce/vocab.hpp"

namespace nbce {

// Probability vector over the vocabulary: entries are nonnegative and sum
// to 1 within 1e-9.
using Distribution = std::vector<double>;

// Throws ValidationError if d is not a valid distribution of size |vocab|.
void validate_distribution(const Distribution& d, std::size_t vocab_size,
                           double tolerance = 1e-9);

// Next-token predictor. Implementations must be deterministic and safe to
// call from multiple threads after construction.
class LanguageModel {
public:
    virtual ~LanguageModel() = default;

    virtual const Vocabulary& vocabulary() const = 0;

    // p(token | context). Only the last (order-1) context tokens matter for
    // n-gram backends; other backends may use the whole context.
    virtual Distribution next_distribution(const TokenSeq& context) const = 0;
};

// Laplace-smoothed n-gram model with interpolated backoff. Level 0 is the
// add-alpha unigram; each deeper level k blends the observed continuation
// counts of the last k context tokens with the level below:
//
//   p_0(w)       = (c(w) + alpha) / (N + alpha * |V|)
//   p_k(w | ctx) = (c(ctx,w) + alpha * p_{k-1}(w)) / (c(ctx) + alpha)
//
// Every training sequence gets an EOS appended, so c(ctx) equals the sum of
// ctx's continuation counts and each level normalizes exactly.
class NgramLm final : public LanguageModel {
public:
    const Vocabulary& vocabulary() const override { return vocab_; }
    Distribution next_distribution(const TokenSeq& context) const override;

    int order() const { return order_; }
    double alpha() const { return alpha_; }

private:
    friend NgramLm train_ngram(const std::vector<TokenSeq>&, const Vocabulary&,
                               int, double);

    struct Continuations {
        std::uint64_t total = 0;
        std::vector<std::pair<TokenId, std::uint32_t>> counts; // sorted by token
    };

    Vocabulary vocab_;
    int order_ = 3;
    double alpha_ = 1.0;
    std::vector<double> unigram_;
    // Key: context token window (length 1..order-1) packed as char32_t.
    std::unordered_map<std::u32string, Continuations> contexts_;
};

// Counts n-grams of every order up to `order` over the corpus, appending EOS
// to each sequence. Throws ValidationError on an empty corpus and
// std::invalid_argument on bad hyperparameters.
NgramLm train_ngram(const std::vector<TokenSeq>& corpus, const Vocabulary& vocab,
                    int order = 3, double alpha = 1.0);

} // namespace nbce
