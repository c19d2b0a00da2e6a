#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nbce/vocab.hpp"

namespace nbce {

struct RougeScore {
    double precision = 0.0; // lcs_len / gen_len, 0 when gen_len = 0
    double recall = 0.0;    // lcs_len / ref_len, 0 when ref_len = 0
    double f1 = 0.0;        // 2PR / (P+R), 0 when P+R = 0
    std::size_t lcs_len = 0;
    std::size_t gen_len = 0;
    std::size_t ref_len = 0;
};

// Exact LCS length via a two-row DP table, O(min(|a|,|b|)) memory.
std::size_t lcs_length(const TokenSeq& a, const TokenSeq& b);

RougeScore rouge_l(const TokenSeq& generated, const TokenSeq& reference);

struct BatchReport {
    std::vector<RougeScore> per_sample;
    double mean_precision = 0.0;
    double mean_recall = 0.0;
    double mean_f1 = 0.0;
};

// Scores each (generated, reference) pair in order and averages. Throws
// ValidationError on an empty list.
BatchReport batch_evaluate(const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs);

// Fixed [0,1] histogram with 20 bins of width 0.05; 1.0 lands in the last bin.
constexpr std::size_t kScoreHistogramBins = 20;
std::array<std::size_t, kScoreHistogramBins> score_histogram(std::span<const double> values);

} // namespace nbce
