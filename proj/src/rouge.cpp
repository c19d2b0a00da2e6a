#include "nbce/rouge.hpp"

#include <algorithm>
#include <cmath>

#include "nbce/errors.hpp"

namespace nbce {

std::size_t lcs_length(const TokenSeq& a, const TokenSeq& b) {
    const TokenSeq& longer = a.size() >= b.size() ? a : b;
    const TokenSeq& shorter = a.size() >= b.size() ? b : a;
    if (shorter.empty()) return 0;

    std::vector<std::size_t> prev(shorter.size() + 1, 0);
    std::vector<std::size_t> curr(shorter.size() + 1, 0);
    for (std::size_t i = 1; i <= longer.size(); ++i) {
        for (std::size_t j = 1; j <= shorter.size(); ++j) {
            if (longer[i - 1] == shorter[j - 1]) {
                curr[j] = prev[j - 1] + 1;
            } else {
                curr[j] = std::max(prev[j], curr[j - 1]);
            }
        }
        std::swap(prev, curr);
    }
    return prev[shorter.size()];
}

RougeScore rouge_l(const TokenSeq& generated, const TokenSeq& reference) {
    RougeScore score;
    score.gen_len = generated.size();
    score.ref_len = reference.size();
    score.lcs_len = lcs_length(generated, reference);
    if (score.gen_len > 0) {
        score.precision = static_cast<double>(score.lcs_len) / static_cast<double>(score.gen_len);
    }
    if (score.ref_len > 0) {
        score.recall = static_cast<double>(score.lcs_len) / static_cast<double>(score.ref_len);
    }
    if (score.precision + score.recall > 0.0) {
        score.f1 = 2.0 * score.precision * score.recall / (score.precision + score.recall);
    }
    return score;
}

BatchReport batch_evaluate(const std::vector<std::pair<TokenSeq, TokenSeq>>& pairs) {
    if (pairs.empty()) throw ValidationError("cannot evaluate an empty batch");

    BatchReport report;
    report.per_sample.reserve(pairs.size());
    for (const auto& [generated, reference] : pairs) {
        report.per_sample.push_back(rouge_l(generated, reference));
    }
    for (const RougeScore& s : report.per_sample) {
        report.mean_precision += s.precision;
        report.mean_recall += s.recall;
        report.mean_f1 += s.f1;
    }
    const double n = static_cast<double>(report.per_sample.size());
    report.mean_precision /= n;
    report.mean_recall /= n;
    report.mean_f1 /= n;
    return report;
}

std::array<std::size_t, kScoreHistogramBins> score_histogram(std::span<const double> values) {
    std::array<std::size_t, kScoreHistogramBins> bins{};
    for (double v : values) {
        auto idx = static_cast<std::size_t>(std::floor(v / 0.05));
        idx = std::min(idx, kScoreHistogramBins - 1);
        ++bins[idx];
    }
    return bins;
}

} // namespace nbce
