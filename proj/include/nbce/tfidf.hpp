#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nbce/vocab.hpp"

namespace nbce {

// Sparse term-weight vector; entries are sorted by term id and strictly
// positive (zeros are dropped).
struct SparseVector {
    std::vector<std::pair<TokenId, double>> entries;

    double norm() const;
};

// Raw count of `term` in `doc` divided by the document length. Throws
// ValidationError on an empty document.
double tf(const TokenSeq& doc, TokenId term);

// dot(u,v) / (|u| |v|); 0 when either vector is zero.
double cosine_similarity(const SparseVector& u, const SparseVector& v);

// Document-frequency model. idf(t) = max(0, ln(|D| / (df(t) + smoothing)));
// terms never seen during fitting weigh 0 instead of dividing by zero.
class TfidfModel {
public:
    static TfidfModel fit(const std::vector<TokenSeq>& documents, double smoothing = 1.0);

    double idf(TokenId term) const;
    SparseVector vector(const TokenSeq& doc) const;

    std::size_t doc_count() const { return doc_count_; }
    double smoothing() const { return smoothing_; }

private:
    std::size_t doc_count_ = 0;
    double smoothing_ = 1.0;
    std::unordered_map<TokenId, std::size_t> doc_freq_;
};

struct RankedPair {
    int note_id;
    int summary_id;
    double similarity;
};

// Descending by similarity, ties by (note_id, summary_id).
struct SimilarityRanking {
    std::vector<RankedPair> pairs;
};

enum class Pairing {
    aligned, // score (note_i, summary_i) only; requires equal list lengths
    cross,   // score the full Cartesian product
};

SimilarityRanking rank_pairs(const TfidfModel& model,
                             const std::vector<TokenSeq>& notes,
                             const std::vector<TokenSeq>& summaries,
                             Pairing pairing);

// Note ids of the first min(k, len) ranking entries, deduplicated keeping
// the first occurrence.
std::vector<int> select_top_k(const SimilarityRanking& ranking, std::size_t k);

struct CorpusStats {
    std::size_t count = 0;
    double mean = 0.0;
    double variance = 0.0; // population (divide by N)
    double std_dev = 0.0;
};

// Throws ValidationError on an empty list.
CorpusStats corpus_stats(const std::vector<std::size_t>& lengths);

} // namespace nbce
