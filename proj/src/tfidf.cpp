#include "nbce/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "nbce/errors.hpp"

namespace nbce {

double SparseVector::norm() const {
    double sq = 0.0;
    for (const auto& [term, weight] : entries) {
        (void)term;
        sq += weight * weight;
    }
    return std::sqrt(sq);
}

double tf(const TokenSeq& doc, TokenId term) {
    if (doc.empty()) throw ValidationError("term frequency of an empty document");
    std::size_t count = 0;
    for (TokenId t : doc) {
        if (t == term) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(doc.size());
}

double cosine_similarity(const SparseVector& u, const SparseVector& v) {
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return 0.0;

    double dot = 0.0;
    std::size_t a = 0, b = 0;
    while (a < u.entries.size() && b < v.entries.size()) {
        if (u.entries[a].first < v.entries[b].first) {
            ++a;
        } else if (v.entries[b].first < u.entries[a].first) {
            ++b;
        } else {
            dot += u.entries[a].second * v.entries[b].second;
            ++a;
            ++b;
        }
    }
    return dot / (nu * nv);
}

TfidfModel TfidfModel::fit(const std::vector<TokenSeq>& documents, double smoothing) {
    if (documents.empty()) throw ValidationError("cannot fit TF-IDF on an empty document list");
    if (smoothing < 0.0) throw std::invalid_argument("idf smoothing must be >= 0");

    TfidfModel model;
    model.doc_count_ = documents.size();
    model.smoothing_ = smoothing;
    for (const auto& doc : documents) {
        std::unordered_set<TokenId> seen(doc.begin(), doc.end());
        for (TokenId t : seen) ++model.doc_freq_[t];
    }
    return model;
}

double TfidfModel::idf(TokenId term) const {
    auto it = doc_freq_.find(term);
    if (it == doc_freq_.end()) return 0.0;
    const double denom = static_cast<double>(it->second) + smoothing_;
    if (denom <= 0.0) return 0.0;
    return std::max(0.0, std::log(static_cast<double>(doc_count_) / denom));
}

SparseVector TfidfModel::vector(const TokenSeq& doc) const {
    SparseVector vec;
    if (doc.empty()) return vec;

    std::map<TokenId, std::size_t> counts;
    for (TokenId t : doc) ++counts[t];

    const double len = static_cast<double>(doc.size());
    for (const auto& [term, count] : counts) {
        const double weight = (static_cast<double>(count) / len) * idf(term);
        if (weight > 0.0) vec.entries.emplace_back(term, weight);
    }
    return vec;
}

SimilarityRanking rank_pairs(const TfidfModel& model,
                             const std::vector<TokenSeq>& notes,
                             const std::vector<TokenSeq>& summaries,
                             Pairing pairing) {
    if (pairing == Pairing::aligned && notes.size() != summaries.size()) {
        throw ValidationError("aligned pairing requires equally many notes and summaries, got " +
                              std::to_string(notes.size()) + " and " +
                              std::to_string(summaries.size()));
    }

    std::vector<SparseVector> note_vecs;
    note_vecs.reserve(notes.size());
    for (const auto& doc : notes) note_vecs.push_back(model.vector(doc));
    std::vector<SparseVector> summary_vecs;
    summary_vecs.reserve(summaries.size());
    for (const auto& doc : summaries) summary_vecs.push_back(model.vector(doc));

    SimilarityRanking ranking;
    if (pairing == Pairing::aligned) {
        ranking.pairs.reserve(notes.size());
        for (std::size_t i = 0; i < notes.size(); ++i) {
            ranking.pairs.push_back({static_cast<int>(i), static_cast<int>(i),
                                     cosine_similarity(note_vecs[i], summary_vecs[i])});
        }
    } else {
        ranking.pairs.reserve(notes.size() * summaries.size());
        for (std::size_t i = 0; i < notes.size(); ++i) {
            for (std::size_t j = 0; j < summaries.size(); ++j) {
                ranking.pairs.push_back({static_cast<int>(i), static_cast<int>(j),
                                         cosine_similarity(note_vecs[i], summary_vecs[j])});
            }
        }
    }

    std::sort(ranking.pairs.begin(), ranking.pairs.end(),
              [](const RankedPair& a, const RankedPair& b) {
                  if (a.similarity != b.similarity) return a.similarity > b.similarity;
                  if (a.note_id != b.note_id) return a.note_id < b.note_id;
                  return a.summary_id < b.summary_id;
              });
    return ranking;
}

std::vector<int> select_top_k(const SimilarityRanking& ranking, std::size_t k) {
    const std::size_t take = std::min(k, ranking.pairs.size());
    std::vector<int> ids;
    std::unordered_set<int> seen;
    for (std::size_t i = 0; i < take; ++i) {
        const int id = ranking.pairs[i].note_id;
        if (seen.insert(id).second) ids.push_back(id);
    }
    return ids;
}

CorpusStats corpus_stats(const std::vector<std::size_t>& lengths) {
    if (lengths.empty()) throw ValidationError("corpus statistics of an empty length list");

    CorpusStats stats;
    stats.count = lengths.size();
    double sum = 0.0;
    for (std::size_t len : lengths) sum += static_cast<double>(len);
    stats.mean = sum / static_cast<double>(stats.count);

    double sq = 0.0;
    for (std::size_t len : lengths) {
        const double d = static_cast<double>(len) - stats.mean;
        sq += d * d;
    }
    stats.variance = sq / static_cast<double>(stats.count);
    stats.std_dev = std::sqrt(stats.variance);
    return stats;
}

} // namespace nbce
