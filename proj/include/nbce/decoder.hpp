#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nbce/language_model.hpp"
#include "nbce/vocab.hpp"

namespace nbce {

// One parallel context: a record entry (or a budget-sized slice of one).
struct ContextChunk {
    int source_index = 0; // position within the original record, unique per decode
    TokenSeq tokens;
};

enum class SelectionStrategy { min_entropy };

struct DecoderConfig {
    std::size_t context_window = 2048;
    std::size_t max_new_tokens = 256;
    double sampling_rate = 0.15;
    int num_strata = 4;
    std::uint64_t seed = 0;
    bool include_prompt_only_context = false;
    SelectionStrategy selection = SelectionStrategy::min_entropy;

    // Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

// Per-step record of the parallel evaluation. Entropies, source indices and
// context lengths are parallel arrays in chunk-list order.
struct StepTrace {
    std::vector<double> entropies;           // nats
    std::vector<int> source_indices;
    std::vector<std::size_t> context_lengths;
    int selected_chunk = 0;                  // index into the chunk list
    int selected_source = 0;                 // source_index of the winner
    TokenId token = 0;                       // emitted token (greedy argmax)
};

struct DecodeResult {
    TokenSeq generated;           // EOS excluded
    std::vector<StepTrace> trace; // includes the step that emitted EOS, if any
};

// One chunk per record entry, in original order. Entries longer than
// (context_window - prompt_len - max_new_tokens) are split at that budget;
// split parts get fresh source indices and shift later entries up, while
// empty entries are skipped and leave a gap so the remaining entries keep
// their positions. Throws ValidationError when no entry yields tokens and
// ContextWindowError when the budget is not positive.
std::vector<ContextChunk> split_into_chunks(const std::vector<std::string>& record,
                                            const Vocabulary& vocab,
                                            std::size_t prompt_len,
                                            const DecoderConfig& config);

// Length-stratified sampling: chunks are ordered by (token length,
// source_index) and cut into num_strata equal quantile bins; each non-empty
// bin contributes round(sampling_rate * bin_size) chunks, at least one,
// drawn uniformly without replacement from a generator seeded with
// config.seed. Output is sorted by source_index.
std::vector<ContextChunk> sample_chunks(const std::vector<ContextChunk>& chunks,
                                        const DecoderConfig& config);

// H = -sum p ln p in nats, with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> distribution);

// Evaluates the LM once per chunk on (chunk ++ prompt ++ generated), selects
// the minimum-entropy distribution (ties to the lowest source_index) and
// emits its argmax token. context_window > 0 enables the budget check.
StepTrace decode_step(const LanguageModel& lm,
                      const TokenSeq& prompt,
                      const TokenSeq& generated,
                      const std::vector<ContextChunk>& chunks,
                      std::size_t context_window = 0);

// Full NBCE decode: split, sample, then loop decode_step appending each
// emitted token to the shared continuation until EOS or max_new_tokens.
DecodeResult decode(const LanguageModel& lm,
                    const TokenSeq& prompt,
                    const std::vector<std::string>& record,
                    const DecoderConfig& config);

// Line-delimited trace export: one JSON object per step with fields `step`,
// `selected_chunk`, `entropies` and `token` (string form).
void write_trace(std::ostream& out, const std::vector<StepTrace>& trace,
                 const Vocabulary& vocab);

} // namespace nbce
