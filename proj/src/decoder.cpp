#include "nbce/decoder.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "nbce/errors.hpp"
#include "nbce/tokenizer.hpp"

namespace nbce {

void DecoderConfig::validate() const {
    if (!(sampling_rate > 0.0) || sampling_rate > 1.0) {
        throw std::invalid_argument("sampling_rate must be in (0, 1]");
    }
    if (max_new_tokens < 1) {
        throw std::invalid_argument("max_new_tokens must be >= 1");
    }
    if (context_window < 16) {
        throw std::invalid_argument("context_window must be >= 16");
    }
    if (num_strata < 1) {
        throw std::invalid_argument("num_strata must be >= 1");
    }
}

std::vector<ContextChunk> split_into_chunks(const std::vector<std::string>& record,
                                            const Vocabulary& vocab,
                                            std::size_t prompt_len,
                                            const DecoderConfig& config) {
    config.validate();
    if (record.empty()) throw ValidationError("record has no entries");

    const std::size_t reserved = prompt_len + config.max_new_tokens;
    if (reserved >= config.context_window) {
        throw ContextWindowError(
            "prompt and generation budget leave no room for chunk text within the " +
                std::to_string(config.context_window) + "-token context window",
            -1);
    }
    const std::size_t budget = config.context_window - reserved;

    std::vector<ContextChunk> chunks;
    int offset = 0;
    for (std::size_t entry = 0; entry < record.size(); ++entry) {
        TokenSeq tokens = tokenize(record[entry], vocab);
        if (tokens.empty()) continue; // index gap keeps later entries in place
        std::size_t parts = (tokens.size() + budget - 1) / budget;
        for (std::size_t p = 0; p < parts; ++p) {
            ContextChunk chunk;
            chunk.source_index = static_cast<int>(entry) + offset + static_cast<int>(p);
            auto begin = tokens.begin() + static_cast<std::ptrdiff_t>(p * budget);
            auto end = tokens.begin() +
                       static_cast<std::ptrdiff_t>(std::min(tokens.size(), (p + 1) * budget));
            chunk.tokens.assign(begin, end);
            chunks.push_back(std::move(chunk));
        }
        offset += static_cast<int>(parts) - 1;
    }
    if (chunks.empty()) throw ValidationError("record has no non-empty entries");
    return chunks;
}

std::vector<ContextChunk> sample_chunks(const std::vector<ContextChunk>& chunks,
                                        const DecoderConfig& config) {
    config.validate();
    if (chunks.empty()) return {};

    std::vector<std::size_t> order(chunks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (chunks[a].tokens.size() != chunks[b].tokens.size()) {
            return chunks[a].tokens.size() < chunks[b].tokens.size();
        }
        return chunks[a].source_index < chunks[b].source_index;
    });

    std::mt19937_64 rng(config.seed);
    const std::size_t n = order.size();
    const std::size_t strata = static_cast<std::size_t>(config.num_strata);
    std::vector<std::size_t> picked;

    for (std::size_t b = 0; b < strata; ++b) {
        const std::size_t lo = b * n / strata;
        const std::size_t hi = (b + 1) * n / strata;
        if (lo >= hi) continue;
        const std::size_t bin_size = hi - lo;
        std::size_t take = static_cast<std::size_t>(
            std::lround(config.sampling_rate * static_cast<double>(bin_size)));
        take = std::clamp<std::size_t>(take, 1, bin_size);

        // Partial Fisher-Yates gives a uniform subset.
        std::vector<std::size_t> bin(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                     order.begin() + static_cast<std::ptrdiff_t>(hi));
        for (std::size_t i = 0; i < take; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, bin.size() - 1);
            std::swap(bin[i], bin[pick(rng)]);
            picked.push_back(bin[i]);
        }
    }

    std::sort(picked.begin(), picked.end(), [&](std::size_t a, std::size_t b) {
        return chunks[a].source_index < chunks[b].source_index;
    });
    std::vector<ContextChunk> out;
    out.reserve(picked.size());
    for (std::size_t idx : picked) out.push_back(chunks[idx]);
    return out;
}

double shannon_entropy(std::span<const double> distribution) {
    double h = 0.0;
    for (double p : distribution) {
        if (p > 0.0) h -= p * std::log(p);
    }
    return h;
}

StepTrace decode_step(const LanguageModel& lm,
                      const TokenSeq& prompt,
                      const TokenSeq& generated,
                      const std::vector<ContextChunk>& chunks,
                      std::size_t context_window) {
    if (chunks.empty()) throw ValidationError("decode_step requires at least one chunk");

    StepTrace trace;
    trace.entropies.reserve(chunks.size());
    trace.source_indices.reserve(chunks.size());
    trace.context_lengths.reserve(chunks.size());

    int best = -1;
    double best_entropy = 0.0;
    Distribution best_dist;

    TokenSeq context;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        const ContextChunk& chunk = chunks[i];
        context.clear();
        context.reserve(chunk.tokens.size() + prompt.size() + generated.size());
        context.insert(context.end(), chunk.tokens.begin(), chunk.tokens.end());
        context.insert(context.end(), prompt.begin(), prompt.end());
        context.insert(context.end(), generated.begin(), generated.end());

        if (context_window > 0 && context.size() > context_window) {
            throw ContextWindowError(
                "context for chunk with source index " +
                    std::to_string(chunk.source_index) + " is " +
                    std::to_string(context.size()) + " tokens, exceeding the window of " +
                    std::to_string(context_window),
                chunk.source_index);
        }
        assert(context_window == 0 || context.size() <= context_window);

        Distribution dist = lm.next_distribution(context);
        const double h = shannon_entropy(dist);
        trace.entropies.push_back(h);
        trace.source_indices.push_back(chunk.source_index);
        trace.context_lengths.push_back(context.size());

        const bool wins = best < 0 || h < best_entropy ||
                          (h == best_entropy &&
                           chunk.source_index < chunks[static_cast<std::size_t>(best)].source_index);
        if (wins) {
            best = static_cast<int>(i);
            best_entropy = h;
            best_dist = std::move(dist);
        }
    }

    trace.selected_chunk = best;
    trace.selected_source = chunks[static_cast<std::size_t>(best)].source_index;
    trace.token = static_cast<TokenId>(
        std::max_element(best_dist.begin(), best_dist.end()) - best_dist.begin());
    return trace;
}

DecodeResult decode(const LanguageModel& lm,
                    const TokenSeq& prompt,
                    const std::vector<std::string>& record,
                    const DecoderConfig& config) {
    config.validate();
    const Vocabulary& vocab = lm.vocabulary();

    std::vector<ContextChunk> chunks =
        split_into_chunks(record, vocab, prompt.size(), config);
    chunks = sample_chunks(chunks, config);
    if (config.include_prompt_only_context) {
        ContextChunk prompt_only;
        prompt_only.source_index = -1;
        chunks.insert(chunks.begin(), std::move(prompt_only));
    }
    if (chunks.empty()) throw ValidationError("no chunks survived sampling");

    DecodeResult result;
    for (std::size_t step = 0; step < config.max_new_tokens; ++step) {
        StepTrace trace =
            decode_step(lm, prompt, result.generated, chunks, config.context_window);
        const TokenId token = trace.token;
        result.trace.push_back(std::move(trace));
        if (token == vocab.eos_id()) break;
        result.generated.push_back(token);
    }
    return result;
}

void write_trace(std::ostream& out, const std::vector<StepTrace>& trace,
                 const Vocabulary& vocab) {
    for (std::size_t step = 0; step < trace.size(); ++step) {
        nlohmann::json line;
        line["step"] = step;
        line["selected_chunk"] = trace[step].selected_chunk;
        line["entropies"] = trace[step].entropies;
        line["token"] = vocab.token(trace[step].token);
        out << line.dump() << '\n';
    }
}

} // namespace nbce
