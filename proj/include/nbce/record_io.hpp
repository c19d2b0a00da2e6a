#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nbce/decoder.hpp"

namespace nbce {

struct PatientRecord {
    std::string id;
    std::vector<std::string> entries;
    std::optional<std::string> summary;

    bool operator==(const PatientRecord&) const = default;
};

// Dataset files are line-delimited JSON objects with fields `id` (string),
// `entries` (array of strings), optional `summary` (string) and `schema`
// (integer, must equal 1). Malformed lines and duplicate ids are rejected
// with the offending line number; nothing is silently repaired.
std::vector<PatientRecord> load_dataset(const std::filesystem::path& path);
void save_dataset(const std::filesystem::path& path,
                  const std::vector<PatientRecord>& records);

// Decoder settings plus file paths and LM training parameters, persisted as
// flat key=value lines whose keys match the field names exactly.
struct RunConfig {
    std::size_t context_window = 2048;
    std::size_t max_new_tokens = 256;
    double sampling_rate = 0.15;
    int num_strata = 4;
    std::uint64_t seed = 0;
    bool include_prompt_only_context = false;
    std::string selection = "min_entropy";
    std::string dataset;
    std::string vocabulary;
    std::string output;
    std::string trace;
    int order = 3;
    double alpha = 1.0;

    DecoderConfig decoder_config() const;
};

RunConfig load_run_config(const std::filesystem::path& path);
void save_run_config(const std::filesystem::path& path, const RunConfig& config);

} // namespace nbce
