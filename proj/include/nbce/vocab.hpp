#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nbce {

using TokenId = std::uint32_t;
using TokenSeq = std::vector<TokenId>;

// Dense token-string <-> token-id mapping. Ids 0 and 1 are reserved for the
// end-of-sequence and unknown-token markers; all other ids are assigned in
// insertion order, so the mapping is fully determined by the order tokens
// were first seen.
class Vocabulary {
public:
    Vocabulary();

    TokenId eos_id() const { return 0; }
    TokenId unk_id() const { return 1; }

    std::size_t size() const { return tokens_.size(); }

    // Throws ValidationError when id is out of range.
    const std::string& token(TokenId id) const;

    std::optional<TokenId> find(std::string_view token) const;

    // Returns the existing id when the token is already present.
    TokenId add(std::string_view token);

    // One token per line, line number = token id. The first two lines must
    // be the <eos> and <unk> markers.
    void save(const std::filesystem::path& path) const;
    static Vocabulary load(const std::filesystem::path& path);

    static constexpr const char* kEosMarker = "<eos>";
    static constexpr const char* kUnkMarker = "<unk>";

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TokenId> index_;
};

} // namespace nbce
