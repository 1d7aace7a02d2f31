#pragma once

#include "subfreq/manifest.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace subfreq {

namespace tokens {
// Sentinel tokens use bracket glyphs that no tokenizer splits and no
// normalization rewrites.
inline constexpr std::string_view kCensored = "⟦CENSORED⟧";
inline constexpr std::string_view kSound = "⟦SOUND⟧";
inline constexpr std::string_view kEmail = "⟦EMAIL⟧";
inline constexpr std::string_view kUrl = "⟦URL⟧";
inline constexpr std::string_view kHandle = "⟦HANDLE⟧";
inline constexpr std::string_view kNum = "⟦NUM⟧";

inline constexpr std::array<std::string_view, 6> kAll = {
    kCensored, kSound, kEmail, kUrl, kHandle, kNum,
};

bool is_sentinel(std::string_view token);

/// True if the line contains any sentinel token.
bool contains_sentinel(std::string_view line);

/// Removes sentinel tokens from a line (used before language
/// identification and valid-character checks).
std::string strip_sentinels(std::string_view line);
} // namespace tokens

enum class Variant { Default, Base, Lemma, Regex };

Variant variant_from_name(std::string_view name);
std::string_view variant_name(Variant v);

struct TokenStream {
    VideoRecord video;
    std::vector<std::string> tokens;
    Variant variant = Variant::Regex;
};

/// Orthographic tokenization: maximal runs of word-class characters that
/// are not digit-class. Sentinel tokens pass through atomically; digit
/// runs are dropped (the pipeline keeps them via scan_line so they can be
/// masked).
std::vector<std::string> tokenize_regex(std::string_view line);

/// Like tokenize_regex but also emits maximal digit-class runs as tokens,
/// in order. This is the pipeline's scanner; digit runs become the number
/// sentinel at the masking step.
std::vector<std::string> scan_line(std::string_view line);

/// NFKC normalization then lowercasing. Sentinels are returned unchanged.
/// Idempotent.
std::string normalize(std::string_view token);

} // namespace subfreq
