#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subfreq::uni {

/// Decodes one UTF-8 code point starting at `pos`; advances `pos` past it.
/// Invalid sequences decode as U+FFFD and advance by one byte.
char32_t decode(std::string_view s, std::size_t& pos);

std::string encode(char32_t cp);

std::vector<char32_t> to_codepoints(std::string_view s);

std::size_t codepoint_count(std::string_view s);

/// NFKC normalization followed by default-locale lowercasing, in that
/// order (compatibility mappings can produce cased characters).
std::string nfkc_lower(std::string_view s);

/// Character classes used by the tokenizer: the word class is letters,
/// letter/other numerals and underscore; the digit class is decimal digits.
bool is_word_char(char32_t cp);
bool is_digit_char(char32_t cp);
bool is_space_char(char32_t cp);

enum class Script {
    Latin,
    Han,
    Hiragana,
    Katakana,
    Hangul,
    Cyrillic,
    Greek,
    Arabic,
    Hebrew,
    Thai,
    Devanagari,
    Other,
};

Script script_of(char32_t cp);

/// Parses a script-set name from a language profile ("latin", "han", ...).
/// Throws ConfigError on unknown names.
Script script_from_name(std::string_view name);

} // namespace subfreq::uni
