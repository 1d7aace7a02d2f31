#include "subfreq/textnorm.hpp"
#include "subfreq/errors.hpp"
#include "subfreq/unicode.hpp"

#include <algorithm>

namespace subfreq {

namespace tokens {

bool is_sentinel(std::string_view token) {
    return std::find(kAll.begin(), kAll.end(), token) != kAll.end();
}

bool contains_sentinel(std::string_view line) {
    for (const auto s : kAll)
        if (line.find(s) != std::string_view::npos)
            return true;
    return false;
}

std::string strip_sentinels(std::string_view line) {
    std::string out(line);
    for (const auto s : kAll) {
        std::size_t pos;
        while ((pos = out.find(s)) != std::string::npos)
            out.replace(pos, s.size(), " ");
    }
    return out;
}

} // namespace tokens

Variant variant_from_name(std::string_view name) {
    if (name == "default")
        return Variant::Default;
    if (name == "base")
        return Variant::Base;
    if (name == "lemma")
        return Variant::Lemma;
    if (name == "regex")
        return Variant::Regex;
    throw ConfigError("unknown tokenization variant: " + std::string(name));
}

std::string_view variant_name(Variant v) {
    switch (v) {
    case Variant::Default: return "default";
    case Variant::Base: return "base";
    case Variant::Lemma: return "lemma";
    case Variant::Regex: return "regex";
    }
    return "regex";
}

namespace {

/// If a sentinel starts at byte `i`, returns its length, else 0.
std::size_t sentinel_at(std::string_view line, std::size_t i) {
    for (const auto s : tokens::kAll)
        if (line.substr(i, s.size()) == s)
            return s.size();
    return 0;
}

std::vector<std::string> scan(std::string_view line, bool keep_digit_runs) {
    std::vector<std::string> out;
    std::size_t i = 0;
    const std::size_t n = line.size();
    while (i < n) {
        if (const auto slen = sentinel_at(line, i)) {
            out.emplace_back(line.substr(i, slen));
            i += slen;
            continue;
        }
        std::size_t probe = i;
        const auto cp = uni::decode(line, probe);
        if (uni::is_digit_char(cp)) {
            const std::size_t start = i;
            i = probe;
            while (i < n) {
                probe = i;
                if (!uni::is_digit_char(uni::decode(line, probe)))
                    break;
                i = probe;
            }
            if (keep_digit_runs)
                out.emplace_back(line.substr(start, i - start));
        } else if (uni::is_word_char(cp)) {
            const std::size_t start = i;
            i = probe;
            while (i < n && sentinel_at(line, i) == 0) {
                probe = i;
                const auto next = uni::decode(line, probe);
                if (!uni::is_word_char(next) || uni::is_digit_char(next))
                    break;
                i = probe;
            }
            out.emplace_back(line.substr(start, i - start));
        } else {
            i = probe;
        }
    }
    return out;
}

} // namespace

std::vector<std::string> tokenize_regex(std::string_view line) {
    return scan(line, false);
}

std::vector<std::string> scan_line(std::string_view line) {
    return scan(line, true);
}

std::string normalize(std::string_view token) {
    if (tokens::is_sentinel(token))
        return std::string(token);
    auto out = uni::nfkc_lower(token);
    // Compatibility mappings occasionally introduce whitespace; tokens
    // must stay whitespace-free.
    std::erase_if(out, [](char c) { return c == ' ' || c == '\t'; });
    return out;
}

} // namespace subfreq
