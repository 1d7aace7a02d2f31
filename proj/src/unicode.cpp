#include "subfreq/unicode.hpp"
#include "subfreq/errors.hpp"

#include <unicode/uchar.h>
#include <unicode/unorm2.h>
#include <unicode/uscript.h>
#include <unicode/ustring.h>

#include <array>

namespace subfreq::uni {

char32_t decode(std::string_view s, std::size_t& pos) {
    const auto first = static_cast<unsigned char>(s[pos]);
    if (first < 0x80) {
        ++pos;
        return first;
    }
    int extra;
    char32_t cp;
    if ((first & 0xE0) == 0xC0) {
        extra = 1;
        cp = first & 0x1F;
    } else if ((first & 0xF0) == 0xE0) {
        extra = 2;
        cp = first & 0x0F;
    } else if ((first & 0xF8) == 0xF0) {
        extra = 3;
        cp = first & 0x07;
    } else {
        ++pos;
        return 0xFFFD;
    }
    if (pos + extra >= s.size()) {
        ++pos;
        return 0xFFFD;
    }
    for (int i = 1; i <= extra; ++i) {
        const auto b = static_cast<unsigned char>(s[pos + i]);
        if ((b & 0xC0) != 0x80) {
            ++pos;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    pos += 1 + extra;
    return cp;
}

std::string encode(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
    return out;
}

std::vector<char32_t> to_codepoints(std::string_view s) {
    std::vector<char32_t> cps;
    cps.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size())
        cps.push_back(decode(s, pos));
    return cps;
}

std::size_t codepoint_count(std::string_view s) {
    std::size_t n = 0, pos = 0;
    while (pos < s.size()) {
        decode(s, pos);
        ++n;
    }
    return n;
}

std::string nfkc_lower(std::string_view s) {
    UErrorCode ec = U_ZERO_ERROR;
    const UNormalizer2* norm = unorm2_getNFKCInstance(&ec);
    if (U_FAILURE(ec))
        throw std::runtime_error("ICU NFKC instance unavailable");

    std::u16string u16(s.size() + 1, u'\0');
    int32_t ulen = 0;
    u_strFromUTF8(u16.data(), static_cast<int32_t>(u16.size()), &ulen,
                  s.data(), static_cast<int32_t>(s.size()), &ec);
    if (U_FAILURE(ec))
        throw std::runtime_error("invalid UTF-8 input");
    u16.resize(ulen);

    std::u16string normed(u16.size() * 3 + 16, u'\0');
    int32_t nlen = unorm2_normalize(norm, u16.data(), ulen, normed.data(),
                                    static_cast<int32_t>(normed.size()), &ec);
    if (ec == U_BUFFER_OVERFLOW_ERROR) {
        ec = U_ZERO_ERROR;
        normed.resize(nlen);
        nlen = unorm2_normalize(norm, u16.data(), ulen, normed.data(),
                                static_cast<int32_t>(normed.size()), &ec);
    }
    if (U_FAILURE(ec))
        throw std::runtime_error("NFKC normalization failed");
    normed.resize(nlen);

    std::u16string lowered(normed.size() * 2 + 16, u'\0');
    int32_t llen = u_strToLower(lowered.data(),
                                static_cast<int32_t>(lowered.size()),
                                normed.data(), nlen, "", &ec);
    if (ec == U_BUFFER_OVERFLOW_ERROR) {
        ec = U_ZERO_ERROR;
        lowered.resize(llen);
        llen = u_strToLower(lowered.data(),
                            static_cast<int32_t>(lowered.size()),
                            normed.data(), nlen, "", &ec);
    }
    if (U_FAILURE(ec))
        throw std::runtime_error("lowercasing failed");
    lowered.resize(llen);

    std::string out(lowered.size() * 4 + 8, '\0');
    int32_t olen = 0;
    u_strToUTF8(out.data(), static_cast<int32_t>(out.size()), &olen,
                lowered.data(), llen, &ec);
    if (U_FAILURE(ec))
        throw std::runtime_error("UTF-8 re-encoding failed");
    out.resize(olen);
    return out;
}

bool is_word_char(char32_t cp) {
    if (cp == U'_')
        return true;
    const auto uc = static_cast<UChar32>(cp);
    if (u_isalpha(uc))
        return true;
    const auto type = u_charType(uc);
    return type == U_LETTER_NUMBER || type == U_OTHER_NUMBER;
}

bool is_digit_char(char32_t cp) {
    return u_charType(static_cast<UChar32>(cp)) == U_DECIMAL_DIGIT_NUMBER;
}

bool is_space_char(char32_t cp) {
    return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

Script script_of(char32_t cp) {
    UErrorCode ec = U_ZERO_ERROR;
    switch (uscript_getScript(static_cast<UChar32>(cp), &ec)) {
    case USCRIPT_LATIN: return Script::Latin;
    case USCRIPT_HAN: return Script::Han;
    case USCRIPT_HIRAGANA: return Script::Hiragana;
    case USCRIPT_KATAKANA: return Script::Katakana;
    case USCRIPT_HANGUL: return Script::Hangul;
    case USCRIPT_CYRILLIC: return Script::Cyrillic;
    case USCRIPT_GREEK: return Script::Greek;
    case USCRIPT_ARABIC: return Script::Arabic;
    case USCRIPT_HEBREW: return Script::Hebrew;
    case USCRIPT_THAI: return Script::Thai;
    case USCRIPT_DEVANAGARI: return Script::Devanagari;
    default: return Script::Other;
    }
}

Script script_from_name(std::string_view name) {
    static const std::array<std::pair<std::string_view, Script>, 11> table = {{
        {"latin", Script::Latin},
        {"han", Script::Han},
        {"hiragana", Script::Hiragana},
        {"katakana", Script::Katakana},
        {"hangul", Script::Hangul},
        {"cyrillic", Script::Cyrillic},
        {"greek", Script::Greek},
        {"arabic", Script::Arabic},
        {"hebrew", Script::Hebrew},
        {"thai", Script::Thai},
        {"devanagari", Script::Devanagari},
    }};
    for (const auto& [n, s] : table)
        if (n == name)
            return s;
    throw ConfigError("unknown script name: " + std::string(name));
}

} // namespace subfreq::uni
