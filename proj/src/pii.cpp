#include "subfreq/pii.hpp"
#include "subfreq/textnorm.hpp"
#include "subfreq/unicode.hpp"

#include <cctype>
#include <regex>

namespace subfreq {

namespace {

const std::regex& email_re() {
    static const std::regex re(
        R"([A-Za-z0-9._%+\-]+@[A-Za-z0-9\-]+(\.[A-Za-z0-9\-]+)*\.[A-Za-z]{2,})");
    return re;
}

const std::regex& proto_url_re() {
    static const std::regex re(R"(https?://[^ \t]+)");
    return re;
}

// host with at least two labels, alphabetic TLD, and a path or query
const std::regex& bare_url_re() {
    static const std::regex re(
        R"(([A-Za-z0-9\-]+\.)+[A-Za-z]{2,}(/[^ \t]*|\?[^ \t]+))");
    return re;
}

const std::regex& handle_re() {
    static const std::regex re(R"(@[A-Za-z0-9_]+)");
    return re;
}

bool boundary_ok(const std::string& text, std::size_t start) {
    if (start == 0)
        return true;
    const auto prev = static_cast<unsigned char>(text[start - 1]);
    if (prev >= 0x80)
        return false; // treat preceding non-ASCII as word-like
    return !(std::isalnum(prev) || prev == '_' || prev == '@' || prev == '.');
}

std::string replace_all(const std::string& text, const std::regex& re,
                        std::string_view sentinel, bool check_boundary) {
    std::string out;
    out.reserve(text.size());
    auto it = std::sregex_iterator(text.begin(), text.end(), re);
    const auto end = std::sregex_iterator();
    std::size_t pos = 0;
    for (; it != end; ++it) {
        const auto start = static_cast<std::size_t>(it->position());
        if (check_boundary && !boundary_ok(text, start))
            continue;
        out.append(text, pos, start - pos);
        out.append(sentinel);
        pos = start + static_cast<std::size_t>(it->length());
    }
    out.append(text, pos, text.size() - pos);
    return out;
}

bool full_match(const std::string& token, const std::regex& re) {
    return std::regex_match(token, re);
}

bool all_digits(const std::string& token) {
    if (token.empty())
        return false;
    std::size_t pos = 0;
    while (pos < token.size())
        if (!uni::is_digit_char(uni::decode(token, pos)))
            return false;
    return true;
}

} // namespace

std::string mask_pii_line(std::string_view line) {
    std::string out(line);
    out = replace_all(out, email_re(), tokens::kEmail, false);
    out = replace_all(out, proto_url_re(), tokens::kUrl, false);
    out = replace_all(out, bare_url_re(), tokens::kUrl, true);
    out = replace_all(out, handle_re(), tokens::kHandle, true);
    return out;
}

std::vector<std::string> mask_pii(std::vector<std::string> tokens) {
    for (auto& token : tokens) {
        if (tokens::is_sentinel(token))
            continue;
        if (full_match(token, email_re()))
            token = tokens::kEmail;
        else if (full_match(token, proto_url_re()) ||
                 full_match(token, bare_url_re()))
            token = tokens::kUrl;
        else if (full_match(token, handle_re()))
            token = tokens::kHandle;
        else if (all_digits(token))
            token = tokens::kNum;
    }
    return tokens;
}

} // namespace subfreq
