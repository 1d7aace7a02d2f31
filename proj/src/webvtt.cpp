#include "subfreq/webvtt.hpp"
#include "subfreq/errors.hpp"
#include "subfreq/textnorm.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace subfreq {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

bool is_ascii_space(char c) { return c == ' ' || c == '\t'; }

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (is_ascii_space(s[b]) || s[b] == '\r'))
        ++b;
    while (e > b && (is_ascii_space(s[e - 1]) || s[e - 1] == '\r'))
        --e;
    return std::string(s.substr(b, e - b));
}

/// Parses "hh:mm:ss.mmm" or "mm:ss.mmm"; hours may exceed two digits.
std::optional<std::int64_t> parse_timestamp(std::string_view ts) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = ts.find(':', start);
        if (colon == std::string_view::npos) {
            parts.push_back(ts.substr(start));
            break;
        }
        parts.push_back(ts.substr(start, colon - start));
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        return std::nullopt;

    const auto last = parts.back();
    const auto dot = last.find('.');
    if (dot == std::string_view::npos || last.size() - dot - 1 != 3)
        return std::nullopt;

    auto to_num = [](std::string_view v) -> std::optional<std::int64_t> {
        if (v.empty())
            return std::nullopt;
        std::int64_t n = 0;
        for (const char c : v) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return std::nullopt;
            n = n * 10 + (c - '0');
        }
        return n;
    };

    const auto secs = to_num(last.substr(0, dot));
    const auto ms = to_num(last.substr(dot + 1));
    const auto mins = to_num(parts[parts.size() - 2]);
    if (!secs || !ms || !mins || *secs > 59 || *mins > 59)
        return std::nullopt;
    std::int64_t hours = 0;
    if (parts.size() == 3) {
        const auto h = to_num(parts[0]);
        if (!h)
            return std::nullopt;
        hours = *h;
    }
    return ((hours * 60 + *mins) * 60 + *secs) * 1000 + *ms;
}

/// Parses a cue timing line "start --> end [settings]".
std::optional<std::pair<std::int64_t, std::int64_t>>
parse_timing(const std::string& line) {
    const auto arrow = line.find("-->");
    if (arrow == std::string::npos)
        return std::nullopt;
    const auto lhs = trim(std::string_view(line).substr(0, arrow));
    auto rest = trim(std::string_view(line).substr(arrow + 3));
    // cue settings follow the end timestamp after whitespace
    const auto sp = rest.find_first_of(" \t");
    const auto rhs = sp == std::string::npos ? rest : rest.substr(0, sp);

    const auto start = parse_timestamp(lhs);
    const auto end = parse_timestamp(rhs);
    if (!start || !end || *end < *start)
        return std::nullopt;
    return std::make_pair(*start, *end);
}

/// Strips inline tags (<i>, <c.x>, <v Speaker>, karaoke timestamps) and
/// decodes the character references WebVTT text allows.
std::string strip_markup(std::string_view payload) {
    std::string out;
    out.reserve(payload.size());
    std::size_t i = 0;
    while (i < payload.size()) {
        const char c = payload[i];
        if (c == '<') {
            const auto close = payload.find('>', i + 1);
            if (close == std::string_view::npos) {
                out.append(payload.substr(i));
                break;
            }
            i = close + 1;
        } else if (c == '&') {
            static constexpr std::pair<std::string_view, std::string_view>
                kEntities[] = {
                    {"&amp;", "&"}, {"&lt;", "<"},  {"&gt;", ">"},
                    {"&nbsp;", " "}, {"&lrm;", ""}, {"&rlm;", ""},
                };
            bool matched = false;
            for (const auto& [ent, repl] : kEntities) {
                if (payload.substr(i, ent.size()) == ent) {
                    out.append(repl);
                    i += ent.size();
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                out.push_back(c);
                ++i;
            }
        } else {
            out.push_back(c);
            ++i;
        }
    }
    return trim(out);
}

} // namespace

SubtitleDocument parse_vtt(std::string_view bytes) {
    if (bytes.substr(0, kBom.size()) == kBom)
        bytes.remove_prefix(kBom.size());

    if (bytes.substr(0, 6) != "WEBVTT" ||
        (bytes.size() > 6 && bytes[6] != '\n' && bytes[6] != '\r' &&
         bytes[6] != ' ' && bytes[6] != '\t'))
        throw VttError("missing WEBVTT signature");

    // split into lines
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= bytes.size()) {
        auto nl = bytes.find('\n', start);
        if (nl == std::string_view::npos)
            nl = bytes.size();
        auto line = std::string(bytes.substr(start, nl - start));
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(std::move(line));
        if (nl == bytes.size())
            break;
        start = nl + 1;
    }

    // group into blank-line separated blocks, skipping the header line
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::string> current;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) {
            if (!current.empty()) {
                blocks.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(lines[i]);
        }
    }
    if (!current.empty())
        blocks.push_back(std::move(current));

    SubtitleDocument doc;
    for (const auto& block : blocks) {
        const auto& head = block.front();
        if (head.rfind("NOTE", 0) == 0 || head.rfind("STYLE", 0) == 0 ||
            head.rfind("REGION", 0) == 0)
            continue;

        std::size_t timing_idx = 0;
        if (head.find("-->") == std::string::npos) {
            // optional cue identifier line
            timing_idx = 1;
            if (timing_idx >= block.size() ||
                block[timing_idx].find("-->") == std::string::npos)
                continue; // header metadata or stray text, not a cue
        }

        const auto timing = parse_timing(block[timing_idx]);
        if (!timing) {
            doc.warnings.push_back("malformed cue timing: " +
                                   block[timing_idx]);
            continue;
        }

        Cue cue;
        cue.start_ms = timing->first;
        cue.end_ms = timing->second;
        for (std::size_t i = timing_idx + 1; i < block.size(); ++i) {
            auto text = strip_markup(block[i]);
            if (!text.empty())
                cue.lines.push_back(std::move(text));
        }
        doc.cues.push_back(std::move(cue));
    }

    std::stable_sort(doc.cues.begin(), doc.cues.end(),
                     [](const Cue& a, const Cue& b) {
                         return a.start_ms != b.start_ms
                                    ? a.start_ms < b.start_ms
                                    : a.end_ms < b.end_ms;
                     });

    for (auto line : collapse_scrolling(doc.cues)) {
        auto marked = mark_special_regions(line);
        if (!marked.empty())
            doc.text_lines.push_back(std::move(marked));
    }
    return doc;
}

std::vector<std::string> collapse_scrolling(const std::vector<Cue>& cues,
                                            std::size_t window) {
    std::vector<std::string> out;
    std::vector<std::vector<std::string>> history;
    for (const auto& cue : cues) {
        for (const auto& line : cue.lines) {
            bool seen = false;
            for (const auto& prev : history)
                if (std::find(prev.begin(), prev.end(), line) != prev.end()) {
                    seen = true;
                    break;
                }
            if (!seen)
                out.push_back(line);
        }
        history.push_back(cue.lines);
        if (history.size() > window)
            history.erase(history.begin());
    }
    return out;
}

std::string mark_special_regions(std::string_view line) {
    constexpr std::string_view kFullwidthOpen = "\xE3\x80\x90";  // 【
    constexpr std::string_view kFullwidthClose = "\xE3\x80\x91"; // 】

    std::string out;
    out.reserve(line.size());
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '[') {
            const auto close = line.find(']', i + 1);
            if (close == std::string_view::npos) {
                out.append(line.substr(i));
                break;
            }
            const auto inner = line.substr(i + 1, close - i - 1);
            bool has_underscore = false;
            bool censored_shape = !inner.empty();
            for (const char c : inner) {
                if (c == '_')
                    has_underscore = true;
                else if (c != ' ')
                    censored_shape = false;
            }
            out.append(censored_shape && has_underscore ? tokens::kCensored
                                                        : tokens::kSound);
            i = close + 1;
        } else if (line.substr(i, 3) == kFullwidthOpen) {
            const auto close = line.find(kFullwidthClose, i + 3);
            if (close == std::string_view::npos) {
                out.append(line.substr(i));
                break;
            }
            out.append(tokens::kSound);
            i = close + kFullwidthClose.size();
        } else {
            out.push_back(line[i]);
            ++i;
        }
    }
    return trim(out);
}

} // namespace subfreq
