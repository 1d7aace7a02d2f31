#include "subfreq/filter.hpp"
#include "subfreq/errors.hpp"
#include "subfreq/textnorm.hpp"

#include <algorithm>

namespace subfreq {

void LanguageProfile::validate() const {
    if (language.empty())
        throw ConfigError("language profile: empty language");
    if (valid_scripts.empty())
        throw ConfigError("language profile: no valid scripts");
    if (min_target_fraction < 0.0 || min_target_fraction > 1.0)
        throw ConfigError("language profile: min_target_fraction not in [0,1]");
    if (min_lines < 1)
        throw ConfigError("language profile: min_lines must be >= 1");
}

LanguageProfile default_profile(const std::string& language) {
    LanguageProfile p;
    p.language = language;
    if (language == "ja")
        p.valid_scripts = {uni::Script::Han, uni::Script::Hiragana,
                           uni::Script::Katakana};
    else if (language == "zh")
        p.valid_scripts = {uni::Script::Han};
    else if (language == "ko")
        p.valid_scripts = {uni::Script::Hangul};
    else if (language == "ru")
        p.valid_scripts = {uni::Script::Cyrillic};
    else if (language == "el")
        p.valid_scripts = {uni::Script::Greek};
    else if (language == "ar")
        p.valid_scripts = {uni::Script::Arabic};
    else if (language == "he")
        p.valid_scripts = {uni::Script::Hebrew};
    else if (language == "th")
        p.valid_scripts = {uni::Script::Thai};
    else if (language == "hi")
        p.valid_scripts = {uni::Script::Devanagari};
    else
        p.valid_scripts = {uni::Script::Latin};
    return p;
}

std::string_view reject_reason_name(RejectReason r) {
    switch (r) {
    case RejectReason::BelowThreshold: return "below-threshold";
    case RejectReason::TooShort: return "too-short";
    }
    return "unknown";
}

bool has_valid_chars(std::string_view line, const LanguageProfile& profile) {
    if (tokens::contains_sentinel(line))
        return true;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto script = uni::script_of(uni::decode(line, pos));
        if (std::find(profile.valid_scripts.begin(),
                      profile.valid_scripts.end(),
                      script) != profile.valid_scripts.end())
            return true;
    }
    return false;
}

namespace {

// Identifiers are unreliable on very short strings; such lines are exempt
// from language-based rejection and from the file-level fraction.
bool short_line_exempt(const std::string& stripped) {
    return uni::codepoint_count(stripped) < 3;
}

std::string trimmed(std::string s) {
    const auto issp = [](char c) { return c == ' ' || c == '\t'; };
    while (!s.empty() && issp(s.back()))
        s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && issp(s[b]))
        ++b;
    return s.substr(b);
}

} // namespace

CleanOutcome clean_document(const SubtitleDocument& doc,
                            const LanguageProfile& profile,
                            const LanguageIdentifier& identifier) {
    profile.validate();

    CleanOutcome out;
    std::size_t definite = 0, definite_target = 0;

    for (const auto& line : doc.text_lines) {
        LineVerdict v;
        v.line = line;
        v.has_valid_chars = has_valid_chars(line, profile);

        const auto stripped = trimmed(tokens::strip_sentinels(line));
        const bool exempt =
            stripped.empty() || (short_line_exempt(stripped) && v.has_valid_chars);
        if (exempt) {
            v.identified_language = "unknown";
            v.keep = v.has_valid_chars;
        } else {
            const auto guess = identify_line(stripped, identifier);
            v.identified_language = guess.language;
            if (guess.language != "unknown") {
                ++definite;
                if (guess.language == profile.language)
                    ++definite_target;
            }
            v.keep = v.has_valid_chars &&
                     (guess.language == profile.language ||
                      guess.language == "unknown");
        }
        out.verdicts.push_back(std::move(v));
    }

    out.target_fraction =
        definite == 0 ? 1.0
                      : static_cast<double>(definite_target) /
                            static_cast<double>(definite);

    if (out.target_fraction < profile.min_target_fraction) {
        out.rejected = RejectReason::BelowThreshold;
        out.detail = "target fraction " + std::to_string(out.target_fraction);
        return out;
    }

    for (const auto& v : out.verdicts)
        if (v.keep)
            out.lines.push_back(v.line);

    if (out.lines.size() < profile.min_lines) {
        out.rejected = RejectReason::TooShort;
        out.detail = std::to_string(out.lines.size()) + " lines after filtering";
        out.lines.clear();
    }
    return out;
}

} // namespace subfreq
