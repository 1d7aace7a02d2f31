#pragma once

#include "subfreq/langid.hpp"
#include "subfreq/unicode.hpp"
#include "subfreq/webvtt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subfreq {

struct LanguageProfile {
    std::string language;
    std::vector<uni::Script> valid_scripts;
    double min_target_fraction = 0.95;
    std::size_t min_lines = 3;

    void validate() const; // throws ConfigError on bad fields
};

/// Default script sets per language; Latin as the general fallback.
LanguageProfile default_profile(const std::string& language);

struct LineVerdict {
    std::string line;
    std::string identified_language; // code, or "unknown"
    bool has_valid_chars = false;
    bool keep = false;
};

enum class RejectReason { BelowThreshold, TooShort };

std::string_view reject_reason_name(RejectReason r);

struct CleanOutcome {
    std::optional<RejectReason> rejected; // empty => kept
    std::vector<std::string> lines;       // surviving lines when kept
    std::vector<LineVerdict> verdicts;
    double target_fraction = 1.0; // over definitely-identified lines
    std::string detail;
};

/// True if the line contains a character in one of the profile's scripts.
/// Sentinel tokens count as valid (they are preserved markers).
bool has_valid_chars(std::string_view line, const LanguageProfile& profile);

/// File-level threshold first (over lines with a definite identification;
/// lines under 3 characters with valid script, and sentinel-only lines,
/// are exempt), then per-line valid-character and language filters, then
/// the minimum-line check.
CleanOutcome clean_document(const SubtitleDocument& doc,
                            const LanguageProfile& profile,
                            const LanguageIdentifier& identifier);

} // namespace subfreq
