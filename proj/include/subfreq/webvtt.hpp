#pragma once

#include "subfreq/manifest.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subfreq {

struct Cue {
    std::int64_t start_ms = 0;
    std::int64_t end_ms = 0;
    std::vector<std::string> lines; // markup-free payload lines
};

struct SubtitleDocument {
    VideoRecord video;
    std::vector<Cue> cues; // sorted by (start_ms, end_ms)
    std::vector<std::string> text_lines; // post scroll-collapse
    std::vector<std::string> warnings;
};

/// Parses WebVTT file contents. Requires the WEBVTT signature (BOM
/// tolerated). NOTE/STYLE/REGION blocks are skipped, inline markup and
/// cue settings are stripped, malformed cues are skipped with a warning.
/// Throws VttError when the signature is missing.
SubtitleDocument parse_vtt(std::string_view bytes);

/// Collapses repetition caused by rolling captions: a line equal to one
/// shown in any of the previous `window` cues is emitted only once.
std::vector<std::string> collapse_scrolling(const std::vector<Cue>& cues,
                                            std::size_t window = 1);

/// Replaces censored-word markers ("[ __ ]") with the censored sentinel
/// and other bracketed spans (ASCII [] or fullwidth 【】) with the sound
/// sentinel. Unbalanced brackets are left as literal text. Idempotent.
std::string mark_special_regions(std::string_view line);

} // namespace subfreq
