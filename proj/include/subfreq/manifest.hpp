#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace subfreq {

struct VideoRecord {
    std::string video_id;
    std::string channel_id;
    std::string category;
    double duration_s = 0.0;
    std::string declared_language;
    std::filesystem::path subtitle_path; // absolute after load
};

struct CorpusManifest {
    std::string language;
    std::vector<VideoRecord> records;
    std::optional<std::size_t> sample_cap;

    bool operator==(const CorpusManifest&) const;
};

bool operator==(const VideoRecord& a, const VideoRecord& b);

/// Loads a tab-separated manifest. Columns:
///   video_id  channel_id  category  duration_s  declared_language  subtitle_path
/// `#`-prefixed lines are comments. Relative subtitle paths resolve
/// against the manifest's directory. Rejects duplicate video ids,
/// malformed rows (with line number) and missing subtitle files.
CorpusManifest load_manifest(const std::filesystem::path& path,
                             const std::string& language,
                             bool check_files = true);

void save_manifest(const CorpusManifest& manifest,
                   const std::filesystem::path& path);

/// Uniform sample without replacement via a seeded reservoir; survivors
/// keep their manifest order. cap >= |records| returns the input as is.
CorpusManifest sample_records(const CorpusManifest& manifest,
                              std::size_t cap, std::uint64_t seed);

} // namespace subfreq
