#include "subfreq/manifest.hpp"
#include "subfreq/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace subfreq {

bool operator==(const VideoRecord& a, const VideoRecord& b) {
    return a.video_id == b.video_id && a.channel_id == b.channel_id &&
           a.category == b.category && a.duration_s == b.duration_s &&
           a.declared_language == b.declared_language &&
           a.subtitle_path == b.subtitle_path;
}

bool CorpusManifest::operator==(const CorpusManifest& other) const {
    return language == other.language && records == other.records &&
           sample_cap == other.sample_cap;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        if (tab == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

} // namespace

CorpusManifest load_manifest(const std::filesystem::path& path,
                             const std::string& language, bool check_files) {
    std::ifstream in(path);
    if (!in)
        throw ManifestError("cannot open manifest: " + path.string());

    const auto base = path.parent_path();
    CorpusManifest manifest;
    manifest.language = language;

    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;

        const auto cols = split_tabs(line);
        if (cols.size() != 6)
            throw ManifestError("manifest line " + std::to_string(lineno) +
                                ": expected 6 tab-separated columns, got " +
                                std::to_string(cols.size()));

        VideoRecord rec;
        rec.video_id = cols[0];
        rec.channel_id = cols[1];
        rec.category = cols[2];
        rec.declared_language = cols[4];

        if (rec.video_id.empty())
            throw ManifestError("manifest line " + std::to_string(lineno) +
                                ": empty video id");
        if (rec.category.empty())
            throw ManifestError("manifest line " + std::to_string(lineno) +
                                ": empty category");
        if (!seen.insert(rec.video_id).second)
            throw ManifestError("duplicate video id " + rec.video_id);

        const auto& dur = cols[3];
        const auto [p, ec] =
            std::from_chars(dur.data(), dur.data() + dur.size(), rec.duration_s);
        if (ec != std::errc() || p != dur.data() + dur.size() ||
            rec.duration_s < 0)
            throw ManifestError("manifest line " + std::to_string(lineno) +
                                ": bad duration '" + dur + "'");

        std::filesystem::path sub(cols[5]);
        rec.subtitle_path = sub.is_absolute() ? sub : base / sub;
        if (check_files && !std::filesystem::exists(rec.subtitle_path))
            throw ManifestError("missing subtitle file: " +
                                rec.subtitle_path.string());

        manifest.records.push_back(std::move(rec));
    }
    return manifest;
}

void save_manifest(const CorpusManifest& manifest,
                   const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ManifestError("cannot write manifest: " + path.string());
    out << "# video_id\tchannel_id\tcategory\tduration_s\t"
           "declared_language\tsubtitle_path\n";
    for (const auto& r : manifest.records) {
        std::ostringstream dur;
        dur << r.duration_s;
        out << r.video_id << '\t' << r.channel_id << '\t' << r.category
            << '\t' << dur.str() << '\t' << r.declared_language << '\t'
            << r.subtitle_path.string() << '\n';
    }
}

CorpusManifest sample_records(const CorpusManifest& manifest, std::size_t cap,
                              std::uint64_t seed) {
    if (cap == 0)
        throw ConfigError("sample cap must be positive");
    if (cap >= manifest.records.size())
        return manifest;

    // Algorithm R over record indices; survivors re-sorted to keep
    // manifest order.
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> reservoir(cap);
    for (std::size_t i = 0; i < cap; ++i)
        reservoir[i] = i;
    for (std::size_t i = cap; i < manifest.records.size(); ++i) {
        std::uniform_int_distribution<std::size_t> dist(0, i);
        const auto j = dist(rng);
        if (j < cap)
            reservoir[j] = i;
    }
    std::sort(reservoir.begin(), reservoir.end());

    CorpusManifest out;
    out.language = manifest.language;
    out.sample_cap = cap;
    out.records.reserve(cap);
    for (const auto idx : reservoir)
        out.records.push_back(manifest.records[idx]);
    return out;
}

} // namespace subfreq
