#pragma once

#include "subfreq/textnorm.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace subfreq {

struct FrequencyRow {
    std::string word;
    std::uint64_t count = 0;
    std::uint64_t videos = 0;
    std::uint64_t channels = 0;
    bool special = false;
    std::vector<std::uint64_t> per_category; // parallel to table categories
};

struct FrequencyTable {
    std::string language;
    Variant variant = Variant::Regex;
    std::vector<std::string> categories; // sorted, defines column order
    std::vector<FrequencyRow> rows;      // sorted by count desc, word asc
    std::uint64_t n_tokens = 0;          // explicit totals; Eq-style
    std::uint64_t n_types = 0;           // lookups never re-sum

    const FrequencyRow* find(std::string_view word) const;

    bool operator==(const FrequencyTable&) const;

private:
    mutable std::unordered_map<std::string, std::size_t> index_;
    void build_index() const;
};

/// Streaming aggregator. Mergeable: building over a partition of the
/// streams and merging equals building over the whole.
class FrequencyTableBuilder {
public:
    FrequencyTableBuilder() = default;
    FrequencyTableBuilder(std::string language, Variant variant);

    void add_stream(const TokenStream& stream); // throws on variant mismatch
    void add_category(const std::string& category);
    void merge(FrequencyTableBuilder&& other);
    FrequencyTable finalize() const;

private:
    std::string language_;
    Variant variant_ = Variant::Regex;
    bool variant_set_ = false;

    struct Agg {
        std::uint64_t count = 0;
        std::uint64_t videos = 0;
        std::set<std::string> channels;
        std::map<std::string, std::uint64_t> per_category;
    };
    std::map<std::string, Agg> aggs_;
    std::set<std::string> categories_;
};

FrequencyTable build_table(const std::vector<TokenStream>& streams,
                           const std::string& language, Variant variant);

/// Tab-separated layout: totals header line, column header, one row per
/// word sorted by descending count then word.
void save_table(const FrequencyTable& table, const std::filesystem::path& path);
FrequencyTable load_table(const std::filesystem::path& path,
                          const std::string& language = "",
                          Variant variant = Variant::Regex);

/// An imported frequency or metric list: `word<TAB>count` or
/// `word<TAB>value`, optionally preceded by a `#tokens=.. #types=..`
/// totals header.
struct ExternalList {
    std::unordered_map<std::string, double> values;
    std::optional<std::uint64_t> n_tokens;
    std::optional<std::uint64_t> n_types;
    double min_value = 0.0;
    double max_value = 0.0;
};

ExternalList load_external_list(const std::filesystem::path& path);

} // namespace subfreq
