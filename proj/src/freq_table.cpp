#include "subfreq/freq_table.hpp"
#include "subfreq/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace subfreq {

void FrequencyTable::build_index() const {
    if (index_.size() == rows.size())
        return;
    index_.clear();
    index_.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        index_.emplace(rows[i].word, i);
}

const FrequencyRow* FrequencyTable::find(std::string_view word) const {
    build_index();
    const auto it = index_.find(std::string(word));
    return it == index_.end() ? nullptr : &rows[it->second];
}

bool FrequencyTable::operator==(const FrequencyTable& other) const {
    if (language != other.language || variant != other.variant ||
        categories != other.categories || n_tokens != other.n_tokens ||
        n_types != other.n_types || rows.size() != other.rows.size())
        return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& a = rows[i];
        const auto& b = other.rows[i];
        if (a.word != b.word || a.count != b.count || a.videos != b.videos ||
            a.channels != b.channels || a.special != b.special ||
            a.per_category != b.per_category)
            return false;
    }
    return true;
}

FrequencyTableBuilder::FrequencyTableBuilder(std::string language,
                                             Variant variant)
    : language_(std::move(language)), variant_(variant), variant_set_(true) {}

void FrequencyTableBuilder::add_category(const std::string& category) {
    categories_.insert(category);
}

void FrequencyTableBuilder::add_stream(const TokenStream& stream) {
    if (!variant_set_) {
        variant_ = stream.variant;
        variant_set_ = true;
    } else if (stream.variant != variant_) {
        throw TableError("mixed tokenization variants in one table");
    }
    categories_.insert(stream.video.category);

    std::map<std::string, std::uint64_t> local;
    for (const auto& tok : stream.tokens)
        ++local[tok];
    for (const auto& [word, n] : local) {
        auto& agg = aggs_[word];
        agg.count += n;
        agg.videos += 1;
        agg.channels.insert(stream.video.channel_id);
        agg.per_category[stream.video.category] += n;
    }
}

void FrequencyTableBuilder::merge(FrequencyTableBuilder&& other) {
    if (other.variant_set_) {
        if (!variant_set_) {
            variant_ = other.variant_;
            variant_set_ = true;
        } else if (variant_ != other.variant_) {
            throw TableError("mixed tokenization variants in one table");
        }
    }
    categories_.merge(other.categories_);
    for (auto& [word, theirs] : other.aggs_) {
        auto& agg = aggs_[word];
        agg.count += theirs.count;
        agg.videos += theirs.videos;
        agg.channels.merge(theirs.channels);
        for (const auto& [cat, n] : theirs.per_category)
            agg.per_category[cat] += n;
    }
    other.aggs_.clear();
}

FrequencyTable FrequencyTableBuilder::finalize() const {
    FrequencyTable table;
    table.language = language_;
    table.variant = variant_;
    table.categories.assign(categories_.begin(), categories_.end());

    table.rows.reserve(aggs_.size());
    for (const auto& [word, agg] : aggs_) {
        FrequencyRow row;
        row.word = word;
        row.count = agg.count;
        row.videos = agg.videos;
        row.channels = agg.channels.size();
        row.special = tokens::is_sentinel(word);
        row.per_category.assign(table.categories.size(), 0);
        for (std::size_t c = 0; c < table.categories.size(); ++c) {
            const auto it = agg.per_category.find(table.categories[c]);
            if (it != agg.per_category.end())
                row.per_category[c] = it->second;
        }
        table.n_tokens += row.count;
        table.rows.push_back(std::move(row));
    }
    table.n_types = table.rows.size();

    std::sort(table.rows.begin(), table.rows.end(),
              [](const FrequencyRow& a, const FrequencyRow& b) {
                  return a.count != b.count ? a.count > b.count
                                            : a.word < b.word;
              });
    return table;
}

FrequencyTable build_table(const std::vector<TokenStream>& streams,
                           const std::string& language, Variant variant) {
    FrequencyTableBuilder builder(language, variant);
    for (const auto& s : streams)
        builder.add_stream(s);
    return builder.finalize();
}

void save_table(const FrequencyTable& table,
                const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw TableError("cannot write table: " + path.string());
    out << "#tokens=" << table.n_tokens << "\t#types=" << table.n_types
        << '\n';
    out << "word\tcount\tvideos\tchannels\tspecial";
    for (const auto& cat : table.categories)
        out << "\tcount:" << cat;
    out << '\n';
    for (const auto& row : table.rows) {
        out << row.word << '\t' << row.count << '\t' << row.videos << '\t'
            << row.channels << '\t' << (row.special ? 1 : 0);
        for (const auto n : row.per_category)
            out << '\t' << n;
        out << '\n';
    }
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

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw TableError(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

} // namespace

FrequencyTable load_table(const std::filesystem::path& path,
                          const std::string& language, Variant variant) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw TableError("cannot open table: " + path.string());

    FrequencyTable table;
    table.language = language;
    table.variant = variant;

    std::string line;
    if (!std::getline(in, line) || line.rfind("#tokens=", 0) != 0)
        throw TableError("table missing totals header: " + path.string());
    {
        const auto cols = split_tabs(line);
        if (cols.size() != 2 || cols[1].rfind("#types=", 0) != 0)
            throw TableError("malformed totals header: " + line);
        table.n_tokens = parse_u64(cols[0].substr(8), "#tokens");
        table.n_types = parse_u64(cols[1].substr(7), "#types");
    }

    if (!std::getline(in, line))
        throw TableError("table missing column header");
    {
        const auto cols = split_tabs(line);
        if (cols.size() < 5 || cols[0] != "word")
            throw TableError("malformed column header: " + line);
        for (std::size_t i = 5; i < cols.size(); ++i) {
            if (cols[i].rfind("count:", 0) != 0)
                throw TableError("malformed category column: " + cols[i]);
            table.categories.push_back(cols[i].substr(6));
        }
    }

    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto cols = split_tabs(line);
        if (cols.size() != 5 + table.categories.size())
            throw TableError("malformed table row: " + line);
        FrequencyRow row;
        row.word = cols[0];
        row.count = parse_u64(cols[1], "count");
        row.videos = parse_u64(cols[2], "videos");
        row.channels = parse_u64(cols[3], "channels");
        row.special = cols[4] == "1";
        for (std::size_t i = 5; i < cols.size(); ++i)
            row.per_category.push_back(parse_u64(cols[i], "category count"));
        table.rows.push_back(std::move(row));
    }
    if (table.rows.size() != table.n_types)
        throw TableError("row count does not match #types header");
    return table;
}

ExternalList load_external_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw TableError("cannot open list: " + path.string());

    ExternalList list;
    std::string line;
    bool first_value = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line.rfind("#tokens=", 0) == 0) {
            const auto cols = split_tabs(line);
            list.n_tokens = parse_u64(cols[0].substr(8), "#tokens");
            if (cols.size() > 1 && cols[1].rfind("#types=", 0) == 0)
                list.n_types = parse_u64(cols[1].substr(7), "#types");
            continue;
        }
        if (line[0] == '#')
            continue;
        const auto cols = split_tabs(line);
        if (cols.size() < 2)
            throw TableError("list line " + std::to_string(lineno) +
                             ": expected word<TAB>value");
        if (lineno == 1 && (cols[1] == "count" || cols[1] == "value" ||
                            cols[1] == "rating"))
            continue; // column header
        double v = 0.0;
        const auto [p, ec] =
            std::from_chars(cols[1].data(), cols[1].data() + cols[1].size(), v);
        if (ec != std::errc() || p != cols[1].data() + cols[1].size())
            throw TableError("list line " + std::to_string(lineno) +
                             ": bad value '" + cols[1] + "'");
        list.values[cols[0]] = v;
        if (first_value) {
            list.min_value = list.max_value = v;
            first_value = false;
        } else {
            list.min_value = std::min(list.min_value, v);
            list.max_value = std::max(list.max_value, v);
        }
    }
    return list;
}

} // namespace subfreq
