#include "subfreq/eval.hpp"
#include "subfreq/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace subfreq {

DatasetKind dataset_kind_from_name(std::string_view name) {
    if (name == "ldt")
        return DatasetKind::Ldt;
    if (name == "familiarity")
        return DatasetKind::Familiarity;
    if (name == "complexity")
        return DatasetKind::Complexity;
    throw ConfigError("unknown dataset kind: " + std::string(name));
}

std::string_view dataset_kind_name(DatasetKind k) {
    switch (k) {
    case DatasetKind::Ldt: return "ldt";
    case DatasetKind::Familiarity: return "familiarity";
    case DatasetKind::Complexity: return "complexity";
    }
    return "familiarity";
}

void EvalDataset::validate() const {
    if (items.empty())
        throw ConfigError("dataset '" + name + "' has no items");
    for (const auto& item : items) {
        if (!std::isfinite(item.rating))
            throw ConfigError("dataset '" + name + "': non-finite rating for '" +
                              item.text + "'");
        if (kind == DatasetKind::Complexity &&
            (item.rating < 0.0 || item.rating > 1.0))
            throw ConfigError("dataset '" + name +
                              "': complexity rating outside [0,1] for '" +
                              item.text + "'");
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

std::optional<double> parse_double(const std::string& s) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        return std::nullopt;
    return v;
}

} // namespace

EvalDataset load_dataset(const std::filesystem::path& path,
                         const std::string& name, const std::string& language,
                         DatasetKind kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open dataset: " + path.string());

    EvalDataset ds;
    ds.name = name;
    ds.language = language;
    ds.kind = kind;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        const auto cols = split_tabs(line);
        if (cols.size() < 2)
            throw ConfigError("dataset line " + std::to_string(lineno) +
                              ": expected item<TAB>rating");
        const auto rating = parse_double(cols[1]);
        if (!rating) {
            if (lineno == 1)
                continue; // header row
            throw ConfigError("dataset line " + std::to_string(lineno) +
                              ": bad rating '" + cols[1] + "'");
        }
        EvalItem item;
        item.text = cols[0];
        item.rating = *rating;
        if (cols.size() > 2)
            item.context = cols[2];
        ds.items.push_back(std::move(item));
    }
    ds.validate();
    return ds;
}

EvalDataset load_raw_rt_dataset(const std::filesystem::path& path,
                                const std::string& name,
                                const std::string& language, double lo_ms,
                                double hi_ms) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open raw-RT file: " + path.string());

    std::vector<RtTrial> trials;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        const auto cols = split_tabs(line);
        if (cols.size() < 2)
            throw ConfigError("raw-RT line " + std::to_string(lineno) +
                              ": expected item<TAB>rt_ms");
        const auto rt = parse_double(cols[1]);
        if (!rt) {
            if (lineno == 1)
                continue; // header row
            throw ConfigError("raw-RT line " + std::to_string(lineno) +
                              ": bad rt '" + cols[1] + "'");
        }
        trials.push_back({cols[0], *rt});
    }

    EvalDataset ds;
    ds.name = name;
    ds.language = language;
    ds.kind = DatasetKind::Ldt;
    for (auto& [word, mean] : preprocess_raw_rt(trials, lo_ms, hi_ms))
        ds.items.push_back({std::move(word), mean, {}});
    ds.validate();
    return ds;
}

CorrelationResult correlate(const FrequencyProvider& provider,
                            const EvalDataset& dataset, bool include_special) {
    std::vector<double> x, y;
    x.reserve(dataset.items.size());
    for (const auto& item : dataset.items) {
        const auto v = provider.value_for_item(item.text, include_special);
        if (!v)
            continue;
        x.push_back(*v);
        y.push_back(item.rating);
    }
    if (x.size() < 3)
        throw StatsError("correlate: fewer than 3 usable items in '" +
                         dataset.name + "'");
    CorrelationResult out;
    out.r = pearson(x, y);
    out.n = x.size();
    out.coverage = static_cast<double>(x.size()) /
                   static_cast<double>(dataset.items.size());
    return out;
}

ComparisonReport compare_providers(
    const std::vector<std::pair<std::string, const FrequencyProvider*>>&
        providers,
    const std::string& baseline_name, const EvalDataset& dataset,
    bool include_special) {
    const FrequencyProvider* baseline = nullptr;
    for (const auto& [name, p] : providers)
        if (name == baseline_name)
            baseline = p;
    if (!baseline)
        throw ConfigError("baseline provider '" + baseline_name +
                          "' not in provider list");

    // per-provider item values, aligned with dataset items
    std::vector<std::vector<std::optional<double>>> values;
    values.reserve(providers.size());
    for (const auto& [_, p] : providers) {
        std::vector<std::optional<double>> v;
        v.reserve(dataset.items.size());
        for (const auto& item : dataset.items)
            v.push_back(p->value_for_item(item.text, include_special));
        values.push_back(std::move(v));
    }

    std::size_t baseline_idx = 0;
    for (std::size_t i = 0; i < providers.size(); ++i)
        if (providers[i].first == baseline_name)
            baseline_idx = i;

    ComparisonReport report;
    report.dataset = dataset.name;
    report.baseline = baseline_name;

    for (std::size_t i = 0; i < providers.size(); ++i) {
        // pairwise-complete intersection with the baseline
        std::vector<double> xp, xb, y;
        std::size_t usable = 0;
        for (std::size_t k = 0; k < dataset.items.size(); ++k) {
            if (values[i][k])
                ++usable;
            if (values[i][k] && values[baseline_idx][k]) {
                xp.push_back(*values[i][k]);
                xb.push_back(*values[baseline_idx][k]);
                y.push_back(dataset.items[k].rating);
            }
        }
        if (xp.size() < 4)
            throw StatsError("comparison '" + providers[i].first +
                             "' vs baseline: fewer than 4 shared items");

        ReportRow row;
        row.provider = providers[i].first;
        row.n = xp.size();
        row.coverage = static_cast<double>(usable) /
                       static_cast<double>(dataset.items.size());
        row.r = pearson(xp, y);
        if (i == baseline_idx) {
            row.p_vs_baseline = 1.0;
        } else {
            const double rb = pearson(xb, y);
            const double rpb = pearson(xp, xb);
            row.p_vs_baseline =
                steiger_test(row.r, rb, rpb, xp.size()).p;
        }
        row.stars = significance_stars(row.p_vs_baseline);
        report.rows.push_back(std::move(row));
    }
    return report;
}

void write_report_tsv(const ComparisonReport& report,
                      const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write report: " + path.string());
    out << "# dataset=" << report.dataset << "\tbaseline=" << report.baseline
        << '\n';
    out << "provider\tr\tn\tp_vs_baseline\tstars\tcoverage\n";
    char buf[64];
    for (const auto& row : report.rows) {
        out << row.provider << '\t';
        std::snprintf(buf, sizeof buf, "%.6f", row.r);
        out << buf << '\t' << row.n << '\t';
        std::snprintf(buf, sizeof buf, "%.6g", row.p_vs_baseline);
        out << buf << '\t' << stars_text(row.stars) << '\t';
        std::snprintf(buf, sizeof buf, "%.4f", row.coverage);
        out << buf << '\n';
    }
}

void write_report_json(const ComparisonReport& report,
                       const std::filesystem::path& path) {
    nlohmann::json j;
    j["dataset"] = report.dataset;
    j["baseline"] = report.baseline;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        j["rows"].push_back({
            {"provider", row.provider},
            {"r", row.r},
            {"n", row.n},
            {"p_vs_baseline", row.p_vs_baseline},
            {"stars", std::string(stars_text(row.stars))},
            {"coverage", row.coverage},
        });
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write report: " + path.string());
    out << j.dump(2) << '\n';
}

LcpResult evaluate_lcp(const std::string& provider_name,
                       const FrequencyProvider& provider,
                       const EvalDataset& trial, const EvalDataset& test,
                       bool include_special,
                       std::vector<std::pair<std::string, double>>*
                           predictions_out) {
    auto collect = [&](const EvalDataset& ds, std::vector<double>& x,
                       std::vector<double>& y,
                       std::vector<std::string>* names) {
        for (const auto& item : ds.items) {
            const auto v = provider.value_for_item(item.text, include_special);
            if (!v)
                continue;
            x.push_back(*v);
            y.push_back(item.rating);
            if (names)
                names->push_back(item.text);
        }
    };

    std::vector<double> trial_x, trial_y;
    collect(trial, trial_x, trial_y, nullptr);
    if (trial_x.size() < 2)
        throw StatsError("lcp: fewer than 2 usable trial items");

    std::vector<double> test_x, test_y;
    std::vector<std::string> test_names;
    collect(test, test_x, test_y, &test_names);
    if (test_x.size() < 3)
        throw StatsError("lcp: fewer than 3 usable test items");

    LcpResult out;
    out.provider = provider_name;
    out.model = fit_ols(trial_x, trial_y);
    const auto score = predict_and_score(out.model, test_x, test_y);
    out.r2 = score.r2;
    out.r = score.r;
    out.n = test_x.size();
    if (predictions_out) {
        predictions_out->clear();
        for (std::size_t i = 0; i < test_names.size(); ++i)
            predictions_out->emplace_back(test_names[i],
                                          score.predictions[i]);
    }
    return out;
}

} // namespace subfreq
