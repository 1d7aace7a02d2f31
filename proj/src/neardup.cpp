#include "subfreq/neardup.hpp"
#include "subfreq/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace subfreq {

DocVectors vectorize(const std::vector<std::string>& doc_ids,
                     const std::vector<std::vector<std::string>>& doc_tokens) {
    if (doc_ids.empty())
        throw ConfigError("vectorize: no documents");
    if (doc_ids.size() != doc_tokens.size())
        throw ConfigError("vectorize: ids/tokens size mismatch");

    // term ids in first-seen order (single pass, deterministic)
    std::unordered_map<std::string, std::uint32_t> term_ids;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> counts(
        doc_ids.size());
    std::vector<std::uint32_t> df;

    for (std::size_t d = 0; d < doc_tokens.size(); ++d) {
        if (doc_tokens[d].empty())
            throw ConfigError("vectorize: empty document " + doc_ids[d]);
        std::unordered_map<std::uint32_t, std::uint32_t> tf;
        for (const auto& tok : doc_tokens[d]) {
            auto [it, inserted] =
                term_ids.emplace(tok, static_cast<std::uint32_t>(term_ids.size()));
            if (inserted)
                df.push_back(0);
            ++tf[it->second];
        }
        auto& row = counts[d];
        row.assign(tf.begin(), tf.end());
        std::sort(row.begin(), row.end());
        for (const auto& [term, _] : row)
            ++df[term];
    }

    const auto n_docs = static_cast<double>(doc_ids.size());
    DocVectors out;
    out.doc_ids = doc_ids;
    out.term_count = term_ids.size();
    out.vectors.resize(doc_ids.size());
    out.token_counts.resize(doc_ids.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t d = 0; d < std::ptrdiff_t(counts.size()); ++d) {
        auto& vec = out.vectors[d];
        double norm_sq = 0.0;
        vec.entries.reserve(counts[d].size());
        std::size_t n_tokens = 0;
        for (const auto& [term, tf] : counts[d]) {
            n_tokens += tf;
            const double idf = std::log((1.0 + n_docs) / (1.0 + df[term])) + 1.0;
            const double w = tf * idf;
            vec.entries.emplace_back(term, w);
            norm_sq += w * w;
        }
        vec.norm = std::sqrt(norm_sq);
        for (auto& [_, w] : vec.entries)
            w /= vec.norm;
        out.token_counts[d] = n_tokens;
    }
    return out;
}

DuplicateGraph find_duplicates(const DocVectors& vectors, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw ConfigError("duplicate threshold must be in (0,1]");

    const auto n_docs = vectors.vectors.size();

    // inverted index: term -> (doc, weight) postings
    std::vector<std::vector<std::pair<std::uint32_t, double>>> postings(
        vectors.term_count);
    for (std::size_t d = 0; d < n_docs; ++d)
        for (const auto& [term, w] : vectors.vectors[d].entries)
            postings[term].emplace_back(static_cast<std::uint32_t>(d), w);

    // Each thread scores the candidates of a block of target documents
    // against all lower-numbered documents sharing a term.
    const int n_threads = omp_get_max_threads();
    std::vector<std::vector<DuplicateEdge>> found(n_threads);

#pragma omp parallel
    {
        const int tid = omp_get_thread_num();
        std::vector<double> accum(n_docs, 0.0);
        std::vector<std::uint32_t> touched;

#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t d = 1; d < std::ptrdiff_t(n_docs); ++d) {
            touched.clear();
            for (const auto& [term, w] : vectors.vectors[d].entries) {
                for (const auto& [other, ow] : postings[term]) {
                    if (std::ptrdiff_t(other) >= d)
                        break; // postings are in ascending doc order
                    if (accum[other] == 0.0)
                        touched.push_back(other);
                    accum[other] += w * ow;
                }
            }
            for (const auto other : touched) {
                if (accum[other] >= threshold)
                    found[tid].push_back({other, static_cast<std::size_t>(d),
                                          accum[other]});
                accum[other] = 0.0;
            }
        }
    }

    DuplicateGraph graph;
    graph.doc_ids = vectors.doc_ids;
    for (auto& block : found)
        graph.edges.insert(graph.edges.end(), block.begin(), block.end());
    std::sort(graph.edges.begin(), graph.edges.end(),
              [](const DuplicateEdge& x, const DuplicateEdge& y) {
                  return x.a != y.a ? x.a < y.a : x.b < y.b;
              });
    return graph;
}

std::vector<Removal> eliminate(const DuplicateGraph& graph,
                               const std::vector<std::size_t>& token_counts) {
    const auto n = graph.doc_ids.size();
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto& e : graph.edges) {
        adj[e.a].emplace_back(e.b, e.cosine);
        adj[e.b].emplace_back(e.a, e.cosine);
    }

    std::vector<bool> removed(n, false);
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        degree[v] = adj[v].size();

    std::vector<Removal> out;
    while (true) {
        std::size_t victim = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (removed[v] || degree[v] == 0)
                continue;
            if (victim == n || degree[v] > degree[victim] ||
                (degree[v] == degree[victim] &&
                 (token_counts[v] < token_counts[victim] ||
                  (token_counts[v] == token_counts[victim] &&
                   graph.doc_ids[v] < graph.doc_ids[victim]))))
                victim = v;
        }
        if (victim == n)
            break;

        // report the strongest still-present neighbor
        Removal rem;
        rem.doc = victim;
        double best = -1.0;
        for (const auto& [other, cos] : adj[victim]) {
            if (removed[other])
                continue;
            if (cos > best ||
                (cos == best && graph.doc_ids[other] < graph.doc_ids[rem.kept_neighbor])) {
                best = cos;
                rem.kept_neighbor = other;
            }
        }
        rem.cosine = best;
        out.push_back(rem);

        removed[victim] = true;
        degree[victim] = 0;
        for (const auto& [other, _] : adj[victim])
            if (!removed[other] && degree[other] > 0)
                --degree[other];
    }
    return out;
}

} // namespace subfreq
