#include "subfreq/neardup_reference.hpp"

#include <cmath>
#include <map>

namespace subfreq::reference {

DenseResult dense_cosines(const std::vector<std::string>& doc_ids,
                          const std::vector<std::vector<std::string>>& docs) {
    // vocabulary in sorted order; independent of the indexed path's
    // first-seen term ids
    std::map<std::string, std::size_t> vocab;
    for (const auto& doc : docs)
        for (const auto& tok : doc)
            vocab.emplace(tok, 0);
    std::size_t next = 0;
    for (auto& [_, id] : vocab)
        id = next++;

    const std::size_t n_terms = vocab.size();
    const std::size_t n_docs = docs.size();

    std::vector<std::vector<double>> dense(n_docs,
                                           std::vector<double>(n_terms, 0.0));
    std::vector<double> df(n_terms, 0.0);
    for (std::size_t d = 0; d < n_docs; ++d) {
        for (const auto& tok : docs[d])
            dense[d][vocab[tok]] += 1.0;
        for (std::size_t t = 0; t < n_terms; ++t)
            if (dense[d][t] > 0.0)
                df[t] += 1.0;
    }
    for (std::size_t d = 0; d < n_docs; ++d) {
        double norm_sq = 0.0;
        for (std::size_t t = 0; t < n_terms; ++t) {
            dense[d][t] *= std::log((1.0 + n_docs) / (1.0 + df[t])) + 1.0;
            norm_sq += dense[d][t] * dense[d][t];
        }
        const double norm = std::sqrt(norm_sq);
        for (auto& w : dense[d])
            w /= norm;
    }

    DenseResult out;
    out.doc_ids = doc_ids;
    out.cosine.assign(n_docs, std::vector<double>(n_docs, 0.0));
    for (std::size_t a = 0; a < n_docs; ++a) {
        out.cosine[a][a] = 1.0;
        for (std::size_t b = a + 1; b < n_docs; ++b) {
            double dot = 0.0;
            for (std::size_t t = 0; t < n_terms; ++t)
                dot += dense[a][t] * dense[b][t];
            out.cosine[a][b] = dot;
            out.cosine[b][a] = dot;
        }
    }
    return out;
}

std::vector<DuplicateEdge>
brute_force_pairs(const std::vector<std::string>& doc_ids,
                  const std::vector<std::vector<std::string>>& docs,
                  double threshold) {
    const auto dense = dense_cosines(doc_ids, docs);
    std::vector<DuplicateEdge> edges;
    for (std::size_t a = 0; a < docs.size(); ++a)
        for (std::size_t b = a + 1; b < docs.size(); ++b)
            if (dense.cosine[a][b] >= threshold)
                edges.push_back({a, b, dense.cosine[a][b]});
    return edges;
}

} // namespace subfreq::reference
