#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace subfreq {

struct SparseVector {
    // term id -> weight, ids assigned first-seen within a run
    std::vector<std::pair<std::uint32_t, double>> entries; // sorted by id
    double norm = 0.0; // Euclidean norm of the raw tf-idf weights
};

struct DocVectors {
    std::vector<std::string> doc_ids;
    std::vector<std::size_t> token_counts;
    std::vector<SparseVector> vectors; // L2-normalized
    std::size_t term_count = 0;
};

struct DuplicateEdge {
    std::size_t a = 0, b = 0; // indices into doc_ids, a < b
    double cosine = 0.0;
};

struct DuplicateGraph {
    std::vector<std::string> doc_ids;
    std::vector<DuplicateEdge> edges; // sorted by (a, b)
};

/// Unigram tf-idf vectors: tf = raw count, idf = ln((1+N)/(1+df)) + 1,
/// L2-normalized. Documents must be non-empty.
DocVectors vectorize(const std::vector<std::string>& doc_ids,
                     const std::vector<std::vector<std::string>>& doc_tokens);

/// Exact duplicate pairs with cosine >= threshold. Candidates are pruned
/// through an inverted index (only pairs sharing a term are scored) and
/// scored in parallel; no pair is missed. Threshold must be in (0, 1].
DuplicateGraph find_duplicates(const DocVectors& vectors,
                               double threshold = 0.95);

struct Removal {
    std::size_t doc = 0;
    std::size_t kept_neighbor = 0;
    double cosine = 0.0;
};

/// Greedy elimination: repeatedly removes the node of highest current
/// degree (ties: smaller token count, then lexicographic doc id) until no
/// duplicate pair remains. Returns removals in removal order.
std::vector<Removal> eliminate(const DuplicateGraph& graph,
                               const std::vector<std::size_t>& token_counts);

} // namespace subfreq
