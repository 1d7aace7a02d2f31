#pragma once

#include "subfreq/neardup.hpp"

#include <string>
#include <vector>

namespace subfreq::reference {

/// Serial dense reference for the duplicate detector: recomputes tf-idf
/// from scratch into dense arrays and compares every pair with a double
/// loop. Kept as the test oracle and the benchmark baseline; must stay
/// independent of the indexed implementation.
struct DenseResult {
    std::vector<std::string> doc_ids;
    std::vector<std::vector<double>> cosine; // full symmetric matrix
};

DenseResult dense_cosines(const std::vector<std::string>& doc_ids,
                          const std::vector<std::vector<std::string>>& docs);

/// All pairs with cosine >= threshold, sorted by (a, b).
std::vector<DuplicateEdge>
brute_force_pairs(const std::vector<std::string>& doc_ids,
                  const std::vector<std::vector<std::string>>& docs,
                  double threshold);

} // namespace subfreq::reference
