#ifndef CBIR_QUERY_HPP
#define CBIR_QUERY_HPP

#include <array>
#include <vector>

#include "cbir/features.hpp"
#include "cbir/index.hpp"

namespace cbir {

struct QueryResult {
    std::string id;
    std::string source;
    double distance = 0.0;     // Euclidean over psi
    double entropy_gap = 0.0;  // |record entropy - query entropy|, bits
};

/// Records with |entropy - s_q| <= tau, in db order. tau may be infinity.
std::vector<IndexRecord> entropy_filter(const IndexDb& db, double s_q, double tau);

/// Euclidean distance between two log-scaled invariant vectors.
double moment_distance(const std::array<double, 7>& psi_a, const std::array<double, 7>& psi_b);

/// Two-stage retrieval: entropy gate, then rank the survivors by moment
/// distance against the template. At most k results, sorted by
/// (distance ascending, id ascending).
std::vector<QueryResult> query(const IndexDb& db, const FeatureVector& tmpl,
                               double tau, std::size_t k);

} // namespace cbir

#endif
