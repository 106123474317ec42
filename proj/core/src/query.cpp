#include "cbir/query.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cbir {

std::vector<IndexRecord> entropy_filter(const IndexDb& db, double s_q, double tau) {
    if (std::isnan(tau) || tau < 0.0)
        throw std::invalid_argument("tau must be >= 0 or infinity");
    std::vector<IndexRecord> out;
    for (const IndexRecord& r : db.records())
        if (std::abs(r.entropy - s_q) <= tau)
            out.push_back(r);
    return out;
}

double moment_distance(const std::array<double, 7>& psi_a,
                       const std::array<double, 7>& psi_b) {
    double s = 0.0;
    for (std::size_t i = 0; i < 7; ++i) {
        const double d = psi_a[i] - psi_b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

std::vector<QueryResult> query(const IndexDb& db, const FeatureVector& tmpl,
                               double tau, std::size_t k) {
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    std::vector<QueryResult> results;
    for (const IndexRecord& r : entropy_filter(db, tmpl.entropy, tau)) {
        QueryResult qr;
        qr.id = r.id;
        qr.source = r.source;
        qr.distance = moment_distance(log_scale(r.phi), tmpl.psi);
        qr.entropy_gap = std::abs(r.entropy - tmpl.entropy);
        results.push_back(std::move(qr));
    }
    std::sort(results.begin(), results.end(),
              [](const QueryResult& a, const QueryResult& b) {
                  if (a.distance != b.distance)
                      return a.distance < b.distance;
                  return a.id < b.id;
              });
    if (results.size() > k)
        results.resize(k);
    return results;
}

} // namespace cbir
