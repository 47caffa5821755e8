#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tmlab {

// Implementation sizes (states, symbols). A contest (n, m) is dominated when
// n >= n' and m >= m' for some member.
struct Frontier {
    std::vector<std::pair<int, int>> impls;
};

struct FrontierBand {
    int n_lo = 0, n_hi = 0;
    int m_hi = 0;  // band covers m in [2, m_hi]
    long long count = 0;
};

struct FrontierReport {
    long long total = 0;
    std::vector<FrontierBand> bands;
};

// Counts the pairs (n, m), n >= 2, m >= 2 that no frontier element dominates,
// with the band decomposition (maximal m per n interval). Throws unless the
// frontier contains some pair with states = 2 and some with symbols = 2.
FrontierReport frontier_count(const Frontier& frontier);

Frontier frontier_preset(const std::string& name);  // "n3" or "n4"

// The published totals the presets are compared against.
long long frontier_published_total(const std::string& name);

}  // namespace tmlab
