#include "tmlab/frontier.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tmlab {

FrontierReport frontier_count(const Frontier& frontier) {
    if (frontier.impls.empty()) throw std::invalid_argument("frontier_count: empty frontier");
    int n_cap = std::numeric_limits<int>::max();
    int m_cap = std::numeric_limits<int>::max();
    for (auto [fn, fm] : frontier.impls) {
        if (fn < 2 || fm < 2)
            throw std::invalid_argument("frontier_count: sizes must be >= 2");
        if (fm == 2) n_cap = std::min(n_cap, fn);
        if (fn == 2) m_cap = std::min(m_cap, fm);
    }
    if (n_cap == std::numeric_limits<int>::max() || m_cap == std::numeric_limits<int>::max())
        throw std::invalid_argument(
            "frontier_count: region is infinite (needs a states=2 and a symbols=2 member)");

    // Largest non-dominated m for a given n; 1 means none.
    auto m_max_at = [&](int n) {
        int lim = std::numeric_limits<int>::max();
        for (auto [fn, fm] : frontier.impls)
            if (n >= fn) lim = std::min(lim, fm);
        return lim == std::numeric_limits<int>::max() ? m_cap - 1 : lim - 1;
    };

    FrontierReport rep;
    int band_start = 2;
    int band_m = m_max_at(2);
    for (int n = 2; n < n_cap; ++n) {
        int mm = m_max_at(n);
        if (mm >= 2) rep.total += mm - 1;
        if (mm != band_m) {
            if (band_m >= 2)
                rep.bands.push_back(FrontierBand{band_start, n - 1, band_m,
                                                 static_cast<long long>(n - band_start) * (band_m - 1)});
            band_start = n;
            band_m = mm;
        }
    }
    if (band_m >= 2)
        rep.bands.push_back(FrontierBand{band_start, n_cap - 1, band_m,
                                         static_cast<long long>(n_cap - band_start) * (band_m - 1)});
    return rep;
}

Frontier frontier_preset(const std::string& name) {
    if (name == "n3")
        return Frontier{{{2, 1840}, {3, 1080}, {9, 800}, {44, 8}, {54, 7}, {155, 3}, {276, 2}}};
    if (name == "n4")
        return Frontier{
            {{2, 2450}, {3, 1440}, {9, 1030}, {47, 10}, {58, 9}, {160, 4}, {353, 3}, {922, 2}}};
    throw std::invalid_argument("unknown frontier preset: " + name);
}

long long frontier_published_total(const std::string& name) {
    if (name == "n3") return 37022;
    if (name == "n4") return 51671;
    throw std::invalid_argument("unknown frontier preset: " + name);
}

}  // namespace tmlab
