#include <stdexcept>

#include "tmlab/reduce.hpp"

namespace tmlab {

long long estimate_substates(const SubstateProfile& p) {
    if (p.b < 2 || p.l < 1 || p.k < 1)
        throw std::invalid_argument("estimate_substates: need b >= 2, l >= 1, k >= 1");
    for (long long c : {p.sweep0, p.scan_gt, p.scan_lt, p.scan_ne, p.sweep1, p.v_ge, p.v_le,
                        p.v_lne, p.v_gne})
        if (c < 0) throw std::invalid_argument("estimate_substates: negative count");

    long long levels = p.sweep1_levels;
    if (levels < 0) {
        levels = 0;
        long long pw = 1;
        for (int i = 0; i < p.l; ++i) {
            levels += pw;
            pw *= p.b;
        }
    }
    const long long l = p.l;
    return (l - 1) * p.sweep0 + (2 * l - 1) * (p.scan_gt + p.scan_ne) + (3 * l - 2) * p.scan_lt +
           levels * p.sweep1 + (l - 1) * (p.v_le + p.v_lne + 2 * p.v_gne) +
           p.printed_total_correction;
}

SubstateProfile paper_substate_profile(int b, int l, int k, int delta) {
    if (delta != 0 && delta != 1)
        throw std::invalid_argument("paper_substate_profile: delta must be 0 or 1");
    SubstateProfile p;
    p.b = b;
    p.l = l;
    p.k = k;
    p.delta = delta;
    p.sweep0 = 3;
    p.scan_gt = 6;
    p.scan_lt = 6 + k;
    p.scan_ne = 6;
    p.sweep1 = 17 + 2 * k;
    p.v_ge = 22 + 4 * k;
    p.v_le = 15 + 2 * k;
    p.v_lne = 9 + k;
    p.v_gne = 17 + 6 * k;
    if (delta == 1) {
        p.sweep0 += 1;
        p.scan_gt += 3;
        p.scan_lt += 2 + k;
        p.scan_ne += 1;
        p.v_ge += 8 + k;
        p.v_le += 3;
        p.v_lne += 1 + k;
        p.v_gne += 2;
    }
    // The printed base-3 instantiation sums its read tree over one extra level
    // and carries a constant that does not re-add from its own terms; both are
    // kept as data so the published totals reproduce bit for bit.
    if (b == 3 && l == 2) {
        p.sweep1_levels = 13;
        p.printed_total_correction = 9;
    }
    return p;
}

}  // namespace tmlab
