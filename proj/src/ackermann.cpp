#include "tmlab/ackermann.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace tmlab {

namespace {

struct Overflow {
    int64_t f;
    BigInt c;
};

uint64_t bit_size(const BigInt& v) { return v == 0 ? 1 : boost::multiprecision::msb(v) + 1; }

// Tower of c twos, 2^2^...^2.
BigInt tower(const BigInt& c, uint64_t budget) {
    BigInt v = 1;
    for (BigInt i = 0; i < c; ++i) {
        // 2^v has v+1 bits.
        if (v + 1 > BigInt(budget)) throw Overflow{3, c};
        v = BigInt(1) << static_cast<uint64_t>(v);
    }
    return v;
}

BigInt eval(int64_t f, const BigInt& c, uint64_t budget,
            std::map<std::pair<int64_t, int64_t>, BigInt>& memo) {
    if (f < 1 || c < 1) throw std::invalid_argument("ackermann: f and c must be >= 1");
    if (c == 1) return 2;
    if (f == 1) {
        BigInt v = 2 * c;
        if (bit_size(v) > budget) throw Overflow{1, c};
        return v;
    }
    if (f == 2) {
        if (c + 1 > BigInt(budget)) throw Overflow{2, c};
        return BigInt(1) << static_cast<uint64_t>(c);
    }
    if (f == 3) return tower(c, budget);

    bool small = c <= 1000000;
    std::pair<int64_t, int64_t> key{f, small ? static_cast<int64_t>(c) : -1};
    if (small) {
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    BigInt inner = eval(f, c - 1, budget, memo);
    BigInt v = eval(f - 1, inner, budget, memo);
    if (bit_size(v) > budget) throw Overflow{f, c};
    if (small) memo[key] = v;
    return v;
}

}  // namespace

AckValue ackermann(int64_t f, const BigInt& c, uint64_t bit_budget) {
    AckValue out;
    std::map<std::pair<int64_t, int64_t>, BigInt> memo;
    try {
        out.value = eval(f, c, bit_budget, memo);
        out.exact = true;
    } catch (const Overflow& o) {
        out.exact = false;
        out.overflow_f = o.f;
        out.overflow_c = o.c;
    }
    return out;
}

}  // namespace tmlab
