#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace tmlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact value, or the recursion point at which an intermediate result first
// burst the bit budget. Overflow is an expected outcome, not an error.
struct AckValue {
    bool exact = false;
    BigInt value;
    int64_t overflow_f = 0;
    BigInt overflow_c;
};

// The doubling variant: A(1,c) = 2c, A(f,1) = 2, A(f,c) = A(f-1, A(f,c-1)).
// Iterative for f <= 3, memoized above; every intermediate is capped at
// bit_budget bits.
AckValue ackermann(int64_t f, const BigInt& c, uint64_t bit_budget);

}  // namespace tmlab
