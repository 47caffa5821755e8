#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmlab/machine.hpp"
#include "tmlab/sim.hpp"

namespace tmlab {

// k: alphabet size of the word problem. delta = 1 drops the X marker and
// realizes boundary detection by double Y scans with duplicated states.
struct FriedmanParams {
    int k = 3;
    int delta = 0;
};

// Emits the word-search machine family. Sizes: (35+3k, 2k+2) for k >= 3,
// delta 0; (35+3k+(7+k), 2k+1) for delta 1. k = 2 drops the letter 3 and its
// states and wraps the increment at 2', giving (41, 7).
Machine generate_friedman(const FriedmanParams& params);

// Decoded view of the tape layout I Y II (X) III. Counts follow the unary
// encoding of segment I; primes in segment II resolve to their letters.
struct SegmentView {
    bool wellformed = false;
    std::string diagnostics;
    int64_t i = 0, imax = 0, l = 0, lmax = 0;
    std::string word;
    std::vector<std::string> copies;
};

SegmentView decode_segments(const Machine& mach, const Configuration& config);

struct Milestone {
    uint64_t step = 0;  // 0 in reference milestones
    int64_t n = 0;      // current word length
    std::string word;
    int64_t l = 0, lmax = 0;

    bool same_word(const Milestone& o) const { return n == o.n && word == o.word; }
};

// Word-level replay of the machines' outer loop: emits the expected
// (N, word) at each return to the copy phase, in order.
std::vector<Milestone> reference_algorithm_milestones(int k, int max_milestones);

// Runs a generated machine, emitting a milestone at every entry to state
// q1-1 with segment-I count i == 0.
std::vector<Milestone> machine_milestones(const Machine& mach, int max_milestones,
                                          uint64_t step_limit);

}  // namespace tmlab
