#pragma once

#include <cstdint>
#include <optional>

#include "tmlab/machine.hpp"

namespace tmlab {

struct BBResult {
    int n = 0, m = 0;
    uint64_t total_machines = 0;
    uint64_t champion_steps = 0;
    std::optional<Machine> champion;
    uint64_t halting = 0;
    uint64_t cutoff_exceeded = 0;
    uint64_t undefined_hit = 0;  // always 0 over total tables
};

// Exhaustive enumeration of all total transition tables over n states and m
// symbols, each run from the empty tape up to cutoff steps. The champion is
// the longest-running halter; ties break to the smallest table index, so the
// result does not depend on the worker partition. The escape accelerator cuts
// off provably non-halting frontier runs early and never changes results.
BBResult bb_enumerate(int n, int m, uint64_t cutoff, int jobs = 1,
                      uint64_t machine_guard = 1ull << 32, bool accelerate = true);

}  // namespace tmlab
