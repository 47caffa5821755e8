#pragma once

#include <cstdint>
#include <string>

#include "tmlab/machine.hpp"
#include "tmlab/reduce.hpp"

namespace tmlab {

enum class VerifyStatus { Equivalent, Diverged, BudgetExhausted };

struct Verdict {
    VerifyStatus status;
    std::string detail;
};

// Runs both machines from their start configurations (empty tape, plus the
// seed when the certificate requires one), each capped at budget steps. On
// both halting, decodes the reduced final tape through the certificate and
// compares non-blank supports.
Verdict verify_simulation(const Machine& original, const ReducedMachine& reduced,
                          uint64_t budget);

}  // namespace tmlab
