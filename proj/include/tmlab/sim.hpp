#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "tmlab/machine.hpp"
#include "tmlab/tape.hpp"

namespace tmlab {

struct Configuration {
    Tape tape;
    int64_t head = 0;
    int32_t state = 0;
    uint64_t steps = 0;

    Configuration() = default;
    explicit Configuration(const Machine& mach)
        : tape(mach.blank()), head(0), state(mach.start()), steps(0) {}
};

enum class Outcome { Halted, BudgetExhausted, UndefinedTransition };

struct RunResult {
    Outcome outcome;
    uint64_t steps = 0;
    Configuration final;
    // Set when outcome == UndefinedTransition.
    int32_t undefined_state = -1;
    int32_t undefined_symbol = -1;
};

enum class StepStatus { Ok, Halted, Undefined };

// One step, symbolic table lookup. Mutates config; on Halted the write and
// move are applied and the step is counted. On Undefined nothing changes.
StepStatus step(const Machine& mach, Configuration& config);

struct RunHooks {
    // Called after each executed step with the pre-move view of that step.
    std::function<void(uint64_t step, int32_t state, int64_t pos, int32_t read, int32_t write, Dir dir)>
        on_step;
    uint64_t snapshot_every = 0;
    std::function<void(uint64_t step, int32_t state, int64_t pos, int64_t sup_lo, int64_t sup_hi)>
        on_snapshot;
};

// Owns a compiled transition table and a working configuration.
class Simulator {
public:
    explicit Simulator(const Machine& mach);
    Simulator(const Machine& mach, Configuration initial);

    const Configuration& config() const { return cfg_; }
    Configuration& config() { return cfg_; }
    const Machine& machine() const { return mach_; }

    StepStatus step_once();

    // Runs until halt, undefined, or steps == limit. The fast path is used
    // when no hooks are installed.
    RunResult run(uint64_t limit);
    RunResult run(uint64_t limit, const RunHooks& hooks);

private:
    void compile();

    const Machine& mach_;
    Configuration cfg_;
    int32_t m_ = 0;
    // next: >= 0 state, kHalt, or kUndef
    static constexpr int32_t kUndef = -2;
    std::vector<int32_t> next_, write_;
    std::vector<int8_t> move_;
};

// Runs from the all-blank start configuration (or a supplied one).
RunResult run(const Machine& mach, uint64_t limit);
RunResult run(const Machine& mach, uint64_t limit, const RunHooks& hooks);
RunResult run(const Machine& mach, uint64_t limit, Configuration initial);

}  // namespace tmlab
