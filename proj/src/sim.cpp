#include "tmlab/sim.hpp"

namespace tmlab {

StepStatus step(const Machine& mach, Configuration& config) {
    int32_t sym = config.tape.get(config.head);
    const auto& a = mach.action(config.state, sym);
    if (!a) return StepStatus::Undefined;
    config.tape.set(config.head, a->write);
    config.head += static_cast<int8_t>(a->dir);
    config.steps += 1;
    if (a->next == kHalt) return StepStatus::Halted;
    config.state = a->next;
    return StepStatus::Ok;
}

Simulator::Simulator(const Machine& mach) : mach_(mach), cfg_(mach) { compile(); }

Simulator::Simulator(const Machine& mach, Configuration initial)
    : mach_(mach), cfg_(std::move(initial)) {
    compile();
}

void Simulator::compile() {
    m_ = mach_.m();
    size_t cells = static_cast<size_t>(mach_.n()) * m_;
    next_.assign(cells, kUndef);
    write_.assign(cells, 0);
    move_.assign(cells, 1);
    for (int32_t q = 0; q < mach_.n(); ++q) {
        for (int32_t e = 0; e < m_; ++e) {
            const auto& a = mach_.action(q, e);
            if (!a) continue;
            size_t i = static_cast<size_t>(q) * m_ + e;
            next_[i] = a->next;
            write_[i] = a->write;
            move_[i] = static_cast<int8_t>(a->dir);
        }
    }
}

StepStatus Simulator::step_once() {
    cfg_.tape.ensure(cfg_.head);
    int32_t* cell = cfg_.tape.ptr(cfg_.head);
    size_t i = static_cast<size_t>(cfg_.state) * m_ + *cell;
    int32_t nx = next_[i];
    if (nx == kUndef) return StepStatus::Undefined;
    *cell = write_[i];
    cfg_.head += move_[i];
    cfg_.steps += 1;
    if (nx == kHalt) return StepStatus::Halted;
    cfg_.state = nx;
    return StepStatus::Ok;
}

RunResult Simulator::run(uint64_t limit) {
    Tape& tape = cfg_.tape;
    int64_t head = cfg_.head;
    int32_t state = cfg_.state;
    uint64_t steps = cfg_.steps;

    tape.ensure(head);
    int64_t lo = tape.lo_bound(), hi = tape.hi_bound();
    int32_t* base = tape.ptr(lo);

    Outcome outcome = Outcome::BudgetExhausted;
    int32_t undef_q = -1, undef_e = -1;
    const int32_t* nx = next_.data();
    const int32_t* wr = write_.data();
    const int8_t* mv = move_.data();
    const int32_t m = m_;

    while (steps < limit) {
        if (head < lo || head >= hi) {
            tape.ensure(head);
            lo = tape.lo_bound();
            hi = tape.hi_bound();
            base = tape.ptr(lo);
        }
        int32_t* cell = base + (head - lo);
        size_t i = static_cast<size_t>(state) * m + *cell;
        int32_t n = nx[i];
        if (n == kUndef) {
            outcome = Outcome::UndefinedTransition;
            undef_q = state;
            undef_e = *cell;
            break;
        }
        *cell = wr[i];
        head += mv[i];
        ++steps;
        if (n == kHalt) {
            outcome = Outcome::Halted;
            break;
        }
        state = n;
    }

    cfg_.head = head;
    cfg_.state = state;
    cfg_.steps = steps;

    RunResult r;
    r.outcome = outcome;
    r.steps = steps;
    r.final = cfg_;
    r.undefined_state = undef_q;
    r.undefined_symbol = undef_e;
    return r;
}

RunResult Simulator::run(uint64_t limit, const RunHooks& hooks) {
    if (!hooks.on_step && !hooks.on_snapshot) return run(limit);

    Outcome outcome = Outcome::BudgetExhausted;
    int32_t undef_q = -1, undef_e = -1;
    while (cfg_.steps < limit) {
        cfg_.tape.ensure(cfg_.head);
        int32_t* cell = cfg_.tape.ptr(cfg_.head);
        size_t i = static_cast<size_t>(cfg_.state) * m_ + *cell;
        int32_t n = next_[i];
        if (n == kUndef) {
            outcome = Outcome::UndefinedTransition;
            undef_q = cfg_.state;
            undef_e = *cell;
            break;
        }
        int32_t pre_state = cfg_.state;
        int64_t pre_pos = cfg_.head;
        int32_t read = *cell;
        *cell = write_[i];
        cfg_.head += move_[i];
        cfg_.steps += 1;
        if (hooks.on_step)
            hooks.on_step(cfg_.steps, pre_state, pre_pos, read, write_[i],
                          move_[i] < 0 ? Dir::L : Dir::R);
        bool halted = (n == kHalt);
        if (!halted) cfg_.state = n;
        if (hooks.on_snapshot && hooks.snapshot_every > 0 && cfg_.steps % hooks.snapshot_every == 0) {
            auto [slo, shi] = cfg_.tape.support();
            hooks.on_snapshot(cfg_.steps, cfg_.state, cfg_.head, slo, shi);
        }
        if (halted) {
            outcome = Outcome::Halted;
            break;
        }
    }

    RunResult r;
    r.outcome = outcome;
    r.steps = cfg_.steps;
    r.final = cfg_;
    r.undefined_state = undef_q;
    r.undefined_symbol = undef_e;
    return r;
}

RunResult run(const Machine& mach, uint64_t limit) {
    Simulator sim(mach);
    return sim.run(limit);
}

RunResult run(const Machine& mach, uint64_t limit, const RunHooks& hooks) {
    Simulator sim(mach);
    return sim.run(limit, hooks);
}

RunResult run(const Machine& mach, uint64_t limit, Configuration initial) {
    Simulator sim(mach, std::move(initial));
    return sim.run(limit);
}

}  // namespace tmlab
