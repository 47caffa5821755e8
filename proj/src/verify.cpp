#include "tmlab/verify.hpp"

#include <sstream>

#include "tmlab/sim.hpp"

namespace tmlab {

Verdict verify_simulation(const Machine& original, const ReducedMachine& reduced,
                          uint64_t budget) {
    RunResult orig = run(original, budget);
    RunResult red = run(reduced.machine, budget, reduced_initial_configuration(reduced));

    if (orig.outcome == Outcome::UndefinedTransition)
        return {VerifyStatus::Diverged, "original hit an undefined transition"};
    if (red.outcome == Outcome::UndefinedTransition) {
        std::ostringstream msg;
        msg << "reduced hit an undefined transition at ("
            << reduced.machine.state_name(red.undefined_state) << ", "
            << reduced.machine.symbol_name(red.undefined_symbol) << ") after " << red.steps
            << " steps";
        return {VerifyStatus::Diverged, msg.str()};
    }
    if (orig.outcome == Outcome::BudgetExhausted && red.outcome == Outcome::Halted)
        return {VerifyStatus::Diverged, "reduced halted but the original did not within budget"};
    if (orig.outcome == Outcome::BudgetExhausted || red.outcome == Outcome::BudgetExhausted)
        return {VerifyStatus::BudgetExhausted, ""};

    std::map<int64_t, std::string> want;
    for (auto [pos, sym] : orig.final.tape.nonblank()) want[pos] = original.symbol_name(sym);

    std::map<int64_t, std::string> got;
    try {
        got = decode_tape(reduced.certificate, reduced.machine, red.final);
    } catch (const std::exception& e) {
        return {VerifyStatus::Diverged, std::string("decode failed: ") + e.what()};
    }

    if (want == got) return {VerifyStatus::Equivalent, ""};

    for (const auto& [pos, sym] : want) {
        auto it = got.find(pos);
        if (it == got.end())
            return {VerifyStatus::Diverged,
                    "cell " + std::to_string(pos) + ": expected '" + sym + "', decoded blank"};
        if (it->second != sym)
            return {VerifyStatus::Diverged, "cell " + std::to_string(pos) + ": expected '" + sym +
                                                "', decoded '" + it->second + "'"};
    }
    for (const auto& [pos, sym] : got) {
        if (!want.count(pos))
            return {VerifyStatus::Diverged,
                    "cell " + std::to_string(pos) + ": expected blank, decoded '" + sym + "'"};
    }
    return {VerifyStatus::Diverged, "support mismatch"};
}

}  // namespace tmlab
