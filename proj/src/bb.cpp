#include "tmlab/bb.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tmlab {

namespace {

// Flat run loop over a small fixed tape window. After t steps from the empty
// tape the head stays within [-t, t], so cutoff bounds the window. Between
// machines only the window the previous run dirtied is cleared.
struct MiniSim {
    std::vector<int32_t> tape;
    int64_t origin;
    int64_t dirty_lo, dirty_hi;

    explicit MiniSim(uint64_t cutoff)
        : tape(2 * cutoff + 3, 0),
          origin(static_cast<int64_t>(cutoff) + 1),
          dirty_lo(origin),
          dirty_hi(origin) {}

    // Returns steps if halted within cutoff, 0 otherwise. escape_l/escape_r
    // flag states whose blank-reading chains move strictly outward forever;
    // reaching one past the written region can never halt.
    uint64_t run(const int32_t* next, const int32_t* write, const int8_t* move, int m,
                 uint64_t cutoff, const bool* escape_l, const bool* escape_r) {
        std::fill(tape.begin() + dirty_lo, tape.begin() + dirty_hi + 1, 0);
        int64_t head = origin;
        int64_t lo = origin, hi = origin;
        int32_t state = 0;
        uint64_t steps = 0;
        uint64_t halted = 0;
        while (steps < cutoff) {
            if (head < lo) {
                lo = head;
                if (escape_l && escape_l[state]) break;
            } else if (head > hi) {
                hi = head;
                if (escape_r && escape_r[state]) break;
            }
            int32_t sym = tape[static_cast<size_t>(head)];
            size_t i = static_cast<size_t>(state) * m + sym;
            tape[static_cast<size_t>(head)] = write[i];
            head += move[i];
            ++steps;
            if (next[i] < 0) {
                halted = steps;
                break;
            }
            state = next[i];
        }
        dirty_lo = std::min(lo, head);
        dirty_hi = std::max(hi, head);
        return halted;
    }
};

// escape[q] = true iff from state q reading blanks the machine keeps moving
// in direction d forever (the blank-transition chain cycles without a halt
// or a turn). Such a state at the tape frontier never comes back.
void compute_escapes(const int32_t* next, const int8_t* move, int n, int m, int8_t d,
                     bool* escape) {
    for (int q = 0; q < n; ++q) {
        int cur = q;
        bool esc = false;
        for (int s = 0; s <= n; ++s) {
            size_t i = static_cast<size_t>(cur) * m;  // blank is symbol 0
            if (next[i] < 0 || move[i] != d) break;
            cur = next[i];
            if (s == n) esc = true;  // n+1 outward blank moves repeat a state
        }
        escape[q] = esc;
    }
}

struct PartialResult {
    uint64_t champion_steps = 0;
    uint64_t champion_index = 0;
    bool have_champion = false;
    uint64_t halting = 0;
    uint64_t cutoff_exceeded = 0;
};

// Decodes machine index -> dense table. Cell order is (state, symbol), each a
// mixed-radix digit over (next, write, move).
void decode(uint64_t index, int n, int m, int32_t* next, int32_t* write, int8_t* move) {
    int cells = n * m;
    for (int c = 0; c < cells; ++c) {
        uint64_t digit = index % (static_cast<uint64_t>(n + 1) * m * 2);
        index /= static_cast<uint64_t>(n + 1) * m * 2;
        int32_t nxt = static_cast<int32_t>(digit % (n + 1));
        digit /= (n + 1);
        int32_t wr = static_cast<int32_t>(digit % m);
        digit /= m;
        next[c] = nxt == n ? -1 : nxt;  // digit n encodes HALT
        write[c] = wr;
        move[c] = digit == 0 ? int8_t{1} : int8_t{-1};
    }
}

PartialResult scan_range(uint64_t lo, uint64_t hi, int n, int m, uint64_t cutoff,
                         bool accelerate) {
    PartialResult r;
    MiniSim sim(cutoff);
    std::vector<int32_t> next(static_cast<size_t>(n) * m), write(static_cast<size_t>(n) * m);
    std::vector<int8_t> move(static_cast<size_t>(n) * m);
    std::vector<char> elc(static_cast<size_t>(n)), erc(static_cast<size_t>(n));
    for (uint64_t idx = lo; idx < hi; ++idx) {
        decode(idx, n, m, next.data(), write.data(), move.data());
        const bool* pl = nullptr;
        const bool* pr = nullptr;
        if (accelerate) {
            compute_escapes(next.data(), move.data(), n, m, -1,
                            reinterpret_cast<bool*>(elc.data()));
            compute_escapes(next.data(), move.data(), n, m, +1,
                            reinterpret_cast<bool*>(erc.data()));
            pl = reinterpret_cast<const bool*>(elc.data());
            pr = reinterpret_cast<const bool*>(erc.data());
        }
        uint64_t steps = sim.run(next.data(), write.data(), move.data(), m, cutoff, pl, pr);
        if (steps == 0) {
            ++r.cutoff_exceeded;
            continue;
        }
        ++r.halting;
        if (!r.have_champion || steps > r.champion_steps) {
            r.champion_steps = steps;
            r.champion_index = idx;
            r.have_champion = true;
        }
    }
    return r;
}

Machine machine_from_index(uint64_t index, int n, int m) {
    std::vector<std::string> states, symbols;
    for (int q = 0; q < n; ++q) states.push_back("q" + std::to_string(q + 1));
    for (int e = 0; e < m; ++e) symbols.push_back(std::to_string(e));
    Machine mach(states, symbols, "0", "q1");
    std::vector<int32_t> next(static_cast<size_t>(n) * m), write(static_cast<size_t>(n) * m);
    std::vector<int8_t> move(static_cast<size_t>(n) * m);
    decode(index, n, m, next.data(), write.data(), move.data());
    for (int q = 0; q < n; ++q)
        for (int e = 0; e < m; ++e) {
            size_t c = static_cast<size_t>(q) * m + e;
            mach.set_action(q, e, Action{next[c] < 0 ? kHalt : next[c], write[c],
                                         move[c] < 0 ? Dir::L : Dir::R});
        }
    return mach;
}

}  // namespace

BBResult bb_enumerate(int n, int m, uint64_t cutoff, int jobs, uint64_t machine_guard,
                      bool accelerate) {
    if (n < 1 || m < 1) throw std::invalid_argument("bb_enumerate: need n, m >= 1");
    if (cutoff < 1) throw std::invalid_argument("bb_enumerate: cutoff must be >= 1");

    uint64_t per_cell = static_cast<uint64_t>(n + 1) * m * 2;
    uint64_t total = 1;
    for (int c = 0; c < n * m; ++c) {
        if (total > machine_guard / per_cell)
            throw std::invalid_argument("bb_enumerate: class too large for exhaustive search");
        total *= per_cell;
    }

    std::vector<PartialResult> parts;
    if (jobs <= 1) {
        parts.push_back(scan_range(0, total, n, m, cutoff, accelerate));
    } else {
        parts.resize(static_cast<size_t>(jobs));
        std::vector<std::thread> workers;
        uint64_t chunk = (total + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                uint64_t lo = chunk * static_cast<uint64_t>(t);
                uint64_t hi = std::min(total, lo + chunk);
                if (lo < hi)
                    parts[static_cast<size_t>(t)] = scan_range(lo, hi, n, m, cutoff, accelerate);
            });
        }
        for (auto& w : workers) w.join();
    }

    BBResult out;
    out.n = n;
    out.m = m;
    out.total_machines = total;
    bool have = false;
    uint64_t best_idx = 0;
    for (const auto& p : parts) {
        out.halting += p.halting;
        out.cutoff_exceeded += p.cutoff_exceeded;
        if (!p.have_champion) continue;
        if (!have || p.champion_steps > out.champion_steps ||
            (p.champion_steps == out.champion_steps && p.champion_index < best_idx)) {
            out.champion_steps = p.champion_steps;
            best_idx = p.champion_index;
            have = true;
        }
    }
    if (have) out.champion = machine_from_index(best_idx, n, m);
    return out;
}

}  // namespace tmlab
