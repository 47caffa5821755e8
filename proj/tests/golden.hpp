#pragma once

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "tmlab/reduce.hpp"
#include "tmlab/sim.hpp"

namespace tmlab::test {

struct TraceRow {
    int64_t pos;
    std::string state, read, next, write;
    char dir;
};

using ExpectedRow = std::tuple<int64_t, std::string, std::string, std::string, std::string, char>;

// Steps the machine, recording (position, state, read) -> (next, write, dir).
inline std::vector<TraceRow> capture_trace(const Machine& m, Configuration cfg, size_t steps) {
    std::vector<TraceRow> rows;
    Simulator sim(m, std::move(cfg));
    for (size_t i = 0; i < steps; ++i) {
        TraceRow r;
        r.pos = sim.config().head;
        r.state = m.state_name(sim.config().state);
        r.read = m.symbol_name(sim.config().tape.get(r.pos));
        StepStatus st = sim.step_once();
        if (st == StepStatus::Undefined) {
            r.next = "UNDEFINED";
            rows.push_back(r);
            return rows;
        }
        r.write = m.symbol_name(sim.config().tape.get(r.pos));
        r.dir = sim.config().head > r.pos ? 'R' : 'L';
        r.next = st == StepStatus::Halted ? "HALT" : m.state_name(sim.config().state);
        rows.push_back(r);
        if (st == StepStatus::Halted) break;
    }
    return rows;
}

inline bool rows_match(const std::vector<TraceRow>& got, const std::vector<ExpectedRow>& want,
                       std::string* why = nullptr) {
    if (got.size() < want.size()) {
        if (why) *why = "trace shorter than expected";
        return false;
    }
    for (size_t i = 0; i < want.size(); ++i) {
        auto [pos, state, read, next, write, dir] = want[i];
        const TraceRow& g = got[i];
        if (g.pos != pos || g.state != state || g.read != read || g.next != next ||
            g.write != write || g.dir != dir) {
            if (why) {
                std::ostringstream os;
                os << "row " << i << ": got (" << g.pos << ", " << g.state << ", " << g.read
                   << " -> " << g.next << ", " << g.write << ", " << g.dir << "), want (" << pos
                   << ", " << state << ", " << read << " -> " << next << ", " << write << ", "
                   << dir << ")";
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

// Machine for the base-3 transfer trace: sixteen states so that the codes
// 7 = 021, 15 = 120, 4 = 011, 8 = 022 each need three trits.
inline Machine base3_trace_machine() {
    std::vector<std::string> states;
    for (int i = 0; i < 16; ++i) states.push_back("t" + std::to_string(i));
    Machine m(states, {"e0", "e1", "e2", "e3", "e4", "e5", "e6"}, "e0", "t0");
    m.set_action("t7", "e1", "t15", "e2", Dir::L);
    m.set_action("t15", "e3", "t4", "e5", Dir::R);
    m.set_action("t4", "e2", "t8", "e6", Dir::L);
    return m;
}

inline std::vector<ExpectedRow> base3_trace_rows() {
    return {
        {102, "qX",  "[021,-,e1]", "qL1", "[20,L,e2]",  'L'},
        {101, "qL1", "[-,-,e3]",   "qX",  "[1,-,e3]",   'R'},
        {102, "qX",  "[20,L,e2]",  "qL2", "[0,L,e2]",   'L'},
        {101, "qL2", "[1,-,e3]",   "qX",  "[12,-,e3]",  'R'},
        {102, "qX",  "[0,L,e2]",   "qL0", "[-,L,e2]",   'L'},
        {101, "qL0", "[12,-,e3]",  "qX",  "[120,-,e3]", 'R'},
        {102, "qX",  "[-,L,e2]",   "qX",  "[-,-,e2]",   'L'},
        {101, "qX",  "[120,-,e3]", "qR1", "[01,R,e5]",  'R'},
        {102, "qR1", "[-,-,e2]",   "qX",  "[1,-,e2]",   'L'},
        {101, "qX",  "[01,R,e5]",  "qR1", "[0,R,e5]",   'R'},
        {102, "qR1", "[1,-,e2]",   "qX",  "[11,-,e2]",  'L'},
        {101, "qX",  "[0,R,e5]",   "qR0", "[-,R,e5]",   'R'},
        {102, "qR0", "[11,-,e2]",  "qX",  "[011,-,e2]", 'L'},
        {101, "qX",  "[-,R,e5]",   "qX",  "[-,-,e5]",   'R'},
        // Continuation: (t4, e2) -> (t8, e6, L); 8 = 022, leading trit first.
        {102, "qX",  "[011,-,e2]", "qL0", "[22,L,e6]",  'L'},
    };
}

inline std::vector<ExpectedRow> two_state_empty_rows() {
    return {
        {1, "R", "[0,-,0]",  "L", "[1,Rn,0]", 'L'},
        {0, "L", "[0,-,0]",  "R", "[1,Ln,0]", 'R'},
        {1, "R", "[1,Rn,0]", "L", "[2,Rn,0]", 'L'},
        {0, "L", "[1,Ln,0]", "R", "[2,Ln,0]", 'R'},
        {1, "R", "[2,Rn,0]", "L", "[3,Rn,0]", 'L'},
        {0, "L", "[2,Ln,0]", "R", "[3,Ln,0]", 'R'},
        {1, "R", "[3,Rn,0]", "L", "[4,Rn,0]", 'L'},
        {0, "L", "[3,Ln,0]", "R", "[4,Ln,0]", 'R'},
        {1, "R", "[4,Rn,0]", "L", "[5,Rn,0]", 'L'},
        {0, "L", "[4,Ln,0]", "R", "[5,Ln,0]", 'R'},
        // Counting past |Q| bootstraps the start state and a blank.
        {1, "R", "[5,Rn,0]", "L", "[1,Lo,1]", 'L'},
        {0, "L", "[5,Ln,0]", "R", "[1,Ln,0]", 'R'},
        {1, "R", "[1,Lo,1]", "L", "[0,Lo,1]", 'L'},
        {0, "L", "[1,Ln,0]", "R", "[2,Ln,0]", 'R'},
        {1, "R", "[0,Lo,1]", "R", "[0,-,1]",  'L'},
        {0, "R", "[2,Ln,0]", "R", "[2,Ro,2]", 'R'},
        {1, "R", "[0,-,1]",  "L", "[1,Rn,1]", 'L'},
        {0, "L", "[2,Ro,2]", "R", "[1,Ro,2]", 'R'},
        {1, "R", "[1,Rn,1]", "L", "[2,Rn,1]", 'L'},
        {0, "L", "[1,Ro,2]", "R", "[0,Ro,2]", 'R'},
        {1, "R", "[2,Rn,1]", "L", "[3,Rn,1]", 'L'},
        {0, "L", "[0,Ro,2]", "L", "[0,-,2]",  'R'},
        {1, "L", "[3,Rn,1]", "R", "[3,Ro,3]", 'R'},
        {2, "R", "[0,-,0]",  "L", "[1,Rn,0]", 'L'},
        {1, "L", "[3,Ro,3]", "R", "[2,Ro,3]", 'R'},
        {2, "R", "[1,Rn,0]", "L", "[2,Rn,0]", 'L'},
        {1, "L", "[2,Ro,3]", "R", "[1,Ro,3]", 'R'},
        {2, "R", "[2,Rn,0]", "L", "[3,Rn,0]", 'L'},
        {1, "L", "[1,Ro,3]", "R", "[0,Ro,3]", 'R'},
        {2, "R", "[3,Rn,0]", "L", "[4,Rn,0]", 'L'},
        {1, "L", "[0,Ro,3]", "L", "[0,-,3]",  'R'},
        {2, "L", "[4,Rn,0]", "HALT", "[0,-,0]", 'L'},
    };
}

}  // namespace tmlab::test
