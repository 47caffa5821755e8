#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tmlab/machine.hpp"
#include "tmlab/sim.hpp"

namespace tmlab {

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sidecar data mapping transformed configurations back to original tapes.
struct DecoderCertificate {
    enum class Kind { SymbolBlocks, TupleField, SeededTwoState };

    Kind kind = Kind::TupleField;
    std::string original_blank;

    // SymbolBlocks: each original cell is a block of block_len base-`base`
    // digits; tuple_map sends a digit string to the original symbol.
    int base = 0;
    int block_len = 0;
    std::map<std::string, std::string> tuple_map;

    // TupleField / SeededTwoState: transformed symbol -> original symbol.
    std::map<std::string, std::string> symbol_map;

    // SeededTwoState simulations run mirrored about the start cell.
    bool mirrored = false;
    int64_t mirror_origin = 0;

    bool needs_seed = false;
    int64_t seed_pos = 0;
    std::string seed_symbol;
    int64_t overflow_counter = -1;

    std::string to_json() const;
    static DecoderCertificate from_json(const std::string& text);
};

struct ClaimedBounds {
    long long states = 0;
    long long symbols = 0;
};

struct ReducedMachine {
    Machine machine;
    DecoderCertificate certificate;
    ClaimedBounds claimed;
};

// Symbol count down to `base`: blocks of ceil(log_base m) digits per original
// cell, head resting on the left end of the current block between steps.
ReducedMachine reduce_symbols(const Machine& m, int base);

// Three states qX/qL/qR; the next state is transferred in unary by ping-pong
// between the old and new cell. |E'| = 3(n+1)m.
ReducedMachine reduce_states_3(const Machine& m);

// 2b+1 states; the next state moves digit-by-digit in base b. Transfers
// toward L shed the most significant digit first, transfers toward R the
// least significant one, as in the worked base-3 example.
ReducedMachine reduce_states_2b1(const Machine& m, int base);

// Two states L/R with one seeded non-blank start cell. |E'| = 5m(n+1).
ReducedMachine reduce_states_2_seeded(const Machine& m);

// Two states from the empty tape; counting past |Q| on a blank pair is
// reinterpreted as bootstrap start or blank. |E'| = 5m(n+2).
ReducedMachine reduce_states_2_empty(const Machine& m);

// Position -> original symbol name for the non-blank cells.
std::map<int64_t, std::string> decode_tape(const DecoderCertificate& cert, const Machine& reduced,
                                           const Configuration& config);

// All-blank start, with the seed cell planted when the certificate needs one.
Configuration reduced_initial_configuration(const ReducedMachine& rm);

// Substate accounting for the symbol-count reduction of the word-search
// machine family, by state class and sweep.
struct SubstateProfile {
    int b = 2, l = 2, k = 3, delta = 0;
    long long sweep0 = 0;
    long long scan_gt = 0;   // scan states left opposite the entry side
    long long scan_lt = 0;   // scan states left at the entry side
    long long scan_ne = 0;   // scan states that change the symbol afterwards
    long long sweep1 = 0;    // full read-tree states
    long long v_ge = 0, v_le = 0, v_lne = 0, v_gne = 0;  // case-column totals
    // Read-tree size per sweep1 state; -1 selects (b^l-1)/(b-1). The copy for
    // base 3 carries the printed value 13 instead.
    long long sweep1_levels = -1;
    // Reconciles printed case totals whose own sum does not re-add exactly.
    long long printed_total_correction = 0;
};

long long estimate_substates(const SubstateProfile& p);
SubstateProfile paper_substate_profile(int b, int l, int k, int delta);

}  // namespace tmlab
