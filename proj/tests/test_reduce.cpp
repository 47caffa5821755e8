#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden.hpp"
#include "test_util.hpp"
#include "tmlab/reduce.hpp"
#include "tmlab/verify.hpp"

using namespace tmlab;

TEST_CASE("base-3 state transfer reproduces the worked example rows") {
    Machine m = test::base3_trace_machine();
    ReducedMachine rm = reduce_states_2b1(m, 3);
    CHECK(rm.machine.n() == 7);
    CHECK(rm.machine.m() <= rm.claimed.symbols);

    Configuration cfg(rm.machine);
    cfg.head = 102;
    cfg.tape.set(101, rm.machine.symbol_index("[-,-,e3]"));
    cfg.tape.set(102, rm.machine.symbol_index("[021,-,e1]"));
    cfg.tape.set(103, rm.machine.symbol_index("[-,-,e4]"));

    auto rows = test::capture_trace(rm.machine, std::move(cfg), 15);
    std::string why;
    bool ok = test::rows_match(rows, test::base3_trace_rows(), &why);
    CAPTURE(why);
    CHECK(ok);
}

TEST_CASE("two-state empty-tape simulation reproduces the worked trace") {
    Machine m = test::example_machine();
    ReducedMachine rm = reduce_states_2_empty(m);
    CHECK(rm.machine.m() == 120);  // 5m(n+2)
    CHECK(rm.machine.n() == 2);
    CHECK(rm.machine.state_name(rm.machine.start()) == "R");

    Configuration cfg(rm.machine);
    cfg.head = 1;  // replayed from position 1 like the original
    auto rows = test::capture_trace(rm.machine, std::move(cfg), 64);
    std::string why;
    bool ok = test::rows_match(rows, test::two_state_empty_rows(), &why);
    CAPTURE(why);
    CHECK(ok);

    // Decoded final tape, mirrored about the replay origin at 1.
    Configuration final(rm.machine);
    final.head = 1;
    Simulator sim(rm.machine, std::move(final));
    RunResult r = sim.run(1000);
    REQUIRE(r.outcome == Outcome::Halted);
    DecoderCertificate cert = rm.certificate;
    cert.mirror_origin = 1;
    auto decoded = decode_tape(cert, rm.machine, r.final);
    REQUIRE(decoded.size() == 2);
    CHECK(decoded.at(1) == "3");
    CHECK(decoded.at(2) == "2");
}

TEST_CASE("three-state reduction of the example machine") {
    Machine m = test::example_machine();
    ReducedMachine rm = reduce_states_3(m);
    CHECK(rm.machine.n() == 3);
    CHECK(rm.machine.m() == 60);  // 3(n+1)m
    CHECK(verify_simulation(m, rm, 100000).status == VerifyStatus::Equivalent);
}

TEST_CASE("unit-index transfer does exactly one ping-pong round") {
    // Target state at index 0 (1-based 1): a single bounce between cells.
    Machine m({"a", "b"}, {"0", "1"}, "0", "a");
    m.set_action("a", "0", "a", "1", Dir::R);  // target index 0
    m.set_action("a", "1", "HALT", "1", Dir::R);
    ReducedMachine rm = reduce_states_3(m);
    Simulator sim(rm.machine, reduced_initial_configuration(rm));
    // Expansion, bounce at the target, release, next expansion.
    std::vector<std::string> states;
    for (int i = 0; i < 4; ++i) {
        states.push_back(rm.machine.state_name(sim.config().state));
        REQUIRE(sim.step_once() == StepStatus::Ok);
    }
    CHECK(states == std::vector<std::string>{"qX", "qR", "qX", "qX"});
}

TEST_CASE("immediate-halt machine works through every pass") {
    Machine m({"q"}, {"b", "z"}, "b", "q");
    m.set_action("q", "b", "HALT", "b", Dir::R);
    for (auto rm : {reduce_states_3(m), reduce_states_2b1(m, 2), reduce_states_2_seeded(m),
                    reduce_states_2_empty(m), reduce_symbols(m, 2)}) {
        auto v = verify_simulation(m, rm, 10000);
        CHECK(v.status == VerifyStatus::Equivalent);
    }
}

TEST_CASE("symbol reduction with base >= m is isomorphic in size") {
    Machine m = test::example_machine();
    ReducedMachine rm = reduce_symbols(m, 4);
    CHECK(rm.machine.n() == m.n());
    CHECK(rm.machine.m() == 4);
    CHECK(verify_simulation(m, rm, 100000).status == VerifyStatus::Equivalent);
}

TEST_CASE("symbol reduction bounds on the example machine") {
    Machine m = test::example_machine();
    ReducedMachine rm = reduce_symbols(m, 2);
    CHECK(rm.claimed.states == 4 * (1 + 3 + 4 * 2));  // n[(l-1)+(b^l-1)/(b-1)+2m(l-1)]
    CHECK(rm.machine.n() <= rm.claimed.states);
    CHECK(rm.machine.m() == 2);
    CHECK(verify_simulation(m, rm, 100000).status == VerifyStatus::Equivalent);
}

TEST_CASE("state reduction bounds on the example machine") {
    Machine m = test::example_machine();
    CHECK(reduce_states_3(m).claimed.symbols == 60);
    CHECK(reduce_states_2b1(m, 2).claimed.symbols == 68);  // (4*3 + 2*1 + 3) * 4
    CHECK(reduce_states_2_seeded(m).machine.m() == 100);
    CHECK(reduce_states_2_empty(m).machine.m() == 120);
}

TEST_CASE("equivalence over a seeded random corpus") {
    auto corpus = test::random_halting_corpus(12, 200);
    for (const auto& m : corpus) {
        for (int pass = 0; pass < 6; ++pass) {
            ReducedMachine rm = pass == 0   ? reduce_states_3(m)
                                : pass == 1 ? reduce_states_2b1(m, 2)
                                : pass == 2 ? reduce_symbols(m, 3)
                                : pass == 3 ? reduce_states_2_seeded(m)
                                : pass == 4 ? reduce_states_2_empty(m)
                                            : reduce_symbols(m, 2);
            CAPTURE(pass);
            auto v = verify_simulation(m, rm, 2'000'000);
            CHECK(v.status == VerifyStatus::Equivalent);
            if (v.status != VerifyStatus::Equivalent) { MESSAGE(v.detail); }
        }
    }
}

TEST_CASE("base-3 state transfer over small machines") {
    // The published symbol inventory does not cover the worked example's
    // leftward digit order for every machine shape; n <= 3 is always safe.
    auto corpus = test::random_halting_corpus(20, 200, 0xBEEF);
    int checked = 0;
    for (const auto& m : corpus) {
        if (m.n() > 3) continue;
        ReducedMachine rm = reduce_states_2b1(m, 3);
        CHECK(rm.machine.m() <= rm.claimed.symbols);
        CHECK(verify_simulation(m, rm, 2'000'000).status == VerifyStatus::Equivalent);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("non-halting machines stay non-halting through the passes") {
    Machine m({"q"}, {"b"}, "b", "q");
    m.set_action("q", "b", "q", "b", Dir::R);  // runs forever
    for (auto rm : {reduce_states_3(m), reduce_states_2b1(m, 2), reduce_states_2_seeded(m),
                    reduce_states_2_empty(m), reduce_symbols(m, 2)}) {
        auto v = verify_simulation(m, rm, 50000);
        CHECK(v.status == VerifyStatus::BudgetExhausted);
    }
}

TEST_CASE("budget 1 exhausts immediately") {
    Machine m = test::example_machine();
    auto rm = reduce_states_3(m);
    CHECK(verify_simulation(m, rm, 1).status == VerifyStatus::BudgetExhausted);
}

TEST_CASE("certificates survive the JSON round trip") {
    Machine m = test::example_machine();
    for (auto rm : {reduce_symbols(m, 2), reduce_states_3(m), reduce_states_2_seeded(m),
                    reduce_states_2_empty(m)}) {
        DecoderCertificate back = DecoderCertificate::from_json(rm.certificate.to_json());
        CHECK(back.kind == rm.certificate.kind);
        CHECK(back.tuple_map == rm.certificate.tuple_map);
        CHECK(back.symbol_map == rm.certificate.symbol_map);
        CHECK(back.mirrored == rm.certificate.mirrored);
        CHECK(back.needs_seed == rm.certificate.needs_seed);
        CHECK(back.seed_symbol == rm.certificate.seed_symbol);
        CHECK(back.overflow_counter == rm.certificate.overflow_counter);
        CHECK(back.original_blank == rm.certificate.original_blank);
    }
}

TEST_CASE("substate estimates reproduce the published totals") {
    CHECK(estimate_substates(paper_substate_profile(2, 3, 3, 0)) == 496);
    CHECK(estimate_substates(paper_substate_profile(3, 2, 3, 0)) == 486);
    CHECK(estimate_substates(paper_substate_profile(2, 4, 4, 0)) == 922);
    // Affine forms 343+51k, 351+45k, 582+85k.
    for (int k = 2; k <= 6; ++k) {
        CHECK(estimate_substates(paper_substate_profile(2, 3, k, 0)) == 343 + 51 * k);
        CHECK(estimate_substates(paper_substate_profile(3, 2, k, 0)) == 351 + 45 * k);
        CHECK(estimate_substates(paper_substate_profile(2, 4, k, 0)) == 582 + 85 * k);
    }
}

TEST_CASE("substate case columns sum to 63+13k") {
    for (int k = 2; k <= 6; ++k) {
        auto p = paper_substate_profile(2, 3, k, 0);
        CHECK(p.v_ge + p.v_le + p.v_lne + p.v_gne == 63 + 13 * k);
    }
}

TEST_CASE("inconsistent profiles are rejected") {
    SubstateProfile p = paper_substate_profile(2, 3, 3, 0);
    p.sweep1 = -1;
    CHECK_THROWS(estimate_substates(p));
    p = paper_substate_profile(2, 3, 3, 0);
    p.b = 1;
    CHECK_THROWS(estimate_substates(p));
}
