#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tmlab/friedman.hpp"
#include "tmlab/machine_io.hpp"
#include "tmlab/words.hpp"

using namespace tmlab;

TEST_CASE("generator sizes") {
    SUBCASE("k=3 delta=0 is (44, 8)") {
        Machine m = generate_friedman({3, 0});
        CHECK(m.n() == 44);
        CHECK(m.m() == 8);
        CHECK(m.symbols() ==
              std::vector<std::string>{"Y", "X", "1", "2", "3", "-", "$", "+"});
        CHECK(m.state_name(m.start()) == "q1-4");
        CHECK(m.symbol_name(m.blank()) == "Y");
    }
    SUBCASE("k=3 delta=1 is (54, 7)") {
        Machine m = generate_friedman({3, 1});
        CHECK(m.n() == 54);
        CHECK(m.m() == 7);
    }
    SUBCASE("k=4 delta=0 is (47, 10)") {
        Machine m = generate_friedman({4, 0});
        CHECK(m.n() == 47);
        CHECK(m.m() == 10);
    }
    SUBCASE("size formula holds for k = 3..6") {
        for (int k = 3; k <= 6; ++k) {
            for (int delta = 0; delta <= 1; ++delta) {
                Machine m = generate_friedman({k, delta});
                CHECK(m.n() == 35 + 3 * k + delta * (7 + k));
                CHECK(m.m() == 2 * k + 2 - delta);
            }
        }
    }
    SUBCASE("k=2 drops the third letter") {
        Machine m = generate_friedman({2, 0});
        CHECK(m.n() == 41);
        CHECK(m.m() == 7);  // + keeps its separator role, so 7 not 2k+2
        CHECK(!m.has_symbol("3"));
    }
    SUBCASE("k < 2 is rejected") { CHECK_THROWS(generate_friedman({1, 0})); }
}

TEST_CASE("generated machines round-trip through the file format") {
    for (auto p : {FriedmanParams{2, 0}, FriedmanParams{3, 0}, FriedmanParams{3, 1}}) {
        Machine m = generate_friedman(p);
        CHECK(parse_machine(serialize_machine(m)) == m);
    }
}

TEST_CASE("initialization builds I=1 cell and II=1'1'") {
    Machine m = generate_friedman({3, 0});
    Simulator sim(m);
    // Run until the first entry to q1-1.
    int32_t q11 = m.state_index("q1-1");
    for (int i = 0; i < 100 && sim.config().state != q11; ++i)
        REQUIRE(sim.step_once() == StepStatus::Ok);
    REQUIRE(sim.config().state == q11);
    SegmentView v = decode_segments(m, sim.config());
    REQUIRE(v.wellformed);
    CHECK(v.imax == 1);
    CHECK(v.i == 0);
    CHECK(v.l == 0);
    CHECK(v.lmax == 0);
    CHECK(v.word == "11");
    CHECK(v.copies.empty());
}

TEST_CASE("segment I decoding counts the unary encodings") {
    Machine m = generate_friedman({3, 0});
    Configuration cfg(m);
    // I = "- - 1 2 2 3 3 3 3", then Y, then II = "1", then X.
    std::vector<std::string> seg1 = {"-", "-", "1", "2", "2", "3", "3", "3", "3"};
    for (size_t i = 0; i < seg1.size(); ++i) cfg.tape.set(static_cast<int64_t>(i), m.symbol_index(seg1[i]));
    cfg.tape.set(10, m.symbol_index("1"));
    cfg.tape.set(11, m.symbol_index("X"));
    SegmentView v = decode_segments(m, cfg);
    REQUIRE(v.wellformed);
    CHECK(v.i == 7);
    CHECK(v.imax == 9);
    CHECK(v.l == 4);
    CHECK(v.lmax == 6);
    CHECK(v.word == "1");
}

TEST_CASE("all-blank tape is not wellformed") {
    Machine m = generate_friedman({3, 0});
    Configuration cfg(m);
    SegmentView v = decode_segments(m, cfg);
    CHECK(!v.wellformed);
}

TEST_CASE("reference milestones start as expected") {
    auto ms = reference_algorithm_milestones(2, 8);
    REQUIRE(ms.size() == 8);
    CHECK(ms[0].n == 2);
    CHECK(ms[0].word == "11");
    CHECK(ms[1].word == "11");  // satisfied: one vacuous pass before N grows
    CHECK(ms[2].n == 4);
    CHECK(ms[2].word == "1111");
    CHECK(ms[3].word == "1112");
    CHECK(ms[4].word == "1121");
    CHECK(ms[5].word == "1122");
    CHECK(ms[6].word == "1122");
    CHECK(ms[7].word == "1122");
}

TEST_CASE("milestone agreement, k=2") {
    Machine m = generate_friedman({2, 0});
    auto ref = reference_algorithm_milestones(2, 50);
    auto got = machine_milestones(m, 50, 20'000'000);
    REQUIRE(got.size() == 50);
    for (size_t i = 0; i < 50; ++i) {
        CAPTURE(i);
        CHECK(got[i].n == ref[i].n);
        CHECK(got[i].word == ref[i].word);
        CHECK(got[i].l == ref[i].l);
        CHECK(got[i].lmax == ref[i].lmax);
    }
}

TEST_CASE("milestone agreement, k=3") {
    Machine m = generate_friedman({3, 0});
    auto ref = reference_algorithm_milestones(3, 50);
    auto got = machine_milestones(m, 50, 20'000'000);
    REQUIRE(got.size() == 50);
    for (size_t i = 0; i < 50; ++i) {
        CAPTURE(i);
        CHECK(got[i].n == ref[i].n);
        CHECK(got[i].word == ref[i].word);
    }
}

TEST_CASE("milestone agreement, k=3 delta=1") {
    Machine m = generate_friedman({3, 1});
    auto ref = reference_algorithm_milestones(3, 25);
    auto got = machine_milestones(m, 25, 20'000'000);
    REQUIRE(got.size() == 25);
    for (size_t i = 0; i < 25; ++i) {
        CAPTURE(i);
        CHECK(got[i].n == ref[i].n);
        CHECK(got[i].word == ref[i].word);
    }
}

TEST_CASE("milestone agreement, k=2 delta=1") {
    Machine m = generate_friedman({2, 1});
    auto ref = reference_algorithm_milestones(2, 25);
    auto got = machine_milestones(m, 25, 20'000'000);
    REQUIRE(got.size() == 25);
    for (size_t i = 0; i < 25; ++i) {
        CAPTURE(i);
        CHECK(got[i].n == ref[i].n);
        CHECK(got[i].word == ref[i].word);
    }
}

TEST_CASE("k=2 machine exhausts a small budget without undefined transitions") {
    Machine m = generate_friedman({2, 0});
    RunResult r = run(m, 1'000'000);
    CHECK(r.outcome == Outcome::BudgetExhausted);
}

TEST_CASE("k=3 machine runs clean for a million steps") {
    Machine m = generate_friedman({3, 0});
    RunResult r = run(m, 1'000'000);
    CHECK(r.outcome == Outcome::BudgetExhausted);
}

TEST_CASE("marker discipline holds at snapshots") {
    Machine m = generate_friedman({3, 0});
    Simulator sim(m);
    int wellformed_seen = 0;
    for (int chunk = 0; chunk < 200; ++chunk) {
        sim.run(sim.config().steps + 977);
        SegmentView v = decode_segments(m, sim.config());
        if (!v.wellformed) continue;
        ++wellformed_seen;
        CHECK(v.i <= v.imax);
        CHECK(v.lmax <= v.imax);
        CHECK(v.l <= v.lmax);
    }
    CHECK(wellformed_seen > 0);
}
