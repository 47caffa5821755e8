#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tmlab/ackermann.hpp"
#include "tmlab/bb.hpp"
#include "tmlab/frontier.hpp"

using namespace tmlab;

TEST_CASE("published ackermann values") {
    CHECK(ackermann(3, 4, 1 << 20).value == 65536);
    CHECK(ackermann(4, 3, 1 << 20).value == 65536);
    for (int f = 1; f <= 6; ++f) {
        CHECK(ackermann(f, 1, 1 << 20).value == 2);
        CHECK(ackermann(f, 2, 1 << 20).value == 4);
    }
}

TEST_CASE("doubling and exponential rows") {
    for (int c = 1; c <= 64; ++c) {
        CHECK(ackermann(1, c, 1 << 20).value == 2 * c);
        CHECK(ackermann(2, c, 1 << 20).value == BigInt(1) << c);
    }
}

TEST_CASE("A(4,4) overflows a million-bit budget") {
    AckValue v = ackermann(4, 4, 1'000'000);
    CHECK(!v.exact);
    CHECK(v.overflow_f == 3);
}

TEST_CASE("recurrence closure within budget") {
    const uint64_t budget = 1 << 22;
    for (int f = 2; f <= 5; ++f) {
        for (int c = 2; c <= 5; ++c) {
            AckValue whole = ackermann(f, c, budget);
            if (!whole.exact) continue;
            AckValue inner = ackermann(f, c - 1, budget);
            REQUIRE(inner.exact);
            AckValue outer = ackermann(f - 1, inner.value, budget);
            REQUIRE(outer.exact);
            CHECK(whole.value == outer.value);
        }
    }
}

TEST_CASE("bad arguments") {
    CHECK_THROWS(ackermann(0, 1, 100));
    CHECK_THROWS(ackermann(1, 0, 100));
}

TEST_CASE("one-state champions run one step") {
    for (int m = 1; m <= 3; ++m) {
        BBResult r = bb_enumerate(1, m, 10);
        CHECK(r.champion_steps == 1);
    }
}

TEST_CASE("two-state two-symbol champion by steps") {
    BBResult r = bb_enumerate(2, 2, 1000);
    CHECK(r.champion_steps == 6);
    REQUIRE(r.champion.has_value());
    RunResult rerun = run(*r.champion, 1000);
    CHECK(rerun.outcome == Outcome::Halted);
    CHECK(rerun.steps == 6);
    CHECK(r.halting + r.cutoff_exceeded == r.total_machines);
}

TEST_CASE("champion is monotone in the cutoff") {
    BBResult small = bb_enumerate(2, 2, 4);
    BBResult big = bb_enumerate(2, 2, 1000);
    CHECK(small.champion_steps <= big.champion_steps);
}

TEST_CASE("partitioned enumeration matches single-threaded") {
    BBResult a = bb_enumerate(2, 2, 100, 1);
    BBResult b = bb_enumerate(2, 2, 100, 4);
    CHECK(a.champion_steps == b.champion_steps);
    CHECK(a.halting == b.halting);
    REQUIRE(a.champion.has_value());
    REQUIRE(b.champion.has_value());
    CHECK(*a.champion == *b.champion);
}

TEST_CASE("class-too-large guard") {
    CHECK_THROWS(bb_enumerate(6, 6, 10, 1, 1 << 20));
}

TEST_CASE("smallest two-sided frontier") {
    FrontierReport r = frontier_count(Frontier{{{2, 3}, {3, 2}}});
    CHECK(r.total == 1);  // only (2,2) survives
}

TEST_CASE("frontier requires both axes covered") {
    CHECK_THROWS(frontier_count(Frontier{{{2, 3}}}));
    CHECK_THROWS(frontier_count(Frontier{{{3, 2}}}));
    CHECK_THROWS(frontier_count(Frontier{{}}));
}

TEST_CASE("band decomposition sums to the total") {
    for (const char* name : {"n3", "n4"}) {
        FrontierReport r = frontier_count(frontier_preset(name));
        long long sum = 0;
        for (const auto& b : r.bands) sum += b.count;
        CHECK(sum == r.total);
    }
}

TEST_CASE("derived totals and the published deltas") {
    FrontierReport n3 = frontier_count(frontier_preset("n3"));
    CHECK(n3.total == 36922);
    CHECK(frontier_published_total("n3") == 37022);

    FrontierReport n4 = frontier_count(frontier_preset("n4"));
    CHECK(n4.total == 51897);
    CHECK(frontier_published_total("n4") == 51671);
}

TEST_CASE("adding a dominated implementation changes nothing") {
    Frontier f = frontier_preset("n3");
    FrontierReport before = frontier_count(f);
    f.impls.push_back({100, 100});  // dominated by (44,8)
    f.impls.push_back({276, 2});    // duplicate
    FrontierReport after = frontier_count(f);
    CHECK(before.total == after.total);
    CHECK(before.bands.size() == after.bands.size());
}

TEST_CASE("n3 bands match the grid structure") {
    FrontierReport r = frontier_count(frontier_preset("n3"));
    REQUIRE(r.bands.size() == 6);
    CHECK(r.bands[0].n_lo == 2);
    CHECK(r.bands[0].n_hi == 2);
    CHECK(r.bands[0].m_hi == 1839);
    CHECK(r.bands[0].count == 1838);
    CHECK(r.bands[5].n_lo == 155);
    CHECK(r.bands[5].n_hi == 275);
    CHECK(r.bands[5].m_hi == 2);
    CHECK(r.bands[5].count == 121);
}

TEST_CASE("escape accelerator does not change results") {
    for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}}) {
        BBResult fast = bb_enumerate(n, m, 300, 1, 1ull << 32, true);
        BBResult slow = bb_enumerate(n, m, 300, 1, 1ull << 32, false);
        CHECK(fast.champion_steps == slow.champion_steps);
        CHECK(fast.halting == slow.halting);
        CHECK(fast.cutoff_exceeded == slow.cutoff_exceeded);
        REQUIRE(fast.champion.has_value());
        REQUIRE(slow.champion.has_value());
        CHECK(*fast.champion == *slow.champion);
    }
}
