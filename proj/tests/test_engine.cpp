#include "support.hpp"

#include "bcast/engine.hpp"
#include "bcast/generator.hpp"

#include <doctest.h>

#include <set>

using namespace bcast;
using bcast::testing::make_trace;
using bcast::testing::t1;

namespace {

Request req(PageId p, Time a, Time d, int index) { return {p, a, d, index}; }

}  // namespace

TEST_SUITE("sched-engine") {

TEST_CASE("single request") {
    const Trace t = make_trace({{1, 0, 1}});
    const Schedule s = simulate(t, Policy::lwf(), 1);
    CHECK(s.slots == std::map<Time, std::vector<PageId>>{{1, {1}}});
    CHECK(s.finish.at({1, 1}) == 1);
}

TEST_CASE("micro trace at speeds 1 and 2") {
    const Trace t = t1();
    const Schedule s1 = simulate(t, Policy::lwf(), 1);
    CHECK(s1.slots == std::map<Time, std::vector<PageId>>{{1, {1}}, {2, {2}}, {3, {1}}});
    CHECK(objective(PenaltySpec::flow(), t, s1, Aggregate::Sum) == Rational(5));

    const Schedule s2 = simulate(t, Policy::lwf(), 2);
    CHECK(s2.slots == std::map<Time, std::vector<PageId>>{{1, {1, 2}}, {2, {1}}});
    CHECK(objective(PenaltySpec::flow(), t, s2, Aggregate::Sum) == Rational(3));
    CHECK(objective(PenaltySpec::flow(), t, simulate(t, Policy::lwf(), 5), Aggregate::Sum) == Rational(3));
}

TEST_CASE("select_pages examples") {
    QueueState st;
    st.now = 3;
    st.outstanding[1] = {req(1, 0, 1, 1)};
    st.outstanding[2] = {req(2, 2, 3, 1), req(2, 2, 3, 2)};
    CHECK(waiting_time(PenaltySpec::flow(), st, 1) == Rational(3));
    CHECK(waiting_time(PenaltySpec::flow(), st, 2) == Rational(2));
    CHECK(select_pages(Policy::lwf(), st, 1) == std::vector<PageId>{1});

    const PenaltySpec l2 = PenaltySpec::power_delay_factor(2);
    QueueState lf;
    lf.now = 4;
    lf.outstanding[1] = {req(1, 0, 2, 1)};
    lf.outstanding[2] = {req(2, 3, 4, 1), req(2, 3, 4, 2)};
    CHECK(waiting_time(l2, lf, 1) == Rational(4));
    CHECK(waiting_time(l2, lf, 2) == Rational(2));
    CHECK(select_pages(Policy::lf(l2), lf, 1) == std::vector<PageId>{1});

    QueueState tie;
    tie.now = 2;
    tie.outstanding[5] = {req(5, 0, 1, 1)};
    tie.outstanding[3] = {req(3, 0, 1, 1)};
    CHECK(select_pages(Policy::lwf(), tie, 1) == std::vector<PageId>{3});
    CHECK(select_pages(Policy::lwf(), tie, 4) == std::vector<PageId>{3, 5});
}

TEST_CASE("FCFS and round-robin order") {
    QueueState st;
    st.now = 10;
    st.outstanding[1] = {req(1, 5, 6, 1), req(1, 6, 7, 2), req(1, 7, 8, 3)};
    st.outstanding[2] = {req(2, 3, 4, 1)};
    st.outstanding[4] = {req(4, 3, 4, 1)};
    CHECK(select_pages(Policy::fcfs(), st, 2) == std::vector<PageId>{2, 4});
    CHECK(select_pages(Policy::lwf(), st, 1) == std::vector<PageId>{1});
    st.rr_last = 2;
    CHECK(select_pages(Policy::round_robin(), st, 2) == std::vector<PageId>{4, 1});
    st.rr_last = 4;
    CHECK(select_pages(Policy::round_robin(), st, 1) == std::vector<PageId>{1});
}

TEST_CASE("policy parsing") {
    CHECK(Policy::parse("lwf", PenaltySpec::flow()).kind == Policy::Kind::LWF);
    CHECK(Policy::parse("lf", PenaltySpec::delay_factor()).spec == PenaltySpec::delay_factor());
    CHECK(Policy::parse("rr", PenaltySpec::flow()).kind == Policy::Kind::RoundRobin);
    CHECK_THROWS(Policy::parse("sjf", PenaltySpec::flow()));
}

TEST_CASE("busy_windows examples") {
    Schedule a;
    a.speed = 1;
    a.slots = {{1, {1}}, {2, {2}}, {3, {1}}};
    CHECK(busy_windows(a) == std::vector<TimeWindow>{{1, 3}});
    Schedule b;
    b.speed = 2;
    b.slots = {{1, {1, 2}}, {2, {1}}};
    CHECK(busy_windows(b) == std::vector<TimeWindow>{{1, 1}});
    CHECK(busy_windows(Schedule{}).empty());
    const auto w = busy_windows(a);
    CHECK(fully_busy(w, 1, 3));
    CHECK_FALSE(fully_busy(w, 0, 3));
    CHECK(fully_busy(w, 5, 4));
}

TEST_CASE("determinism, work conservation, earliest finish") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Trace t = small_random_trace(seed, 6, 14, 10, 3);
        for (const Policy& p : {Policy::lwf(), Policy::fcfs(), Policy::round_robin()}) {
            for (int s : {1, 2, 3}) {
                const Schedule a = simulate(t, p, s);
                CHECK(a == simulate(t, p, s));
                CHECK(verify_schedule(t, a).empty());
                // Replay the queue: each slot serves min(s, #pages waiting) pages.
                for (const auto& [time, pages] : a.slots) {
                    std::set<PageId> waiting;
                    for (const auto& r : t.requests()) {
                        if (r.arrival < time && a.finish.at(r.id()) >= time) waiting.insert(r.page);
                    }
                    CHECK(pages.size() == std::min<std::size_t>(static_cast<std::size_t>(s), waiting.size()));
                }
            }
        }
    }
}

TEST_CASE("LWF is LF over flow time") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Trace t = small_random_trace(seed, 5, 12, 8, 3);
        for (int s : {1, 2}) CHECK(simulate(t, Policy::lwf(), s) == simulate(t, Policy::lf(PenaltySpec::flow()), s));
    }
}

TEST_CASE("dominance: one more unit of speed never hurts LWF on random traces") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const Trace t = small_random_trace(seed, 6, 16, 10);
        for (int s = 1; s <= 4; ++s) {
            const Rational slow = objective(PenaltySpec::flow(), t, simulate(t, Policy::lwf(), s), Aggregate::Sum);
            const Rational fast =
                objective(PenaltySpec::flow(), t, simulate(t, Policy::lwf(), s + 1), Aggregate::Sum);
            CHECK_MESSAGE(fast <= slow, "seed " << seed << " s=" << s);
            ++checked;
        }
    }
    CHECK(checked == 1200);
}

}  // TEST_SUITE
