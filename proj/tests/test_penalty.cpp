#include "support.hpp"

#include "bcast/engine.hpp"
#include "bcast/offline_opt.hpp"
#include "bcast/penalty.hpp"
#include "bcast/random.hpp"

#include <doctest.h>

using namespace bcast;
using bcast::testing::make_trace;
using bcast::testing::t1;

TEST_SUITE("penalty-metrics") {

TEST_CASE("rational basics") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, -4) == Rational(-3, 4));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK(Rational(15, 4).str() == "15/4");
    CHECK(Rational(15, 4).decimal(6) == "3.750000");
    CHECK(Rational(2, 3).decimal(6) == "0.666667");
    CHECK(Rational(-2, 3).decimal(2) == "-0.67");
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
}

TEST_CASE("penalty examples") {
    CHECK(penalty(PenaltySpec::delay_factor(), 4, Rational(2)) == Rational(1));
    CHECK(penalty(PenaltySpec::delay_factor(), 4, Rational(6)) == Rational(3, 2));
    CHECK(penalty(PenaltySpec::power_delay_factor(2), 4, Rational(6)) == Rational(9, 4));
    CHECK(penalty(PenaltySpec::flow(), 4, Rational(6)) == Rational(6));
    CHECK(penalty(PenaltySpec::power_flow(3), 1, Rational(2)) == Rational(8));
}

TEST_CASE("h_bound examples") {
    CHECK(h_bound(PenaltySpec::flow(), Rational(1, 2)) == Rational(1, 2));
    CHECK(h_bound(PenaltySpec::power_delay_factor(3), Rational(1, 2)) == Rational(1, 8));
    for (const auto& spec : {PenaltySpec::flow(), PenaltySpec::delay_factor(), PenaltySpec::power_flow(4),
                             PenaltySpec::power_delay_factor(2)}) {
        CHECK(h_bound(spec, Rational(1)) == Rational(1));
    }
    try {
        h_bound(PenaltySpec::flow(), Rational(3, 2));
        FAIL("expected LambdaOutOfRange");
    } catch (const PenaltyError& e) {
        CHECK(e.kind() == PenaltyError::Kind::LambdaOutOfRange);
    }
    CHECK_THROWS_AS(h_bound(PenaltySpec::flow(), Rational(-1, 2)), PenaltyError);
}

TEST_CASE("m_envelope examples") {
    CHECK(m_envelope(PenaltySpec::flow(), Rational(10)) == Rational(10));
    CHECK(m_envelope(PenaltySpec::delay_factor(), Rational(10)) == Rational(10));
    CHECK(m_envelope(PenaltySpec::power_delay_factor(2), Rational(10)) == Rational(100));
    CHECK(m_envelope(PenaltySpec::power_flow(3), Rational(2)) == Rational(8));
}

TEST_CASE("objective examples") {
    const Trace single = make_trace({{1, 0, 1}});
    const Schedule s = simulate(single, Policy::lwf(), 1);
    CHECK(objective(PenaltySpec::flow(), single, s, Aggregate::Sum) == Rational(1));

    const Trace t = t1();
    const Schedule lwf = simulate(t, Policy::lwf(), 1);
    CHECK(objective(PenaltySpec::flow(), t, lwf, Aggregate::Sum) == Rational(5));
    CHECK(objective(PenaltySpec::flow(), t, lwf, Aggregate::Max) == Rational(2));
    const OptResult opt = optimal_schedule(t, PenaltySpec::flow(), Aggregate::Sum);
    CHECK(objective(PenaltySpec::flow(), t, opt.schedule, Aggregate::Sum) == Rational(4));

    Schedule partial;
    partial.slots = {{1, {1}}};
    assign_finish_times(t, partial);
    try {
        objective(PenaltySpec::flow(), t, partial, Aggregate::Sum);
        FAIL("expected IncompleteSchedule");
    } catch (const PenaltyError& e) {
        CHECK(e.kind() == PenaltyError::Kind::IncompleteSchedule);
    }
}

TEST_CASE("verify_h_property") {
    CHECK(verify_h_property(PenaltySpec::flow(), 2000).empty());
    CHECK(verify_h_property(PenaltySpec::delay_factor(), 2000).empty());
    CHECK(verify_h_property(PenaltySpec::power_flow(3), 2000).empty());
    CHECK(verify_h_property(PenaltySpec::power_delay_factor(2), 10000).empty());
    // The hand example: max(1, 1/8) = 1 >= (1/2) * 1.
    const PenaltySpec df = PenaltySpec::delay_factor();
    CHECK(penalty(df, 4, Rational(1, 2)) >= h_bound(df, Rational(1, 2)) * penalty(df, 4, Rational(1)));
}

TEST_CASE("monotone in wait, bounded by the envelope, power-1 kinds agree") {
    Xorshift64Star rng(11);
    const std::vector<PenaltySpec> specs = {PenaltySpec::flow(), PenaltySpec::delay_factor(),
                                            PenaltySpec::power_flow(2), PenaltySpec::power_delay_factor(3)};
    for (int i = 0; i < 2000; ++i) {
        const Time slack = rng.uniform(1, 20);
        const Rational x(rng.uniform(0, 400), rng.uniform(1, 8));
        const Rational y = x + Rational(rng.uniform(0, 50), rng.uniform(1, 8));
        for (const auto& spec : specs) {
            CHECK(penalty(spec, slack, x) <= penalty(spec, slack, y));
            if (y >= Rational(1)) CHECK(penalty(spec, slack, y) <= m_envelope(spec, y));
        }
        CHECK(penalty(PenaltySpec::flow(), slack, x) == penalty(PenaltySpec::power_flow(1), slack, x));
        CHECK(penalty(PenaltySpec::delay_factor(), slack, x) ==
              penalty(PenaltySpec::power_delay_factor(1), slack, x));
    }
}

TEST_CASE("spec parsing") {
    CHECK(PenaltySpec::parse("flow") == PenaltySpec::flow());
    CHECK(PenaltySpec::parse("df") == PenaltySpec::delay_factor());
    CHECK(PenaltySpec::parse("powflow:3") == PenaltySpec::power_flow(3));
    CHECK(PenaltySpec::parse("powdf:2") == PenaltySpec::power_delay_factor(2));
    for (const char* text : {"flow", "df", "powflow:3", "powdf:2"}) CHECK(PenaltySpec::parse(text).str() == text);
    CHECK_THROWS_AS(PenaltySpec::parse("powdf:0"), PenaltyError);
    CHECK_THROWS_AS(PenaltySpec::parse("nope"), PenaltyError);
    CHECK(parse_aggregate("max") == Aggregate::Max);
    CHECK_THROWS(parse_aggregate("avg"));
}

}  // TEST_SUITE
