#include "support.hpp"

#include "bcast/charging.hpp"
#include "bcast/experiment.hpp"
#include "bcast/generator.hpp"
#include "bcast/lemmas.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace bcast;
using bcast::testing::make_trace;
using bcast::testing::slots_schedule;
using bcast::testing::t1;

namespace {

// Hand-built analysis: events given as (e, o') with o' empty for self-chargeable ones.
Analysis hand_analysis(const std::vector<std::pair<Time, std::optional<Rational>>>& ends, AnalysisConfig config,
                       int speed) {
    Analysis a;
    a.config = config;
    a.speed = speed;
    a.busy = {{0, 100}};
    int page = 1;
    for (const auto& [e, o_prime] : ends) {
        Event ev;
        ev.page = page++;
        ev.index = 1;
        ev.b = 0;
        ev.e = e;
        ev.F_alg = Rational(1);
        EventLabel label;
        if (o_prime) {
            ev.o = o_prime->floor();
            ev.o_prime = *o_prime;
            label.chargeability = EventLabel::Charge::NonSelfChargeable;
            if (config.four_speed) label.subtype = EventLabel::Subtype::Type1;
        }
        a.events.push_back(ev);
        a.labels.push_back(label);
    }
    return a;
}

}  // namespace

TEST_SUITE("charging-analysis") {

TEST_CASE("decompose: two broadcasts with an initial event") {
    const Trace t = make_trace({{1, 0, 1}, {1, 1, 2}, {1, 2, 3}});
    const Schedule alg = slots_schedule(t, 1, {{1, {1}}, {3, {1}}});
    const auto events = decompose_events(t, alg, alg, AnalysisConfig{});
    REQUIRE(events.size() == 2);
    CHECK(events[0].b == 0);
    CHECK(events[0].e == 1);
    CHECK(events[0].initial());
    CHECK(events[0].requests == std::vector<RequestId>{{1, 1}});
    CHECK(events[1].b == 1);
    CHECK(events[1].e == 3);
    CHECK(events[1].requests == std::vector<RequestId>{{1, 2}, {1, 3}});
}

TEST_CASE("decompose: single broadcast") {
    const Trace t = make_trace({{1, 0, 1}, {1, 2, 3}});
    const Schedule alg = slots_schedule(t, 1, {{4, {1}}});
    const auto events = decompose_events(t, alg, alg, AnalysisConfig{});
    REQUIRE(events.size() == 1);
    CHECK(events[0].b == 0);
    CHECK(events[0].e == 4);
    CHECK(events[0].requests.size() == 2);
}

TEST_CASE("decompose: micro trace under LWF_1") {
    const Trace t = t1();
    const Schedule alg = simulate(t, Policy::lwf(), 1);
    const auto events = decompose_events(t, alg, alg, AnalysisConfig{});
    REQUIRE(events.size() == 3);
    CHECK(events[0].name() == "E(1,0)");
    CHECK(events[0].F_alg == Rational(1));
    CHECK(events[1].name() == "E(1,1)");
    CHECK((events[1].b == 1 && events[1].e == 3));
    CHECK(events[1].F_alg == Rational(2));
    CHECK(events[2].name() == "E(2,0)");
    CHECK(events[2].e == 2);
    CHECK(events[2].F_alg == Rational(2));
}

TEST_CASE("labels: equal cost and short events are self-chargeable") {
    const Trace t = t1();
    const Schedule alg = simulate(t, Policy::lwf(), 1);
    const Analysis same = analyze(t, alg, alg, AnalysisConfig{});
    for (const auto& l : same.labels) CHECK(l.self_chargeable());

    const Schedule opt = optimal_schedule(t, PenaltySpec::flow(), Aggregate::Sum).schedule;
    const Analysis vs_opt = analyze(t, alg, opt, AnalysisConfig{});
    CHECK(vs_opt.events[1].F_alg == Rational(2));
    CHECK(vs_opt.events[1].F_opt == Rational(1));
    CHECK(vs_opt.labels[1].self_chargeable());
}

TEST_CASE("labels: a long event the comparator beats") {
    const Trace t = make_trace({{1, 0, 1}, {1, 2, 3}});
    const Schedule alg = slots_schedule(t, 1, {{1, {1}}, {13, {1}}});
    const Schedule opt = slots_schedule(t, 1, {{1, {1}}, {4, {1}}});
    const Analysis a = analyze(t, alg, opt, AnalysisConfig::five_speed());
    REQUIRE(a.events.size() == 2);
    const Event& ev = a.events[1];
    CHECK(a.non_self_chargeable(1));
    CHECK(ev.b == 1);
    CHECK(ev.o == 4);
    CHECK(ev.o_prime == Rational(3));
    CHECK(ev.F_alg == Rational(11));
    CHECK(ev.F_early == Rational(11));
    CHECK(ev.F_late == Rational(0));

    AnalysisConfig le = AnalysisConfig::five_speed();
    le.rho = Rational(12);
    le.le_rho = true;
    CHECK(analyze(t, alg, opt, le).labels[1].self_chargeable());
    le.le_rho = false;
    CHECK_FALSE(analyze(t, alg, opt, le).labels[1].self_chargeable());
}

TEST_CASE("labels: missing comparator broadcast is reported") {
    const Trace t = make_trace({{1, 0, 1}, {1, 2, 3}});
    const Schedule alg = slots_schedule(t, 1, {{1, {1}}, {13, {1}}});
    Schedule lying = slots_schedule(t, 1, {{1, {1}}, {14, {1}}});
    lying.finish[{1, 2}] = 3;
    CHECK_THROWS_AS(analyze(t, alg, lying, AnalysisConfig::five_speed()), MissingOptBroadcast);
}

TEST_CASE("config validation") {
    AnalysisConfig c;
    c.rho = Rational(1);
    CHECK_THROWS(c.validate());
    c = AnalysisConfig{};
    c.alpha = Rational(1);
    CHECK_THROWS(c.validate());
    c = AnalysisConfig{};
    c.lambda = Rational(0);
    CHECK_THROWS(c.validate());
    const AnalysisConfig lk = AnalysisConfig::lk_delay_factor(2);
    CHECK(lk.beta == Rational(2, 3));
    CHECK(lk.rho == Rational(270));
}

TEST_CASE("partition and split invariants on random traces") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GeneratorSpec g;
        g.kind = GeneratorSpec::Kind::Backlogged;
        g.pages = 30;
        g.horizon = 25;
        g.intensity = Rational(5);
        g.seed = seed;
        g.slack_hi = 3;
        const Trace t = generate(g);
        for (const PenaltySpec& spec : {PenaltySpec::flow(), PenaltySpec::power_delay_factor(2)}) {
            AnalysisConfig config = AnalysisConfig::five_speed();
            config.spec = spec;
            const Schedule alg = simulate(t, Policy::lf(spec), 4);
            const Schedule cmp = focus_schedule(t, rare_pages(t));
            const Analysis a = analyze(t, alg, cmp, config);
            Rational total;
            std::size_t owned = 0;
            for (std::size_t i = 0; i < a.events.size(); ++i) {
                const Event& ev = a.events[i];
                total += ev.F_alg;
                owned += ev.requests.size();
                CHECK(ev.b < ev.e);
                if (a.non_self_chargeable(i)) {
                    REQUIRE(ev.o.has_value());
                    CHECK(*ev.o >= ev.b + 1);
                    CHECK(*ev.o <= ev.e - 1);
                    CHECK(cmp.broadcasts(*ev.o, ev.page));
                    CHECK(ev.F_early + ev.F_late == ev.F_alg);
                }
            }
            CHECK(owned == t.size());
            CHECK(total == objective(spec, t, alg, Aggregate::Sum));
        }
    }
}

TEST_CASE("5-speed graph: empty X and the tail rule") {
    const Trace t = t1();
    const Schedule alg = simulate(t, Policy::lwf(), 5);
    const Analysis a = analyze(t, alg, alg, AnalysisConfig::five_speed());
    const ChargingGraph g = build_5speed_graph(a);
    CHECK(g.left.empty());
    CHECK(g.edges.empty());

    const Analysis h = hand_analysis({{12, Rational(0)}, {5, {}}, {6, {}}, {11, {}}, {12, {}}},
                                     AnalysisConfig::five_speed(), 5);
    const ChargingGraph tail = build_5speed_graph(h);
    REQUIRE(tail.left == std::vector<std::size_t>{0});
    std::set<Time> ends;
    for (const auto& [u, v] : tail.edges) ends.insert(h.events[tail.right[v]].e);
    CHECK(ends == std::set<Time>{6, 11});
    CHECK(tail.degrees() == std::vector<std::size_t>{2});
}

TEST_CASE("covering bound and bridge coefficient") {
    CHECK(five_speed_covering_bound(Rational(10), 5) == Rational(4, 9));
    CHECK(bridge_coefficient(Rational(1, 32), Rational(1, 32)) == Rational(10, 3));
    CHECK(bridge_coefficient(Rational(1, 16), Rational(1, 16)) == Rational(4));
    CHECK_FALSE(bridge_coefficient(Rational(1, 8), Rational(1, 8)).has_value());
}

TEST_CASE("core lemmas on single-page traces") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Trace t = small_random_trace(seed, 1, 10, 30);
        const Schedule alg = simulate(t, Policy::lwf(), 1);
        const Schedule opt = optimal_schedule(t, PenaltySpec::flow(), Aggregate::Sum).schedule;
        const Analysis a = analyze(t, alg, opt, AnalysisConfig::five_speed());
        const Report r = verify_core_lemmas(a);
        CHECK(r.failures() == 0);
        CHECK(r.aggregates.at("LWF") == objective(PenaltySpec::flow(), t, alg, Aggregate::Sum));
    }
}

TEST_CASE("core lemmas use the generalized names for other penalties") {
    const PenaltySpec spec = PenaltySpec::power_delay_factor(2);
    const Trace t = make_trace({{1, 0, 3}, {2, 0, 2}, {1, 2, 4}});
    AnalysisConfig config = AnalysisConfig::lk_delay_factor(2);
    const Schedule alg = simulate(t, Policy::lf(spec), 1);
    const Report r = verify_core_lemmas(analyze(t, alg, alg, config));
    CHECK(r.count(CheckStatus::Pass, "lem:GSC") == 4);  // three events plus the aggregate
    CHECK(r.aggregates.contains("LF^S"));
    std::ostringstream tsv;
    r.write_tsv(tsv);
    CHECK(tsv.str().rfind("check_id\tlemma\tevents\tlhs\trhs\tstatus\tnote\n", 0) == 0);
}

TEST_CASE("lemma checks on a backlogged trace against the focus comparator") {
    std::size_t n_events = 0;
    std::size_t closeness = 0;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        GeneratorSpec g;
        g.kind = GeneratorSpec::Kind::Backlogged;
        g.pages = 60;
        g.horizon = 40;
        g.intensity = Rational(6);
        g.seed = seed;
        const Trace t = generate(g);
        const Schedule cmp = focus_schedule(t, rare_pages(t));
        for (int s : {4, 5}) {
            const Analysis a = analyze(t, simulate(t, Policy::lwf(), s), cmp, AnalysisConfig::five_speed());
            Report r = verify_core_lemmas(a);
            if (s == 5) r.append(certify_5speed_covering(a));
            CHECK(r.failures() == 0);
            n_events += static_cast<std::size_t>(r.aggregates.at("count:N").floor());
            closeness += r.count(CheckStatus::Pass, "lem:close");
        }
    }
    CHECK(n_events > 0);
    CHECK(closeness > 0);
}

TEST_CASE("uniqueness of o among non-self-chargeable events") {
    AnalysisConfig config = AnalysisConfig::four_speed_default();
    config.rho = Rational(2);
    const Analysis two = hand_analysis({{10, Rational(3)}, {12, Rational(5)}}, config, 4);
    const Report ok = verify_4speed_structures(two);
    CHECK(ok.count(CheckStatus::Pass, "lem:type2") == 1);

    const Analysis clash = hand_analysis({{10, Rational(3)}, {12, Rational(3)}}, config, 4);
    CHECK(verify_4speed_structures(clash).count(CheckStatus::Fail, "lem:type2") == 1);

    CHECK_THROWS(verify_4speed_structures(hand_analysis({}, AnalysisConfig::five_speed(), 4)));
}

TEST_CASE("theorem bounds") {
    const AnalysisConfig def;
    CHECK(theorem_bound(PenaltySpec::flow(), 5, def)->first == Rational(90));
    CHECK(theorem_bound(PenaltySpec::delay_factor(), 5, def)->first == Rational(90));
    CHECK(theorem_bound(PenaltySpec::flow(), 4, def)->first == Rational(3152640));
    CHECK(theorem_bound(PenaltySpec::flow(), 6, def)->first == Rational(60));
    CHECK_FALSE(theorem_bound(PenaltySpec::flow(), 2, def).has_value());

    const AnalysisConfig lk = AnalysisConfig::lk_delay_factor(2);
    const PenaltySpec spec = PenaltySpec::power_delay_factor(2);
    const Rational delta = Rational(270) / (Rational(9) * Rational(4, 9) * Rational(89));
    CHECK(theorem_bound(spec, 9, lk)->first == Rational(72900) / (Rational(1) - delta));
}

TEST_CASE("ratio report on the micro trace") {
    const auto rows = theorem_ratio_report(t1(), PenaltySpec::flow(), {1, 2, 5}, AnalysisConfig::five_speed());
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].ratio == Rational(5, 4));
    CHECK(rows[1].ratio == Rational(3, 4));
    CHECK(rows[2].ratio == Rational(3, 4));
    CHECK(rows[2].bound == Rational(90));
    CHECK_FALSE(rows[0].bound.has_value());
    CHECK(rows[0].bound_source == "bound inapplicable");
    for (const auto& r : rows) CHECK(r.optimum == Rational(4));

    for (int s : {1, 3, 5}) {
        const auto single = theorem_ratio_report(make_trace({{1, 0, 1}}), PenaltySpec::flow(), {s}, AnalysisConfig{});
        CHECK(single[0].ratio == Rational(1));
    }
}

}  // TEST_SUITE
