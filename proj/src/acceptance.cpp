#include "bcast/acceptance.hpp"

#include "bcast/charging.hpp"
#include "bcast/engine.hpp"
#include "bcast/experiment.hpp"
#include "bcast/generator.hpp"
#include "bcast/hall.hpp"
#include "bcast/intervals.hpp"
#include "bcast/lemmas.hpp"
#include "bcast/offline_opt.hpp"
#include "bcast/random.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

namespace bcast {

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << "criterion " << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << ' ' << r.title << ": " << r.detail << " ("
       << std::fixed << std::setprecision(2) << r.seconds << "s";
    if (r.limit_seconds > 0) os << " of " << std::setprecision(0) << r.limit_seconds << "s";
    os << ')';
    return os.str();
}

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& why) {
        if (ok) return;
        if (passed) detail << "FAILED: ";
        passed = false;
        detail << why << "; ";
    }
};

Trace make_trace(std::initializer_list<std::array<Time, 3>> rows) {
    std::vector<Request> raw;
    for (const auto& [p, a, d] : rows) raw.push_back({static_cast<PageId>(p), a, d, 0});
    return validate_trace(raw);
}

// ---------------------------------------------------------------------------------------
// Backlogged suites, built once and shared.

struct SuiteCase {
    Trace trace;
    std::vector<std::pair<Comparator, Schedule>> comparators;
};

std::vector<SuiteCase> build_backlogged(int count, const std::vector<int>& pages, std::int64_t base_intensity,
                                        Time horizon, Time slack_hi, const PenaltySpec& spec,
                                        std::uint64_t opt_budget) {
    std::vector<SuiteCase> out;
    for (int i = 1; i <= count; ++i) {
        GeneratorSpec g;
        g.kind = GeneratorSpec::Kind::Backlogged;
        g.pages = pages[static_cast<std::size_t>(i) % pages.size()];
        g.intensity = Rational(base_intensity + i % 2);
        g.horizon = horizon;
        g.slack_lo = 1;
        g.slack_hi = slack_hi;
        g.seed = static_cast<std::uint64_t>(i);
        SuiteCase c{generate(g), {}};
        OptOptions options;
        options.node_budget = opt_budget;
        for (Comparator which : {Comparator::Opt, Comparator::Focus, Comparator::Fcfs}) {
            c.comparators.emplace_back(which, comparator_schedule(c.trace, spec, which, options).schedule);
        }
        out.push_back(std::move(c));
    }
    return out;
}

const std::vector<SuiteCase>& flow_suite() {
    static const std::vector<SuiteCase> suite =
        build_backlogged(50, {20, 40, 60}, 6, 40, 4, PenaltySpec::flow(), 2000);
    return suite;
}

// Heavy pages requested `per` times every slot for `dur` slots keep LWF_4 busy while a burst
// of single requests for `light` cold pages, all at time 0, waits. The focus comparator
// serves the cold pages one per slot, so many events of the burst are non-self-chargeable
// at once: the only setting where Type2 events and bridges show up.
std::vector<SuiteCase> burst_suite() {
    std::vector<SuiteCase> out;
    for (int light : {40, 60, 80}) {
        for (int per : {45, 60, 80}) {
            for (int dur : {30, 45, 60}) {
                const int heavy = 4;
                std::vector<Request> raw;
                for (int t = 0; t < dur; ++t) {
                    for (int h = 1; h <= heavy; ++h) {
                        for (int k = 0; k < per; ++k) raw.push_back({h, t, t + 1, 0});
                    }
                }
                std::vector<PageId> cold;
                for (int p = heavy + 1; p <= heavy + light; ++p) {
                    raw.push_back({p, 0, 1, 0});
                    cold.push_back(p);
                }
                SuiteCase c{validate_trace(raw), {}};
                c.comparators.emplace_back(Comparator::Focus, focus_schedule(c.trace, cold));
                c.comparators.emplace_back(Comparator::Fcfs, simulate(c.trace, Policy::fcfs(), 1));
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

struct SuiteTotals {
    std::size_t analyses = 0;
    std::size_t events = 0;
    std::size_t n_events = 0;
    std::size_t busy_n_events = 0;
    std::size_t unbusy_slots = 0;

    SuiteTotals& operator+=(const SuiteTotals& o) {
        analyses += o.analyses;
        events += o.events;
        n_events += o.n_events;
        busy_n_events += o.busy_n_events;
        unbusy_slots += o.unbusy_slots;
        return *this;
    }
};

// Runs `check` on every (trace, comparator) analysis at speed s with policy `policy`.
SuiteTotals for_each_analysis(const std::vector<SuiteCase>& suite, const Policy& policy, int s,
                              const AnalysisConfig& config, const std::function<void(const Analysis&)>& check) {
    SuiteTotals totals;
    for (const SuiteCase& c : suite) {
        const Schedule alg = simulate(c.trace, policy, s);
        const auto windows = busy_windows(alg);
        for (Time t = 1; t <= c.trace.last_arrival() + 1; ++t) {
            if (!fully_busy(windows, t, t)) ++totals.unbusy_slots;
        }
        for (const auto& [which, comparator] : c.comparators) {
            const Analysis a = analyze(c.trace, alg, comparator, config);
            ++totals.analyses;
            totals.events += a.events.size();
            for (std::size_t i = 0; i < a.events.size(); ++i) {
                if (!a.non_self_chargeable(i)) continue;
                ++totals.n_events;
                if (a.window_busy(i)) ++totals.busy_n_events;
            }
            check(a);
        }
    }
    return totals;
}

std::string describe(const SuiteTotals& t) {
    std::ostringstream os;
    os << t.analyses << " analyses, " << t.events << " events, " << t.n_events << " non-self-chargeable ("
       << t.busy_n_events << " in busy windows)";
    return os.str();
}

// ---------------------------------------------------------------------------------------

Outcome golden_micro_trace() {
    Outcome o;
    const Trace t1 = make_trace({{1, 0, 1}, {2, 0, 1}, {1, 1, 2}});
    const PenaltySpec flow = PenaltySpec::flow();
    auto lwf = [&](int s) { return objective(flow, t1, simulate(t1, Policy::lwf(), s), Aggregate::Sum); };
    const Rational l1 = lwf(1);
    const Rational l2 = lwf(2);
    const Rational l5 = lwf(5);
    const OptResult opt = optimal_schedule(t1, flow, Aggregate::Sum);
    const Rational brute = exhaustive_reference(t1, flow, Aggregate::Sum);
    o.require(l1 == Rational(5), "LWF_1 = " + l1.str());
    o.require(l2 == Rational(3), "LWF_2 = " + l2.str());
    o.require(l5 == Rational(3), "LWF_5 = " + l5.str());
    o.require(opt.optimal && opt.value == Rational(4), "OPT_1 = " + opt.value.str());
    o.require(brute == Rational(4), "exhaustive OPT_1 = " + brute.str());
    o.detail << "LWF_1=" << l1 << " LWF_2=" << l2 << " LWF_5=" << l5 << " OPT_1=" << opt.value
             << " (exhaustive " << brute << ")";
    return o;
}

Outcome five_speed_bound() {
    Outcome o;
    const PenaltySpec flow = PenaltySpec::flow();
    Rational worst(0);
    std::uint64_t worst_seed = 0;
    std::size_t inexact = 0;
    const int n = 1000;
    for (int seed = 1; seed <= n; ++seed) {
        const Trace t = small_random_trace(static_cast<std::uint64_t>(seed), 3, 8, 6);
        const OptResult opt = optimal_schedule(t, flow, Aggregate::Sum);
        if (!opt.optimal) ++inexact;
        const Rational ratio = objective(flow, t, simulate(t, Policy::lwf(), 5), Aggregate::Sum) / opt.value;
        if (ratio > worst) {
            worst = ratio;
            worst_seed = static_cast<std::uint64_t>(seed);
        }
    }
    o.require(inexact == 0, std::to_string(inexact) + " optima not proven");
    o.require(worst <= Rational(90), "ratio " + worst.str() + " exceeds 90");
    o.detail << n << " traces, max LWF_5/OPT_1 = " << worst << " = " << worst.decimal(6) << " (seed " << worst_seed
             << ") <= 90";
    return o;
}

Outcome core_lemma_suite() {
    Outcome o;
    const AnalysisConfig config = AnalysisConfig::five_speed();
    std::size_t fails = 0;
    std::size_t passes = 0;
    std::size_t skipped = 0;
    std::size_t close_checked = 0;
    std::ostringstream totals;
    for (int s : {4, 5}) {
        const SuiteTotals t = for_each_analysis(flow_suite(), Policy::lwf(), s, config, [&](const Analysis& a) {
            const Report r = verify_core_lemmas(a);
            fails += r.failures();
            passes += r.count(CheckStatus::Pass);
            skipped += r.count(CheckStatus::Skipped);
            close_checked += r.count(CheckStatus::Pass, "lem:close");
        });
        o.require(t.unbusy_slots == 0, "suite not fully busy at s=" + std::to_string(s));
        totals << " s=" << s << ": " << describe(t) << ";";
    }
    o.require(fails == 0, std::to_string(fails) + " failing rows");
    o.require(close_checked > 0, "no pair reached the closeness check");
    o.detail << flow_suite().size() << " traces x {opt, focus, fcfs} comparators;" << totals.str() << " rows: "
             << passes << " pass (" << close_checked << " closeness pairs), " << skipped << " skipped, " << fails
             << " fail";
    return o;
}

Outcome five_speed_hall() {
    Outcome o;
    const AnalysisConfig config = AnalysisConfig::five_speed();
    const Rational c = five_speed_covering_bound(config.rho, 5);
    o.require(c == Rational(4, 9), "covering bound is " + c.str());
    std::size_t nonempty = 0;
    std::size_t covered = 0;
    std::size_t fails = 0;
    std::size_t left_total = 0;
    const SuiteTotals t = for_each_analysis(flow_suite(), Policy::lwf(), 5, config, [&](const Analysis& a) {
        const ChargingGraph g = build_5speed_graph(a);
        if (g.left.empty()) return;
        ++nonempty;
        left_total += g.left.size();
        const HallResult hall = hall_condition_holds(g, c);
        if (!hall.holds) {
            ++fails;
            return;
        }
        const Covering cov = find_covering(g, c);
        // Summation by hand, not through is_valid_covering.
        std::vector<Rational> left(g.left.size()), right(g.right.size());
        for (const auto& [edge, w] : cov.weights) {
            left[edge.first] += w;
            right[edge.second] += w;
        }
        bool ok = true;
        for (const auto& x : left) ok = ok && x == Rational(1);
        for (const auto& y : right) ok = ok && y <= c;
        if (ok) {
            ++covered;
        } else {
            ++fails;
        }
        fails += certify_5speed_covering(a).failures();
    });
    o.require(fails == 0, std::to_string(fails) + " failures");
    o.require(nonempty > 0, "X was empty in every analysis");
    o.detail << "c=" << c << "; " << describe(t) << "; X nonempty in " << nonempty << " analyses (" << left_total
             << " left vertices), " << covered << " coverings re-validated, " << fails << " failures";
    return o;
}

// Exhaustive fractional Hall check: c |N(S)| >= |S| for every nonempty S.
bool brute_hall(std::size_t nl, const std::vector<ChargingGraph::Edge>& edges, const Rational& c) {
    std::vector<std::uint32_t> nbr(nl, 0);
    for (const auto& [u, v] : edges) nbr[u] |= 1u << v;
    for (std::uint32_t s = 1; s < (1u << nl); ++s) {
        std::uint32_t n = 0;
        for (std::size_t u = 0; u < nl; ++u) {
            if (s >> u & 1u) n |= nbr[u];
        }
        if (c * Rational(std::popcount(n)) < Rational(std::popcount(s))) return false;
    }
    return true;
}

Outcome hall_oracle() {
    Outcome o;
    Xorshift64Star rng(20240601);
    const std::vector<Rational> cs = {Rational(1, 3), Rational(4, 9), Rational(1, 2), Rational(1),
                                      Rational(3, 2), Rational(2),    Rational(5, 7), Rational(3), Rational(5, 2), Rational(4)};
    std::size_t holds = 0;
    std::size_t mismatches = 0;
    std::size_t bad = 0;
    const int n = 200;
    for (int i = 0; i < n; ++i) {
        const auto nl = static_cast<std::size_t>(rng.uniform(1, 12));
        const auto nr = static_cast<std::size_t>(rng.uniform(1, 12));
        const auto density = static_cast<std::uint64_t>(rng.uniform(1, 3));
        std::vector<ChargingGraph::Edge> edges;
        for (std::size_t u = 0; u < nl; ++u) {
            for (std::size_t v = 0; v < nr; ++v) {
                if (rng.chance(density, 4)) edges.emplace_back(u, v);
            }
        }
        const Rational c = cs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cs.size()) - 1))];
        const ChargingGraph g = ChargingGraph::plain(nl, nr, edges);
        const bool expected = brute_hall(nl, edges, c);
        const HallResult r = hall_condition_holds(g, c);
        if (r.holds != expected) ++mismatches;
        if (expected) {
            ++holds;
            const Covering cov = find_covering(g, c);
            std::vector<Rational> left(nl), right(nr);
            const std::set<ChargingGraph::Edge> edge_set(edges.begin(), edges.end());
            bool ok = true;
            for (const auto& [edge, w] : cov.weights) {
                ok = ok && edge_set.contains(edge) && w >= Rational(0) && w <= Rational(1);
                left[edge.first] += w;
                right[edge.second] += w;
            }
            for (const auto& x : left) ok = ok && x == Rational(1);
            for (const auto& y : right) ok = ok && y <= c;
            if (!ok) ++bad;
        } else {
            // The reported subset must itself violate the condition.
            std::set<std::size_t> nbrs;
            for (const auto& [u, v] : edges) {
                if (std::find(r.violating_subset.begin(), r.violating_subset.end(), u) != r.violating_subset.end()) {
                    nbrs.insert(v);
                }
            }
            const bool violating = !r.violating_subset.empty() &&
                                   c * Rational(static_cast<std::int64_t>(nbrs.size())) <
                                       Rational(static_cast<std::int64_t>(r.violating_subset.size()));
            if (!violating) ++bad;
        }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " disagreements with subset enumeration");
    o.require(bad == 0, std::to_string(bad) + " invalid coverings or witnesses");
    o.detail << n << " graphs (|X| <= 12): " << holds << " satisfiable, " << n - static_cast<int>(holds)
             << " not; agreement " << n - static_cast<int>(mismatches) << "/" << n
             << ", every covering and witness checked by summation";
    return o;
}

Outcome interval_lemma() {
    Outcome o;
    Xorshift64Star rng(977);
    const std::vector<Rational> lambdas = {Rational(1, 2), Rational(1, 3), Rational(2, 3),
                                           Rational(9, 20), Rational(1, 4), Rational(1)};
    std::size_t violations = 0;
    std::size_t disagreements = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const Rational lambda =
            lambdas[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(lambdas.size()) - 1))];
        const auto m = rng.uniform(1, 8);
        IntervalSet whole, shrunk;
        std::set<Time> covered, covered_shrunk;
        for (std::int64_t k = 0; k < m; ++k) {
            const Time s = rng.uniform(0, 40);
            const Time len = rng.uniform(1, 12);
            const Time t = s + len - 1;
            const Time need = (lambda * Rational(len)).ceil();
            const Time s2 = rng.uniform(s, t - need + 1);
            whole.push_back({s, t});
            shrunk.push_back({s2, t});
            for (Time x = s; x <= t; ++x) covered.insert(x);
            for (Time x = s2; x <= t; ++x) covered_shrunk.insert(x);
        }
        const auto big = static_cast<std::int64_t>(covered.size());
        const auto small = static_cast<std::int64_t>(covered_shrunk.size());
        if (Rational(small) < lambda * Rational(big)) ++violations;
        const IntervalLemmaResult r = check_interval_lemma(whole, shrunk, lambda);
        if (r.measure != big || r.shrunk_measure != small || !r.holds) ++disagreements;
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    o.require(disagreements == 0, std::to_string(disagreements) + " results differ from direct counting");
    o.detail << n << " families, " << violations << " violations, measures match direct counting";
    return o;
}

Outcome four_speed_structures() {
    Outcome o;
    struct Setup {
        std::string name;
        AnalysisConfig config;
    };
    AnalysisConfig small;
    small.rho = Rational(8);
    small.alpha = Rational(1, 8);
    small.gamma = Rational(1, 8);
    small.four_speed = true;
    AnalysisConfig mid;
    mid.rho = Rational(16);
    mid.alpha = Rational(1, 16);
    mid.gamma = Rational(1, 16);
    mid.four_speed = true;
    const std::vector<Setup> setups = {{"rho=8,a=g=1/8", small},
                                       {"rho=128,a=g=1/32", AnalysisConfig::four_speed_default()},
                                       {"rho=16,a=g=1/16", mid}};
    static const std::vector<SuiteCase> bursts = burst_suite();
    for (const auto& setup : setups) {
        Report total;
        SuiteTotals t;
        for (const auto* suite : {&flow_suite(), &bursts}) {
            t += for_each_analysis(*suite, Policy::lwf(), 4, setup.config,
                                   [&](const Analysis& a) { total.append(verify_4speed_structures(a)); });
        }
        const std::size_t fails = total.failures();
        o.require(fails == 0, setup.name + ": " + std::to_string(fails) + " failing rows");
        const auto count = [&](const char* name) {
            auto it = total.aggregates.find(name);
            return it == total.aggregates.end() ? std::string("0") : it->second.str();
        };
        o.detail << "[" << setup.name << ": N=" << t.n_events
                 << " Type1=" << count("count:Type1") << " Type2=" << count("count:Type2")
                 << " triples=" << count("count:bdg-triples") << "; bdg_num " << total.count(CheckStatus::Pass, "lem:bdg_num")
                 << " pass, bdg " << total.count(CheckStatus::Pass, "lem:bdg") << " pass/"
                 << total.count(CheckStatus::Inapplicable, "lem:bdg") << " n/a, cor " << total.count(CheckStatus::Pass, "cor:bdg")
                 << " pass/" << total.count(CheckStatus::Inapplicable, "cor:bdg") << " n/a, unique-o "
                 << total.count(CheckStatus::Pass, "lem:type2") << " pass; fail " << fails << "] ";
    }
    return o;
}

Outcome generalized_framework() {
    Outcome o;
    const PenaltySpec spec = PenaltySpec::power_delay_factor(2);
    o.require(h_bound(spec, Rational(1, 2)) == Rational(1, 4), "h(1/2) != 1/4");
    o.require(m_envelope(spec, Rational(10)) == Rational(100), "m(10) != 100");
    static const std::vector<SuiteCase> suite = build_backlogged(20, {40, 60}, 10, 30, 6, spec, 500);
    const Policy lf = Policy::lf(spec);
    AnalysisConfig stress = AnalysisConfig::lk_delay_factor(2);
    stress.rho = Rational(10);
    for (const AnalysisConfig& config : {AnalysisConfig::lk_delay_factor(2), stress}) {
        std::size_t fails = 0;
        std::size_t passes = 0;
        const SuiteTotals t = for_each_analysis(suite, lf, 9, config, [&](const Analysis& a) {
            const Report r = verify_core_lemmas(a);
            fails += r.failures();
            passes += r.count(CheckStatus::Pass);
        });
        o.require(t.unbusy_slots == 0, "suite not fully busy at s=9");
        o.require(fails == 0, "rho=" + config.rho.str() + ": " + std::to_string(fails) + " failing rows");
        o.detail << "LF_9 rho=" << config.rho << " beta=" << config.beta << ": " << describe(t) << ", " << passes
                 << " pass, " << fails << " fail; ";
    }
    for (const PenaltySpec& p : {PenaltySpec::flow(), PenaltySpec::delay_factor(), PenaltySpec::power_flow(2),
                                 PenaltySpec::power_delay_factor(2), PenaltySpec::power_flow(3),
                                 PenaltySpec::power_delay_factor(3)}) {
        const bool ok = verify_h_property(p, 10000).empty();
        o.require(ok, "h property fails for " + p.str());
    }
    o.detail << "h property: 10^4 samples each for flow, df, powflow:2/3, powdf:2/3";
    return o;
}

Outcome fcfs_max_flow() {
    Outcome o;
    const PenaltySpec flow = PenaltySpec::flow();
    Rational worst(0);
    std::size_t bb_mismatch = 0;
    const int n = 200;
    for (int seed = 1; seed <= n; ++seed) {
        const Trace t = small_random_trace(static_cast<std::uint64_t>(5000 + seed), 3, 8, 5);
        const Rational opt = exhaustive_reference(t, flow, Aggregate::Max);
        if (optimal_schedule(t, flow, Aggregate::Max).value != opt) ++bb_mismatch;
        const Rational fcfs = objective(flow, t, simulate(t, Policy::fcfs(), 1), Aggregate::Max);
        worst = max(worst, fcfs / opt);
    }
    o.require(worst <= Rational(2), "ratio " + worst.str());
    o.require(bb_mismatch == 0, std::to_string(bb_mismatch) + " branch-and-bound disagreements");
    o.detail << n << " exhaustively solved instances, max maxflow(FCFS_1)/maxflow(OPT_1) = " << worst << " <= 2";
    return o;
}

Outcome offline_integrity() {
    Outcome o;
    const std::vector<PenaltySpec> specs = {PenaltySpec::flow(), PenaltySpec::delay_factor(),
                                            PenaltySpec::power_flow(2), PenaltySpec::power_delay_factor(2)};
    std::size_t mismatches = 0;
    const int tiny = 100;
    for (int seed = 1; seed <= tiny; ++seed) {
        const Trace t = small_random_trace(static_cast<std::uint64_t>(9000 + seed), 3, 5, 3, 3);
        const PenaltySpec& spec = specs[static_cast<std::size_t>(seed) % specs.size()];
        for (Aggregate agg : {Aggregate::Sum, Aggregate::Max}) {
            const OptResult r = optimal_schedule(t, spec, agg);
            if (!r.optimal || r.value != exhaustive_reference(t, spec, agg) ||
                objective(spec, t, r.schedule, agg) != r.value || !verify_schedule(t, r.schedule).empty()) {
                ++mismatches;
            }
        }
    }
    std::size_t beaten = 0;
    const int suite = 1000;
    for (int seed = 1; seed <= suite; ++seed) {
        const Trace t = small_random_trace(static_cast<std::uint64_t>(seed), 3, 8, 6, 3);
        for (const PenaltySpec& spec : {PenaltySpec::flow(), PenaltySpec::delay_factor()}) {
            OptOptions plain;
            plain.seed_with_policies = false;
            const OptResult r = optimal_schedule(t, spec, Aggregate::Sum, plain);
            for (const Policy& p : {Policy::lwf(), Policy::lf(spec), Policy::fcfs(), Policy::round_robin()}) {
                if (objective(spec, t, simulate(t, p, 1), Aggregate::Sum) < r.value) ++beaten;
            }
        }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " disagreements with exhaustive enumeration");
    o.require(beaten == 0, std::to_string(beaten) + " policies beat the optimum");
    o.detail << tiny << " tiny instances x {sum, max} match exhaustive enumeration; " << suite
             << " random traces x {flow, df}: optimum <= LWF_1, LF_1, FCFS_1, RR_1";
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit;
    Outcome (*run)();
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "golden micro-trace", 1, golden_micro_trace},
        {2, "LWF_5 <= 90 OPT on random traces", 120, five_speed_bound},
        {3, "core charging lemmas on backlogged suite", 120, core_lemma_suite},
        {4, "5-speed fractional Hall certification", 0, five_speed_hall},
        {5, "fractional Hall vs subset enumeration", 60, hall_oracle},
        {6, "interval lemma", 30, interval_lemma},
        {7, "4-speed bridge and covering structures", 0, four_speed_structures},
        {8, "generalized framework (L2 delay factor)", 0, generalized_framework},
        {9, "FCFS max flow within 2x", 0, fcfs_max_flow},
        {10, "offline optimum integrity", 0, offline_integrity},
    };
    return all;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::vector<int>& only) {
    std::vector<CriterionResult> results;
    for (const Criterion& c : criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        CriterionResult r;
        r.id = c.id;
        r.title = c.title;
        r.limit_seconds = c.limit;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = c.run();
            r.passed = o.passed;
            r.detail = o.detail.str();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
            r.passed = false;
            r.detail += " [runtime limit exceeded]";
        }
        while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
        out << format_result(r) << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace bcast
