#include "bcast/lemmas.hpp"

#include "bcast/intervals.hpp"
#include "bcast/random.hpp"

#include <algorithm>
#include <numeric>

namespace bcast {

std::string_view status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Inapplicable: return "inapplicable";
    }
    return "?";
}

std::size_t Report::count(CheckStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [&](const CheckRecord& r) { return r.status == status; }));
}

std::size_t Report::count(CheckStatus status, std::string_view lemma) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const CheckRecord& r) {
        return r.status == status && r.lemma == lemma;
    }));
}

void Report::append(const Report& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    for (const auto& [name, value] : other.aggregates) aggregates[name] += value;
}

void Report::write_tsv(std::ostream& os) const {
    os << "check_id\tlemma\tevents\tlhs\trhs\tstatus\tnote\n";
    for (const auto& r : rows) {
        os << r.check_id << '\t' << r.lemma << '\t' << (r.events.empty() ? "-" : r.events) << '\t'
           << (r.lhs ? r.lhs->str() : "-") << '\t' << (r.rhs ? r.rhs->str() : "-") << '\t'
           << status_name(r.status) << '\t' << (r.note.empty() ? "-" : r.note) << '\n';
    }
}

LemmaNames LemmaNames::for_spec(const PenaltySpec& spec) {
    if (spec.kind == PenaltySpec::Kind::Flow) return {"lem:SC", "lem:NSCl", "lem:close"};
    return {"lem:GSC", "lem:GNSCl", "lem:rq_close"};
}

namespace {

class RowWriter {
public:
    explicit RowWriter(Report& report) : report_(report) {}

    /// Records lhs <= rhs.
    void leq(const std::string& kind, const std::string& lemma, const std::string& events, Rational lhs,
             Rational rhs, std::string note = {}) {
        const CheckStatus status = lhs <= rhs ? CheckStatus::Pass : CheckStatus::Fail;
        push(kind, lemma, events, std::move(lhs), std::move(rhs), status, std::move(note));
    }

    void mark(const std::string& kind, const std::string& lemma, const std::string& events, CheckStatus status,
              std::string note) {
        push(kind, lemma, events, std::nullopt, std::nullopt, status, std::move(note));
    }

    void push(const std::string& kind, const std::string& lemma, const std::string& events,
              std::optional<Rational> lhs, std::optional<Rational> rhs, CheckStatus status, std::string note) {
        CheckRecord r;
        r.check_id = kind + "-" + std::to_string(++serial_[kind]);
        r.lemma = lemma;
        r.events = events;
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.status = status;
        r.note = std::move(note);
        report_.rows.push_back(std::move(r));
    }

private:
    Report& report_;
    std::map<std::string, int> serial_;
};

std::string alg_name(const PenaltySpec& spec) {
    return spec.kind == PenaltySpec::Kind::Flow ? "LWF" : "LF";
}

Rational count_of(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

/// [ceil(o'), e - 1] of a non-self-chargeable event.
Interval charge_window(const Event& ev) { return {ev.o_prime->ceil(), ev.e - 1}; }

/// First slot of [o' + ceil(fraction (e - o')), e - 1].
Time tail_start(const Event& ev, const Rational& fraction) {
    return (*ev.o_prime + Rational((fraction * ev.span()).ceil())).ceil();
}

void covering_rows(RowWriter& out, const ChargingGraph& graph, const Rational& c, const std::string& lemma,
                   const std::string& what) {
    if (graph.left.empty()) {
        out.mark("hall", lemma, what, CheckStatus::Pass, "vacuous: X empty");
        return;
    }
    const HallResult hall = hall_condition_holds(graph, c);
    const Rational needed = count_of(graph.left.size());
    out.push("hall", lemma, what, needed, hall.max_flow, hall.holds ? CheckStatus::Pass : CheckStatus::Fail,
             "c=" + c.str() + " |X|=" + std::to_string(graph.left.size()) +
                 " |Y|=" + std::to_string(graph.right.size()) + " |E|=" + std::to_string(graph.edges.size()) +
                 (hall.holds ? "" : " violating |S|=" + std::to_string(hall.violating_subset.size())));
    if (!hall.holds) return;
    const Covering covering = find_covering(graph, c);
    out.push("covering", lemma, what, std::nullopt, std::nullopt,
             is_valid_covering(graph, covering) ? CheckStatus::Pass : CheckStatus::Fail,
             "re-validated by summation, c=" + c.str());
}

}  // namespace

Report verify_core_lemmas(const Analysis& analysis) {
    const AnalysisConfig& cfg = analysis.config;
    const LemmaNames names = LemmaNames::for_spec(cfg.spec);
    const Rational m_rho = m_envelope(cfg.spec, cfg.rho);
    const Rational h = h_bound(cfg.spec, cfg.lambda);
    const std::string alg = alg_name(cfg.spec);

    Report report;
    RowWriter out(report);
    Rational alg_s, opt_s, alg_nl, alg_ne, opt_n, alg_total;

    const auto& events = analysis.events;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const Event& ev = events[i];
        alg_total += ev.F_alg;
        if (!analysis.non_self_chargeable(i)) {
            alg_s += ev.F_alg;
            opt_s += ev.F_opt;
            out.leq("a", names.self_charge, ev.name(), ev.F_alg, m_rho * ev.F_opt);
            continue;
        }
        alg_nl += ev.F_late;
        alg_ne += ev.F_early;
        opt_n += ev.F_opt;
        out.leq("b", names.late_charge, ev.name(), ev.F_late, m_rho * ev.F_opt_late,
                "early+late=" + (ev.F_early + ev.F_late == ev.F_alg ? std::string("F") : std::string("MISMATCH")));

        const Rational target = h * ev.F_early;
        const Time lo = (*ev.o_prime + cfg.lambda * ev.span()).ceil();
        for (std::size_t j = 0; j < events.size(); ++j) {
            const Event& q = events[j];
            if (q.e < lo || q.e > ev.e - 1) continue;
            const std::string pair = ev.name() + ";" + q.name();
            if (analysis.busy.empty() || !fully_busy(analysis.busy, q.e, q.e)) {
                out.mark("c", names.close, pair, CheckStatus::Skipped, "not fully busy");
                continue;
            }
            out.leq("c", names.close, pair, target, q.F_alg);
        }
    }

    out.leq("a-sum", names.self_charge, "S", alg_s, m_rho * opt_s, "m(rho)=" + m_rho.str());
    out.leq("b-sum", names.late_charge, "N", alg_nl, m_rho * opt_n, "m(rho)=" + m_rho.str());

    report.aggregates[alg + "^S"] = alg_s;
    report.aggregates["OPT^S"] = opt_s;
    report.aggregates[alg + "^Nl"] = alg_nl;
    report.aggregates[alg + "^Ne"] = alg_ne;
    report.aggregates["OPT^N"] = opt_n;
    report.aggregates[alg] = alg_total;
    std::size_t n_events = 0;
    for (std::size_t i = 0; i < events.size(); ++i) n_events += analysis.non_self_chargeable(i) ? 1 : 0;
    report.aggregates["count:events"] = count_of(events.size());
    report.aggregates["count:N"] = count_of(n_events);
    return report;
}

ChargingGraph build_charging_graph(const Analysis& analysis, const Rational& fraction) {
    ChargingGraph g;
    const auto& events = analysis.events;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (analysis.non_self_chargeable(i) && analysis.window_busy(i)) g.left.push_back(i);
    }
    g.right.resize(events.size());
    std::iota(g.right.begin(), g.right.end(), std::size_t{0});
    for (std::size_t u = 0; u < g.left.size(); ++u) {
        const Event& ev = events[g.left[u]];
        const Time lo = tail_start(ev, fraction);
        for (std::size_t v = 0; v < events.size(); ++v) {
            if (lo <= events[v].e && events[v].e <= ev.e - 1) g.edges.emplace_back(u, v);
        }
    }
    return g;
}

Rational five_speed_covering_bound(const Rational& rho, int speed) {
    return Rational(2) * rho / (Rational(speed) * (rho - Rational(1)));
}

Report certify_5speed_covering(const Analysis& analysis, std::size_t random_subsets, std::uint64_t seed) {
    const AnalysisConfig& cfg = analysis.config;
    const std::string lemma = "lem:5speedNSC";
    Report report;
    RowWriter out(report);

    const ChargingGraph graph = build_5speed_graph(analysis);
    const Rational c = five_speed_covering_bound(cfg.rho, analysis.speed);
    covering_rows(out, graph, c, lemma, "X=N in busy windows");
    report.aggregates["count:X"] = count_of(graph.left.size());
    if (graph.left.empty()) return report;

    const auto& events = analysis.events;

    // 1-speed counting fact and the interval lemma on the whole of X, then on random subsets.
    Xorshift64Star rng(seed);
    for (std::size_t round = 0; round <= random_subsets; ++round) {
        std::vector<std::size_t> subset;
        for (std::size_t u = 0; u < graph.left.size(); ++u) {
            if (round == 0 || rng.chance(1, 2)) subset.push_back(graph.left[u]);
        }
        if (subset.empty()) continue;
        IntervalSet whole;
        IntervalSet tail;
        for (std::size_t i : subset) {
            whole.push_back(charge_window(events[i]));
            tail.push_back({tail_start(events[i], Rational(1, 2)), events[i].e - 1});
        }
        const std::string label = round == 0 ? "Z=X" : "Z=random#" + std::to_string(round);
        out.leq("opt-count", lemma, label, count_of(subset.size()), Rational(interval_measure(whole)),
                "|Z| <= |union I|");
        const Rational lambda = (cfg.rho - Rational(1)) / (Rational(2) * cfg.rho);
        try {
            const IntervalLemmaResult r = check_interval_lemma(whole, tail, lambda);
            out.leq("intervals", "lem:intervals", label, lambda * Rational(r.measure), Rational(r.shrunk_measure),
                    "|I'| >= (rho-1)/(2 rho) |I|");
        } catch (const PreconditionViolated& e) {
            out.mark("intervals", "lem:intervals", label, CheckStatus::Inapplicable, e.what());
        }
    }

    // Charging through the covering: sum_X F_early <= sum_edges l * F_v / h(1/2) <= (c / h(1/2)) ALG.
    const Rational inv_h = Rational(1) / h_bound(cfg.spec, Rational(1, 2));
    Rational early_total;
    for (std::size_t i : graph.left) early_total += events[i].F_early;
    const HallResult hall = hall_condition_holds(graph, c);
    if (hall.holds) {
        const Covering covering = find_covering(graph, c);
        Rational charged;
        for (const auto& [edge, w] : covering.weights) charged += w * inv_h * events[graph.right[edge.second]].F_alg;
        Rational alg_total;
        for (const auto& ev : events) alg_total += ev.F_alg;
        out.leq("charge", lemma, "X", early_total, charged, "sum of l(u,v) F_v / h(1/2)");
        out.leq("early-total", lemma, "X", early_total, c * inv_h * alg_total, "(c / h(1/2)) * ALG");
    }
    return report;
}

std::optional<Rational> bridge_coefficient(const Rational& alpha, const Rational& gamma) {
    const Rational denom = Rational(1) - Rational(4) * alpha - Rational(4) * gamma;
    if (denom.sign() <= 0) return std::nullopt;
    return (Rational(3) - Rational(8) * alpha - Rational(8) * gamma) / denom;
}

Report verify_4speed_structures(const Analysis& analysis) {
    const AnalysisConfig& cfg = analysis.config;
    if (!cfg.four_speed) throw std::invalid_argument("four-speed structures need config.four_speed");

    Report report;
    RowWriter out(report);
    const auto& events = analysis.events;
    const auto& labels = analysis.labels;
    const Rational s(analysis.speed);
    const bool bridge_hypothesis = Rational(4) * cfg.gamma * cfg.rho >= Rational(1);
    const bool type1_hypothesis = cfg.alpha * cfg.rho >= Rational(4);
    const std::optional<Rational> k = bridge_coefficient(cfg.alpha, cfg.gamma);

    std::size_t n_type1 = 0;
    std::size_t n_type2 = 0;
    for (const auto& l : labels) {
        if (l.subtype == EventLabel::Subtype::Type1) ++n_type1;
        if (l.subtype == EventLabel::Subtype::Type2) ++n_type2;
    }
    report.aggregates["count:Type1"] = count_of(n_type1);
    report.aggregates["count:Type2"] = count_of(n_type2);

    std::map<Time, std::vector<std::size_t>> ending_at;
    for (std::size_t i = 0; i < events.size(); ++i) ending_at[events[i].e].push_back(i);

    ChargingGraph bridge_graph;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (!labels[i].self_chargeable()) bridge_graph.right.push_back(i);
    }
    std::map<std::size_t, std::size_t> right_pos;
    for (std::size_t v = 0; v < bridge_graph.right.size(); ++v) right_pos[bridge_graph.right[v]] = v;

    std::size_t triples = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (labels[i].subtype != EventLabel::Subtype::Type2) continue;
        const Event& ev = events[i];
        if (!analysis.window_busy(i)) {
            out.mark("bdg_num", "lem:bdg_num", ev.name(), CheckStatus::Skipped, "not fully busy");
            continue;
        }
        if (!bridge_hypothesis) {
            out.mark("bdg_num", "lem:bdg_num", ev.name(), CheckStatus::Inapplicable, "4 gamma rho < 1");
            continue;
        }
        const auto& bridges = labels[i].bridges;
        const Rational needed = max(Rational(4) * cfg.gamma * ev.span(), Rational(1));
        out.leq("bdg_num", "lem:bdg_num", ev.name(), needed, count_of(bridges.size()), "|B| >= 4 gamma (e - o')");

        const std::size_t u = bridge_graph.left.size();
        bridge_graph.left.push_back(i);
        for (std::size_t j : bridges) bridge_graph.edges.emplace_back(u, right_pos.at(j));

        const auto at_o = ending_at.find(*ev.o);
        const std::vector<std::size_t> ends =
            at_o == ending_at.end() ? std::vector<std::size_t>{} : at_o->second;
        Rational ends_total;
        for (std::size_t r : ends) ends_total += events[r].F_alg;

        for (std::size_t j : bridges) {
            const Event& q = events[j];
            for (std::size_t r : ends) {
                ++triples;
                const std::string who = ev.name() + ";" + q.name() + ";" + events[r].name();
                if (!k) {
                    out.mark("bdg", "lem:bdg", who, CheckStatus::Inapplicable, "1 - 4 alpha - 4 gamma <= 0");
                    continue;
                }
                out.leq("bdg", "lem:bdg", who, ev.F_early,
                        *k * events[r].F_alg + Rational(2) * cfg.rho * q.F_opt);
            }
            const std::string who = ev.name() + ";" + q.name();
            if (!k) {
                out.mark("cor_bdg", "cor:bdg", who, CheckStatus::Inapplicable, "1 - 4 alpha - 4 gamma <= 0");
            } else if (Rational(static_cast<std::int64_t>(ends.size())) != s) {
                out.mark("cor_bdg", "cor:bdg", who, CheckStatus::Skipped,
                         "slot o has " + std::to_string(ends.size()) + " events, not s");
            } else {
                out.leq("cor_bdg", "cor:bdg", who, ev.F_early,
                        *k / s * ends_total + cfg.rho / Rational(2) * q.F_opt);
            }
        }
    }
    report.aggregates["count:bdg-triples"] = count_of(triples);

    // Type1 events charge to self-chargeable events ending in the last part of their window.
    if (!type1_hypothesis) {
        out.mark("hall", "lem:type1", "Type1 graph", CheckStatus::Inapplicable, "alpha rho < 4");
    } else {
        ChargingGraph g;
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (labels[i].self_chargeable()) g.right.push_back(i);
        }
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (labels[i].subtype != EventLabel::Subtype::Type1 || !analysis.window_busy(i)) continue;
            const Event& ev = events[i];
            const std::size_t u = g.left.size();
            g.left.push_back(i);
            const Time lo = tail_start(ev, cfg.alpha / Rational(2));
            std::size_t degree = 0;
            for (std::size_t v = 0; v < g.right.size(); ++v) {
                const Time end = events[g.right[v]].e;
                if (lo <= end && end <= ev.e - 1) {
                    g.edges.emplace_back(u, v);
                    ++degree;
                }
            }
            out.leq("degree", "lem:type1", ev.name(), cfg.alpha * ev.span(), count_of(degree),
                    "|N(u)| >= alpha (e - o')");
        }
        covering_rows(out, g, Rational(2) / cfg.alpha, "lem:cover2", "Type1 graph");
    }

    if (!bridge_hypothesis) {
        out.mark("hall", "lem:type2", "bridge graph", CheckStatus::Inapplicable, "4 gamma rho < 1");
    } else {
        covering_rows(out, bridge_graph, Rational(2) / (Rational(4) * cfg.gamma), "lem:cover2", "bridge graph");
    }

    // Each time o belongs to at most one non-self-chargeable event.
    std::map<Time, std::vector<std::size_t>> by_o;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (!labels[i].self_chargeable()) by_o[*events[i].o].push_back(i);
    }
    std::size_t worst = 0;
    std::string worst_events;
    for (const auto& [t, owners] : by_o) {
        if (owners.size() > worst) {
            worst = owners.size();
            worst_events.clear();
            for (std::size_t i : owners) worst_events += (worst_events.empty() ? "" : ";") + events[i].name();
        }
    }
    out.leq("unique_o", "lem:type2", worst_events, count_of(worst), Rational(1),
            "max non-self-chargeable events sharing o");
    return report;
}

std::optional<std::pair<Rational, std::string>> theorem_bound(const PenaltySpec& spec, int speed,
                                                              const AnalysisConfig& config) {
    const bool linear = spec.exponent() == 1;
    if (linear && speed == 5) return std::make_pair(Rational(90), std::string("thm:5spd rho=10"));
    if (linear && speed == 4) {
        const Rational rho(128);
        const Rational alpha(1, 32);
        const Rational gamma(1, 32);
        const Rational opt_coeff = rho + Rational(4) * rho / (alpha * alpha) + rho / (Rational(4) * gamma);
        const Rational self_coeff = *bridge_coefficient(alpha, gamma) / Rational(4);
        return std::make_pair(opt_coeff / (Rational(1) - self_coeff),
                              std::string("thm:4spd rho=128 alpha=gamma=1/32"));
    }
    const Rational slack = config.rho * (Rational(1) - config.beta) - Rational(1);
    if (slack.sign() <= 0) return std::nullopt;
    const Rational delta = config.rho / (Rational(speed) * h_bound(spec, config.beta) * slack);
    if (delta >= Rational(1)) return std::nullopt;
    return std::make_pair(m_envelope(spec, config.rho) / (Rational(1) - delta),
                          "thm:G rho=" + config.rho.str() + " beta=" + config.beta.str() + " delta=" + delta.str());
}

std::vector<RatioRow> theorem_ratio_report(const Trace& trace, const PenaltySpec& spec,
                                           const std::vector<int>& speeds, const AnalysisConfig& config,
                                           const OptOptions& options) {
    const OptResult opt = optimal_schedule(trace, spec, Aggregate::Sum, options);
    const Policy policy = spec.kind == PenaltySpec::Kind::Flow ? Policy::lwf() : Policy::lf(spec);
    std::vector<RatioRow> rows;
    for (int s : speeds) {
        RatioRow row;
        row.speed = s;
        row.algorithm = objective(spec, trace, simulate(trace, policy, s), Aggregate::Sum);
        row.optimum = opt.value;
        row.optimum_exact = opt.optimal;
        row.ratio = row.algorithm / row.optimum;
        if (auto b = theorem_bound(spec, s, config)) {
            row.bound = b->first;
            row.bound_source = b->second;
        } else {
            row.bound_source = "bound inapplicable";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace bcast
