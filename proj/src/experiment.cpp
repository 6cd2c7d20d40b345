#include "bcast/experiment.hpp"

#include "bcast/trace_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace bcast {

Comparator parse_comparator(const std::string& name) {
    if (name == "opt") return Comparator::Opt;
    if (name == "fcfs") return Comparator::Fcfs;
    if (name == "rr") return Comparator::RoundRobin;
    if (name == "focus") return Comparator::Focus;
    throw std::invalid_argument("unknown comparator '" + name + "' (opt|fcfs|rr|focus)");
}

std::string comparator_name(Comparator c) {
    switch (c) {
        case Comparator::Opt: return "opt";
        case Comparator::Fcfs: return "fcfs";
        case Comparator::RoundRobin: return "rr";
        case Comparator::Focus: return "focus";
    }
    return "?";
}

Schedule focus_schedule(const Trace& trace, const std::vector<PageId>& focus) {
    const std::set<PageId> favoured(focus.begin(), focus.end());
    Schedule schedule;
    schedule.speed = 1;
    const auto requests = trace.requests();
    std::size_t next = 0;
    QueueState state;
    for (Time t = 0; next < requests.size() || !state.empty(); ++t) {
        state.now = t;
        if (!state.empty()) {
            PageId pick = 0;
            Time oldest = 0;
            for (const auto& [page, reqs] : state.outstanding) {
                if (!favoured.contains(page)) continue;
                if (pick == 0 || reqs.front().arrival < oldest) {
                    pick = page;
                    oldest = reqs.front().arrival;
                }
            }
            if (pick == 0) pick = select_pages(Policy::lwf(), state, 1).front();
            for (const auto& r : state.outstanding.at(pick)) schedule.finish[r.id()] = t;
            state.outstanding.erase(pick);
            schedule.slots.emplace(t, std::vector<PageId>{pick});
        }
        while (next < requests.size() && requests[next].arrival == t) {
            state.outstanding[requests[next].page].push_back(requests[next]);
            ++next;
        }
    }
    return schedule;
}

std::vector<PageId> rare_pages(const Trace& trace) {
    std::map<PageId, std::size_t> counts;
    for (const auto& r : trace.requests()) ++counts[r.page];
    std::vector<std::pair<std::size_t, PageId>> order;
    for (const auto& [p, n] : counts) order.emplace_back(n, -p);
    std::sort(order.begin(), order.end());
    std::vector<PageId> out;
    for (std::size_t i = 0; i < (order.size() + 1) / 2; ++i) out.push_back(-order[i].second);
    std::sort(out.begin(), out.end());
    return out;
}

ComparatorRun comparator_schedule(const Trace& trace, const PenaltySpec& spec, Comparator which,
                                  const OptOptions& options) {
    switch (which) {
        case Comparator::Opt: {
            OptResult r = optimal_schedule(trace, spec, Aggregate::Sum, options);
            return {std::move(r.schedule), r.optimal};
        }
        case Comparator::Fcfs: return {simulate(trace, Policy::fcfs(), 1), true};
        case Comparator::RoundRobin: return {simulate(trace, Policy::round_robin(), 1), true};
        case Comparator::Focus: {
            Schedule s = focus_schedule(trace, rare_pages(trace));
            return {std::move(s), true};
        }
    }
    throw std::logic_error("unreachable comparator");
}

namespace {

void validate_run(const ExperimentSpec& spec) {
    if (spec.policies.empty()) throw std::invalid_argument("at least one policy is required");
    if (spec.speeds.empty()) throw std::invalid_argument("at least one speed is required");
    for (int s : spec.speeds) {
        if (s < 1) throw std::invalid_argument("speeds must be >= 1");
    }
    if (spec.generator) spec.generator->validate();
    spec.config.validate();
}

}  // namespace

void ExperimentSpec::validate() const {
    if (trace_path.has_value() == generator.has_value()) {
        throw std::invalid_argument("give exactly one trace source (file or generator)");
    }
    validate_run(*this);
}

std::string exact_and_decimal(const Rational& x) { return x.str() + "\t" + x.decimal(6); }

Trace load_experiment_trace(const ExperimentSpec& spec) {
    spec.validate();
    if (spec.trace_path) return load_trace_file(*spec.trace_path);
    return generate(*spec.generator);
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const Trace& trace) {
    validate_run(spec);
    ExperimentResult result;

    std::optional<OptResult> opt;
    if (spec.compute_opt) {
        opt = optimal_schedule(trace, spec.spec, spec.aggregate, spec.opt);
        result.budget_exceeded = !opt->optimal;
    }

    std::ostringstream objectives;
    objectives << "policy\tspeed\tobjective\tdecimal\tflag\n";
    std::ostringstream ratios;
    ratios << "policy\tspeed\tobjective\topt\tratio\tratio_decimal\tbound\tbound_source\tflag\n";
    const std::string opt_flag = opt && !opt->optimal ? "budget-exceeded" : "-";
    if (opt) objectives << "OPT\t1\t" << exact_and_decimal(opt->value) << '\t' << opt_flag << '\n';

    std::map<std::pair<std::size_t, int>, Schedule> runs;
    for (std::size_t pi = 0; pi < spec.policies.size(); ++pi) {
        const Policy& policy = spec.policies[pi];
        for (int s : spec.speeds) {
            Schedule sched = simulate(trace, policy, s);
            const Rational value = objective(spec.spec, trace, sched, spec.aggregate);
            objectives << policy.str() << '\t' << s << '\t' << exact_and_decimal(value) << "\t-\n";
            if (opt) {
                ratios << policy.str() << '\t' << s << '\t' << value.str() << '\t' << opt->value.str() << '\t';
                if (opt->value.sign() > 0) {
                    ratios << exact_and_decimal(value / opt->value);
                } else {
                    ratios << "-\t-";
                }
                const bool analysed = policy.kind == Policy::Kind::LWF || policy.kind == Policy::Kind::LF;
                const auto bound = analysed && policy.ranking_spec() == spec.spec && spec.aggregate == Aggregate::Sum
                                       ? theorem_bound(spec.spec, s, spec.config)
                                       : std::nullopt;
                if (bound) {
                    ratios << '\t' << bound->first.str() << '\t' << bound->second;
                } else {
                    ratios << "\t-\t-";
                }
                ratios << '\t' << opt_flag << '\n';
            }
            runs.emplace(std::make_pair(pi, s), std::move(sched));
        }
    }
    result.objective_table = objectives.str();
    if (opt) result.ratio_table = ratios.str();

    if (spec.verify) {
        AnalysisConfig config = spec.config;
        config.spec = spec.spec;
        ComparatorRun comparator;
        if (spec.comparator == Comparator::Opt && opt && spec.aggregate == Aggregate::Sum) {
            comparator = {opt->schedule, opt->optimal};
        } else {
            comparator = comparator_schedule(trace, spec.spec, spec.comparator, spec.opt);
        }
        std::ostringstream report;
        report << "# comparator=" << comparator_name(spec.comparator)
               << (comparator.exact ? "" : " (budget-exceeded incumbent)") << " rho=" << config.rho.str()
               << " alpha=" << config.alpha.str() << " gamma=" << config.gamma.str()
               << " lambda=" << config.lambda.str() << " beta=" << config.beta.str()
               << " self-chargeable=" << (config.le_rho ? "le" : "lt") << '\n';
        bool header = true;
        for (std::size_t pi = 0; pi < spec.policies.size(); ++pi) {
            const Policy& policy = spec.policies[pi];
            const bool analysed = policy.kind == Policy::Kind::LWF || policy.kind == Policy::Kind::LF;
            if (!analysed || policy.ranking_spec() != spec.spec) continue;
            for (int s : spec.speeds) {
                const Analysis analysis = analyze(trace, runs.at({pi, s}), comparator.schedule, config);
                Report r = verify_core_lemmas(analysis);
                if (s == 5) r.append(certify_5speed_covering(analysis));
                if (config.four_speed) r.append(verify_4speed_structures(analysis));
                result.failures += r.failures();

                std::ostringstream body;
                r.write_tsv(body);
                std::string text = body.str();
                if (!header) text.erase(0, text.find('\n') + 1);
                header = false;
                report << "# policy=" << policy.str() << " speed=" << s;
                for (const auto& [name, value] : r.aggregates) report << ' ' << name << '=' << value.str();
                report << '\n' << text;
            }
        }
        result.lemma_report = report.str();
    }
    return result;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    const Trace trace = load_experiment_trace(spec);
    ExperimentResult result = run_experiment(spec, trace);
    auto write = [](const std::string& path, const std::string& text) {
        if (path.empty()) return;
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << text;
    };
    write(spec.objective_path, result.objective_table);
    write(spec.ratio_path, result.ratio_table);
    write(spec.report_path, result.lemma_report);
    return result;
}

}  // namespace bcast
