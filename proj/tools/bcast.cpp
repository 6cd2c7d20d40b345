// Command-line front end: trace generation, simulation, offline optimum, comparison tables,
// charging-lemma verification and the acceptance self-test.

#include "bcast/acceptance.hpp"
#include "bcast/experiment.hpp"
#include "bcast/generator.hpp"
#include "bcast/random.hpp"
#include "bcast/trace_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bcast;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerifyFailed = 2;
constexpr int kBudgetExceeded = 3;

std::vector<int> parse_speeds(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        const int s = std::stoi(item, &used);
        if (used != item.size() || s < 1) throw std::invalid_argument("bad speed '" + item + "'");
        out.push_back(s);
    }
    if (out.empty()) throw std::invalid_argument("no speeds given");
    return out;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct GenArgs {
    std::string kind = "uniform";
    int pages = 4;
    Time horizon = 10;
    std::string intensity = "1";
    std::uint64_t seed = 1;
    Time slack_lo = 1;
    Time slack_hi = 1;
    std::string out = "-";
};

int cmd_gen(const GenArgs& a) {
    GeneratorSpec g;
    g.kind = GeneratorSpec::parse_kind(a.kind);
    g.pages = a.pages;
    g.horizon = a.horizon;
    g.intensity = Rational::parse(a.intensity);
    g.seed = a.seed;
    g.slack_lo = a.slack_lo;
    g.slack_hi = a.slack_hi;
    const Trace trace = generate(g);
    std::ostringstream origin;
    origin << "generator=" << a.kind << " rng=" << Xorshift64Star::kName << " seed=" << a.seed << " pages=" << a.pages
           << " horizon=" << a.horizon << " intensity=" << g.intensity.str() << " slack=" << a.slack_lo << ".."
           << a.slack_hi;
    std::ostringstream text;
    write_trace(text, trace, origin.str());
    emit(a.out, text.str());
    return kOk;
}

struct SimArgs {
    std::string trace;
    std::string policy = "lwf";
    int speed = 1;
    std::string penalty = "flow";
    std::string out;
};

int cmd_simulate(const SimArgs& a) {
    const Trace trace = load_trace_file(a.trace);
    const PenaltySpec spec = PenaltySpec::parse(a.penalty);
    const Schedule schedule = simulate(trace, Policy::parse(a.policy, spec), a.speed);
    if (!a.out.empty()) save_schedule_file(a.out, schedule);
    std::cout << "sum\t" << exact_and_decimal(objective(spec, trace, schedule, Aggregate::Sum)) << '\n'
              << "max\t" << exact_and_decimal(objective(spec, trace, schedule, Aggregate::Max)) << '\n';
    return kOk;
}

struct OptArgs {
    std::string trace;
    std::string penalty = "flow";
    std::string aggregate = "sum";
    std::uint64_t budget = 10'000'000;
    std::string out;
};

int cmd_opt(const OptArgs& a) {
    const Trace trace = load_trace_file(a.trace);
    OptOptions options;
    options.node_budget = a.budget;
    const OptResult r = optimal_schedule(trace, PenaltySpec::parse(a.penalty), parse_aggregate(a.aggregate), options);
    if (!a.out.empty()) save_schedule_file(a.out, r.schedule);
    std::cout << "value\t" << exact_and_decimal(r.value) << '\n'
              << "nodes\t" << r.nodes_explored << '\n'
              << "status\t" << (r.optimal ? "optimal" : "budget-exceeded (upper bound)") << '\n';
    return r.optimal ? kOk : kBudgetExceeded;
}

struct CompareArgs {
    std::string trace;
    std::string penalty = "flow";
    std::string aggregate = "sum";
    std::string speeds = "1,2,4,5";
    std::vector<std::string> policies;
    std::uint64_t budget = 10'000'000;
    std::string objectives = "-";
    std::string ratios = "-";
};

int cmd_compare(const CompareArgs& a) {
    ExperimentSpec spec;
    spec.trace_path = a.trace;
    spec.spec = PenaltySpec::parse(a.penalty);
    spec.aggregate = parse_aggregate(a.aggregate);
    spec.speeds = parse_speeds(a.speeds);
    std::vector<std::string> names = a.policies;
    if (names.empty()) {
        names = {spec.spec == PenaltySpec::flow() ? "lwf" : "lf", "fcfs", "rr"};
    }
    for (const auto& n : names) spec.policies.push_back(Policy::parse(n, spec.spec));
    spec.opt.node_budget = a.budget;
    spec.verify = false;
    const ExperimentResult r = run_experiment(spec, load_experiment_trace(spec));
    emit(a.objectives, r.objective_table);
    if (a.objectives == "-" && a.ratios == "-") std::cout << '\n';
    emit(a.ratios, r.ratio_table);
    return r.budget_exceeded ? kBudgetExceeded : kOk;
}

struct VerifyArgs {
    std::string trace;
    std::string schedule;
    std::string policy;
    std::string speeds = "1,2,4,5";
    std::string penalty = "flow";
    std::string rho = "10";
    std::string alpha = "1/32";
    std::string gamma = "1/32";
    std::string lambda = "1/2";
    std::string beta = "1/2";
    bool le_rho = false;
    bool four_speed = false;
    std::string comparator = "opt";
    std::uint64_t budget = 100'000;
    std::string report = "-";
};

int cmd_verify(const VerifyArgs& a) {
    const Trace trace = load_trace_file(a.trace);

    if (!a.schedule.empty()) {
        Schedule s = load_schedule_file(a.schedule);
        assign_finish_times(trace, s);
        const auto violations = verify_schedule(trace, s);
        for (const auto& v : violations) std::cout << rule_name(v.rule) << '\t' << v.detail << '\n';
        std::cout << "schedule\t" << (violations.empty() ? "valid" : "invalid") << '\t' << violations.size()
                  << " violations\n";
        return violations.empty() ? kOk : kVerifyFailed;
    }

    ExperimentSpec spec;
    spec.trace_path = a.trace;
    spec.spec = PenaltySpec::parse(a.penalty);
    spec.speeds = parse_speeds(a.speeds);
    const std::string policy = !a.policy.empty() ? a.policy : spec.spec == PenaltySpec::flow() ? "lwf" : "lf";
    spec.policies.push_back(Policy::parse(policy, spec.spec));
    spec.config.rho = Rational::parse(a.rho);
    spec.config.alpha = Rational::parse(a.alpha);
    spec.config.gamma = Rational::parse(a.gamma);
    spec.config.lambda = Rational::parse(a.lambda);
    spec.config.beta = Rational::parse(a.beta);
    spec.config.le_rho = a.le_rho;
    spec.config.four_speed = a.four_speed;
    spec.comparator = parse_comparator(a.comparator);
    spec.opt.node_budget = a.budget;
    spec.compute_opt = false;
    const ExperimentResult r = run_experiment(spec, load_experiment_trace(spec));
    emit(a.report, r.lemma_report);
    std::cerr << r.failures << " failing checks\n";
    return r.failures == 0 ? kOk : kVerifyFailed;
}

int cmd_selftest(const std::vector<int>& only) {
    const auto results = run_acceptance(std::cout, only);
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Broadcast scheduling simulator and charging-argument checker"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "generate a trace");
    g->add_option("--kind", gen.kind, "uniform|bursty|backlogged|skew")->capture_default_str();
    g->add_option("--pages", gen.pages)->capture_default_str();
    g->add_option("--horizon", gen.horizon)->capture_default_str();
    g->add_option("--intensity", gen.intensity, "requests per slot, e.g. 3/2")->capture_default_str();
    g->add_option("--seed", gen.seed)->capture_default_str();
    g->add_option("--slack-lo", gen.slack_lo)->capture_default_str();
    g->add_option("--slack-hi", gen.slack_hi)->capture_default_str();
    g->add_option("-o,--out", gen.out, "output file, - for stdout")->capture_default_str();

    SimArgs sim;
    auto* s = app.add_subcommand("simulate", "run an online policy");
    s->add_option("--trace", sim.trace)->required()->check(CLI::ExistingFile);
    s->add_option("--policy", sim.policy, "lwf|lf|fcfs|rr")->capture_default_str();
    s->add_option("--speed", sim.speed)->capture_default_str();
    s->add_option("--penalty", sim.penalty, "flow|df|powflow:K|powdf:K")->capture_default_str();
    s->add_option("-o,--out", sim.out, "write the schedule here");

    OptArgs opt;
    auto* o = app.add_subcommand("opt", "exact speed-1 offline optimum");
    o->add_option("--trace", opt.trace)->required()->check(CLI::ExistingFile);
    o->add_option("--penalty", opt.penalty)->capture_default_str();
    o->add_option("--aggregate", opt.aggregate, "sum|max")->capture_default_str();
    o->add_option("--budget", opt.budget, "node budget")->capture_default_str();
    o->add_option("-o,--out", opt.out, "write the schedule here");

    CompareArgs cmp;
    auto* c = app.add_subcommand("compare", "objective and ratio-vs-speed tables");
    c->add_option("--trace", cmp.trace)->required()->check(CLI::ExistingFile);
    c->add_option("--penalty", cmp.penalty)->capture_default_str();
    c->add_option("--aggregate", cmp.aggregate)->capture_default_str();
    c->add_option("--speeds", cmp.speeds)->capture_default_str();
    c->add_option("--policies", cmp.policies, "default: lwf (or lf) fcfs rr")->delimiter(',');
    c->add_option("--budget", cmp.budget)->capture_default_str();
    c->add_option("--objectives", cmp.objectives, "objective table file")->capture_default_str();
    c->add_option("--ratios", cmp.ratios, "ratio table file")->capture_default_str();

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "check the charging lemmas, or a schedule file");
    v->add_option("--trace", ver.trace)->required()->check(CLI::ExistingFile);
    v->add_option("--schedule", ver.schedule, "only check this schedule against the trace")
        ->check(CLI::ExistingFile);
    v->add_option("--policy", ver.policy, "lwf|lf (default from penalty)");
    v->add_option("--speeds", ver.speeds)->capture_default_str();
    v->add_option("--penalty", ver.penalty)->capture_default_str();
    v->add_option("--rho", ver.rho)->capture_default_str();
    v->add_option("--alpha", ver.alpha)->capture_default_str();
    v->add_option("--gamma", ver.gamma)->capture_default_str();
    v->add_option("--lambda", ver.lambda)->capture_default_str();
    v->add_option("--beta", ver.beta)->capture_default_str();
    v->add_flag("--le-rho", ver.le_rho, "self-chargeable when e - b <= rho");
    v->add_flag("--four-speed", ver.four_speed, "also check Type1/Type2, bridges and coverings");
    v->add_option("--comparator", ver.comparator, "opt|fcfs|rr|focus")->capture_default_str();
    v->add_option("--budget", ver.budget, "node budget for the opt comparator")->capture_default_str();
    v->add_option("--report", ver.report, "report file, - for stdout")->capture_default_str();

    std::vector<int> only;
    auto* t = app.add_subcommand("selftest", "run the acceptance criteria");
    t->add_option("--only", only, "criterion ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*g) return cmd_gen(gen);
        if (*s) return cmd_simulate(sim);
        if (*o) return cmd_opt(opt);
        if (*c) return cmd_compare(cmp);
        if (*v) return cmd_verify(ver);
        if (*t) return cmd_selftest(only);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
