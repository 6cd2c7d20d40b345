#pragma once

#include "bcast/charging.hpp"
#include "bcast/engine.hpp"
#include "bcast/generator.hpp"
#include "bcast/lemmas.hpp"
#include "bcast/offline_opt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bcast {

/// Speed-1 schedules the charging checks can be run against. The lemmas only use that the
/// comparator broadcasts one page per slot, so any of these is a legitimate stand-in for OPT.
enum class Comparator {
    Opt,         ///< optimal_schedule (the incumbent if the node budget runs out)
    Fcfs,        ///< FCFS at speed 1
    RoundRobin,  ///< round-robin at speed 1
    Focus,       ///< serves the rarely requested half of the pages first, LWF otherwise
};

Comparator parse_comparator(const std::string& name);
std::string comparator_name(Comparator c);

/// Speed 1: whenever a page of `focus` has outstanding requests, broadcast the one holding the
/// oldest request (ties to the smaller id); otherwise behave like LWF_1.
Schedule focus_schedule(const Trace& trace, const std::vector<PageId>& focus);

/// The half (rounded up) of the requested pages with the fewest requests; ties to larger ids.
std::vector<PageId> rare_pages(const Trace& trace);

struct ComparatorRun {
    Schedule schedule;
    /// False when the comparator is Opt and the node budget ran out.
    bool exact = true;
};

ComparatorRun comparator_schedule(const Trace& trace, const PenaltySpec& spec, Comparator which,
                                  const OptOptions& options = {});

struct ExperimentSpec {
    /// Exactly one of these is the trace source.
    std::optional<std::string> trace_path;
    std::optional<GeneratorSpec> generator;

    std::vector<Policy> policies;
    std::vector<int> speeds;
    PenaltySpec spec = PenaltySpec::flow();
    Aggregate aggregate = Aggregate::Sum;
    AnalysisConfig config;
    Comparator comparator = Comparator::Opt;
    OptOptions opt;
    bool compute_opt = true;
    bool verify = true;

    /// Empty paths are not written.
    std::string objective_path;
    std::string ratio_path;
    std::string report_path;

    /// Throws std::invalid_argument.
    void validate() const;
};

struct ExperimentResult {
    std::string objective_table;
    std::string ratio_table;
    std::string lemma_report;
    bool budget_exceeded = false;
    std::size_t failures = 0;
};

Trace load_experiment_trace(const ExperimentSpec& spec);

/// Objective table, ratio-vs-speed table and lemma report, byte-for-byte deterministic.
/// The trace source fields of `spec` are not consulted.
ExperimentResult run_experiment(const ExperimentSpec& spec, const Trace& trace);

/// Loads the trace, runs, and writes the non-empty output paths.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// "15/4" and "3.750000".
std::string exact_and_decimal(const Rational& x);

}  // namespace bcast
