#pragma once

#include "bcast/model.hpp"
#include "bcast/penalty.hpp"

#include <cstdint>
#include <stdexcept>

namespace bcast {

struct OptOptions {
    std::uint64_t node_budget = 10'000'000;
    /// Start from the best speed-1 online schedule as an upper bound. Does not change
    /// which optimum is returned, only how fast it is found.
    bool seed_with_policies = true;
};

struct OptResult {
    Schedule schedule;  ///< speed 1
    Rational value;
    std::uint64_t nodes_explored = 0;
    /// False when the node budget ran out; `value` is then only an upper bound.
    bool optimal = true;
};

/// last_arrival + (#distinct requested pages) + 1. Some optimal schedule finishes by then.
Time horizon_bound(const Trace& trace);

/// Exact speed-1 optimum by depth-first branch-and-bound over per-slot choices
/// (idle, or one page with outstanding requests). Among optimal schedules the one with
/// the lexicographically smallest broadcast sequence (idle = 0) is returned.
OptResult optimal_schedule(const Trace& trace, const PenaltySpec& spec, Aggregate aggregate,
                           const OptOptions& options = {});

class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unpruned enumeration of every choice sequence over slots 1..horizon_bound.
/// Throws TooLarge when (page_count + 1)^horizon exceeds `limit`.
Rational exhaustive_reference(const Trace& trace, const PenaltySpec& spec, Aggregate aggregate,
                              std::uint64_t limit = 10'000'000);

}  // namespace bcast
