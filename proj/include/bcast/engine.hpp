#pragma once

#include "bcast/model.hpp"
#include "bcast/penalty.hpp"

#include <map>
#include <string>
#include <vector>

namespace bcast {

/// Online broadcast policy. LWF is LF over the flow-time penalty.
struct Policy {
    enum class Kind { LWF, LF, FCFS, RoundRobin };

    Kind kind = Kind::LWF;
    PenaltySpec spec = PenaltySpec::flow();

    static Policy lwf() { return {Kind::LWF, PenaltySpec::flow()}; }
    static Policy lf(PenaltySpec spec) { return {Kind::LF, spec}; }
    static Policy fcfs() { return {Kind::FCFS, PenaltySpec::flow()}; }
    static Policy round_robin() { return {Kind::RoundRobin, PenaltySpec::flow()}; }

    /// lwf | lf | fcfs | rr; `spec` is used by lf only.
    static Policy parse(const std::string& name, const PenaltySpec& spec);
    [[nodiscard]] std::string str() const;
    /// Penalty used to rank pages; flow for LWF.
    [[nodiscard]] PenaltySpec ranking_spec() const {
        return kind == Kind::LF ? spec : PenaltySpec::flow();
    }
};

/// Unsatisfied requests U(t) grouped by page. Pages with nothing outstanding are absent.
struct QueueState {
    std::map<PageId, std::vector<Request>> outstanding;
    Time now = 0;
    /// Last page served by round-robin, 0 before the first broadcast.
    PageId rr_last = 0;

    [[nodiscard]] bool empty() const { return outstanding.empty(); }
};

/// (m-)waiting time of `page` at state.now: sum of m(now - a) over its outstanding requests.
Rational waiting_time(const PenaltySpec& spec, const QueueState& state, PageId page);

/// Up to `speed` pages with outstanding requests, in priority order.
std::vector<PageId> select_pages(const Policy& policy, const QueueState& state, int speed);

/// Runs the discrete-time loop (decide, broadcast, then arrivals) until every request is served.
Schedule simulate(const Trace& trace, const Policy& policy, int speed);

struct TimeWindow {
    Time lo = 0;
    Time hi = 0;

    [[nodiscard]] bool contains(Time t) const { return lo <= t && t <= hi; }
    friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

/// Maximal closed intervals of slots where the schedule broadcast `speed` pages.
std::vector<TimeWindow> busy_windows(const Schedule& schedule);

/// True iff every slot of [lo, hi] is full. Empty ranges (lo > hi) count as busy.
bool fully_busy(const std::vector<TimeWindow>& windows, Time lo, Time hi);

}  // namespace bcast
