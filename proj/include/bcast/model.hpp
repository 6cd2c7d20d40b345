#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcast {

using Time = std::int64_t;
using PageId = int;

/// Identifies one client request: the `index`-th request (1-based, arrival order) for `page`.
struct RequestId {
    PageId page = 0;
    int index = 0;

    friend auto operator<=>(const RequestId&, const RequestId&) = default;
};

std::ostream& operator<<(std::ostream& os, const RequestId& id);

/// One client demand for a unit-size page. Flow-time workloads use deadline = arrival + 1.
struct Request {
    PageId page = 0;
    Time arrival = 0;
    Time deadline = 1;
    int index = 0;

    [[nodiscard]] RequestId id() const { return {page, index}; }
    [[nodiscard]] Time slack() const { return deadline - arrival; }

    friend bool operator==(const Request&, const Request&) = default;
};

/// Validated request sequence, sorted by (arrival, page, index).
class Trace {
public:
    Trace() = default;

    [[nodiscard]] std::span<const Request> requests() const { return requests_; }
    [[nodiscard]] std::size_t size() const { return requests_.size(); }
    [[nodiscard]] bool empty() const { return requests_.empty(); }
    /// Largest referenced page id.
    [[nodiscard]] int page_count() const { return page_count_; }
    [[nodiscard]] Time last_arrival() const;
    /// Pages with at least one request, ascending.
    [[nodiscard]] std::vector<PageId> requested_pages() const;
    [[nodiscard]] const Request& at(RequestId id) const;

    friend bool operator==(const Trace&, const Trace&) = default;

private:
    friend Trace validate_trace(std::span<const Request> raw);

    std::vector<Request> requests_;
    int page_count_ = 0;
};

class TraceError : public std::runtime_error {
public:
    enum class Kind { NegativeArrival, NonPositiveSlack, EmptyTrace, NonPositivePage };

    TraceError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Sorts, assigns per-page indices in arrival order and rejects malformed input.
/// Idempotent on its own output.
Trace validate_trace(std::span<const Request> raw);

/// Per-slot broadcast sets at integer speed plus the finish time of every request.
struct Schedule {
    int speed = 1;
    /// Pages broadcast at each time, ascending page id. Times without broadcasts are absent.
    std::map<Time, std::vector<PageId>> slots;
    std::map<RequestId, Time> finish;

    /// Largest time with a broadcast, or 0 for an empty schedule.
    [[nodiscard]] Time horizon() const;
    [[nodiscard]] bool broadcasts(Time t, PageId page) const;
    /// Number of pages broadcast at t.
    [[nodiscard]] std::size_t load(Time t) const;
    /// Broadcast times of `page`, ascending.
    [[nodiscard]] std::vector<Time> broadcast_times(PageId page) const;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Derives finish times from the slot map: each request finishes at the first
/// broadcast of its page strictly after its arrival. Requests never served are omitted.
void assign_finish_times(const Trace& trace, Schedule& schedule);

struct Violation {
    enum class Rule {
        NonPositiveSpeed,
        SlotOverCapacity,
        DuplicatePageInSlot,
        MissingFinish,
        FinishNotAfterArrival,
        FinishNotBroadcast,
        FinishNotEarliest,
        UnknownRequest,
    };

    Rule rule;
    std::string detail;
};

std::string_view rule_name(Violation::Rule rule);

/// Empty iff every schedule invariant holds against the trace.
std::vector<Violation> verify_schedule(const Trace& trace, const Schedule& schedule);

}  // namespace bcast
