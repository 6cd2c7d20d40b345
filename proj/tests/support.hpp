#pragma once

#include "bcast/model.hpp"

#include <array>
#include <initializer_list>
#include <map>
#include <vector>

namespace bcast::testing {

/// {page, arrival, deadline} rows through validate_trace.
inline Trace make_trace(std::initializer_list<std::array<Time, 3>> rows) {
    std::vector<Request> raw;
    for (const auto& [p, a, d] : rows) raw.push_back({static_cast<PageId>(p), a, d, 0});
    return validate_trace(raw);
}

/// The three-request micro trace used throughout: (1,0), (2,0), (1,1), unit slacks.
inline Trace t1() { return make_trace({{1, 0, 1}, {2, 0, 1}, {1, 1, 2}}); }

inline Schedule slots_schedule(const Trace& trace, int speed, std::map<Time, std::vector<PageId>> slots) {
    Schedule s;
    s.speed = speed;
    s.slots = std::move(slots);
    assign_finish_times(trace, s);
    return s;
}

}  // namespace bcast::testing
