#include "bcast/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcast {

Policy Policy::parse(const std::string& name, const PenaltySpec& spec) {
    if (name == "lwf") return lwf();
    if (name == "lf") return lf(spec);
    if (name == "fcfs") return fcfs();
    if (name == "rr") return round_robin();
    throw std::invalid_argument("unknown policy '" + name + "' (expected lwf|lf|fcfs|rr)");
}

std::string Policy::str() const {
    switch (kind) {
        case Kind::LWF: return "lwf";
        case Kind::LF: return "lf(" + spec.str() + ")";
        case Kind::FCFS: return "fcfs";
        case Kind::RoundRobin: return "rr";
    }
    return "?";
}

Rational waiting_time(const PenaltySpec& spec, const QueueState& state, PageId page) {
    Rational total(0);
    auto it = state.outstanding.find(page);
    if (it == state.outstanding.end()) return total;
    for (const auto& r : it->second) total += penalty(spec, r, state.now - r.arrival);
    return total;
}

std::vector<PageId> select_pages(const Policy& policy, const QueueState& state, int speed) {
    const auto budget = static_cast<std::size_t>(std::max(speed, 0));
    std::vector<PageId> pages;
    pages.reserve(state.outstanding.size());
    for (const auto& [page, reqs] : state.outstanding) {
        if (!reqs.empty()) pages.push_back(page);
    }
    switch (policy.kind) {
        case Policy::Kind::LWF:
        case Policy::Kind::LF: {
            const PenaltySpec spec = policy.ranking_spec();
            std::vector<std::pair<Rational, PageId>> ranked;
            ranked.reserve(pages.size());
            for (PageId p : pages) ranked.emplace_back(waiting_time(spec, state, p), p);
            std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first > b.first;
                return a.second < b.second;
            });
            pages.clear();
            for (auto& [w, p] : ranked) pages.push_back(p);
            break;
        }
        case Policy::Kind::FCFS: {
            auto oldest = [&](PageId p) {
                Time a = state.outstanding.at(p).front().arrival;
                for (const auto& r : state.outstanding.at(p)) a = std::min(a, r.arrival);
                return a;
            };
            std::stable_sort(pages.begin(), pages.end(), [&](PageId a, PageId b) {
                const Time oa = oldest(a);
                const Time ob = oldest(b);
                return oa != ob ? oa < ob : a < b;
            });
            break;
        }
        case Policy::Kind::RoundRobin: {
            // Cyclic order starting just after the last served page.
            auto split = std::upper_bound(pages.begin(), pages.end(), state.rr_last);
            std::rotate(pages.begin(), split, pages.end());
            break;
        }
    }
    if (pages.size() > budget) pages.resize(budget);
    return pages;
}

Schedule simulate(const Trace& trace, const Policy& policy, int speed) {
    if (speed < 1) throw std::invalid_argument("speed must be >= 1");
    Schedule schedule;
    schedule.speed = speed;

    const auto requests = trace.requests();
    std::size_t next_arrival = 0;
    QueueState state;
    for (Time t = 0; next_arrival < requests.size() || !state.empty(); ++t) {
        state.now = t;
        if (!state.empty()) {
            std::vector<PageId> chosen = select_pages(policy, state, speed);
            for (PageId p : chosen) {
                for (const auto& r : state.outstanding.at(p)) schedule.finish[r.id()] = t;
                state.outstanding.erase(p);
            }
            if (policy.kind == Policy::Kind::RoundRobin && !chosen.empty()) state.rr_last = chosen.back();
            std::sort(chosen.begin(), chosen.end());
            schedule.slots.emplace(t, std::move(chosen));
        }
        while (next_arrival < requests.size() && requests[next_arrival].arrival == t) {
            const Request& r = requests[next_arrival++];
            state.outstanding[r.page].push_back(r);
        }
    }
    return schedule;
}

std::vector<TimeWindow> busy_windows(const Schedule& schedule) {
    std::vector<TimeWindow> out;
    const auto full = static_cast<std::size_t>(schedule.speed);
    for (const auto& [t, pages] : schedule.slots) {
        if (pages.size() != full) continue;
        if (!out.empty() && out.back().hi + 1 == t) {
            out.back().hi = t;
        } else {
            out.push_back({t, t});
        }
    }
    return out;
}

bool fully_busy(const std::vector<TimeWindow>& windows, Time lo, Time hi) {
    if (lo > hi) return true;
    return std::any_of(windows.begin(), windows.end(),
                       [&](const TimeWindow& w) { return w.lo <= lo && hi <= w.hi; });
}

}  // namespace bcast
