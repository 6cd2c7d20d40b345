#include "bcast/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bcast {

std::ostream& operator<<(std::ostream& os, const RequestId& id) {
    return os << "J(" << id.page << "," << id.index << ")";
}

Time Trace::last_arrival() const {
    return requests_.empty() ? 0 : requests_.back().arrival;
}

std::vector<PageId> Trace::requested_pages() const {
    std::set<PageId> pages;
    for (const auto& r : requests_) pages.insert(r.page);
    return {pages.begin(), pages.end()};
}

const Request& Trace::at(RequestId id) const {
    for (const auto& r : requests_) {
        if (r.id() == id) return r;
    }
    std::ostringstream os;
    os << "no request " << id << " in trace";
    throw std::out_of_range(os.str());
}

Trace validate_trace(std::span<const Request> raw) {
    if (raw.empty()) {
        throw TraceError(TraceError::Kind::EmptyTrace, "trace has no requests");
    }
    std::vector<Request> requests(raw.begin(), raw.end());
    for (const auto& r : requests) {
        std::ostringstream where;
        where << "request page=" << r.page << " arrival=" << r.arrival << " deadline=" << r.deadline;
        if (r.page <= 0) {
            throw TraceError(TraceError::Kind::NonPositivePage, where.str() + ": page id must be positive");
        }
        if (r.arrival < 0) {
            throw TraceError(TraceError::Kind::NegativeArrival, where.str() + ": negative arrival");
        }
        if (r.deadline - r.arrival < 1) {
            throw TraceError(TraceError::Kind::NonPositiveSlack, where.str() + ": slack must be at least 1");
        }
    }

    // Per-page arrival order decides the indices; equal arrivals keep their input order
    // (by previous index first, so re-validating a trace reproduces it).
    std::stable_sort(requests.begin(), requests.end(), [](const Request& a, const Request& b) {
        return std::tie(a.page, a.arrival, a.index) < std::tie(b.page, b.arrival, b.index);
    });
    int page_count = 0;
    for (std::size_t i = 0; i < requests.size(); ++i) {
        const bool first_of_page = i == 0 || requests[i - 1].page != requests[i].page;
        requests[i].index = first_of_page ? 1 : requests[i - 1].index + 1;
        page_count = std::max(page_count, requests[i].page);
    }
    std::sort(requests.begin(), requests.end(), [](const Request& a, const Request& b) {
        return std::tie(a.arrival, a.page, a.index) < std::tie(b.arrival, b.page, b.index);
    });

    Trace trace;
    trace.requests_ = std::move(requests);
    trace.page_count_ = page_count;
    return trace;
}

Time Schedule::horizon() const {
    for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
        if (!it->second.empty()) return it->first;
    }
    return 0;
}

bool Schedule::broadcasts(Time t, PageId page) const {
    auto it = slots.find(t);
    return it != slots.end() && std::find(it->second.begin(), it->second.end(), page) != it->second.end();
}

std::size_t Schedule::load(Time t) const {
    auto it = slots.find(t);
    return it == slots.end() ? 0 : it->second.size();
}

std::vector<Time> Schedule::broadcast_times(PageId page) const {
    std::vector<Time> times;
    for (const auto& [t, pages] : slots) {
        if (std::find(pages.begin(), pages.end(), page) != pages.end()) times.push_back(t);
    }
    return times;
}

void assign_finish_times(const Trace& trace, Schedule& schedule) {
    std::map<PageId, std::vector<Time>> times;
    for (const auto& [t, pages] : schedule.slots) {
        for (PageId p : pages) times[p].push_back(t);
    }
    schedule.finish.clear();
    for (const auto& r : trace.requests()) {
        auto it = times.find(r.page);
        if (it == times.end()) continue;
        auto next = std::upper_bound(it->second.begin(), it->second.end(), r.arrival);
        if (next != it->second.end()) schedule.finish[r.id()] = *next;
    }
}

std::string_view rule_name(Violation::Rule rule) {
    switch (rule) {
        case Violation::Rule::NonPositiveSpeed: return "non-positive speed";
        case Violation::Rule::SlotOverCapacity: return "slot size exceeds speed";
        case Violation::Rule::DuplicatePageInSlot: return "duplicate page in slot";
        case Violation::Rule::MissingFinish: return "request has no finish time";
        case Violation::Rule::FinishNotAfterArrival: return "finish <= arrival";
        case Violation::Rule::FinishNotBroadcast: return "page not broadcast at finish";
        case Violation::Rule::FinishNotEarliest: return "finish is not the earliest broadcast after arrival";
        case Violation::Rule::UnknownRequest: return "finish time for unknown request";
    }
    return "unknown";
}

std::vector<Violation> verify_schedule(const Trace& trace, const Schedule& schedule) {
    std::vector<Violation> out;
    auto add = [&](Violation::Rule rule, const std::string& detail) { out.push_back({rule, detail}); };

    if (schedule.speed < 1) {
        add(Violation::Rule::NonPositiveSpeed, "speed=" + std::to_string(schedule.speed));
    }
    for (const auto& [t, pages] : schedule.slots) {
        if (schedule.speed >= 1 && pages.size() > static_cast<std::size_t>(schedule.speed)) {
            add(Violation::Rule::SlotOverCapacity,
                "slot " + std::to_string(t) + " has " + std::to_string(pages.size()) + " pages");
        }
        std::set<PageId> seen;
        for (PageId p : pages) {
            if (!seen.insert(p).second) {
                add(Violation::Rule::DuplicatePageInSlot,
                    "slot " + std::to_string(t) + " page " + std::to_string(p));
            }
        }
    }

    std::set<RequestId> known;
    for (const auto& r : trace.requests()) {
        known.insert(r.id());
        std::ostringstream who;
        who << r.id();
        auto it = schedule.finish.find(r.id());
        if (it == schedule.finish.end()) {
            add(Violation::Rule::MissingFinish, who.str());
            continue;
        }
        const Time f = it->second;
        if (f <= r.arrival) {
            add(Violation::Rule::FinishNotAfterArrival,
                who.str() + " arrival=" + std::to_string(r.arrival) + " finish=" + std::to_string(f));
        }
        if (!schedule.broadcasts(f, r.page)) {
            add(Violation::Rule::FinishNotBroadcast, who.str() + " finish=" + std::to_string(f));
        }
        for (const auto& [t, pages] : schedule.slots) {
            if (t <= r.arrival) continue;
            if (t >= f) break;
            if (std::find(pages.begin(), pages.end(), r.page) != pages.end()) {
                add(Violation::Rule::FinishNotEarliest,
                    who.str() + " broadcast at " + std::to_string(t) + " before finish " + std::to_string(f));
                break;
            }
        }
    }
    for (const auto& [id, f] : schedule.finish) {
        if (!known.contains(id)) {
            std::ostringstream who;
            who << id;
            add(Violation::Rule::UnknownRequest, who.str());
        }
    }
    return out;
}

}  // namespace bcast
