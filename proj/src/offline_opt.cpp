#include "bcast/offline_opt.hpp"

#include "bcast/engine.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace bcast {

Time horizon_bound(const Trace& trace) {
    return trace.last_arrival() + static_cast<Time>(trace.requested_pages().size()) + 1;
}

namespace {

Rational combine(Aggregate aggregate, const Rational& a, const Rational& b) {
    return aggregate == Aggregate::Sum ? a + b : max(a, b);
}

class BranchAndBound {
public:
    BranchAndBound(const Trace& trace, const PenaltySpec& spec, Aggregate aggregate, const OptOptions& options)
        : trace_(trace), aggregate_(aggregate), budget_(options.node_budget), horizon_(horizon_bound(trace)) {
        const auto reqs = trace.requests();
        requests_.assign(reqs.begin(), reqs.end());
        cost_.resize(requests_.size());
        for (std::size_t i = 0; i < requests_.size(); ++i) {
            const Request& r = requests_[i];
            for (Time f = r.arrival + 1; f <= horizon_; ++f) {
                cost_[i].push_back(penalty(spec, r, f - r.arrival));
            }
        }
        future_bound_.assign(requests_.size() + 1, Rational(0));
        for (std::size_t i = requests_.size(); i-- > 0;) {
            future_bound_[i] = combine(aggregate_, cost_[i].front(), future_bound_[i + 1]);
        }
        outstanding_.resize(static_cast<std::size_t>(trace.page_count()) + 1);
        mark_.resize(outstanding_.size(), 0);

        if (options.seed_with_policies) {
            for (const Policy& policy : {Policy::lwf(), Policy::lf(spec), Policy::fcfs(), Policy::round_robin()}) {
                Schedule s = simulate(trace, policy, 1);
                Rational v = objective(spec, trace, s, aggregate);
                if (!have_best_ || v < best_) {
                    best_ = std::move(v);
                    seed_schedule_ = std::move(s);
                    have_best_ = true;
                }
            }
        }
    }

    OptResult run() {
        search(0, Rational(0));
        OptResult result;
        if (confirmed_) {
            result.schedule.speed = 1;
            for (std::size_t t = 0; t < best_sequence_.size(); ++t) {
                if (best_sequence_[t] != 0) result.schedule.slots[static_cast<Time>(t)] = {best_sequence_[t]};
            }
            assign_finish_times(trace_, result.schedule);
        } else if (seed_schedule_) {
            result.schedule = *seed_schedule_;
        }
        result.value = best_;
        result.nodes_explored = nodes_;
        result.optimal = !exhausted_;
        return result;
    }

private:
    const Rational& cost(std::size_t request, Time finish) const {
        return cost_[request][static_cast<std::size_t>(finish - requests_[request].arrival - 1)];
    }

    bool prune(const Rational& bound) const {
        if (!have_best_) return false;
        return confirmed_ ? bound >= best_ : bound > best_;
    }

    void admit_arrivals(Time t, std::vector<std::size_t>& added) {
        while (next_arrival_ < requests_.size() && requests_[next_arrival_].arrival == t) {
            outstanding_[static_cast<std::size_t>(requests_[next_arrival_].page)].push_back(next_arrival_);
            added.push_back(next_arrival_);
            ++next_arrival_;
        }
    }

    void retract_arrivals(const std::vector<std::size_t>& added) {
        for (auto it = added.rbegin(); it != added.rend(); ++it) {
            outstanding_[static_cast<std::size_t>(requests_[*it].page)].pop_back();
            --next_arrival_;
        }
    }

    void search(Time t, const Rational& accrued) {
        if (exhausted_) return;
        if (nodes_ == budget_) {
            exhausted_ = true;
            return;
        }
        ++nodes_;

        std::size_t pending_pages = 0;
        for (const auto& list : outstanding_) pending_pages += list.empty() ? 0 : 1;

        if (pending_pages == 0 && next_arrival_ == requests_.size()) {
            const bool better = !have_best_ || (confirmed_ ? accrued < best_ : accrued <= best_);
            if (better) {
                best_ = accrued;
                best_sequence_ = sequence_;
                have_best_ = true;
                confirmed_ = true;
            }
            return;
        }

        if (pending_pages == 0) {
            // Nothing to broadcast until the next arrival has happened.
            const Time resume = requests_[next_arrival_].arrival;
            const std::size_t before = sequence_.size();
            while (static_cast<Time>(sequence_.size()) <= resume) sequence_.push_back(0);
            std::vector<std::size_t> added;
            admit_arrivals(resume, added);
            search(resume + 1, accrued);
            retract_arrivals(added);
            sequence_.resize(before);
            return;
        }

        // Every page still owed a broadcast needs its own slot in [t, horizon].
        std::size_t owed = 0;
        std::fill(mark_.begin(), mark_.end(), 0);
        for (std::size_t p = 0; p < outstanding_.size(); ++p) {
            if (!outstanding_[p].empty()) mark_[p] = 1;
        }
        for (std::size_t i = next_arrival_; i < requests_.size(); ++i) {
            mark_[static_cast<std::size_t>(requests_[i].page)] = 1;
        }
        for (char m : mark_) owed += static_cast<std::size_t>(m);
        if (static_cast<Time>(owed) > horizon_ - t + 1) return;

        Rational bound = combine(aggregate_, accrued, future_bound_[next_arrival_]);
        for (const auto& list : outstanding_) {
            for (std::size_t i : list) bound = combine(aggregate_, bound, cost(i, t));
        }
        if (prune(bound)) return;

        // Choice 0 (idle) first, then pages ascending: DFS order is lexicographic.
        for (std::size_t choice = 0; choice < outstanding_.size(); ++choice) {
            if (choice != 0 && outstanding_[choice].empty()) continue;
            std::vector<std::size_t> served;
            Rational next = accrued;
            if (choice != 0) {
                served.swap(outstanding_[choice]);
                for (std::size_t i : served) next = combine(aggregate_, next, cost(i, t));
            }
            sequence_.push_back(static_cast<PageId>(choice));
            std::vector<std::size_t> added;
            admit_arrivals(t, added);
            search(t + 1, next);
            retract_arrivals(added);
            sequence_.pop_back();
            if (choice != 0) served.swap(outstanding_[choice]);
            if (exhausted_) return;
        }
    }

    const Trace& trace_;
    Aggregate aggregate_;
    std::uint64_t budget_;
    Time horizon_;

    std::vector<Request> requests_;
    std::vector<std::vector<Rational>> cost_;
    std::vector<Rational> future_bound_;

    std::vector<std::vector<std::size_t>> outstanding_;
    std::vector<char> mark_;
    std::size_t next_arrival_ = 0;
    std::vector<PageId> sequence_;

    Rational best_;
    bool have_best_ = false;
    bool confirmed_ = false;
    std::vector<PageId> best_sequence_;
    std::optional<Schedule> seed_schedule_;

    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

OptResult optimal_schedule(const Trace& trace, const PenaltySpec& spec, Aggregate aggregate,
                           const OptOptions& options) {
    BranchAndBound search(trace, spec, aggregate, options);
    return search.run();
}

Rational exhaustive_reference(const Trace& trace, const PenaltySpec& spec, Aggregate aggregate,
                              std::uint64_t limit) {
    const Time horizon = horizon_bound(trace);
    const auto choices = static_cast<std::uint64_t>(trace.page_count()) + 1;
    std::uint64_t total = 1;
    for (Time i = 0; i < horizon; ++i) {
        if (total > limit / choices) {
            throw TooLarge("exhaustive enumeration over " + std::to_string(horizon) + " slots with " +
                           std::to_string(choices) + " choices exceeds the limit");
        }
        total *= choices;
    }

    const auto reqs = trace.requests();
    // slot[i] is the page broadcast at time i + 1; 0 = idle.
    std::vector<PageId> slot(static_cast<std::size_t>(horizon), 0);
    std::optional<Rational> best;
    for (std::uint64_t n = 0; n < total; ++n) {
        Rational value(0);
        bool complete = true;
        for (const Request& r : reqs) {
            Time finish = 0;
            for (Time t = r.arrival + 1; t <= horizon; ++t) {
                if (slot[static_cast<std::size_t>(t - 1)] == r.page) {
                    finish = t;
                    break;
                }
            }
            if (finish == 0) {
                complete = false;
                break;
            }
            Rational c = penalty(spec, r, finish - r.arrival);
            value = aggregate == Aggregate::Sum ? value + c : max(value, c);
        }
        if (complete && (!best || value < *best)) best = value;

        for (std::size_t d = 0; d < slot.size(); ++d) {
            if (++slot[d] < static_cast<PageId>(choices)) break;
            slot[d] = 0;
        }
    }
    if (!best) throw std::logic_error("no complete schedule within the horizon bound");
    return *best;
}

}  // namespace bcast
