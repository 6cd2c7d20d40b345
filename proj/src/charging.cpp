#include "bcast/charging.hpp"

#include <algorithm>
#include <map>

namespace bcast {

AnalysisConfig AnalysisConfig::five_speed() {
    AnalysisConfig c;
    c.rho = Rational(10);
    return c;
}

AnalysisConfig AnalysisConfig::four_speed_default() {
    AnalysisConfig c;
    c.rho = Rational(128);
    c.alpha = Rational(1, 32);
    c.gamma = Rational(1, 32);
    c.four_speed = true;
    return c;
}

AnalysisConfig AnalysisConfig::lk_delay_factor(unsigned k) {
    AnalysisConfig c;
    c.spec = PenaltySpec::power_delay_factor(k);
    c.beta = Rational(k, k + 1);
    c.rho = Rational(90 * (static_cast<std::int64_t>(k) + 1));
    return c;
}

void AnalysisConfig::validate() const {
    auto open_unit = [](const Rational& x) { return x > Rational(0) && x < Rational(1); };
    if (rho <= Rational(1)) throw std::invalid_argument("rho must exceed 1");
    if (!open_unit(alpha)) throw std::invalid_argument("alpha must lie in (0,1)");
    if (!open_unit(gamma)) throw std::invalid_argument("gamma must lie in (0,1)");
    if (!open_unit(beta)) throw std::invalid_argument("beta must lie in (0,1)");
    if (lambda <= Rational(0) || lambda > Rational(1)) throw std::invalid_argument("lambda must lie in (0,1]");
}

std::string Event::name() const {
    return "E(" + std::to_string(page) + "," + std::to_string(index) + ")";
}

std::vector<Event> decompose_events(const Trace& trace, const Schedule& alg, const Schedule& opt,
                                    const AnalysisConfig& config) {
    std::map<PageId, std::vector<const Request*>> by_page;
    for (const auto& r : trace.requests()) by_page[r.page].push_back(&r);

    auto finish_in = [](const Schedule& s, const Request& r) {
        auto it = s.finish.find(r.id());
        if (it == s.finish.end()) throw std::invalid_argument("schedule does not serve every request");
        return it->second;
    };

    std::vector<Event> events;
    for (const auto& [page, reqs] : by_page) {
        const std::vector<Time> times = alg.broadcast_times(page);
        const std::vector<Time> opt_times = opt.broadcast_times(page);

        auto make = [&](int index, Time b, Time e) {
            Event ev;
            ev.page = page;
            ev.index = index;
            ev.b = b;
            ev.e = e;
            for (const Request* r : reqs) {
                const bool owned = index == 0 ? r->arrival < e : (b <= r->arrival && r->arrival < e);
                if (!owned) continue;
                if (finish_in(alg, *r) != e) {
                    throw std::invalid_argument("algorithm finish time disagrees with its broadcasts");
                }
                ev.requests.push_back(r->id());
                ev.F_alg += penalty(config.spec, *r, e - r->arrival);
                ev.F_opt += penalty(config.spec, *r, finish_in(opt, *r) - r->arrival);
            }
            // Last comparator broadcast strictly inside the event.
            auto hi = std::lower_bound(opt_times.begin(), opt_times.end(), e);
            if (hi != opt_times.begin() && *std::prev(hi) >= b + 1) ev.o = *std::prev(hi);
            return ev;
        };

        if (times.empty()) continue;
        Event first = make(0, 0, times.front());
        if (!first.requests.empty()) events.push_back(std::move(first));
        for (std::size_t x = 0; x + 1 < times.size(); ++x) {
            events.push_back(make(static_cast<int>(x) + 1, times[x], times[x + 1]));
        }
    }
    return events;
}

std::vector<EventLabel> label_events(std::vector<Event>& events, const Trace& trace, const Schedule& opt,
                                     const AnalysisConfig& config, int alg_speed) {
    config.validate();
    std::vector<EventLabel> labels(events.size());

    for (std::size_t i = 0; i < events.size(); ++i) {
        Event& ev = events[i];
        const Rational length(ev.e - ev.b);
        const bool short_event = config.le_rho ? length <= config.rho : length < config.rho;
        if (ev.F_alg <= ev.F_opt || short_event) continue;

        labels[i].chargeability = EventLabel::Charge::NonSelfChargeable;
        if (!ev.o) {
            throw MissingOptBroadcast("non-self-chargeable " + ev.name() +
                                      " has no comparator broadcast of its page inside the event");
        }
        ev.o_prime = min(Rational(*ev.o), Rational(ev.e) - config.rho);
        ev.F_early = Rational(0);
        ev.F_late = Rational(0);
        ev.F_opt_late = Rational(0);
        for (const RequestId& id : ev.requests) {
            const Request& r = trace.at(id);
            const Rational alg_cost = penalty(config.spec, r, ev.e - r.arrival);
            if (Rational(r.arrival) < *ev.o_prime) {
                ev.F_early += alg_cost;
            } else {
                ev.F_late += alg_cost;
                ev.F_opt_late += penalty(config.spec, r, opt.finish.at(id) - r.arrival);
            }
        }
    }

    if (!config.four_speed) return labels;

    const Rational s(alg_speed);
    const Rational two(2);
    const Rational stretch = two - Rational(4) * config.alpha - Rational(4) * config.gamma;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (labels[i].self_chargeable()) continue;
        const Event& ev = events[i];
        const Time lo = ev.o_prime->ceil();
        std::size_t count = 0;
        for (std::size_t j = 0; j < events.size(); ++j) {
            if (labels[j].self_chargeable()) {
                const Time end = events[j].e;
                if (lo <= end && end <= ev.e - 1) ++count;
            }
        }
        labels[i].self_chargeable_in_window = count;
        const bool type1 = Rational(static_cast<std::int64_t>(count)) >= config.alpha * s * ev.span();
        labels[i].subtype = type1 ? EventLabel::Subtype::Type1 : EventLabel::Subtype::Type2;
    }

    for (std::size_t i = 0; i < events.size(); ++i) {
        if (labels[i].subtype != EventLabel::Subtype::Type2) continue;
        const Event& ev = events[i];
        const Rational span = ev.span();
        const Rational reach = Rational(ev.e) - stretch * span;
        const Time lo = (*ev.o_prime + Rational((span / two).ceil())).ceil();
        for (std::size_t j = 0; j < events.size(); ++j) {
            if (labels[j].self_chargeable()) continue;
            const Event& q = events[j];
            if (*q.o_prime <= reach && lo <= q.e && q.e <= ev.e - 1) labels[i].bridges.push_back(j);
        }
    }
    return labels;
}

bool Analysis::window_busy(std::size_t i) const {
    const Event& ev = events[i];
    if (!ev.o_prime) return false;
    return fully_busy(busy, ev.o_prime->ceil(), ev.e - 1);
}

Analysis analyze(const Trace& trace, const Schedule& alg, const Schedule& opt, const AnalysisConfig& config) {
    Analysis a;
    a.config = config;
    a.speed = alg.speed;
    a.events = decompose_events(trace, alg, opt, config);
    a.labels = label_events(a.events, trace, opt, config, alg.speed);
    a.busy = busy_windows(alg);
    return a;
}

}  // namespace bcast
