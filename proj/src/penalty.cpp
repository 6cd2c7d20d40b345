#include "bcast/penalty.hpp"

#include "bcast/random.hpp"

#include <charconv>
#include <sstream>

namespace bcast {

PenaltySpec PenaltySpec::power_flow(unsigned k) {
    if (k < 1) throw PenaltyError(PenaltyError::Kind::BadSpec, "power exponent must be >= 1");
    return {Kind::PowerFlow, k};
}

PenaltySpec PenaltySpec::power_delay_factor(unsigned k) {
    if (k < 1) throw PenaltyError(PenaltyError::Kind::BadSpec, "power exponent must be >= 1");
    return {Kind::PowerDelayFactor, k};
}

PenaltySpec PenaltySpec::parse(const std::string& text) {
    if (text == "flow") return flow();
    if (text == "df") return delay_factor();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        const std::string tail = text.substr(colon + 1);
        unsigned k = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
        if (ec == std::errc() && ptr == tail.data() + tail.size() && k >= 1) {
            if (head == "powflow") return power_flow(k);
            if (head == "powdf") return power_delay_factor(k);
        }
    }
    throw PenaltyError(PenaltyError::Kind::BadSpec,
                       "unknown penalty '" + text + "' (expected flow|df|powflow:K|powdf:K)");
}

std::string PenaltySpec::str() const {
    switch (kind) {
        case Kind::Flow: return "flow";
        case Kind::DelayFactor: return "df";
        case Kind::PowerFlow: return "powflow:" + std::to_string(k);
        case Kind::PowerDelayFactor: return "powdf:" + std::to_string(k);
    }
    return "?";
}

unsigned PenaltySpec::exponent() const {
    return (kind == Kind::PowerFlow || kind == Kind::PowerDelayFactor) ? k : 1;
}

std::string aggregate_name(Aggregate a) { return a == Aggregate::Sum ? "sum" : "max"; }

Aggregate parse_aggregate(const std::string& text) {
    if (text == "sum") return Aggregate::Sum;
    if (text == "max") return Aggregate::Max;
    throw PenaltyError(PenaltyError::Kind::BadSpec, "unknown aggregate '" + text + "' (expected sum|max)");
}

Rational penalty(const PenaltySpec& spec, Time slack, const Rational& wait) {
    const unsigned k = spec.exponent();
    if (spec.is_delay_factor()) {
        const Rational ratio = wait / Rational(slack);
        const Rational base = ratio < Rational(1) ? Rational(1) : ratio;
        return k == 1 ? base : base.pow(k);
    }
    return k == 1 ? wait : wait.pow(k);
}

Rational h_bound(const PenaltySpec& spec, const Rational& lambda) {
    if (lambda < Rational(0) || lambda > Rational(1)) {
        throw PenaltyError(PenaltyError::Kind::LambdaOutOfRange, "lambda " + lambda.str() + " outside [0,1]");
    }
    return lambda.pow(spec.exponent());
}

Rational m_envelope(const PenaltySpec& spec, const Rational& x) {
    const Rational base = spec.is_delay_factor() ? max(Rational(1), x) : x;
    return base.pow(spec.exponent());
}

Rational objective(const PenaltySpec& spec, const Trace& trace, const Schedule& schedule,
                   Aggregate aggregate) {
    Rational total(0);
    for (const auto& r : trace.requests()) {
        auto it = schedule.finish.find(r.id());
        if (it == schedule.finish.end()) {
            std::ostringstream os;
            os << "request " << r.id() << " has no finish time";
            throw PenaltyError(PenaltyError::Kind::IncompleteSchedule, os.str());
        }
        Rational value = penalty(spec, r, it->second - r.arrival);
        if (aggregate == Aggregate::Sum) {
            total += value;
        } else if (value > total) {
            total = std::move(value);
        }
    }
    return total;
}

std::vector<HPropertyViolation> verify_h_property(const PenaltySpec& spec, std::size_t samples,
                                                  std::uint64_t seed) {
    Xorshift64Star rng(seed);
    std::vector<HPropertyViolation> out;
    for (std::size_t i = 0; i < samples; ++i) {
        const std::int64_t den = rng.uniform(1, 64);
        const std::int64_t num = rng.uniform(1, den);
        const Rational lambda(num, den);
        const Time t = rng.uniform(0, 10000);
        const Time slack = rng.uniform(1, 64);
        Rational lhs = penalty(spec, slack, lambda * Rational(t));
        Rational rhs = h_bound(spec, lambda) * penalty(spec, slack, Rational(t));
        if (lhs < rhs) out.push_back({lambda, t, slack, std::move(lhs), std::move(rhs)});
    }
    return out;
}

}  // namespace bcast
