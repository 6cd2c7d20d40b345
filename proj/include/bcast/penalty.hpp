#pragma once

#include "bcast/model.hpp"
#include "bcast/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcast {

/// Per-request penalty m(wait) for one of the supported metrics.
struct PenaltySpec {
    enum class Kind { Flow, DelayFactor, PowerFlow, PowerDelayFactor };

    Kind kind = Kind::Flow;
    /// Exponent; meaningful for the power kinds only, always >= 1.
    unsigned k = 1;

    static PenaltySpec flow() { return {Kind::Flow, 1}; }
    static PenaltySpec delay_factor() { return {Kind::DelayFactor, 1}; }
    static PenaltySpec power_flow(unsigned k);
    static PenaltySpec power_delay_factor(unsigned k);

    /// Accepts flow | df | powflow:K | powdf:K.
    static PenaltySpec parse(const std::string& text);
    [[nodiscard]] std::string str() const;
    /// Exponent applied by h and m: 1 for Flow/DelayFactor, k for the power kinds.
    [[nodiscard]] unsigned exponent() const;
    [[nodiscard]] bool is_delay_factor() const {
        return kind == Kind::DelayFactor || kind == Kind::PowerDelayFactor;
    }

    friend bool operator==(const PenaltySpec&, const PenaltySpec&) = default;
};

enum class Aggregate { Sum, Max };

std::string aggregate_name(Aggregate a);
Aggregate parse_aggregate(const std::string& text);

class PenaltyError : public std::runtime_error {
public:
    enum class Kind { LambdaOutOfRange, IncompleteSchedule, BadSpec };

    PenaltyError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Penalty of a request with the given slack after waiting `wait` time units.
Rational penalty(const PenaltySpec& spec, Time slack, const Rational& wait);

inline Rational penalty(const PenaltySpec& spec, const Request& request, Time wait) {
    return penalty(spec, request.slack(), Rational(wait));
}

/// Growth lower bound h(lambda) with m(lambda t) >= h(lambda) m(t).
Rational h_bound(const PenaltySpec& spec, const Rational& lambda);

/// m(x) = max over requests of m_{p,i}(x), for slack >= 1.
Rational m_envelope(const PenaltySpec& spec, const Rational& x);

/// Sum or max of per-request penalties. The outer k-th root of an L_k norm is not applied.
Rational objective(const PenaltySpec& spec, const Trace& trace, const Schedule& schedule,
                   Aggregate aggregate);

struct HPropertyViolation {
    Rational lambda;
    Time t = 0;
    Time slack = 1;
    Rational lhs;  ///< penalty(lambda * t)
    Rational rhs;  ///< h(lambda) * penalty(t)
};

/// Samples lambda in (0,1] with denominator <= 64, t in [0, 10^4], slack in [1, 64]
/// and checks m(lambda t) >= h(lambda) m(t) exactly.
std::vector<HPropertyViolation> verify_h_property(const PenaltySpec& spec, std::size_t samples,
                                                  std::uint64_t seed = 1);

}  // namespace bcast
