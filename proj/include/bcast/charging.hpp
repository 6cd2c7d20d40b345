#pragma once

#include "bcast/engine.hpp"
#include "bcast/model.hpp"
#include "bcast/penalty.hpp"
#include "bcast/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcast {

/// Constants of the charging argument.
struct AnalysisConfig {
    Rational rho{10};
    Rational alpha{1, 32};
    Rational gamma{1, 32};
    Rational beta{1, 2};
    Rational lambda{1, 2};
    PenaltySpec spec = PenaltySpec::flow();
    /// Use e - b <= rho (instead of < rho) in the self-chargeable rule.
    bool le_rho = false;
    /// Also classify Type1/Type2 and compute bridge sets.
    bool four_speed = false;

    /// rho = 10, flow time.
    static AnalysisConfig five_speed();
    /// rho = 128, alpha = gamma = 1/32, four-speed structures on.
    static AnalysisConfig four_speed_default();
    /// L_k delay factor: beta = k/(k+1), rho = 90(k+1).
    static AnalysisConfig lk_delay_factor(unsigned k);

    /// Throws std::invalid_argument when rho <= 1 or a fraction lies outside its range.
    void validate() const;
};

/// Interval between consecutive broadcasts of one page by the online algorithm, with the
/// requests it owns. `index` 0 marks the synthetic event before a page's first broadcast.
struct Event {
    PageId page = 0;
    int index = 0;
    Time b = 0;
    Time e = 0;
    std::vector<RequestId> requests;
    Rational F_alg;  ///< algorithm penalty of the owned requests
    Rational F_opt;  ///< comparator penalty of the same requests
    /// Last comparator broadcast of `page` in [b+1, e-1], if any.
    std::optional<Time> o;
    /// min(o, e - rho); set only for non-self-chargeable events.
    std::optional<Rational> o_prime;
    Rational F_early;     ///< requests arriving before o'
    Rational F_late;      ///< requests arriving at or after o'
    Rational F_opt_late;  ///< comparator penalty of the late requests

    [[nodiscard]] bool initial() const { return index == 0; }
    [[nodiscard]] std::string name() const;
    /// e - o' (non-self-chargeable events only).
    [[nodiscard]] Rational span() const { return Rational(e) - *o_prime; }
};

struct EventLabel {
    enum class Charge { SelfChargeable, NonSelfChargeable };
    enum class Subtype { Type1, Type2 };

    Charge chargeability = Charge::SelfChargeable;
    std::optional<Subtype> subtype;
    /// Positions (in the event list) of the bridge events; Type2 only.
    std::vector<std::size_t> bridges;
    /// Self-chargeable events ending in [o', e-1] (four-speed analysis).
    std::size_t self_chargeable_in_window = 0;

    [[nodiscard]] bool self_chargeable() const { return chargeability == Charge::SelfChargeable; }
};

class MissingOptBroadcast : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Events of every page: <t_x, t_{x+1}> between consecutive algorithm broadcasts, plus
/// <0, t_1> when requests arrive before the first broadcast.
std::vector<Event> decompose_events(const Trace& trace, const Schedule& alg, const Schedule& opt,
                                    const AnalysisConfig& config);

/// Chargeability, o', early/late split and (with four_speed) Type1/Type2 and bridges.
/// `alg_speed` is the online algorithm's speed s.
std::vector<EventLabel> label_events(std::vector<Event>& events, const Trace& trace, const Schedule& opt,
                                     const AnalysisConfig& config, int alg_speed);

/// Everything the lemma checks need, built once per (trace, algorithm schedule, comparator).
struct Analysis {
    AnalysisConfig config;
    int speed = 1;
    std::vector<Event> events;
    std::vector<EventLabel> labels;
    std::vector<TimeWindow> busy;

    [[nodiscard]] bool non_self_chargeable(std::size_t i) const { return !labels[i].self_chargeable(); }
    /// [ceil(o'), e-1] of a non-self-chargeable event lies inside one fully busy window.
    [[nodiscard]] bool window_busy(std::size_t i) const;
};

Analysis analyze(const Trace& trace, const Schedule& alg, const Schedule& opt, const AnalysisConfig& config);

}  // namespace bcast
