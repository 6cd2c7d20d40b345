#pragma once

#include "bcast/charging.hpp"
#include "bcast/hall.hpp"
#include "bcast/offline_opt.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bcast {

enum class CheckStatus { Pass, Fail, Skipped, Inapplicable };

std::string_view status_name(CheckStatus status);

/// One line of a verification report: lhs <= rhs (or the stated relation) for the named lemma.
struct CheckRecord {
    std::string check_id;
    std::string lemma;
    std::string events;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    CheckStatus status = CheckStatus::Pass;
    std::string note;
};

struct Report {
    std::vector<CheckRecord> rows;
    /// Named totals such as LWF^S or OPT^N.
    std::map<std::string, Rational> aggregates;

    [[nodiscard]] std::size_t count(CheckStatus status) const;
    [[nodiscard]] std::size_t count(CheckStatus status, std::string_view lemma) const;
    [[nodiscard]] std::size_t failures() const { return count(CheckStatus::Fail); }

    void append(const Report& other);
    /// Tab-separated: check id, lemma, events, lhs, rhs, status, note.
    void write_tsv(std::ostream& os) const;
};

/// Lemma names used in reports. Flow-time runs use the LWF names, other penalties the LF ones.
struct LemmaNames {
    std::string self_charge;
    std::string late_charge;
    std::string close;

    static LemmaNames for_spec(const PenaltySpec& spec);
};

/// (a) per self-chargeable event F <= m(rho) F*, (b) per non-self-chargeable event
/// F_late <= m(rho) F*_late, (c) F(q,y) >= h(lambda) F_early(p,x) for every event (q,y)
/// ending in [ceil(o' + lambda (e - o')), e - 1] at a fully busy slot; plus the aggregate forms.
Report verify_core_lemmas(const Analysis& analysis);

/// Charging graph over non-self-chargeable events whose [o', e-1] is fully busy:
/// edge to every event ending in [o' + ceil(fraction (e - o')), e - 1].
ChargingGraph build_charging_graph(const Analysis& analysis, const Rational& fraction);

/// fraction = 1/2.
inline ChargingGraph build_5speed_graph(const Analysis& analysis) {
    return build_charging_graph(analysis, Rational(1, 2));
}

/// 2 rho / (s (rho - 1)).
Rational five_speed_covering_bound(const Rational& rho, int speed);

/// Certifies the covering of the 5-speed charging graph with c = 2 rho / (s (rho - 1)),
/// re-validates it by summation, checks |Z| <= |union of [o', e-1]| for Z = X and for
/// `random_subsets` random subsets, and the resulting bound on the early-request total.
Report certify_5speed_covering(const Analysis& analysis, std::size_t random_subsets = 8, std::uint64_t seed = 1);

/// Speed-4 structures: bridge counts, bridge inequalities and their average,
/// the Type1 and Type2 coverings, and uniqueness of o among non-self-chargeable events.
/// Requires a config built with four_speed = true.
Report verify_4speed_structures(const Analysis& analysis);

/// (3 - 8 alpha - 8 gamma) / (1 - 4 alpha - 4 gamma); empty when the denominator is <= 0.
std::optional<Rational> bridge_coefficient(const Rational& alpha, const Rational& gamma);

struct RatioRow {
    int speed = 1;
    Rational algorithm;
    Rational optimum;
    bool optimum_exact = true;
    Rational ratio;
    std::optional<Rational> bound;
    std::string bound_source;
};

/// Competitive bound applicable to LF_s for the spec, if any: 90 for flow time and delay
/// factor at s = 5, the four-speed constant at s = 4, otherwise m(rho)/(1 - delta) with
/// delta = rho / (s h(beta) (rho (1 - beta) - 1)) when delta < 1.
std::optional<std::pair<Rational, std::string>> theorem_bound(const PenaltySpec& spec, int speed,
                                                              const AnalysisConfig& config);

/// objective(LF_s) / objective(OPT_1) per speed, next to the applicable bound.
std::vector<RatioRow> theorem_ratio_report(const Trace& trace, const PenaltySpec& spec,
                                           const std::vector<int>& speeds, const AnalysisConfig& config,
                                           const OptOptions& options = {});

}  // namespace bcast
