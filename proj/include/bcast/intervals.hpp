#pragma once

#include "bcast/model.hpp"
#include "bcast/rational.hpp"

#include <stdexcept>
#include <vector>

namespace bcast {

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct Interval {
    Time lo = 0;
    Time hi = -1;

    [[nodiscard]] Time length() const { return hi >= lo ? hi - lo + 1 : 0; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

using IntervalSet = std::vector<Interval>;

/// Number of distinct integers covered by the union of the intervals.
Time interval_measure(const IntervalSet& intervals);

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct IntervalLemmaResult {
    Time measure = 0;         ///< |X|
    Time shrunk_measure = 0;  ///< |X'|
    bool holds = false;       ///< |X'| >= lambda |X|
};

/// Checks |X'| >= lambda |X| for X' = {[s'_i, t_i]} paired with X = {[s_i, t_i]}.
/// Throws PreconditionViolated unless every pair has s'_i in [s_i, t_i] and
/// |[s'_i, t_i]| >= lambda |[s_i, t_i]|.
IntervalLemmaResult check_interval_lemma(const IntervalSet& whole, const IntervalSet& shrunk,
                                         const Rational& lambda);

}  // namespace bcast
