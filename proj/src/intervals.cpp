#include "bcast/intervals.hpp"

#include <algorithm>
#include <string>

namespace bcast {

Time interval_measure(const IntervalSet& intervals) {
    IntervalSet sorted;
    sorted.reserve(intervals.size());
    for (const auto& iv : intervals) {
        if (iv.lo <= iv.hi) sorted.push_back(iv);
    }
    std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    Time total = 0;
    Time covered_to = 0;
    bool started = false;
    for (const auto& iv : sorted) {
        if (!started || iv.lo > covered_to) {
            total += iv.length();
            covered_to = iv.hi;
            started = true;
        } else if (iv.hi > covered_to) {
            total += iv.hi - covered_to;
            covered_to = iv.hi;
        }
    }
    return total;
}

IntervalLemmaResult check_interval_lemma(const IntervalSet& whole, const IntervalSet& shrunk,
                                         const Rational& lambda) {
    if (whole.size() != shrunk.size()) {
        throw PreconditionViolated("X and X' must pair up one to one");
    }
    for (std::size_t i = 0; i < whole.size(); ++i) {
        const Interval& x = whole[i];
        const Interval& y = shrunk[i];
        const std::string where = "pair " + std::to_string(i);
        if (x.lo > x.hi) throw PreconditionViolated(where + ": empty interval in X");
        if (y.hi != x.hi) throw PreconditionViolated(where + ": right endpoints differ");
        if (y.lo < x.lo || y.lo > x.hi) throw PreconditionViolated(where + ": s' outside [s, t]");
        if (Rational(y.length()) < lambda * Rational(x.length())) {
            throw PreconditionViolated(where + ": |[s', t]| < lambda |[s, t]|");
        }
    }
    IntervalLemmaResult result;
    result.measure = interval_measure(whole);
    result.shrunk_measure = interval_measure(shrunk);
    result.holds = Rational(result.shrunk_measure) >= lambda * Rational(result.measure);
    return result;
}

}  // namespace bcast
