#pragma once

#include "bcast/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bcast {

/// Bipartite graph between a left list X and a right list Y of events. `left` and
/// `right` hold indices into the caller's event list; edges use positions in those lists.
struct ChargingGraph {
    using Edge = std::pair<std::size_t, std::size_t>;

    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    std::vector<Edge> edges;

    /// Graph on plain vertices 0..left_size-1 and 0..right_size-1.
    static ChargingGraph plain(std::size_t left_size, std::size_t right_size, std::vector<Edge> edges);

    /// Right-side neighbour count of each left vertex.
    [[nodiscard]] std::vector<std::size_t> degrees() const;
    /// Throws std::invalid_argument on out-of-range or duplicate edges.
    void validate() const;
};

/// Fractional assignment of each left vertex's unit charge over its edges.
struct Covering {
    std::map<ChargingGraph::Edge, Rational> weights;
    Rational c;
};

struct HallResult {
    bool holds = false;
    /// Left positions S with |N(S)| < |S| / c when the condition fails; empty otherwise.
    std::vector<std::size_t> violating_subset;
    /// Flow obtained on the scaled network; equals |X| * den(c) iff the condition holds.
    Rational max_flow;
};

/// Decides |N(S)| >= |S| / c for every S within X via max flow: source -> u (capacity 1),
/// u -> v (unbounded), v -> sink (capacity c). Requires c > 0.
HallResult hall_condition_holds(const ChargingGraph& graph, const Rational& c);

class ConditionFails : public std::runtime_error {
public:
    ConditionFails(const std::string& what, std::vector<std::size_t> subset)
        : std::runtime_error(what), subset_(std::move(subset)) {}
    [[nodiscard]] const std::vector<std::size_t>& subset() const { return subset_; }

private:
    std::vector<std::size_t> subset_;
};

/// A c-covering read off a max flow of value |X|. Throws ConditionFails with the
/// violating subset when the fractional Hall condition does not hold.
Covering find_covering(const ChargingGraph& graph, const Rational& c);

/// Definition check by direct summation: each left vertex sums to exactly 1, each right
/// vertex to at most c, every weight in [0, 1] and on an existing edge.
bool is_valid_covering(const ChargingGraph& graph, const Covering& covering);

}  // namespace bcast
