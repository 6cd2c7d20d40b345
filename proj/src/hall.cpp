#include "bcast/hall.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <string>

namespace bcast {

namespace {

// Dinic's algorithm on integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(std::size_t n) : adj_(n), level_(n), it_(n) {}

    std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t cap) {
        adj_[from].push_back({to, adj_[to].size(), cap});
        adj_[to].push_back({from, adj_[from].size() - 1, 0});
        return adj_[from].size() - 1;
    }

    std::int64_t run(std::size_t s, std::size_t t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            std::fill(it_.begin(), it_.end(), 0);
            while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += pushed;
        }
        return flow;
    }

    /// Flow on the `idx`-th edge leaving `from`.
    [[nodiscard]] std::int64_t flow_on(std::size_t from, std::size_t idx) const {
        const Arc& a = adj_[from][idx];
        return adj_[a.to][a.rev].cap;
    }

    /// Vertices reachable from s in the residual graph.
    [[nodiscard]] std::vector<bool> reachable(std::size_t s) const {
        std::vector<bool> seen(adj_.size(), false);
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (const Arc& a : adj_[v]) {
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    q.push(a.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        std::size_t to;
        std::size_t rev;
        std::int64_t cap;
    };

    bool bfs(std::size_t s, std::size_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::size_t> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (const Arc& a : adj_[v]) {
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(std::size_t v, std::size_t t, std::int64_t limit) {
        if (v == t) return limit;
        for (std::size_t& i = it_[v]; i < adj_[v].size(); ++i) {
            Arc& a = adj_[v][i];
            if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
            if (std::int64_t d = dfs(a.to, t, std::min(limit, a.cap)); d > 0) {
                a.cap -= d;
                adj_[a.to][a.rev].cap += d;
                return d;
            }
        }
        return 0;
    }

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
};

struct Network {
    MaxFlow flow;
    std::vector<std::size_t> edge_slot;  // index of each graph edge within its left vertex's arcs
    std::int64_t scale = 1;              // den(c)
    std::int64_t value = 0;
    std::vector<std::size_t> violating;
};

std::int64_t fit(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + " of c does not fit in 64 bits");
    return z.get_si();
}

Network solve(const ChargingGraph& graph, const Rational& c) {
    graph.validate();
    if (c.sign() <= 0) throw std::invalid_argument("covering bound c must be positive");

    const std::int64_t num = fit(c.numerator(), "numerator");
    const std::int64_t den = fit(c.denominator(), "denominator");
    const std::size_t nl = graph.left.size();
    const std::size_t nr = graph.right.size();
    const std::size_t source = nl + nr;
    const std::size_t sink = source + 1;
    const std::int64_t unbounded = den * static_cast<std::int64_t>(nl) + 1;

    Network net{MaxFlow(nl + nr + 2), {}, den, 0, {}};
    for (std::size_t u = 0; u < nl; ++u) net.flow.add_edge(source, u, den);
    for (std::size_t v = 0; v < nr; ++v) net.flow.add_edge(nl + v, sink, num);
    net.edge_slot.reserve(graph.edges.size());
    for (const auto& [u, v] : graph.edges) net.edge_slot.push_back(net.flow.add_edge(u, nl + v, unbounded));

    net.value = net.flow.run(source, sink);
    if (net.value < den * static_cast<std::int64_t>(nl)) {
        const std::vector<bool> seen = net.flow.reachable(source);
        for (std::size_t u = 0; u < nl; ++u) {
            if (seen[u]) net.violating.push_back(u);
        }
    }
    return net;
}

}  // namespace

ChargingGraph ChargingGraph::plain(std::size_t left_size, std::size_t right_size, std::vector<Edge> edges) {
    ChargingGraph g;
    for (std::size_t i = 0; i < left_size; ++i) g.left.push_back(i);
    for (std::size_t i = 0; i < right_size; ++i) g.right.push_back(i);
    g.edges = std::move(edges);
    return g;
}

std::vector<std::size_t> ChargingGraph::degrees() const {
    std::vector<std::size_t> deg(left.size(), 0);
    for (const auto& [u, v] : edges) ++deg[u];
    return deg;
}

void ChargingGraph::validate() const {
    std::set<Edge> seen;
    for (const auto& e : edges) {
        if (e.first >= left.size() || e.second >= right.size()) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
    }
}

HallResult hall_condition_holds(const ChargingGraph& graph, const Rational& c) {
    Network net = solve(graph, c);
    HallResult result;
    result.holds = net.violating.empty();
    result.violating_subset = std::move(net.violating);
    result.max_flow = Rational(net.value) / Rational(net.scale);
    return result;
}

Covering find_covering(const ChargingGraph& graph, const Rational& c) {
    Network net = solve(graph, c);
    if (!net.violating.empty()) {
        throw ConditionFails("fractional Hall condition fails for c = " + c.str(), net.violating);
    }
    Covering covering;
    covering.c = c;
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const auto& edge = graph.edges[i];
        const std::int64_t f = net.flow.flow_on(edge.first, net.edge_slot[i]);
        if (f > 0) covering.weights[edge] = Rational(f, net.scale);
    }
    return covering;
}

bool is_valid_covering(const ChargingGraph& graph, const Covering& covering) {
    const std::set<ChargingGraph::Edge> edges(graph.edges.begin(), graph.edges.end());
    std::vector<Rational> left_sum(graph.left.size(), Rational(0));
    std::vector<Rational> right_sum(graph.right.size(), Rational(0));
    for (const auto& [edge, w] : covering.weights) {
        if (!edges.contains(edge)) return false;
        if (w < Rational(0) || w > Rational(1)) return false;
        left_sum[edge.first] += w;
        right_sum[edge.second] += w;
    }
    for (const auto& s : left_sum) {
        if (s != Rational(1)) return false;
    }
    for (const auto& s : right_sum) {
        if (s > covering.c) return false;
    }
    return true;
}

}  // namespace bcast
