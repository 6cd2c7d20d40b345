#include "bcast/hall.hpp"
#include "bcast/random.hpp"

#include <doctest.h>

#include <bit>
#include <set>

using namespace bcast;

namespace {

using Edges = std::vector<ChargingGraph::Edge>;

bool enumerate_subsets(std::size_t nl, const Edges& edges, const Rational& c) {
    for (std::uint32_t s = 1; s < (1u << nl); ++s) {
        std::uint32_t nbrs = 0;
        for (const auto& [u, v] : edges) {
            if (s >> u & 1u) nbrs |= 1u << v;
        }
        if (c * Rational(std::popcount(nbrs)) < Rational(std::popcount(s))) return false;
    }
    return true;
}

bool sums_ok(std::size_t nl, std::size_t nr, const Edges& edges, const Covering& cov) {
    const std::set<ChargingGraph::Edge> known(edges.begin(), edges.end());
    std::vector<Rational> left(nl), right(nr);
    for (const auto& [e, w] : cov.weights) {
        if (!known.contains(e) || w < Rational(0) || w > Rational(1)) return false;
        left[e.first] += w;
        right[e.second] += w;
    }
    for (const auto& l : left) {
        if (l != Rational(1)) return false;
    }
    for (const auto& r : right) {
        if (r > cov.c) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("charging-analysis") {

TEST_CASE("hall examples") {
    const auto fan = ChargingGraph::plain(1, 2, {{0, 0}, {0, 1}});
    CHECK(hall_condition_holds(fan, Rational(1, 2)).holds);

    const auto funnel = ChargingGraph::plain(2, 1, {{0, 0}, {1, 0}});
    const HallResult r = hall_condition_holds(funnel, Rational(1, 2));
    CHECK_FALSE(r.holds);
    CHECK(r.violating_subset == std::vector<std::size_t>{0, 1});
    CHECK(r.max_flow == Rational(1, 2));
}

TEST_CASE("covering examples") {
    const auto fan = ChargingGraph::plain(1, 2, {{0, 0}, {0, 1}});
    const Covering half = find_covering(fan, Rational(1, 2));
    CHECK(half.weights.at({0, 0}) == Rational(1, 2));
    CHECK(half.weights.at({0, 1}) == Rational(1, 2));
    CHECK(is_valid_covering(fan, half));

    const auto single = ChargingGraph::plain(1, 1, {{0, 0}});
    CHECK(find_covering(single, Rational(1)).weights.at({0, 0}) == Rational(1));

    const auto funnel = ChargingGraph::plain(2, 1, {{0, 0}, {1, 0}});
    try {
        find_covering(funnel, Rational(1, 2));
        FAIL("expected ConditionFails");
    } catch (const ConditionFails& e) {
        CHECK(e.subset().size() == 2);
    }
}

TEST_CASE("graph validation and degenerate graphs") {
    CHECK_THROWS(hall_condition_holds(ChargingGraph::plain(1, 1, {{0, 1}}), Rational(1)));
    CHECK_THROWS(hall_condition_holds(ChargingGraph::plain(1, 1, {{0, 0}, {0, 0}}), Rational(1)));
    CHECK_THROWS(hall_condition_holds(ChargingGraph::plain(1, 1, {{0, 0}}), Rational(0)));
    CHECK(hall_condition_holds(ChargingGraph::plain(0, 3, {}), Rational(1)).holds);
    CHECK_FALSE(hall_condition_holds(ChargingGraph::plain(1, 3, {}), Rational(5)).holds);
    CHECK(ChargingGraph::plain(2, 2, {{0, 0}, {0, 1}, {1, 1}}).degrees() == std::vector<std::size_t>{2, 1});
    // A covering that overloads the right side is rejected.
    Covering bad;
    bad.c = Rational(1, 2);
    bad.weights[{0, 0}] = Rational(1);
    CHECK_FALSE(is_valid_covering(ChargingGraph::plain(1, 1, {{0, 0}}), bad));
}

TEST_CASE("200 random graphs against subset enumeration") {
    Xorshift64Star rng(42);
    const Rational cs[] = {Rational(1, 3), Rational(1, 2), Rational(4, 9), Rational(1), Rational(2), Rational(7, 3)};
    int satisfiable = 0;
    for (int i = 0; i < 200; ++i) {
        const auto nl = static_cast<std::size_t>(rng.uniform(1, 12));
        const auto nr = static_cast<std::size_t>(rng.uniform(1, 12));
        Edges edges;
        for (std::size_t u = 0; u < nl; ++u) {
            for (std::size_t v = 0; v < nr; ++v) {
                if (rng.chance(2, 5)) edges.emplace_back(u, v);
            }
        }
        const Rational c = cs[rng.uniform(0, 5)];
        const auto g = ChargingGraph::plain(nl, nr, edges);
        const bool expected = enumerate_subsets(nl, edges, c);
        const HallResult r = hall_condition_holds(g, c);
        REQUIRE(r.holds == expected);
        if (expected) {
            ++satisfiable;
            const Covering cov = find_covering(g, c);
            CHECK(sums_ok(nl, nr, edges, cov));
            CHECK(is_valid_covering(g, cov));
        } else {
            CHECK_THROWS_AS(find_covering(g, c), ConditionFails);
        }
    }
    CHECK(satisfiable > 20);
    CHECK(satisfiable < 180);
}

}  // TEST_SUITE
