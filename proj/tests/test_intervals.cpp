#include "bcast/intervals.hpp"
#include "bcast/random.hpp"

#include <doctest.h>

#include <set>

using namespace bcast;

TEST_SUITE("charging-analysis") {

TEST_CASE("interval lemma examples") {
    const auto one = check_interval_lemma({{0, 9}}, {{5, 9}}, Rational(1, 2));
    CHECK(one.measure == 10);
    CHECK(one.shrunk_measure == 5);
    CHECK(one.holds);

    const auto nested = check_interval_lemma({{0, 9}, {6, 9}}, {{5, 9}, {8, 9}}, Rational(1, 2));
    CHECK(nested.measure == 10);
    CHECK(nested.shrunk_measure == 5);
    CHECK(nested.holds);
}

TEST_CASE("interval measure") {
    CHECK(interval_measure({}) == 0);
    CHECK(interval_measure({{3, 2}}) == 0);
    CHECK(interval_measure({{0, 0}, {1, 1}}) == 2);
    CHECK(interval_measure({{5, 9}, {0, 3}, {2, 6}}) == 10);
}

TEST_CASE("precondition violations are not failures") {
    CHECK_THROWS_AS(check_interval_lemma({{0, 9}}, {{6, 9}}, Rational(1, 2)), PreconditionViolated);
    CHECK_THROWS_AS(check_interval_lemma({{0, 9}}, {{5, 8}}, Rational(1, 2)), PreconditionViolated);
    CHECK_THROWS_AS(check_interval_lemma({{2, 9}}, {{1, 9}}, Rational(1, 2)), PreconditionViolated);
    CHECK_THROWS_AS(check_interval_lemma({{0, 9}}, {}, Rational(1, 2)), PreconditionViolated);
}

TEST_CASE("random families against direct counting") {
    Xorshift64Star rng(5);
    const Rational lambdas[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    for (int i = 0; i < 10000; ++i) {
        const Rational lambda = lambdas[rng.uniform(0, 2)];
        IntervalSet x, y;
        std::set<Time> ux, uy;
        for (std::int64_t k = rng.uniform(1, 6); k > 0; --k) {
            const Time s = rng.uniform(0, 30);
            const Time t = s + rng.uniform(0, 10);
            const Time keep = (lambda * Rational(t - s + 1)).ceil();
            const Time s2 = rng.uniform(s, t - keep + 1);
            x.push_back({s, t});
            y.push_back({s2, t});
            for (Time u = s; u <= t; ++u) ux.insert(u);
            for (Time u = s2; u <= t; ++u) uy.insert(u);
        }
        const auto r = check_interval_lemma(x, y, lambda);
        REQUIRE(r.measure == static_cast<Time>(ux.size()));
        REQUIRE(r.shrunk_measure == static_cast<Time>(uy.size()));
        REQUIRE(r.holds);
    }
}

}  // TEST_SUITE
