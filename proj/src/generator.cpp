#include "bcast/generator.hpp"

#include "bcast/random.hpp"

#include <numeric>
#include <stdexcept>

namespace bcast {

void GeneratorSpec::validate() const {
    if (pages < 1) throw std::invalid_argument("pages must be >= 1");
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (intensity.sign() < 0) throw std::invalid_argument("intensity must be >= 0");
    if (slack_lo < 1 || slack_hi < slack_lo) throw std::invalid_argument("slack range must satisfy 1 <= lo <= hi");
}

GeneratorSpec::Kind GeneratorSpec::parse_kind(const std::string& name) {
    if (name == "uniform") return Kind::UniformRandom;
    if (name == "bursty") return Kind::Bursty;
    if (name == "backlogged") return Kind::Backlogged;
    if (name == "skew") return Kind::PopularitySkew;
    throw std::invalid_argument("unknown generator kind '" + name + "' (uniform|bursty|backlogged|skew)");
}

std::string GeneratorSpec::kind_name(Kind kind) {
    switch (kind) {
        case Kind::UniformRandom: return "uniform";
        case Kind::Bursty: return "bursty";
        case Kind::Backlogged: return "backlogged";
        case Kind::PopularitySkew: return "skew";
    }
    return "?";
}

namespace {

// floor(x), plus one more with probability frac(x).
std::int64_t draw_count(Xorshift64Star& rng, const Rational& x) {
    const std::int64_t whole = x.floor();
    const Rational frac = x - Rational(whole);
    if (frac.sign() == 0) return whole;
    const auto num = frac.numerator().get_ui();
    const auto den = frac.denominator().get_ui();
    return whole + (rng.chance(num, den) ? 1 : 0);
}

// Page weights ~ 1/i, scaled to integers.
std::vector<std::int64_t> skew_weights(int pages) {
    std::vector<std::int64_t> w(pages);
    for (int i = 0; i < pages; ++i) w[i] = 720720 / (i + 1);
    return w;
}

int weighted_pick(Xorshift64Star& rng, const std::vector<std::int64_t>& w) {
    const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    std::int64_t x = rng.uniform(0, total - 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (x < w[i]) return static_cast<int>(i);
        x -= w[i];
    }
    return static_cast<int>(w.size()) - 1;
}

}  // namespace

std::vector<Request> generate_requests(const GeneratorSpec& spec) {
    spec.validate();
    Xorshift64Star rng(spec.seed);
    std::vector<Request> out;
    auto add = [&](PageId page, Time t) {
        out.push_back({page, t, t + rng.uniform(spec.slack_lo, spec.slack_hi), 0});
    };
    const auto weights = skew_weights(spec.pages);

    for (Time t = 0; t < spec.horizon; ++t) {
        switch (spec.kind) {
            case GeneratorSpec::Kind::UniformRandom: {
                const auto k = draw_count(rng, spec.intensity);
                for (std::int64_t i = 0; i < k; ++i) add(static_cast<PageId>(rng.uniform(1, spec.pages)), t);
                break;
            }
            case GeneratorSpec::Kind::PopularitySkew: {
                const auto k = draw_count(rng, spec.intensity);
                for (std::int64_t i = 0; i < k; ++i) add(weighted_pick(rng, weights) + 1, t);
                break;
            }
            case GeneratorSpec::Kind::Bursty: {
                // A burst in one slot of four on average, four times as large.
                if (!rng.chance(1, 4)) break;
                const auto k = draw_count(rng, spec.intensity * Rational(4));
                const auto hot = static_cast<PageId>(rng.uniform(1, spec.pages));
                for (std::int64_t i = 0; i < k; ++i) {
                    add(rng.chance(1, 2) ? hot : static_cast<PageId>(rng.uniform(1, spec.pages)), t);
                }
                break;
            }
            case GeneratorSpec::Kind::Backlogged: {
                // Distinct pages each slot, drawn by popularity without replacement, so that
                // every slot in [1, horizon] has at least `intensity` pages waiting.
                const std::int64_t k = std::min<std::int64_t>(spec.intensity.ceil(), spec.pages);
                std::vector<std::int64_t> w = weights;
                for (std::int64_t i = 0; i < k; ++i) {
                    const int p = weighted_pick(rng, w);
                    w[p] = 0;
                    add(p + 1, t);
                }
                break;
            }
        }
    }
    return out;
}

Trace generate(const GeneratorSpec& spec) {
    const auto raw = generate_requests(spec);
    return validate_trace(raw);
}

Trace small_random_trace(std::uint64_t seed, int max_pages, int max_requests, Time max_arrival, Time max_slack) {
    Xorshift64Star rng(seed);
    const auto pages = rng.uniform(1, max_pages);
    const auto count = rng.uniform(1, max_requests);
    std::vector<Request> raw;
    for (std::int64_t i = 0; i < count; ++i) {
        const Time a = rng.uniform(0, max_arrival);
        raw.push_back({static_cast<PageId>(rng.uniform(1, pages)), a, a + rng.uniform(1, max_slack), 0});
    }
    return validate_trace(raw);
}

}  // namespace bcast
