#pragma once

#include "bcast/model.hpp"
#include "bcast/rational.hpp"

#include <cstdint>
#include <string>

namespace bcast {

struct GeneratorSpec {
    enum class Kind { UniformRandom, Bursty, Backlogged, PopularitySkew };

    Kind kind = Kind::UniformRandom;
    int pages = 4;
    Time horizon = 10;
    /// Expected requests per slot. For Backlogged: distinct pages requested in every slot.
    Rational intensity{1};
    std::uint64_t seed = 1;
    Time slack_lo = 1;
    Time slack_hi = 1;

    /// Throws std::invalid_argument.
    void validate() const;
    static Kind parse_kind(const std::string& name);
    static std::string kind_name(Kind kind);
};

/// Raw requests; pass through validate_trace. Deterministic in the spec.
std::vector<Request> generate_requests(const GeneratorSpec& spec);

/// Throws TraceError(EmptyTrace) when nothing was generated (e.g. intensity 0).
Trace generate(const GeneratorSpec& spec);

/// 1..max_requests requests on pages 1..max_pages, arrivals in [0, max_arrival], slack in
/// [1, max_slack]. Used for the brute-force-sized suites.
Trace small_random_trace(std::uint64_t seed, int max_pages, int max_requests, Time max_arrival, Time max_slack = 1);

}  // namespace bcast
