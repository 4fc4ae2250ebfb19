#pragma once

#include "nilgeom/serialize.hpp"

#include <cstdint>
#include <string>

namespace nilgeom {

// Forge a germ from a command payload. Payloads either give explicit data
// (seed forms, potential, base metric) or ask for a random draw with
// {"shape": ..., "random": {"degree": k}}.
MetricGerm forge_from_spec(const std::string& kind, const json& payload, std::uint64_t seed);

struct RoundtripResult {
    MetricGerm germ;
    VerificationReport report;
    int draws = 1;               // forging attempts used
    bool generic = true;         // holonomy dim reached commutant dim
    bool json_roundtrip = false; // germ survives serialization unchanged
};

// forge + verify; random payloads are redrawn (at most 3 extra draws) while the
// holonomy span is smaller than the commutant.
RoundtripResult forge_and_verify(const std::string& kind, const json& payload, std::uint64_t seed, int points,
                                 int holonomy_order);

// Invariants of a (N, g) pair: shape, characteristic signatures, global
// signature; the type of "structures" when given.
json classify_pair(const json& payload);

} // namespace nilgeom
