#pragma once

#include "disc/instance.hpp"

#include <optional>
#include <random>

namespace disc {

using Rng = std::mt19937_64;

/// lo + rng() % (hi - lo + 1); portable across standard libraries, unlike the distributions.
Coord uniform(Rng& rng, Coord lo, Coord hi);

struct Random1DSpec {
    std::size_t n = 8;
    std::size_t m = 12;
    bool unit = false;
    bool twin_free = true;  // resample until the instance is twin-free
    Coord scale = 16;
};

/// Points on even coordinates, interval ends on distinct odd ones (general position).
/// Throws std::runtime_error if no twin-free sample turns up after many attempts.
Instance1D random_1d(Rng& rng, const Random1DSpec& spec);

struct Random2DSpec {
    std::size_t n = 6;
    std::optional<std::size_t> squares;  // discrete when set
    bool twin_free = true;
    Coord scale = 8;
};

/// Distinct points on even coordinates in a square of side about sqrt(n) units; discrete squares
/// are centered at odd offsets from random points, so each covers something and no point lies on
/// a square edge. Needs scale >= 4.
Instance2D random_2d(Rng& rng, const Random2DSpec& spec);

} // namespace disc
