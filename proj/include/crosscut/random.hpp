#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "crosscut/poset.hpp"

namespace crosscut {

using Rng = std::mt19937_64;

/// Largest size accepted by random_poset.
inline constexpr int kRandomPosetCap = 25;

/// Each pair i < j becomes a relation i < j independently with probability
/// `density`; the result is the transitive closure. Identical arguments give
/// identical posets on every platform. Throws BadParams.
Poset random_poset(int n, double density, std::uint64_t seed);

/// Uniform double in [0, 1) from 53 random bits.
double unit_interval(Rng& rng);

/// A random order-preserving map source -> target: randomized depth-first
/// assignment in id order with forward checking. Constant maps always exist,
/// so it never fails for a nonempty target.
std::vector<Element> random_monotone_map(const Poset& source, const Poset& target, Rng& rng);

inline std::vector<Element> random_endomap(const Poset& p, Rng& rng) { return random_monotone_map(p, p, rng); }

}  // namespace crosscut
