#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace crosscut {

struct CheckOptions {
  int seeds = 200;
  int max_size = 9;
  std::uint64_t base_seed = 20240611;
  /// Self-maps visited exhaustively (in lexicographic order) per poset...
  int exhaustive_maps = 400;
  /// ...plus this many random ones when the exhaustive budget runs out.
  int random_maps = 100;
};

struct SuiteResult {
  std::string id;    // "a", "b", ...
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string failure;  // first counterexample, empty when passed
};

/// Runs every property suite over `options.seeds` random posets with
/// 1..max_size elements. The suites, by id:
///   a  every Gamma(P,X) node B is a component of st(I_X(B))
///   b  min_containing agrees with the brute-force minimum
///   c  D(P^op) = U(P)^op and C(P^op) = C(P)^op, node for node
///   d  induced maps are order-preserving and contain the pointwise images
///   e  a fixed point of f gives a fixed node of D(f)
///   f  a fixed node with the fixed point property contains a fixed point of f
///   g  dismantlable posets have the fixed point property
///   h  removing an irreducible point preserves the fixed point property both ways
///   i  the join hypothesis on minimal elements gives some x with f(x) >= x
///   j  C(P) is a valid partial order; D/U disjointness characterisation
///   k  pipeline_fpp never contradicts has_fpp
///   l  Abian-Brown iteration lands on a fixed point above its start
std::vector<SuiteResult> run_theorem_checks(const CheckOptions& options);

}  // namespace crosscut
