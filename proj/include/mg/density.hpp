#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mg/multigraph.hpp"
#include "mg/rational.hpp"

namespace mg {

/// A vertex subset certifying a density lower bound on the chromatic index:
/// value = e(G[S]) / floor(|S|/2).
struct DensityWitness {
    std::vector<int> subset;  // ascending
    long long edges_inside = 0;
    Rational value;
};

/// Thrown when an exact scan is asked for a graph above its subset budget.
struct ExhaustiveBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational rho_of_subset(const Multigraph& g, std::span<const int> subset);

inline constexpr int kRhoExhaustiveBound = 22;

/// Exact maximum of rho over all subsets of size >= 2 (full 2^n scan).
/// Ties prefer smaller subsets, then the lexicographically smallest vertex
/// list. Throws ExhaustiveBoundExceeded past the bound; use rho_fast there.
DensityWitness rho_exact(const Multigraph& g, int exhaustive_bound = kRhoExhaustiveBound);

/// Plain single-threaded scan, kept as the reference implementation for the
/// parallel kernel behind rho_exact.
DensityWitness rho_exact_serial(const Multigraph& g, int exhaustive_bound = kRhoExhaustiveBound);

/// Greedy lower bound: best of rho(V) and a vertex-deletion descent keeping
/// the best odd-size subset seen. Always a valid lower bound on rho(G).
DensityWitness rho_fast(const Multigraph& g);

struct LowerBoundResult {
    long long value = 0;
    bool from_density = false;  // true when ceil(rho) beats the max degree
    std::optional<DensityWitness> witness;
};

/// max{Delta, ceil(rho)}; exact rho when the subset scan is feasible,
/// otherwise the greedy bound (still a valid lower bound on chi').
LowerBoundResult lower_bound(const Multigraph& g);

}  // namespace mg
