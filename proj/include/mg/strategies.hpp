#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mg/density.hpp"
#include "mg/edge_coloring.hpp"
#include "mg/multigraph.hpp"
#include "mg/second_class.hpp"

namespace mg {

/// Proper colouring of a simple graph with at most Delta+1 colours; exactly
/// Delta whenever every cycle contains a vertex of degree below Delta
/// (checked), and opportunistically Delta in other cases the engine can
/// reach. Rejects multigraph input.
EdgeColoring vizing_color_simple(const Multigraph& g);

/// Universal fallback: proper colouring with at most Delta + mu_max colours.
EdgeColoring vizing_color_multi(const Multigraph& g);

/// True when the subgraph induced by the maximum-degree vertices is a forest
/// (equivalently: every cycle contains a vertex of degree < Delta).
bool max_degree_meets_every_cycle(const Multigraph& g);

struct MatchingRemovalResult {
    std::optional<EdgeColoring> coloring;  // exactly Delta colours when set
    std::string unmet;                     // failed precondition, when empty()
    bool ok() const { return coloring.has_value(); }
};

/// Sparse-regime strategy: pull one copy of each doubled pair and one edge
/// per remaining max-degree vertex into a matching, colour the simple
/// remainder with Delta-1 colours, give the matching colour Delta. Every
/// precondition is checked; any failure is reported for the caller to fall
/// back.
MatchingRemovalResult matching_removal_color(const Multigraph& g);

struct OutcomeDiagnostics {
    int budget_exhaustions = 0;
    std::vector<std::string> notes;
    /// Condition subset for the last rejected palette, odd n only.
    std::optional<SecondClassConditions> second_class;
};

struct ColoringOutcome {
    EdgeColoring coloring;
    long long colors_used = 0;
    long long target_k = 0;
    long long lower_bound = 0;
    bool first_class = false;
    std::string strategy;
    OutcomeDiagnostics diagnostics;
};

/// Strategy dispatcher. Tries, in order: forest, simple-graph fans,
/// matching removal, gap-gated tree engine at Delta, uniform-complete
/// decomposition, and palette escalation from the lower bound (capped at
/// Delta + mu_max). Always returns a proper total colouring.
ColoringOutcome color_optimal(const Multigraph& g);

}  // namespace mg
