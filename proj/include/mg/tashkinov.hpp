#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mg/edge_coloring.hpp"
#include "mg/multigraph.hpp"

namespace mg {

/// Tree grown from an uncoloured root edge: vertices[0], vertices[1] are its
/// endpoints, and edges[i] (i >= 1) is a coloured instance joining
/// vertices[i+1] to an earlier tree vertex, its colour missing at some
/// earlier vertex. edges[0] is the uncoloured root.
struct TashkinovTree {
    std::vector<int> vertices;
    std::vector<long long> edges;

    bool contains(int v) const;
};

/// Grows the maximal tree from uncoloured instance e0 over the coloured part
/// of c, scanning extension candidates by (colour, instance id). Throws if e0
/// is already coloured.
TashkinovTree grow_tashkinov(const Multigraph& g, const EdgeColoring& c, long long e0);

/// True when no extension edge exists (restatement of what grow returns;
/// useful as a test oracle).
bool is_maximal_tree(const Multigraph& g, const EdgeColoring& c, const TashkinovTree& t);

struct ElementaryViolation {
    int color;
    int v1;
    int v2;  // v1 < v2, lexicographically first (colour, then vertex pair)
};

/// A set is elementary when no colour is missing at two of its vertices.
std::optional<ElementaryViolation> elementary_violation(const EdgeColoring& c,
                                                        std::span<const int> vertices);
inline bool is_elementary(const EdgeColoring& c, std::span<const int> vertices) {
    return !elementary_violation(c, vertices).has_value();
}

/// Validates the tree structure and colouring condition (used for the public
/// augmentation entry and in tests).
bool is_valid_tashkinov_tree(const Multigraph& g, const EdgeColoring& c, const TashkinovTree& t,
                             std::string* why = nullptr);

struct AugmentOutcome {
    enum class Status { colored, exhausted };
    Status status;
    EdgeColoring coloring;
    long long switches = 0;
};

/// Thrown when the (G, k, e0, phi, T) input does not satisfy the conditions
/// the recolouring argument needs; the message names the violated condition.
struct IllegalTuple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Recolours via a bounded sequence of alternating-path switches guided by
/// the elementarity violation until e0 can be coloured. Requires a legal
/// tuple: every instance except e0 coloured, d(x)+d(y) <= 2k-2 and
/// d(v) <= k-1 elsewhere, T a valid tree from e0 and `w` a real violation.
/// budget < 0 selects the default 4*k*m switches.
AugmentOutcome augment_tashkinov(const Multigraph& g, const EdgeColoring& c,
                                 const TashkinovTree& t, const ElementaryViolation& w,
                                 long long budget = -1);

/// Thrown by alg_c when the input is not (k,2)-bounded; names the offending
/// vertices.
struct NotKTBounded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AlgCResult {
    enum class Kind { colored, elementary, exhausted };
    Kind kind;
    /// colored: a total k-colouring. elementary: the partial colouring of the
    /// working subgraph (coloured instances plus e0). exhausted: the switch
    /// budget ran out inside an augmentation.
    EdgeColoring coloring;
    long long e0 = -1;
    TashkinovTree tree;  // elementary only; verified before return
    long long switches = 0;
};

/// Greedy colouring with tree-guided recolouring on stuck edges. Requires a
/// (k,2)-bounded input: Delta <= k and at most one vertex of degree > k-2.
/// Either colours G with k colours or stops at a maximal elementary tree in a
/// partial colouring (or reports budget exhaustion).
AlgCResult alg_c(const Multigraph& g, long long k);

/// The edge order alg_c uses: ascending max endpoint degree, instance id as
/// tie break, edges incident to the high-degree vertex (degree >= k-1) last.
std::vector<long long> algc_edge_order(const Multigraph& g, long long k);

}  // namespace mg
