#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mg/edge_coloring.hpp"
#include "mg/multigraph.hpp"
#include "mg/tashkinov.hpp"

namespace mg {

/// Recolouring engine shared by every colouring strategy: greedy assignment,
/// fan rotation at both endpoints of a stuck edge, and tree-guided
/// alternating-path switches, all under a per-stuck-edge switch budget.
struct EngineOptions {
    /// Kempe switches allowed per stuck edge; < 0 selects 4*k*m.
    long long switch_budget = -1;
    /// Strict mode stops at the first maximal elementary tree (alg_c output).
    /// Tolerant mode treats it as a stall and keeps switching; used by the
    /// dispatcher where the boundedness hypothesis is unavailable.
    bool strict = false;
    /// Seed for the deterministic stall-perturbation sequence.
    uint64_t perturbation_seed = 0x6d67636f6c6f7572ULL;
};

struct EngineResult {
    enum class Status { colored, elementary, exhausted };
    Status status;
    EdgeColoring coloring;
    long long stuck_instance = -1;
    TashkinovTree tree;  // elementary only
    long long switches = 0;
    int stuck_edges = 0;  // edges that needed any recolouring
};

EngineResult kcolor(const Multigraph& g, int k, std::span<const long long> order,
                    const EngineOptions& opt = {});

/// Resumes the stuck-edge machinery on a colouring whose only uncoloured
/// instance is e0.
EngineResult kcolor_continue(const Multigraph& g, const EdgeColoring& start, long long e0,
                             const EngineOptions& opt = {});

/// Default edge order: ascending max endpoint degree, ties by instance id.
std::vector<long long> degree_ascending_order(const Multigraph& g);

}  // namespace mg
