#include "mg/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mg/density.hpp"

namespace mg {
namespace {

struct Searcher {
    std::vector<EdgeInstance> edges;
    std::vector<uint64_t> used;  // per-vertex colour bitmask
    std::vector<char> done;
    int k = 0;

    // Most-constrained instance first; new colours only in increasing order.
    bool dfs(size_t remaining, int max_used) {
        if (remaining == 0) return true;
        int limit = std::min(k, max_used + 1);
        uint64_t palette = (limit >= 1) ? ((2ULL << limit) - 2) : 0;  // bits 1..limit
        int best = -1, best_count = 65;
        uint64_t best_avail = 0;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (done[i]) continue;
            uint64_t avail = palette & ~(used[edges[i].u] | used[edges[i].v]);
            int count = __builtin_popcountll(avail);
            if (count == 0) return false;
            if (count < best_count) {
                best_count = count;
                best = static_cast<int>(i);
                best_avail = avail;
                if (count == 1) break;
            }
        }
        const EdgeInstance& e = edges[best];
        done[best] = 1;
        for (uint64_t avail = best_avail; avail != 0; avail &= avail - 1) {
            int c = __builtin_ctzll(avail);
            uint64_t bit = 1ULL << c;
            used[e.u] |= bit;
            used[e.v] |= bit;
            if (dfs(remaining - 1, std::max(max_used, c))) return true;
            used[e.u] &= ~bit;
            used[e.v] &= ~bit;
        }
        done[best] = 0;
        return false;
    }
};

}  // namespace

long long exact_chromatic_index(const Multigraph& g, long long max_instances) {
    if (g.edge_count() > max_instances)
        throw std::invalid_argument("exact_chromatic_index: instance count above configured bound");
    if (g.edge_count() == 0) return 0;

    DegreeStats s = degree_stats(g);
    DensityWitness rho = g.vertex_count() <= kRhoExhaustiveBound ? rho_exact(g) : rho_fast(g);
    long long lb = std::max(s.delta, rho.value.ceil());
    long long ub = s.delta + s.mu_max;

    Searcher searcher;
    searcher.edges.reserve(g.edge_count());
    for (long long i = 0; i < g.edge_count(); ++i) searcher.edges.push_back(g.instance(i));

    for (long long k = lb; k <= ub; ++k) {
        if (k > 62) throw std::invalid_argument("exact_chromatic_index: palette above 62 colours");
        searcher.k = static_cast<int>(k);
        searcher.used.assign(g.vertex_count(), 0);
        searcher.done.assign(searcher.edges.size(), 0);
        if (searcher.dfs(searcher.edges.size(), 0)) return k;
    }
    throw std::logic_error("exact_chromatic_index: no colouring below Delta + mu");  // unreachable
}

}  // namespace mg
