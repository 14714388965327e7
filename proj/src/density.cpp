#include "mg/density.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef MG_HAVE_OPENMP
#include <omp.h>
#endif

namespace mg {
namespace {

std::vector<int> mask_to_subset(uint32_t mask) {
    std::vector<int> s;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1u) s.push_back(v);
    return s;
}

// Vertex-list lexicographic order ({0,3} before {1,2}).
bool mask_lex_less(uint32_t a, uint32_t b) {
    while (a != 0 && b != 0) {
        int la = __builtin_ctz(a);
        int lb = __builtin_ctz(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

struct Candidate {
    Rational value;
    int size = 0;
    uint32_t mask = 0;
    bool valid = false;

    bool better_than(const Candidate& other) const {
        if (!other.valid) return valid;
        if (!valid) return false;
        if (value != other.value) return other.value < value;
        if (size != other.size) return size < other.size;
        return mask_lex_less(mask, other.mask);
    }
};

Candidate scan_range(const Multigraph& g, uint32_t lo, uint32_t hi,
                     const std::vector<std::vector<long long>>& row_lo,
                     const std::vector<std::vector<long long>>& row_hi, int split) {
    const uint32_t lo_mask = (1u << split) - 1;
    int n = g.vertex_count();
    Candidate best;
    for (uint32_t mask = lo; mask < hi; ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2) continue;
        long long twice_edges = 0;
        uint32_t rest = mask;
        for (int v = 0; rest != 0; ++v, rest >>= 1) {
            if (!(rest & 1u)) continue;
            twice_edges += row_lo[v][mask & lo_mask];
            if (split < n) twice_edges += row_hi[v][mask >> split];
        }
        Candidate c{Rational(twice_edges / 2, size / 2), size, mask, true};
        if (c.better_than(best)) best = c;
    }
    return best;
}

DensityWitness witness_from(const Multigraph& g, const Candidate& c) {
    DensityWitness w;
    w.subset = mask_to_subset(c.mask);
    w.value = c.value;
    long long e = 0;
    for (size_t i = 0; i < w.subset.size(); ++i)
        for (size_t j = i + 1; j < w.subset.size(); ++j)
            e += g.multiplicity(w.subset[i], w.subset[j]);
    w.edges_inside = e;
    return w;
}

DensityWitness empty_witness() {
    DensityWitness w;
    w.value = Rational(0, 1);
    return w;
}

}  // namespace

Rational rho_of_subset(const Multigraph& g, std::span<const int> subset) {
    if (subset.size() < 2) throw std::invalid_argument("rho_of_subset: need at least 2 vertices");
    std::vector<int> s(subset.begin(), subset.end());
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count())
            throw std::invalid_argument("rho_of_subset: vertex out of range");
        if (i > 0 && s[i] == s[i - 1])
            throw std::invalid_argument("rho_of_subset: duplicate vertex");
    }
    long long e = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) e += g.multiplicity(s[i], s[j]);
    return Rational(e, static_cast<long long>(s.size()) / 2);
}

DensityWitness rho_exact_serial(const Multigraph& g, int exhaustive_bound) {
    int n = g.vertex_count();
    if (n > exhaustive_bound)
        throw ExhaustiveBoundExceeded("rho_exact: vertex count above exhaustive bound, use rho_fast");
    if (n < 2) return empty_witness();

    Candidate best;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2) continue;
        long long e = 0;
        uint32_t rest = mask;
        while (rest != 0) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            uint32_t rest2 = rest;
            while (rest2 != 0) {
                int u = __builtin_ctz(rest2);
                rest2 &= rest2 - 1;
                e += g.multiplicity(v, u);
            }
        }
        Candidate c{Rational(e, size / 2), size, mask, true};
        if (c.better_than(best)) best = c;
    }
    return witness_from(g, best);
}

DensityWitness rho_exact(const Multigraph& g, int exhaustive_bound) {
    int n = g.vertex_count();
    if (n > exhaustive_bound)
        throw ExhaustiveBoundExceeded("rho_exact: vertex count above exhaustive bound, use rho_fast");
    if (n < 2) return empty_witness();

    // Per-vertex half-mask degree tables; e(S) = sum of in-subset degrees / 2.
    int split = std::min(n, 11);
    std::vector<std::vector<long long>> row_lo(n), row_hi(n);
    for (int v = 0; v < n; ++v) {
        row_lo[v].assign(1u << split, 0);
        for (uint32_t m = 1; m < (1u << split); ++m) {
            uint32_t low = m & (m - 1);
            int u = __builtin_ctz(m);
            row_lo[v][m] = row_lo[v][low] + g.multiplicity(v, u);
        }
        int hi_bits = n - split;
        row_hi[v].assign(size_t{1} << std::max(hi_bits, 0), 0);
        for (uint32_t m = 1; m < (1u << hi_bits); ++m) {
            uint32_t low = m & (m - 1);
            int u = split + __builtin_ctz(m);
            row_hi[v][m] = row_hi[v][low] + g.multiplicity(v, u);
        }
    }

    const uint32_t total = 1u << n;
    Candidate best;
#ifdef MG_HAVE_OPENMP
    if (n >= 16) {
        int chunks = std::max(1, omp_get_max_threads() * 4);
        std::vector<Candidate> results(chunks);
        uint32_t step = (total + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic)
        for (int c = 0; c < chunks; ++c) {
            uint32_t lo = step * static_cast<uint32_t>(c);
            uint32_t hi = std::min(total, lo + step);
            if (lo < hi) results[c] = scan_range(g, lo, hi, row_lo, row_hi, split);
        }
        for (const Candidate& c : results)
            if (c.better_than(best)) best = c;
        return witness_from(g, best);
    }
#endif
    best = scan_range(g, 0, total, row_lo, row_hi, split);
    return witness_from(g, best);
}

DensityWitness rho_fast(const Multigraph& g) {
    int n = g.vertex_count();
    if (n < 2) return empty_witness();

    std::vector<bool> in(n, true);
    std::vector<long long> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    long long edges = g.edge_count();
    int size = n;

    struct Entry {
        Rational value;
        int size;
        std::vector<int> subset;
        bool valid = false;
    };
    Entry best;
    auto consider = [&](bool force) {
        if (!force && size % 2 == 0) return;  // descent keeps odd sizes only
        Rational v(edges, size / 2);
        std::vector<int> subset;
        for (int x = 0; x < n; ++x)
            if (in[x]) subset.push_back(x);
        bool better = !best.valid || best.value < v || (v == best.value && size < best.size) ||
                      (v == best.value && size == best.size && subset < best.subset);
        if (better) best = Entry{v, size, std::move(subset), true};
    };

    consider(true);  // rho(V) always participates
    while (size > 3) {
        int victim = -1;
        for (int v = 0; v < n; ++v)
            if (in[v] && (victim < 0 || deg[v] < deg[victim])) victim = v;
        in[victim] = false;
        edges -= deg[victim];
        for (int u : g.neighbors(victim))
            if (in[u]) deg[u] -= g.multiplicity(victim, u);
        --size;
        consider(false);
    }

    DensityWitness w;
    w.subset = best.subset;
    w.value = best.value;
    long long e = 0;
    for (size_t i = 0; i < w.subset.size(); ++i)
        for (size_t j = i + 1; j < w.subset.size(); ++j)
            e += g.multiplicity(w.subset[i], w.subset[j]);
    w.edges_inside = e;
    return w;
}

LowerBoundResult lower_bound(const Multigraph& g) {
    DegreeStats s = degree_stats(g);
    LowerBoundResult r;
    if (g.vertex_count() < 2) {
        r.value = s.delta;
        return r;
    }
    DensityWitness w = g.vertex_count() <= kRhoExhaustiveBound ? rho_exact(g) : rho_fast(g);
    long long rho_ceil = w.value.ceil();
    if (rho_ceil > s.delta) {
        r.value = rho_ceil;
        r.from_density = true;
        r.witness = std::move(w);
    } else {
        r.value = s.delta;
        r.from_density = false;
    }
    return r;
}

}  // namespace mg
