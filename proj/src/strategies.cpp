#include "mg/strategies.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "mg/engine.hpp"
#include "mg/one_factorization.hpp"
#include "mg/tashkinov.hpp"

namespace mg {
namespace {

bool is_simple(const Multigraph& g) { return degree_stats(g).mu_max <= 1; }

bool is_forest(const Multigraph& g) {
    if (degree_stats(g).mu_max > 1) return false;  // a doubled pair is a 2-cycle
    std::vector<int> parent(g.vertex_count(), -2);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (v == parent[u]) continue;
                if (parent[v] != -2) return false;
                parent[v] = u;
                q.push(v);
            }
        }
    }
    return true;
}

/// Edge order that colours each tree edge while its far endpoint is fresh.
std::vector<long long> forest_order(const Multigraph& g) {
    std::vector<long long> order;
    std::vector<char> visited(g.vertex_count(), 0);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (visited[root]) continue;
        visited[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (visited[v]) continue;
                visited[v] = 1;
                order.push_back(g.pair_first_instance(std::min(u, v), std::max(u, v)));
                q.push(v);
            }
        }
    }
    return order;
}

EdgeColoring engine_or_throw(const Multigraph& g, int k) {
    EngineResult res = kcolor(g, k, degree_ascending_order(g));
    if (res.status != EngineResult::Status::colored)
        throw std::logic_error("colouring engine failed at its guaranteed palette");
    return std::move(res.coloring);
}

std::optional<EdgeColoring> try_engine(const Multigraph& g, int k, int* exhaustions) {
    EngineResult res = kcolor(g, k, algc_edge_order(g, k));
    if (res.status == EngineResult::Status::colored) return std::move(res.coloring);
    if (exhaustions && res.status == EngineResult::Status::exhausted) ++*exhaustions;
    return std::nullopt;
}

}  // namespace

bool max_degree_meets_every_cycle(const Multigraph& g) {
    // Equivalent form: the max-degree vertices induce a forest.
    DegreeStats s = degree_stats(g);
    std::vector<int> maxdeg;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == s.delta) maxdeg.push_back(v);
    std::vector<EdgeSpec> edges;
    for (size_t i = 0; i < maxdeg.size(); ++i)
        for (size_t j = i + 1; j < maxdeg.size(); ++j) {
            int c = g.multiplicity(maxdeg[i], maxdeg[j]);
            if (c > 0)
                edges.push_back({static_cast<int>(i), static_cast<int>(j), c});
        }
    return is_forest(Multigraph::build(static_cast<int>(maxdeg.size()), edges));
}

EdgeColoring vizing_color_simple(const Multigraph& g) {
    if (!is_simple(g)) throw std::invalid_argument("vizing_color_simple: input has parallel edges");
    if (g.edge_count() == 0) return EdgeColoring(g, 0);
    int delta = static_cast<int>(degree_stats(g).delta);
    // Delta is reachable whenever max-degree vertices meet every cycle; try
    // it first regardless, the engine often lands it anyway (even cycles).
    if (auto col = try_engine(g, delta, nullptr)) return std::move(*col);
    return engine_or_throw(g, delta + 1);
}

EdgeColoring vizing_color_multi(const Multigraph& g) {
    if (g.edge_count() == 0) return EdgeColoring(g, 0);
    DegreeStats s = degree_stats(g);
    return engine_or_throw(g, static_cast<int>(s.delta) + s.mu_max);
}

namespace {

// Distance between two pairs in the simple support (shared vertex = 0).
int pair_distance(const Multigraph& g, std::pair<int, int> e1, std::pair<int, int> e2, int cap) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    for (int s : {e1.first, e1.second}) {
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == e2.first || u == e2.second) return dist[u];
        if (dist[u] >= cap) continue;
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return cap + 1;
}

}  // namespace

MatchingRemovalResult matching_removal_color(const Multigraph& g) {
    MatchingRemovalResult out;
    DegreeStats s = degree_stats(g);
    if (s.mu_max > 2) {
        out.unmet = "pair multiplicity above 2";
        return out;
    }
    long long delta = s.delta;
    if (g.edge_count() == 0) {
        out.coloring = EdgeColoring(g, 0);
        return out;
    }

    std::vector<std::pair<int, int>> doubled;
    for (auto [u, v] : g.pairs())
        if (g.multiplicity(u, v) == 2) doubled.emplace_back(u, v);
    for (size_t i = 0; i < doubled.size(); ++i)
        for (size_t j = i + 1; j < doubled.size(); ++j)
            if (pair_distance(g, doubled[i], doubled[j], 2) < 3) {
                out.unmet = "doubled pairs closer than distance 3";
                return out;
            }

    std::vector<char> in_f(g.vertex_count(), 0);  // endpoint of F1 or F2
    std::vector<long long> matching;              // one instance per removed edge
    for (auto [u, v] : doubled) {
        matching.push_back(g.instance_id(u, v, 1));
        in_f[u] = in_f[v] = 1;
    }
    // One incident edge per max-degree vertex that the doubled pairs missed.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != delta || in_f[v]) continue;
        int pick = -1;
        for (int u : g.neighbors(v))
            if (!in_f[u]) {
                pick = u;
                break;
            }
        if (pick < 0) {
            out.unmet = "max-degree vertex has no neighbour outside the matching";
            return out;
        }
        matching.push_back(g.instance_id(std::min(v, pick), std::max(v, pick), 0));
        in_f[v] = in_f[pick] = 1;
    }

    // Remainder: everything outside the matching, as a simple graph.
    std::vector<char> removed(g.edge_count(), 0);
    for (long long iid : matching) removed[iid] = 1;
    std::vector<EdgeSpec> rest;
    for (auto [u, v] : g.pairs()) {
        int keep = 0;
        for (int c = 0; c < g.multiplicity(u, v); ++c)
            if (!removed[g.instance_id(u, v, c)]) ++keep;
        if (keep > 1) {
            out.unmet = "remainder is not simple";
            return out;
        }
        if (keep == 1) rest.push_back({u, v, 1});
    }
    Multigraph remainder = Multigraph::build(g.vertex_count(), rest);
    if (degree_stats(remainder).delta != delta - 1) {
        out.unmet = "remainder maximum degree is not Delta-1";
        return out;
    }
    if (!max_degree_meets_every_cycle(remainder)) {
        out.unmet = "remainder max-degree vertices lie on a common cycle";
        return out;
    }

    EdgeColoring rest_col = vizing_color_simple(remainder);
    if (rest_col.colors_used() > delta - 1) {
        out.unmet = "remainder needed more than Delta-1 colours";
        return out;
    }
    EdgeColoring col(g, static_cast<int>(delta));
    for (long long i = 0; i < remainder.edge_count(); ++i) {
        EdgeInstance e = remainder.instance(i);
        // map back to the surviving copy in g
        int copy = removed[g.instance_id(e.u, e.v, 0)] ? 1 : 0;
        col.set(g.instance_id(e.u, e.v, copy), rest_col.color(i));
    }
    for (long long iid : matching) col.set(iid, static_cast<int>(delta));
    out.coloring = std::move(col);
    return out;
}

namespace {

ColoringOutcome finish(EdgeColoring col, long long target_k,
                       const LowerBoundResult& lb, std::string strategy,
                       OutcomeDiagnostics diag = {}) {
    ColoringOutcome out{std::move(col), 0, target_k, lb.value, false, std::move(strategy),
                        std::move(diag)};
    out.colors_used = out.coloring.colors_used();
    out.first_class = out.colors_used == lb.value;
    return out;
}

/// Corollary-style split: colour c copies of K_n by a one-factorization and
/// the remainder by the tree engine at its own maximum degree.
std::optional<EdgeColoring> factorization_route(const Multigraph& g, int c,
                                                const Multigraph& remainder, int* exhaustions) {
    auto classes = one_factorization(g.vertex_count());
    int base_classes = static_cast<int>(classes.size());
    long long rem_delta = degree_stats(remainder).delta;
    int total_k = base_classes * c + static_cast<int>(rem_delta);

    EdgeColoring col(g, total_k);
    std::vector<int> class_of(static_cast<size_t>(g.vertex_count()) * g.vertex_count(), -1);
    for (int t = 0; t < base_classes; ++t)
        for (auto [u, v] : classes[t]) {
            class_of[static_cast<size_t>(u) * g.vertex_count() + v] = t;
            class_of[static_cast<size_t>(v) * g.vertex_count() + u] = t;
        }
    for (auto [u, v] : g.pairs())
        for (int copy = 0; copy < c && copy < g.multiplicity(u, v); ++copy)
            col.set(g.instance_id(u, v, copy),
                    class_of[static_cast<size_t>(u) * g.vertex_count() + v] * c + copy + 1);

    if (remainder.edge_count() == 0) return col;
    EngineResult res = kcolor(remainder, static_cast<int>(rem_delta),
                              algc_edge_order(remainder, rem_delta));
    if (res.status != EngineResult::Status::colored) {
        if (exhaustions && res.status == EngineResult::Status::exhausted) ++*exhaustions;
        return std::nullopt;
    }
    int shift = base_classes * c;
    for (long long i = 0; i < remainder.edge_count(); ++i) {
        EdgeInstance e = remainder.instance(i);
        col.set(g.instance_id(e.u, e.v, e.copy + c), res.coloring.color(i) + shift);
    }
    return col;
}

}  // namespace

ColoringOutcome color_optimal(const Multigraph& g) {
    LowerBoundResult lb = lower_bound(g);
    OutcomeDiagnostics diag;

    if (g.edge_count() == 0) return finish(EdgeColoring(g, 0), 0, lb, "empty");

    DegreeStats s = degree_stats(g);
    long long delta = s.delta;

    if (is_forest(g)) {
        auto [col, stuck] = greedy_color(g, static_cast<int>(delta), forest_order(g));
        if (stuck) throw std::logic_error("forest greedy stuck");  // cannot happen
        return finish(std::move(col), delta, lb, "forest");
    }

    if (is_simple(g)) {
        EdgeColoring col = vizing_color_simple(g);
        return finish(std::move(col), degree_stats(g).delta, lb, "simple-vizing");
    }

    if (MatchingRemovalResult mr = matching_removal_color(g); mr.ok())
        return finish(std::move(*mr.coloring), delta, lb, "matching-removal");

    long long gap = s.delta - s.d2;

    // Gap-gated run at Delta: boundedness makes the engine's hypothesis real.
    if (gap >= std::max<long long>(2, s.mu_max)) {
        AlgCResult r = alg_c(g, delta);
        if (r.kind == AlgCResult::Kind::colored)
            return finish(std::move(r.coloring), delta, lb, "algc-gap", diag);
        if (r.kind == AlgCResult::Kind::exhausted) ++diag.budget_exhaustions;
        diag.notes.push_back("gap-gated run at Delta did not colour");
    }

    // Uniform-complete decomposition when the degree gap dominates the
    // multiplicity spread.
    std::optional<ColoringOutcome> fallback;
    if (gap >= s.mu_max - s.mu_min && s.mu_max - s.mu_min >= 2) {
        auto [c, remainder] = decompose_complete(g);
        if (auto col = factorization_route(g, c, remainder, &diag.budget_exhaustions)) {
            ColoringOutcome out =
                finish(std::move(*col), degree_stats(g).delta, lb, "factorization", diag);
            // Odd n only guarantees Delta + mu_min; keep looking if that is
            // not already optimal.
            if (g.vertex_count() % 2 == 0 || out.colors_used == lb.value) return out;
            fallback = std::move(out);
        }
    }

    // General escalation from the lower bound, tolerant engine.
    long long cap = delta + s.mu_max;
    for (long long k = lb.value; k <= cap; ++k) {
        if (fallback && k >= fallback->colors_used) break;  // fallback already better
        EngineResult res = kcolor(g, static_cast<int>(k), algc_edge_order(g, k));
        if (res.status == EngineResult::Status::colored) {
            std::string tag = k == cap ? "vizing-fallback" : "algc-general";
            return finish(std::move(res.coloring), k, lb, tag, diag);
        }
        if (res.status == EngineResult::Status::exhausted) ++diag.budget_exhaustions;
        if (g.vertex_count() % 2 == 1) diag.second_class = check_second_class_conditions(g, k);
    }
    if (fallback) {
        fallback->diagnostics = diag;
        return std::move(*fallback);
    }
    throw std::logic_error("color_optimal: engine failed below the Vizing cap");
}

}  // namespace mg
