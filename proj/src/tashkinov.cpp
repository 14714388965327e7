#include "mg/tashkinov.hpp"

#include <algorithm>
#include <sstream>

#include "mg/engine.hpp"

namespace mg {

bool TashkinovTree::contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

TashkinovTree grow_tashkinov(const Multigraph& g, const EdgeColoring& c, long long e0) {
    if (c.color(e0) != 0)
        throw std::invalid_argument("grow_tashkinov: root edge must be uncoloured");
    const int k = c.k();
    EdgeInstance root = g.instance(e0);

    TashkinovTree t;
    t.vertices = {root.u, root.v};
    t.edges = {e0};

    std::vector<char> in_tree(g.vertex_count(), 0);
    std::vector<char> missing_somewhere(k + 1, 0);
    auto absorb = [&](int v) {
        in_tree[v] = 1;
        for (int col = 1; col <= k; ++col)
            if (c.missing(v, col)) missing_somewhere[col] = 1;
    };
    absorb(root.u);
    absorb(root.v);

    // coloured instances bucketed by colour; scan order is (colour, id)
    std::vector<std::vector<long long>> by_color(k + 1);
    for (long long i = 0; i < g.edge_count(); ++i)
        if (c.color(i) != 0) by_color[c.color(i)].push_back(i);

    bool grew = true;
    while (grew) {
        grew = false;
        for (int col = 1; col <= k && !grew; ++col) {
            if (!missing_somewhere[col]) continue;
            for (long long iid : by_color[col]) {
                EdgeInstance e = g.instance(iid);
                int inside = in_tree[e.u] + in_tree[e.v];
                if (inside != 1) continue;
                int w = in_tree[e.u] ? e.v : e.u;
                t.vertices.push_back(w);
                t.edges.push_back(iid);
                absorb(w);
                grew = true;
                break;
            }
        }
    }
    return t;
}

bool is_maximal_tree(const Multigraph& g, const EdgeColoring& c, const TashkinovTree& t) {
    std::vector<char> in_tree(g.vertex_count(), 0);
    for (int v : t.vertices) in_tree[v] = 1;
    std::vector<char> missing_somewhere(c.k() + 1, 0);
    for (int v : t.vertices)
        for (int col = 1; col <= c.k(); ++col)
            if (c.missing(v, col)) missing_somewhere[col] = 1;
    for (long long i = 0; i < g.edge_count(); ++i) {
        int col = c.color(i);
        if (col == 0 || !missing_somewhere[col]) continue;
        EdgeInstance e = g.instance(i);
        if (in_tree[e.u] + in_tree[e.v] == 1) return false;
    }
    return true;
}

std::optional<ElementaryViolation> elementary_violation(const EdgeColoring& c,
                                                        std::span<const int> vertices) {
    std::vector<int> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    for (int col = 1; col <= c.k(); ++col) {
        int first = -1;
        for (int v : vs) {
            if (!c.missing(v, col)) continue;
            if (first < 0) {
                first = v;
            } else {
                return ElementaryViolation{col, first, v};
            }
        }
    }
    return std::nullopt;
}

bool is_valid_tashkinov_tree(const Multigraph& g, const EdgeColoring& c, const TashkinovTree& t,
                             std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (t.vertices.size() < 2 || t.edges.size() + 1 != t.vertices.size())
        return fail("tree shape: need q+1 vertices and q edges");
    std::vector<int> sorted = t.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("tree vertices must be distinct");
    if (c.color(t.edges[0]) != 0) return fail("root edge must be uncoloured");
    EdgeInstance root = g.instance(t.edges[0]);
    if (!((root.u == t.vertices[0] && root.v == t.vertices[1]) ||
          (root.v == t.vertices[0] && root.u == t.vertices[1])))
        return fail("root edge must join the first two vertices");

    std::vector<char> missing_somewhere(c.k() + 1, 0);
    auto absorb = [&](int v) {
        for (int col = 1; col <= c.k(); ++col)
            if (c.missing(v, col)) missing_somewhere[col] = 1;
    };
    absorb(t.vertices[0]);
    absorb(t.vertices[1]);
    for (size_t i = 1; i < t.edges.size(); ++i) {
        int col = c.color(t.edges[i]);
        if (col == 0) return fail("non-root tree edge is uncoloured");
        if (!missing_somewhere[col])
            return fail("tree edge colour not missing at any earlier vertex");
        EdgeInstance e = g.instance(t.edges[i]);
        int next = t.vertices[i + 1];
        int other = (e.u == next) ? e.v : (e.v == next ? e.u : -1);
        if (other < 0) return fail("tree edge does not touch its new vertex");
        bool other_earlier = false;
        for (size_t j = 0; j <= i && !other_earlier; ++j) other_earlier = t.vertices[j] == other;
        if (!other_earlier) return fail("tree edge must join an earlier vertex");
        absorb(next);
    }
    return true;
}

namespace {

long long default_budget(const Multigraph& g, int k) { return 4LL * k * g.edge_count(); }

}  // namespace

AugmentOutcome augment_tashkinov(const Multigraph& g, const EdgeColoring& c,
                                 const TashkinovTree& t, const ElementaryViolation& w,
                                 long long budget) {
    if (t.edges.empty()) throw IllegalTuple("augment: empty tree");
    long long e0 = t.edges[0];
    EdgeInstance root = g.instance(e0);
    const int k = c.k();

    for (long long i = 0; i < g.edge_count(); ++i)
        if (i != e0 && c.color(i) == 0)
            throw IllegalTuple("augment: phi must colour every edge except e0");
    DegreeStats s = degree_stats(g);
    if (s.delta > k) throw IllegalTuple("augment: Delta(G) <= k violated");
    if (g.degree(root.u) + g.degree(root.v) > 2LL * k - 2)
        throw IllegalTuple("augment: d(x)+d(y) <= 2k-2 violated");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != root.u && v != root.v && g.degree(v) > k - 1)
            throw IllegalTuple("augment: d(v) <= k-1 violated off the root edge");
    std::string why;
    if (!is_valid_tashkinov_tree(g, c, t, &why)) throw IllegalTuple("augment: " + why);
    if (w.v1 == w.v2 || !t.contains(w.v1) || !t.contains(w.v2) || w.color < 1 || w.color > k ||
        !c.missing(w.v1, w.color) || !c.missing(w.v2, w.color))
        throw IllegalTuple("augment: witness does not prove an elementarity violation");

    if (budget < 0) budget = default_budget(g, k);

    // Degenerate violation: the root endpoints share the missing colour.
    if (c.missing(root.u, w.color) && c.missing(root.v, w.color)) {
        AugmentOutcome out{AugmentOutcome::Status::colored, c, 0};
        out.coloring.set(e0, w.color);
        return out;
    }

    // Re-run the engine's stuck-edge machinery on this single edge by
    // continuing from the given colouring.
    EngineOptions opt;
    opt.switch_budget = budget;
    EngineResult res = kcolor_continue(g, c, e0, opt);
    AugmentOutcome out{res.status == EngineResult::Status::colored
                           ? AugmentOutcome::Status::colored
                           : AugmentOutcome::Status::exhausted,
                       std::move(res.coloring), res.switches};
    return out;
}

std::vector<long long> algc_edge_order(const Multigraph& g, long long k) {
    int heavy = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= k - 1 && (heavy < 0 || g.degree(v) > g.degree(heavy))) heavy = v;
    std::vector<long long> order(g.edge_count());
    for (long long i = 0; i < g.edge_count(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](long long a, long long b) {
        EdgeInstance ea = g.instance(a), eb = g.instance(b);
        bool ha = heavy >= 0 && (ea.u == heavy || ea.v == heavy);
        bool hb = heavy >= 0 && (eb.u == heavy || eb.v == heavy);
        if (ha != hb) return hb;  // heavy-vertex edges last
        long long da = std::max(g.degree(ea.u), g.degree(ea.v));
        long long db = std::max(g.degree(eb.u), g.degree(eb.v));
        if (da != db) return da < db;
        return a < b;
    });
    return order;
}

AlgCResult alg_c(const Multigraph& g, long long k) {
    if (k < 1) throw std::invalid_argument("alg_c: k must be positive");
    std::vector<int> offenders;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > k - 2) offenders.push_back(v);
    bool bounded = degree_stats(g).delta <= k && offenders.size() <= 1;
    if (!bounded) {
        std::ostringstream msg;
        msg << "alg_c: input is not (k,2)-bounded for k=" << k << "; offending vertices:";
        for (int v : offenders) msg << ' ' << v;
        throw NotKTBounded(msg.str());
    }

    EngineOptions opt;
    opt.strict = true;
    std::vector<long long> order = algc_edge_order(g, k);
    EngineResult res = kcolor(g, static_cast<int>(k), order, opt);

    AlgCResult out{AlgCResult::Kind::colored, std::move(res.coloring), res.stuck_instance,
                   std::move(res.tree), res.switches};
    switch (res.status) {
        case EngineResult::Status::colored:
            out.kind = AlgCResult::Kind::colored;
            break;
        case EngineResult::Status::elementary: {
            out.kind = AlgCResult::Kind::elementary;
            std::string why;
            if (!is_valid_tashkinov_tree(g, out.coloring, out.tree, &why) ||
                !is_elementary(out.coloring, out.tree.vertices) ||
                !is_maximal_tree(g, out.coloring, out.tree))
                throw std::logic_error("alg_c: produced tree failed verification: " + why);
            break;
        }
        case EngineResult::Status::exhausted:
            out.kind = AlgCResult::Kind::exhausted;
            break;
    }
    return out;
}

}  // namespace mg
