#include "mg/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "mg/rng.hpp"

namespace mg {
namespace {

uint64_t mix64(uint64_t x) { return SplitMix64::finalize(x + 0x9e3779b97f4a7c15ULL); }

// Fan of distinct coloured instances at pivot p, starting from the stuck
// instance e0 = (p, q). Witness colours live at p, so they are pairwise
// distinct; far-end vertices may repeat (parallel edges need that).
struct Fan {
    std::vector<long long> inst;  // inst[0] = e0
    std::vector<int> far;         // far[i] = endpoint of inst[i] opposite p
};

// Shifts colours down the fan prefix [0..j] and writes `final_color` on
// inst[j]. Caller guarantees the shift is proper.
void rotate_prefix(EdgeColoring& col, const Fan& fan, size_t j, int final_color) {
    std::vector<int> shifted(j + 1);
    for (size_t i = 1; i <= j; ++i) shifted[i] = col.color(fan.inst[i]);
    for (size_t i = 1; i <= j; ++i) col.set(fan.inst[i], 0);
    for (size_t i = 1; i <= j; ++i) col.set(fan.inst[i - 1], shifted[i]);
    col.set(fan.inst[j], final_color);
}

// One fan attempt at pivot p. Performs at most one Kempe switch (only when
// budget allows). Returns true when e0 ended up coloured.
bool fan_resolve(const Multigraph& g, EdgeColoring& col, long long e0, int p, int q,
                 long long& switches, long long budget) {
    const int k = col.k();
    Fan fan;
    fan.inst.push_back(e0);
    fan.far.push_back(q);

    auto in_fan = [&](long long iid) {
        return std::find(fan.inst.begin(), fan.inst.end(), iid) != fan.inst.end();
    };

    // Build maximally; finish on the spot if a far-end colour is also
    // missing at the pivot.
    while (true) {
        int z = fan.far.back();
        bool extended = false;
        for (int beta = 1; beta <= k; ++beta) {
            if (!col.missing(z, beta)) continue;
            if (col.missing(p, beta)) {
                rotate_prefix(col, fan, fan.inst.size() - 1, beta);
                return true;
            }
            long long w = col.instance_at(p, beta);
            if (w < 0 || in_fan(w)) continue;
            EdgeInstance e = g.instance(w);
            fan.inst.push_back(w);
            fan.far.push_back(e.u == p ? e.v : e.u);
            extended = true;
            break;
        }
        if (!extended) break;
    }

    int d = col.lowest_missing(fan.far.back());
    int alpha = col.lowest_missing(p);
    if (d == 0 || alpha == 0 || alpha == d) return false;
    if (switches >= budget) return false;
    col.kempe_switch_inplace(p, alpha, d);
    ++switches;
    if (!col.missing(p, d)) return false;

    // After the switch only alpha/d membership moved. Find the first fan
    // vertex now missing d whose prefix still shifts properly.
    for (size_t j = 0; j < fan.far.size(); ++j) {
        if (!col.missing(fan.far[j], d)) continue;
        bool valid = true;
        for (size_t i = 1; i <= j && valid; ++i) {
            int ci = col.color(fan.inst[i]);
            valid = ci != 0 && col.missing(fan.far[i - 1], ci);
        }
        if (!valid) continue;
        rotate_prefix(col, fan, j, d);
        return true;
    }
    return false;
}

struct StuckContext {
    uint64_t perturb_state;
    long long iter = 0;
};

std::vector<int> missing_colors(const EdgeColoring& col, int v) {
    std::vector<int> out;
    for (int c = 1; c <= col.k(); ++c)
        if (col.missing(v, c)) out.push_back(c);
    return out;
}

// One violation-guided switch. Tries to drive the doubly-missing colour
// towards the root endpoints; choices rotate with the iteration counter so a
// deterministic engine cannot lock into a two-step cycle.
bool guided_step(EdgeColoring& col, int x, int y, const ElementaryViolation& viol, long long iter,
                 long long& switches) {
    int alpha = viol.color;
    bool ax = col.missing(x, alpha);
    bool ay = col.missing(y, alpha);
    if (ax || ay) {
        int o = ax ? y : x;  // alpha present here; flip its chain away
        std::vector<int> gs = missing_colors(col, o);
        if (gs.empty()) return false;
        int gamma = gs[iter % gs.size()];
        col.kempe_switch_inplace(o, alpha, gamma);
        ++switches;
        return true;
    }
    int target = (iter % 2 == 0) ? x : y;
    std::vector<int> gs = missing_colors(col, target);
    if (gs.empty()) {
        target = (target == x) ? y : x;
        gs = missing_colors(col, target);
        if (gs.empty()) return false;
    }
    int gamma = gs[(iter / 2) % gs.size()];
    int donor = (iter % 4 < 2) ? viol.v2 : viol.v1;
    if (gamma == alpha) return false;
    col.kempe_switch_inplace(donor, alpha, gamma);
    ++switches;
    return true;
}

void perturb(EdgeColoring& col, StuckContext& ctx, long long& switches) {
    int n = col.graph().vertex_count();
    int k = col.k();
    if (n == 0 || k < 2) return;
    uint64_t r = mix64(ctx.perturb_state++);
    int v = static_cast<int>(r % static_cast<uint64_t>(n));
    int a = 1 + static_cast<int>((r >> 16) % static_cast<uint64_t>(k));
    int b = 1 + static_cast<int>((r >> 40) % static_cast<uint64_t>(k));
    if (a == b) return;
    col.kempe_switch_inplace(v, a, b);
    ++switches;
}

enum class StuckOutcome { colored, elementary, exhausted };

StuckOutcome resolve_stuck(const Multigraph& g, EdgeColoring& col, long long e0,
                           const EngineOptions& opt, long long budget, long long& switches,
                           TashkinovTree& tree_out, StuckContext& ctx) {
    EdgeInstance e = g.instance(e0);
    const int x = e.u, y = e.v;
    long long iter_cap = 2 * budget + 64;
    for (long long iter = 0; iter < iter_cap; ++iter) {
        int c = col.lowest_common_missing(x, y);
        if (c != 0) {
            col.set(e0, c);
            return StuckOutcome::colored;
        }
        if (fan_resolve(g, col, e0, x, y, switches, budget)) return StuckOutcome::colored;
        if (fan_resolve(g, col, e0, y, x, switches, budget)) return StuckOutcome::colored;
        if (switches >= budget) return StuckOutcome::exhausted;
        TashkinovTree t = grow_tashkinov(g, col, e0);
        auto viol = elementary_violation(col, t.vertices);
        if (!viol) {
            if (opt.strict) {
                tree_out = std::move(t);
                return StuckOutcome::elementary;
            }
            perturb(col, ctx, switches);
        } else if (!guided_step(col, x, y, *viol, iter, switches)) {
            perturb(col, ctx, switches);
        }
        if (switches >= budget) return StuckOutcome::exhausted;
    }
    return StuckOutcome::exhausted;
}

}  // namespace

std::vector<long long> degree_ascending_order(const Multigraph& g) {
    std::vector<long long> order(g.edge_count());
    for (long long i = 0; i < g.edge_count(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](long long a, long long b) {
        EdgeInstance ea = g.instance(a), eb = g.instance(b);
        long long da = std::max(g.degree(ea.u), g.degree(ea.v));
        long long db = std::max(g.degree(eb.u), g.degree(eb.v));
        if (da != db) return da < db;
        return a < b;
    });
    return order;
}

EngineResult kcolor_continue(const Multigraph& g, const EdgeColoring& start, long long e0,
                             const EngineOptions& opt) {
    long long budget =
        opt.switch_budget >= 0 ? opt.switch_budget : 4LL * start.k() * g.edge_count();
    EngineResult res{EngineResult::Status::colored, start, -1, TashkinovTree{}, 0, 1};
    StuckContext ctx{opt.perturbation_seed, 0};
    long long edge_switches = 0;
    StuckOutcome out = resolve_stuck(g, res.coloring, e0, opt, budget, edge_switches, res.tree, ctx);
    res.switches = edge_switches;
    if (out != StuckOutcome::colored) {
        res.stuck_instance = e0;
        res.status = out == StuckOutcome::elementary ? EngineResult::Status::elementary
                                                     : EngineResult::Status::exhausted;
    }
    return res;
}

EngineResult kcolor(const Multigraph& g, int k, std::span<const long long> order,
                    const EngineOptions& opt) {
    const long long m = g.edge_count();
    if (k <= 0 && m > 0) throw std::invalid_argument("kcolor: palette must be positive");
    if (static_cast<long long>(order.size()) != m)
        throw std::invalid_argument("kcolor: order must cover all instances");
    long long budget = opt.switch_budget >= 0 ? opt.switch_budget : 4LL * k * m;

    EngineResult res{EngineResult::Status::colored, EdgeColoring(g, std::max(k, 0)), -1,
                     TashkinovTree{}, 0, 0};
    StuckContext ctx{opt.perturbation_seed, 0};
    for (long long iid : order) {
        EdgeInstance e = g.instance(iid);
        int c = res.coloring.lowest_common_missing(e.u, e.v);
        if (c != 0) {
            res.coloring.set(iid, c);
            continue;
        }
        ++res.stuck_edges;
        long long edge_switches = 0;
        StuckOutcome out =
            resolve_stuck(g, res.coloring, iid, opt, budget, edge_switches, res.tree, ctx);
        res.switches += edge_switches;
        if (out == StuckOutcome::colored) continue;
        res.stuck_instance = iid;
        res.status = out == StuckOutcome::elementary ? EngineResult::Status::elementary
                                                     : EngineResult::Status::exhausted;
        return res;
    }
    return res;
}

}  // namespace mg
