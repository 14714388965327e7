#include "mg/edge_coloring.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mg {

EdgeColoring::EdgeColoring(const Multigraph& g, int k) : g_(&g), k_(k) {
    if (k < 0) throw std::invalid_argument("EdgeColoring: negative palette");
    color_.assign(g.edge_count(), 0);
    slot_.assign(static_cast<size_t>(g.vertex_count()) * (k + 1), 0);
}

int EdgeColoring::lowest_missing(int v) const {
    for (int c = 1; c <= k_; ++c)
        if (slot(v, c) == 0) return c;
    return 0;
}

int EdgeColoring::lowest_common_missing(int u, int v) const {
    for (int c = 1; c <= k_; ++c)
        if (slot(u, c) == 0 && slot(v, c) == 0) return c;
    return 0;
}

void EdgeColoring::set(long long instance, int c) {
    if (c < 0 || c > k_) throw std::logic_error("EdgeColoring::set: colour out of palette");
    EdgeInstance e = g_->instance(instance);
    int old = color_[instance];
    if (old == c) return;
    if (old != 0) {
        slot(e.u, old) = 0;
        slot(e.v, old) = 0;
        --colored_;
    }
    if (c != 0) {
        if (slot(e.u, c) != 0 || slot(e.v, c) != 0)
            throw std::logic_error("EdgeColoring::set: colour already present at an endpoint");
        slot(e.u, c) = instance + 1;
        slot(e.v, c) = instance + 1;
        ++colored_;
    }
    color_[instance] = c;
}

long long EdgeColoring::kempe_switch_inplace(int v, int a, int b) {
    if (a == b || a < 1 || b < 1 || a > k_ || b > k_)
        throw std::invalid_argument("kempe_switch: need two distinct palette colours");
    std::vector<long long> chain;
    bool cycle = false;
    auto walk = [&](int start, int first_color) {
        int cur = start;
        int col = first_color;
        while (true) {
            long long iid = instance_at(cur, col);
            if (iid < 0) return;
            if (!chain.empty() && iid == chain.front()) {
                cycle = true;  // closed back onto the start
                return;
            }
            chain.push_back(iid);
            EdgeInstance e = g_->instance(iid);
            cur = (e.u == cur) ? e.v : e.u;
            col = (col == a) ? b : a;
        }
    };
    walk(v, a);
    if (!cycle) {
        std::reverse(chain.begin(), chain.end());
        walk(v, b);
    }
    std::vector<int> flipped(chain.size());
    for (size_t i = 0; i < chain.size(); ++i) {
        flipped[i] = color_[chain[i]] == a ? b : a;
        set(chain[i], 0);
    }
    for (size_t i = 0; i < chain.size(); ++i) set(chain[i], flipped[i]);
    return static_cast<long long>(chain.size());
}

long long EdgeColoring::colors_used() const {
    std::vector<char> seen(k_ + 1, 0);
    long long distinct = 0;
    for (int c : color_)
        if (c != 0 && !seen[c]) {
            seen[c] = 1;
            ++distinct;
        }
    return distinct;
}

EdgeColoring kempe_switch(const EdgeColoring& c, int v, int a, int b) {
    EdgeColoring out = c;
    out.kempe_switch_inplace(v, a, b);
    return out;
}

VerifyResult verify(const Multigraph& g, std::span<const int> colors) {
    VerifyResult r;
    if (static_cast<long long>(colors.size()) != g.edge_count())
        throw std::invalid_argument("verify: assignment size does not match instance count");
    // vertex -> colour -> instances
    std::vector<std::map<int, std::vector<long long>>> at(g.vertex_count());
    for (long long i = 0; i < g.edge_count(); ++i) {
        int c = colors[i];
        if (c == 0) {
            r.uncolored.push_back(i);
            continue;
        }
        if (c < 0) throw std::invalid_argument("verify: negative colour");
        EdgeInstance e = g.instance(i);
        at[e.u][c].push_back(i);
        at[e.v][c].push_back(i);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        for (auto& [c, inst] : at[v])
            if (inst.size() > 1) r.violations.push_back({v, c, inst});
    r.valid = r.violations.empty() && r.uncolored.empty();
    return r;
}

VerifyResult verify(const Multigraph& g, const EdgeColoring& c) {
    std::vector<int> a = c.assignment();
    return verify(g, a);
}

std::pair<EdgeColoring, std::optional<long long>> greedy_color(const Multigraph& g, int k,
                                                               std::span<const long long> order) {
    if (k <= 0) throw std::invalid_argument("greedy_color: palette must be positive");
    if (static_cast<long long>(order.size()) != g.edge_count())
        throw std::invalid_argument("greedy_color: order must cover all instances");
    EdgeColoring col(g, k);
    for (long long iid : order) {
        EdgeInstance e = g.instance(iid);
        int c = col.lowest_common_missing(e.u, e.v);
        if (c == 0) return {std::move(col), iid};
        col.set(iid, c);
    }
    return {std::move(col), std::nullopt};
}

ColoringDocument make_document(const EdgeColoring& c, const std::string& strategy,
                               bool first_class) {
    const Multigraph& g = c.graph();
    ColoringDocument d;
    d.n = g.vertex_count();
    d.m = g.edge_count();
    d.k = c.k();
    d.colors_used = c.colors_used();
    d.strategy = strategy;
    d.first_class = first_class;
    d.entries.reserve(g.edge_count());
    for (long long i = 0; i < g.edge_count(); ++i)
        d.entries.emplace_back(g.instance(i), c.color(i));  // ids are (u,v,copy)-sorted
    return d;
}

std::string format_coloring(const ColoringDocument& d) {
    std::ostringstream out;
    out << "n=" << d.n << " m=" << d.m << " k=" << d.k << " colors_used=" << d.colors_used
        << " strategy=" << d.strategy << " first_class=" << (d.first_class ? 1 : 0) << '\n';
    for (const auto& [e, c] : d.entries)
        out << e.u << ' ' << e.v << ' ' << e.copy << ' ' << c << '\n';
    return out.str();
}

namespace {
long long parse_kv(const std::string& token, const std::string& key) {
    if (token.rfind(key + "=", 0) != 0)
        throw std::invalid_argument("coloring document: expected " + key + "=...");
    return std::stoll(token.substr(key.size() + 1));
}
}  // namespace

ColoringDocument parse_coloring(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("coloring document: empty input");
    std::istringstream hs(header);
    std::string tn, tm, tk, tcu, tstrat, tfc;
    if (!(hs >> tn >> tm >> tk >> tcu >> tstrat >> tfc))
        throw std::invalid_argument("coloring document: bad header");
    ColoringDocument d;
    d.n = static_cast<int>(parse_kv(tn, "n"));
    d.m = parse_kv(tm, "m");
    d.k = static_cast<int>(parse_kv(tk, "k"));
    d.colors_used = parse_kv(tcu, "colors_used");
    if (tstrat.rfind("strategy=", 0) != 0)
        throw std::invalid_argument("coloring document: expected strategy=...");
    d.strategy = tstrat.substr(9);
    d.first_class = parse_kv(tfc, "first_class") != 0;
    for (long long i = 0; i < d.m; ++i) {
        EdgeInstance e;
        int c;
        if (!(in >> e.u >> e.v >> e.copy >> c))
            throw std::invalid_argument("coloring document: truncated entries");
        d.entries.emplace_back(e, c);
    }
    return d;
}

std::vector<int> bind_document(const Multigraph& g, const ColoringDocument& d) {
    if (d.n != g.vertex_count() || d.m != g.edge_count())
        throw std::invalid_argument("coloring document: header does not match the graph");
    std::vector<int> colors(g.edge_count(), 0);
    std::vector<char> seen(g.edge_count(), 0);
    for (const auto& [e, c] : d.entries) {
        long long iid = g.instance_id(e.u, e.v, e.copy);
        if (iid < 0) throw std::invalid_argument("coloring document: entry references a nonexistent instance");
        if (seen[iid]) throw std::invalid_argument("coloring document: duplicate instance entry");
        if (c < 0 || c > d.k) throw std::invalid_argument("coloring document: colour out of range");
        seen[iid] = 1;
        colors[iid] = c;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("coloring document: missing instance entry");
    return colors;
}

}  // namespace mg
