#include "mg/multigraph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mg {

Multigraph Multigraph::build(int n, std::span<const EdgeSpec> edges) {
    if (n < 0) throw std::invalid_argument("Multigraph: negative vertex count");
    Multigraph g;
    g.n_ = n;
    g.mult_.assign(static_cast<size_t>(n) * n, 0);
    for (const EdgeSpec& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::invalid_argument("Multigraph: vertex out of range");
        if (e.u == e.v) throw std::invalid_argument("Multigraph: loops are not allowed");
        if (e.mult < 0) throw std::invalid_argument("Multigraph: negative multiplicity");
        g.mult_[static_cast<size_t>(e.u) * n + e.v] += static_cast<int>(e.mult);
        g.mult_[static_cast<size_t>(e.v) * n + e.u] += static_cast<int>(e.mult);
    }
    g.finalize();
    return g;
}

void Multigraph::finalize() {
    degree_.assign(n_, 0);
    adj_.assign(n_, {});
    pairs_.clear();
    pair_base_.clear();
    pair_index_.assign(static_cast<size_t>(n_) * n_, -1);
    m_ = 0;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            int c = multiplicity(u, v);
            if (c == 0) continue;
            pair_index_[static_cast<size_t>(u) * n_ + v] = static_cast<int>(pairs_.size());
            pair_index_[static_cast<size_t>(v) * n_ + u] = static_cast<int>(pairs_.size());
            pairs_.emplace_back(u, v);
            pair_base_.push_back(m_);
            m_ += c;
            degree_[u] += c;
            degree_[v] += c;
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

EdgeInstance Multigraph::instance(long long id) const {
    if (id < 0 || id >= m_) throw std::out_of_range("Multigraph: instance id out of range");
    // pairs are few at desk scale; binary search over pair bases
    auto it = std::upper_bound(pair_base_.begin(), pair_base_.end(), id);
    int pi = static_cast<int>(it - pair_base_.begin()) - 1;
    auto [u, v] = pairs_[pi];
    return EdgeInstance{u, v, static_cast<int>(id - pair_base_[pi])};
}

long long Multigraph::pair_first_instance(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return -1;
    int pi = pair_index_[static_cast<size_t>(u) * n_ + v];
    return pi < 0 ? -1 : pair_base_[pi];
}

long long Multigraph::instance_id(int u, int v, int copy) const {
    if (u > v) std::swap(u, v);
    long long base = pair_first_instance(u, v);
    if (base < 0 || copy < 0 || copy >= multiplicity(u, v)) return -1;
    return base + copy;
}

DegreeStats degree_stats(const Multigraph& g) {
    DegreeStats s;
    int n = g.vertex_count();
    s.sorted.reserve(n);
    for (int v = 0; v < n; ++v) s.sorted.push_back(g.degree(v));
    std::sort(s.sorted.begin(), s.sorted.end(), std::greater<>());
    s.delta = n > 0 ? s.sorted.front() : 0;
    s.delta_min = n > 0 ? s.sorted.back() : 0;
    s.d2 = n > 1 ? s.sorted[1] : 0;
    int mu_max = 0;
    int mu_min = n >= 2 ? std::numeric_limits<int>::max() : 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = g.multiplicity(u, v);
            mu_max = std::max(mu_max, c);
            mu_min = std::min(mu_min, c);
        }
    s.mu_max = mu_max;
    s.mu_min = n >= 2 ? mu_min : 0;
    return s;
}

std::pair<int, Multigraph> decompose_complete(const Multigraph& g) {
    DegreeStats s = degree_stats(g);
    int c = s.mu_min;
    std::vector<EdgeSpec> rest;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.multiplicity(u, v) > c) rest.push_back({u, v, g.multiplicity(u, v) - c});
    return {c, Multigraph::build(n, rest)};
}

Multigraph parse_multigraph(std::istream& in) {
    long long n = -1, pair_rows = -1;
    if (!(in >> n >> pair_rows)) throw std::invalid_argument("multigraph: bad header");
    if (n < 0 || pair_rows < 0) throw std::invalid_argument("multigraph: bad header");
    std::vector<EdgeSpec> edges;
    int prev_u = -1, prev_v = -1;
    for (long long i = 0; i < pair_rows; ++i) {
        long long u, v, mult;
        if (!(in >> u >> v >> mult)) throw std::invalid_argument("multigraph: truncated pair list");
        if (u >= v) throw std::invalid_argument("multigraph: pairs must have u < v");
        if (u < 0 || v >= n) throw std::invalid_argument("multigraph: vertex out of range");
        if (mult < 1) throw std::invalid_argument("multigraph: multiplicities must be >= 1");
        if (std::pair<long long, long long>(u, v) <= std::pair<long long, long long>(prev_u, prev_v))
            throw std::invalid_argument("multigraph: pairs must be sorted and distinct");
        prev_u = static_cast<int>(u);
        prev_v = static_cast<int>(v);
        edges.push_back({static_cast<int>(u), static_cast<int>(v), mult});
    }
    return Multigraph::build(static_cast<int>(n), edges);
}

Multigraph parse_multigraph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_multigraph(in);
}

std::string format_multigraph(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.pair_count() << '\n';
    for (auto [u, v] : g.pairs()) out << u << ' ' << v << ' ' << g.multiplicity(u, v) << '\n';
    return out.str();
}

}  // namespace mg
