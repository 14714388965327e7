#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mg {

/// One parallel copy of a vertex pair. `copy` runs from 0 to the pair
/// multiplicity (exclusive); instances are what edge colourings assign to.
struct EdgeInstance {
    int u = 0;
    int v = 0;
    int copy = 0;

    friend bool operator==(const EdgeInstance&, const EdgeInstance&) = default;
};

struct EdgeSpec {
    int u;
    int v;
    long long mult;
};

/// Loopless multigraph on vertices 0..n-1 with per-pair multiplicities.
/// Immutable after construction; cheap to copy and safe to share across
/// threads.
class Multigraph {
public:
    Multigraph() = default;

    /// Accumulates duplicate (u,v) entries. Rejects loops, out-of-range
    /// vertices and negative multiplicities.
    static Multigraph build(int n, std::span<const EdgeSpec> edges);
    static Multigraph build(int n, std::initializer_list<EdgeSpec> edges) {
        return build(n, std::span<const EdgeSpec>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }  // instances, multiplicities included
    int pair_count() const { return static_cast<int>(pairs_.size()); }

    int multiplicity(int u, int v) const { return mult_[static_cast<size_t>(u) * n_ + v]; }
    long long degree(int v) const { return degree_[v]; }

    /// Present pairs (mult >= 1) in lexicographic order.
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// Instances are numbered 0..m-1, ordered by (u, v, copy).
    EdgeInstance instance(long long id) const;
    long long instance_id(int u, int v, int copy) const;  // -1 when absent
    long long pair_first_instance(int u, int v) const;    // -1 when absent

    bool operator==(const Multigraph& other) const {
        return n_ == other.n_ && mult_ == other.mult_;
    }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<int> mult_;       // dense symmetric n*n
    std::vector<long long> degree_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<long long> pair_base_;  // first instance id per present pair
    std::vector<int> pair_index_;       // dense n*n -> index into pairs_, -1 absent
    std::vector<std::vector<int>> adj_;

    void finalize();
};

struct DegreeStats {
    std::vector<long long> sorted;  // descending
    long long delta = 0;            // d1
    long long delta_min = 0;
    long long d2 = 0;               // second largest, 0 when n < 2
    int mu_max = 0;
    int mu_min = 0;  // over all pairs of distinct vertices; 0 off complete support
};

DegreeStats degree_stats(const Multigraph& g);

/// Splits off the maximal uniform complete multigraph: returns c = mu_min and
/// the remainder with every pair multiplicity reduced by c.
std::pair<int, Multigraph> decompose_complete(const Multigraph& g);

/// Text interchange format: "n m_pairs" header, then "u v mult" lines with
/// u < v in lexicographic order. Rejects loops, duplicates, unsorted rows and
/// header mismatches.
Multigraph parse_multigraph(std::istream& in);
Multigraph parse_multigraph_string(const std::string& text);
std::string format_multigraph(const Multigraph& g);

}  // namespace mg
