#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mg/multigraph.hpp"

namespace mg {

/// Partial edge colouring over a fixed palette 1..k, with a per-vertex
/// colour-occupancy index so "is colour c missing at v" and "which instance
/// holds colour c at v" are O(1). Mutators keep the colouring proper; raw
/// (possibly improper) assignments are handled as documents, see verify().
///
/// Holds a pointer to its graph; the graph must outlive the colouring.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(const Multigraph& g, int k);

    const Multigraph& graph() const { return *g_; }
    int k() const { return k_; }
    int color(long long instance) const { return color_[instance]; }
    bool is_total() const { return colored_ == g_->edge_count(); }
    long long colored_count() const { return colored_; }

    bool missing(int v, int c) const { return slot(v, c) == 0; }
    /// Instance holding colour c at v, or -1.
    long long instance_at(int v, int c) const { return slot(v, c) - 1; }

    /// Lowest colour missing at v, or 0 when v is saturated.
    int lowest_missing(int v) const;
    /// Lowest colour missing at both endpoints, or 0.
    int lowest_common_missing(int u, int v) const;

    /// Assigns (c >= 1) or clears (c == 0). Throws std::logic_error if the
    /// assignment would collide at an endpoint.
    void set(long long instance, int c);

    /// Exchanges colours a and b along the maximal (a,b)-alternating
    /// path/cycle through v. Returns the number of instances flipped.
    long long kempe_switch_inplace(int v, int a, int b);

    /// Distinct colours appearing in the assignment.
    long long colors_used() const;

    std::vector<int> assignment() const { return color_; }

private:
    long long slot(int v, int c) const { return slot_[static_cast<size_t>(v) * (k_ + 1) + c]; }
    long long& slot(int v, int c) { return slot_[static_cast<size_t>(v) * (k_ + 1) + c]; }

    const Multigraph* g_ = nullptr;
    int k_ = 0;
    long long colored_ = 0;
    std::vector<int> color_;
    std::vector<long long> slot_;
};

/// Copying form of the Kempe switch; an involution for fixed (v, a, b).
EdgeColoring kempe_switch(const EdgeColoring& c, int v, int a, int b);

struct ColorViolation {
    int vertex;
    int color;
    std::vector<long long> instances;  // the >= 2 instances sharing the colour
};

struct VerifyResult {
    bool valid = false;
    std::vector<ColorViolation> violations;
    std::vector<long long> uncolored;  // a total colouring must not have these
};

/// Checks a raw per-instance assignment (0 = uncoloured) against g: valid iff
/// total and no vertex sees a colour twice.
VerifyResult verify(const Multigraph& g, std::span<const int> colors);
VerifyResult verify(const Multigraph& g, const EdgeColoring& c);

/// Greedy pass over `order` (a permutation of all instance ids): each
/// instance takes the lowest colour missing at both endpoints; stops at the
/// first instance with none. Returns the partial colouring and the stuck
/// instance, if any.
std::pair<EdgeColoring, std::optional<long long>> greedy_color(const Multigraph& g, int k,
                                                               std::span<const long long> order);

/// Colouring output document: one header line of key=value pairs, then one
/// "u v copy color" row per instance ordered by (u, v, copy).
struct ColoringDocument {
    int n = 0;
    long long m = 0;
    int k = 0;
    long long colors_used = 0;
    std::string strategy = "none";
    bool first_class = false;
    std::vector<std::pair<EdgeInstance, int>> entries;
};

ColoringDocument make_document(const EdgeColoring& c, const std::string& strategy, bool first_class);
std::string format_coloring(const ColoringDocument& d);
ColoringDocument parse_coloring(std::istream& in);

/// Resolves document entries to per-instance colours. Throws
/// std::invalid_argument when an entry references a nonexistent instance or
/// the header does not match g.
std::vector<int> bind_document(const Multigraph& g, const ColoringDocument& d);

}  // namespace mg
