#pragma once

#include <string>

#include "mg/multigraph.hpp"

namespace mg {

/// Necessary conditions for chi'(G) > k on an odd number of vertices, in
/// terms of the two largest degrees, the multiplicity extremes and the edge
/// count. If chi'(G) > k then at least one of them holds.
struct SecondClassConditions {
    bool a = false;  // k <= d1 - 1
    bool b = false;  // k <= d2 + 2
    bool c = false;  // 9*mu_max - 24 > 10*mu_min
    bool d = false;  // |E| > (n-1)/2 * k

    bool any() const { return a || b || c || d; }
    std::string str() const {
        std::string s;
        if (a) s += 'a';
        if (b) s += 'b';
        if (c) s += 'c';
        if (d) s += 'd';
        return s;
    }
};

/// Evaluates the four conditions literally. Rejects even n (the statement
/// needs an odd vertex count).
SecondClassConditions check_second_class_conditions(const Multigraph& g, long long k);

}  // namespace mg
