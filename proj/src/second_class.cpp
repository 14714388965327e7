#include "mg/second_class.hpp"

#include <stdexcept>

namespace mg {

SecondClassConditions check_second_class_conditions(const Multigraph& g, long long k) {
    if (g.vertex_count() % 2 == 0)
        throw std::invalid_argument("check_second_class_conditions: requires an odd vertex count");
    DegreeStats s = degree_stats(g);
    SecondClassConditions out;
    out.a = k <= s.delta - 1;
    out.b = k <= s.d2 + 2;
    out.c = 9LL * s.mu_max - 24 > 10LL * s.mu_min;
    out.d = 2 * g.edge_count() > static_cast<long long>(g.vertex_count() - 1) * k;
    return out;
}

}  // namespace mg
