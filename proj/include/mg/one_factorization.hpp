#pragma once

#include <utility>
#include <vector>

namespace mg {

/// Round-robin (circle method) colour classes of K_n. For even n: n-1 perfect
/// matchings; for odd n: n matchings of size (n-1)/2. Classes partition the
/// edge set of K_n.
std::vector<std::vector<std::pair<int, int>>> one_factorization(int n);

}  // namespace mg
