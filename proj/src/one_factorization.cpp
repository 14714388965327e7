#include "mg/one_factorization.hpp"

#include <stdexcept>

namespace mg {

std::vector<std::vector<std::pair<int, int>>> one_factorization(int n) {
    if (n < 2) throw std::invalid_argument("one_factorization: need n >= 2");
    std::vector<std::vector<std::pair<int, int>>> classes;
    if (n % 2 == 1) {
        // class c holds the pairs {i,j} with i+j = c (mod n)
        classes.resize(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) classes[(i + j) % n].emplace_back(i, j);
    } else {
        // K_{n-1} classes as above; vertex n-1 fills the bye slot 2i = c (mod n-1)
        int r = n - 1;
        classes.resize(r);
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) classes[(i + j) % r].emplace_back(i, j);
        for (int i = 0; i < r; ++i) {
            int c = (2 * i) % r;
            classes[c].emplace_back(i, n - 1);
        }
    }
    return classes;
}

}  // namespace mg
