#include "mg/sampling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace mg {

Model parse_model(const std::string& s) {
    if (s == "iid-pairs") return Model::iid_pairs;
    if (s == "poisson") return Model::poisson;
    throw std::invalid_argument("unknown model: " + s);
}

std::string model_name(Model m) { return m == Model::iid_pairs ? "iid-pairs" : "poisson"; }

long long pair_index(int n, int u, int v) {
    return static_cast<long long>(u) * n - static_cast<long long>(u) * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> pair_from_index(int n, long long idx) {
    // Row u starts at base(u) = u*n - u(u+1)/2; invert via the triangular
    // root of the tail, then fix any floating point slack.
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    long long r = total - 1 - idx;
    long long t = static_cast<long long>((std::sqrt(8.0 * static_cast<double>(r) + 1.0) - 1.0) / 2.0);
    while (t * (t + 1) / 2 > r) --t;
    while ((t + 1) * (t + 2) / 2 <= r) ++t;
    int u = n - 2 - static_cast<int>(t);
    int v = static_cast<int>(idx - pair_index(n, u, u + 1)) + u + 1;
    return {u, v};
}

Multigraph sample_mnm(const SampleConfig& cfg) {
    if (cfg.n < 2 && cfg.m > 0)
        throw std::invalid_argument("sample_mnm: need at least 2 vertices to draw edges");
    if (cfg.m < 0) throw std::invalid_argument("sample_mnm: negative edge count");
    SplitMix64 rng(cfg.seed);
    long long pairs = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2;
    std::vector<long long> count(std::max<long long>(pairs, 0), 0);
    for (long long i = 0; i < cfg.m; ++i) ++count[rng.bounded(static_cast<uint64_t>(pairs))];
    std::vector<EdgeSpec> edges;
    for (long long idx = 0; idx < pairs; ++idx) {
        if (count[idx] == 0) continue;
        auto [u, v] = pair_from_index(cfg.n, idx);
        edges.push_back({u, v, count[idx]});
    }
    return Multigraph::build(cfg.n, edges);
}

namespace {

long long poisson_draw(SplitMix64& rng, double lambda) {
    if (lambda <= 0) return 0;
    // Halve until the product method is numerically safe, then Knuth.
    if (lambda > 30.0) return poisson_draw(rng, lambda / 2) + poisson_draw(rng, lambda - lambda / 2);
    double limit = std::exp(-lambda);
    long long x = -1;
    double prod = 1.0;
    do {
        ++x;
        prod *= rng.unit();
    } while (prod > limit);
    return x;
}

}  // namespace

Multigraph sample_poisson(int n, double lambda, uint64_t seed) {
    if (lambda < 0) throw std::invalid_argument("sample_poisson: negative rate");
    if (n < 0) throw std::invalid_argument("sample_poisson: negative vertex count");
    SplitMix64 rng(seed);
    std::vector<EdgeSpec> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            long long c = poisson_draw(rng, lambda);
            if (c > 0) edges.push_back({u, v, c});
        }
    return Multigraph::build(n, edges);
}

double binomial_tail(long long m, double p, long long d) {
    if (m < 0) throw std::invalid_argument("binomial_tail: negative trial count");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_tail: p outside [0,1]");
    if (d < 0) throw std::invalid_argument("binomial_tail: negative threshold");
    if (d == 0) return 1.0;
    if (d > m) return 0.0;
    if (p == 0.0) return 0.0;  // d >= 1 here
    if (p == 1.0) return 1.0;

    double log_p = std::log(p);
    double log_q = std::log1p(-p);
    auto log_term = [&](long long j) {
        return std::lgamma(static_cast<double>(m) + 1) - std::lgamma(static_cast<double>(j) + 1) -
               std::lgamma(static_cast<double>(m - j) + 1) + j * log_p + (m - j) * log_q;
    };
    // Summing the short side keeps the term count and cancellation low.
    bool upper = (m - d + 1) <= d;
    long long lo = upper ? d : 0;
    long long hi = upper ? m : d - 1;
    double max_log = -HUGE_VAL;
    for (long long j = lo; j <= hi; ++j) max_log = std::max(max_log, log_term(j));
    double sum = 0.0, comp = 0.0;
    for (long long j = lo; j <= hi; ++j) {
        double t = std::exp(log_term(j) - max_log);
        double y = t - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    double side = std::exp(max_log) * sum;
    return upper ? side : 1.0 - side;
}

long long degree_quantile_d0(int n, long long m, double exponent) {
    if (exponent <= 0) throw std::invalid_argument("degree_quantile_d0: exponent must be positive");
    if (n < 2) throw std::invalid_argument("degree_quantile_d0: need n >= 2");
    double p = 2.0 / n;
    double target = std::pow(static_cast<double>(n), -exponent);
    // tail(d) is non-increasing; largest d with tail(d) >= target
    long long lo = 0, hi = m;  // tail(0) = 1 >= target
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (binomial_tail(m, p, mid) >= target)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Prediction predict(int n, long long m, double epsilon) {
    if (n < 2) throw std::invalid_argument("predict: need n >= 2");
    if (m < 0) throw std::invalid_argument("predict: negative edge count");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("predict: epsilon must lie in (0,1)");
    Prediction out;
    out.n = n;
    out.m = m;
    out.epsilon = epsilon;
    double log_n = std::log(static_cast<double>(n));
    out.d_plus = 2.0 * m / n +
                 (1.0 + epsilon) * std::sqrt((4.0 * m / n) * (1.0 - 2.0 / n) * log_n);
    out.rho_full = Rational(m, n / 2);
    out.threshold = static_cast<double>(n) * n * n * log_n;
    out.regime =
        static_cast<double>(m) >= out.threshold ? Regime::super_threshold : Regime::sub_threshold;
    out.d0 = degree_quantile_d0(n, m, 0.9);
    return out;
}

std::string format_prediction(const Prediction& p) {
    std::ostringstream out;
    out.precision(17);
    out << "n=" << p.n << '\n'
        << "m=" << p.m << '\n'
        << "epsilon=" << p.epsilon << '\n'
        << "d_plus=" << p.d_plus << '\n'
        << "rho_full=" << p.rho_full.str() << '\n'
        << "threshold=" << p.threshold << '\n'
        << "regime=" << (p.regime == Regime::super_threshold ? "super-threshold" : "sub-threshold")
        << '\n'
        << "d0=" << p.d0 << '\n';
    return out.str();
}

}  // namespace mg
