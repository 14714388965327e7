#pragma once

#include <cstdint>
#include <string>

#include "mg/multigraph.hpp"
#include "mg/rational.hpp"
#include "mg/rng.hpp"

namespace mg {

enum class Model { iid_pairs, poisson };

Model parse_model(const std::string& s);  // "iid-pairs" | "poisson"
std::string model_name(Model m);

struct SampleConfig {
    int n = 0;
    long long m = 0;
    uint64_t seed = 0;
    Model model = Model::iid_pairs;
};

/// m unordered pairs drawn uniformly and independently with repetition.
/// Pair index -> pair via closed-form triangular decoding; deterministic
/// given the seed.
Multigraph sample_mnm(const SampleConfig& cfg);

/// Index of pair {u,v} (u<v) in lexicographic order, and its inverse.
long long pair_index(int n, int u, int v);
std::pair<int, int> pair_from_index(int n, long long idx);

/// Independent Poisson(lambda) multiplicity per pair.
Multigraph sample_poisson(int n, double lambda, uint64_t seed);

/// Pr[Bin(m, p) >= d], log-space terms with compensated summation.
double binomial_tail(long long m, double p, long long d);

/// Largest d with Pr[Bin(m, 2/n) >= d] >= n^-exponent.
long long degree_quantile_d0(int n, long long m, double exponent);

enum class Regime { sub_threshold, super_threshold };

struct Prediction {
    int n = 0;
    long long m = 0;
    double epsilon = 0;
    double d_plus = 0;       // 2m/n + (1+eps) sqrt((4m/n)(1-2/n) log n)
    Rational rho_full;       // m / floor(n/2)
    double threshold = 0;    // n^3 log n, natural log
    Regime regime = Regime::sub_threshold;
    long long d0 = 0;        // exponent 0.9 quantile
};

/// Theory-side quantities for a cell; boundary ties go to super-threshold.
Prediction predict(int n, long long m, double epsilon);

/// key=value lines, one per field.
std::string format_prediction(const Prediction& p);

}  // namespace mg
