#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mg/rational.hpp"
#include "mg/sampling.hpp"

namespace mg {

/// One sampled multigraph's statistics row. `m` is the sampled instance
/// count (equal to the configured m under the iid-pairs model).
struct TrialRecord {
    int cell = 0;
    int trial = 0;
    uint64_t seed = 0;
    int n = 0;
    long long m = 0;
    long long delta = 0;
    long long d2 = 0;
    long long gap = 0;
    int mu_max = 0;
    int mu_min = 0;
    Rational rho_full;  // m / floor(n/2)
    long long lower_bound = 0;
    long long colors_used = 0;
    bool first_class = false;
    std::string strategy;
    double wall_ms = 0;  // excluded from determinism comparisons

    bool same_outcome(const TrialRecord& other) const;  // everything but wall_ms
};

struct ExperimentCell {
    int n = 0;
    long long m = 0;
};

struct ExperimentConfig {
    std::vector<int> n_list;
    std::vector<long long> m_list;             // absolute edge counts
    std::vector<double> m_over_threshold;      // multiples of n^3 log n, rounded
    int trials = 1;
    uint64_t base_seed = 0;
    Model model = Model::iid_pairs;
    int threads = 0;  // 0 = all available workers

    std::vector<ExperimentCell> cells() const;  // n-major, m minor
};

/// JSON object with keys n, m (and/or m_over_threshold), trials, seed,
/// model, threads.
ExperimentConfig parse_experiment_config(std::istream& in);

/// Samples, colours and measures one trial. Deterministic given the inputs
/// (modulo wall_ms). The colouring is verified before the record is built.
TrialRecord run_single_trial(int n, long long m, Model model, uint64_t seed);

/// One record per (cell, trial), ordered by (cell, trial) regardless of the
/// execution schedule. Trial seeds derive from (base_seed, cell, trial).
/// Infeasible cells are skipped with a note on stderr.
std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg);

struct CellSummary {
    int cell = 0;
    int n = 0;
    int trials = 0;
    double mean_m = 0;
    double mean_gap = 0;
    long long median_gap = 0;  // lower median
    double mean_delta = 0;
    long long median_delta = 0;
    double mean_colors = 0;
    long long median_colors = 0;
    Rational first_class_fraction;
    std::vector<std::pair<std::string, int>> strategy_histogram;  // tag-sorted
};

/// Order-independent per-cell summary; rejects an empty record set.
std::vector<CellSummary> aggregate(const std::vector<TrialRecord>& records);

enum class EmitFormat { csv, json_lines };

EmitFormat parse_format(const std::string& s);  // "csv" | "json-lines"

void emit_records(std::ostream& out, const std::vector<TrialRecord>& records, EmitFormat fmt);
std::vector<TrialRecord> parse_records(std::istream& in, EmitFormat fmt);
void emit_summary(std::ostream& out, const std::vector<CellSummary>& cells, EmitFormat fmt);

}  // namespace mg
