#include "mg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mg/density.hpp"
#include "mg/edge_coloring.hpp"
#include "mg/strategies.hpp"

#ifdef MG_HAVE_OPENMP
#include <omp.h>
#endif

namespace mg {

bool TrialRecord::same_outcome(const TrialRecord& o) const {
    return cell == o.cell && trial == o.trial && seed == o.seed && n == o.n && m == o.m &&
           delta == o.delta && d2 == o.d2 && gap == o.gap && mu_max == o.mu_max &&
           mu_min == o.mu_min && rho_full == o.rho_full && lower_bound == o.lower_bound &&
           colors_used == o.colors_used && first_class == o.first_class && strategy == o.strategy;
}

std::vector<ExperimentCell> ExperimentConfig::cells() const {
    std::vector<ExperimentCell> out;
    for (int n : n_list) {
        for (long long m : m_list) out.push_back({n, m});
        for (double f : m_over_threshold) {
            double thr = static_cast<double>(n) * n * n * std::log(static_cast<double>(n));
            out.push_back({n, static_cast<long long>(std::llround(f * thr))});
        }
    }
    return out;
}

ExperimentConfig parse_experiment_config(std::istream& in) {
    nlohmann::json j;
    in >> j;
    ExperimentConfig cfg;
    if (!j.contains("n")) throw std::invalid_argument("experiment config: missing n");
    cfg.n_list = j.at("n").get<std::vector<int>>();
    if (j.contains("m")) cfg.m_list = j.at("m").get<std::vector<long long>>();
    if (j.contains("m_over_threshold"))
        cfg.m_over_threshold = j.at("m_over_threshold").get<std::vector<double>>();
    if (cfg.m_list.empty() && cfg.m_over_threshold.empty())
        throw std::invalid_argument("experiment config: need m or m_over_threshold");
    cfg.trials = j.value("trials", 1);
    if (cfg.trials < 1) throw std::invalid_argument("experiment config: trials must be >= 1");
    cfg.base_seed = j.value("seed", 0ULL);
    cfg.model = parse_model(j.value("model", std::string("iid-pairs")));
    cfg.threads = j.value("threads", 0);
    return cfg;
}

TrialRecord run_single_trial(int n, long long m, Model model, uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    Multigraph g;
    if (model == Model::iid_pairs) {
        g = sample_mnm({n, m, seed, model});
    } else {
        long long pairs = static_cast<long long>(n) * (n - 1) / 2;
        double lambda = pairs > 0 ? static_cast<double>(m) / static_cast<double>(pairs) : 0.0;
        g = sample_poisson(n, lambda, seed);
    }
    DegreeStats s = degree_stats(g);
    ColoringOutcome outcome = color_optimal(g);
    VerifyResult check = verify(g, outcome.coloring);
    if (!check.valid) throw std::logic_error("run_single_trial: colouring failed verification");

    TrialRecord r;
    r.seed = seed;
    r.n = n;
    r.m = g.edge_count();
    r.delta = s.delta;
    r.d2 = s.d2;
    r.gap = s.delta - s.d2;
    r.mu_max = s.mu_max;
    r.mu_min = s.mu_min;
    r.rho_full = n >= 2 ? Rational(g.edge_count(), n / 2) : Rational(0, 1);
    r.lower_bound = outcome.lower_bound;
    r.colors_used = outcome.colors_used;
    r.first_class = outcome.first_class;
    r.strategy = outcome.strategy;
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg) {
    std::vector<ExperimentCell> cells = cfg.cells();
    struct Task {
        int cell;
        int trial;
        ExperimentCell c;
    };
    std::vector<Task> tasks;
    for (size_t ci = 0; ci < cells.size(); ++ci) {
        if (cells[ci].n < 2 && cells[ci].m > 0) {
            std::cerr << "run_trials: skipping infeasible cell n=" << cells[ci].n
                      << " m=" << cells[ci].m << " (need n >= 2 to place edges)\n";
            continue;
        }
        for (int t = 0; t < cfg.trials; ++t)
            tasks.push_back({static_cast<int>(ci), t, cells[ci]});
    }
    std::vector<TrialRecord> records(tasks.size());
    long long total = static_cast<long long>(tasks.size());
#ifdef MG_HAVE_OPENMP
    int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long i = 0; i < total; ++i) {
        const Task& task = tasks[i];
        uint64_t seed = derive_seed(cfg.base_seed, static_cast<uint64_t>(task.cell),
                                    static_cast<uint64_t>(task.trial));
        records[i] = run_single_trial(task.c.n, task.c.m, cfg.model, seed);
        records[i].cell = task.cell;
        records[i].trial = task.trial;
    }
    return records;
}

namespace {

template <typename T>
long long lower_median(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return static_cast<long long>(v[(v.size() - 1) / 2]);
}

}  // namespace

std::vector<CellSummary> aggregate(const std::vector<TrialRecord>& records) {
    if (records.empty()) throw std::invalid_argument("aggregate: empty record set");
    std::map<int, std::vector<const TrialRecord*>> by_cell;
    for (const TrialRecord& r : records) by_cell[r.cell].push_back(&r);
    std::vector<CellSummary> out;
    for (auto& [cell, rs] : by_cell) {
        CellSummary s;
        s.cell = cell;
        s.n = rs.front()->n;
        s.trials = static_cast<int>(rs.size());
        std::vector<long long> gaps, deltas, colors;
        long long fc = 0;
        double sum_m = 0, sum_gap = 0, sum_delta = 0, sum_colors = 0;
        std::map<std::string, int> strat;
        for (const TrialRecord* r : rs) {
            gaps.push_back(r->gap);
            deltas.push_back(r->delta);
            colors.push_back(r->colors_used);
            sum_m += static_cast<double>(r->m);
            sum_gap += static_cast<double>(r->gap);
            sum_delta += static_cast<double>(r->delta);
            sum_colors += static_cast<double>(r->colors_used);
            fc += r->first_class ? 1 : 0;
            ++strat[r->strategy];
        }
        s.mean_m = sum_m / s.trials;
        s.mean_gap = sum_gap / s.trials;
        s.median_gap = lower_median(gaps);
        s.mean_delta = sum_delta / s.trials;
        s.median_delta = lower_median(deltas);
        s.mean_colors = sum_colors / s.trials;
        s.median_colors = lower_median(colors);
        s.first_class_fraction = Rational(fc, s.trials);
        for (auto& [tag, count] : strat) s.strategy_histogram.emplace_back(tag, count);
        out.push_back(std::move(s));
    }
    return out;
}

EmitFormat parse_format(const std::string& s) {
    if (s == "csv") return EmitFormat::csv;
    if (s == "json-lines" || s == "jsonl") return EmitFormat::json_lines;
    throw std::invalid_argument("unknown format: " + s);
}

namespace {

constexpr const char* kCsvHeader =
    "cell,trial,seed,n,m,delta,d2,gap,mu_max,mu_min,rho_full,lower_bound,colors_used,"
    "first_class,strategy,wall_ms";

std::string wall_str(double ms) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << ms;
    return o.str();
}

nlohmann::ordered_json record_json(const TrialRecord& r) {
    nlohmann::ordered_json j;
    j["cell"] = r.cell;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["m"] = r.m;
    j["delta"] = r.delta;
    j["d2"] = r.d2;
    j["gap"] = r.gap;
    j["mu_max"] = r.mu_max;
    j["mu_min"] = r.mu_min;
    j["rho_full"] = r.rho_full.str();
    j["lower_bound"] = r.lower_bound;
    j["colors_used"] = r.colors_used;
    j["first_class"] = r.first_class;
    j["strategy"] = r.strategy;
    j["wall_ms"] = wall_str(r.wall_ms);
    return j;
}

}  // namespace

void emit_records(std::ostream& out, const std::vector<TrialRecord>& records, EmitFormat fmt) {
    if (fmt == EmitFormat::csv) {
        out << kCsvHeader << '\n';
        for (const TrialRecord& r : records)
            out << r.cell << ',' << r.trial << ',' << r.seed << ',' << r.n << ',' << r.m << ','
                << r.delta << ',' << r.d2 << ',' << r.gap << ',' << r.mu_max << ',' << r.mu_min
                << ',' << r.rho_full.str() << ',' << r.lower_bound << ',' << r.colors_used << ','
                << (r.first_class ? 1 : 0) << ',' << r.strategy << ',' << wall_str(r.wall_ms)
                << '\n';
        return;
    }
    for (const TrialRecord& r : records) out << record_json(r).dump() << '\n';
}

std::vector<TrialRecord> parse_records(std::istream& in, EmitFormat fmt) {
    std::vector<TrialRecord> out;
    std::string line;
    if (fmt == EmitFormat::csv) {
        if (!std::getline(in, line)) throw std::invalid_argument("records: missing csv header");
        if (line != kCsvHeader) throw std::invalid_argument("records: unexpected csv header");
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::vector<std::string> f;
            std::stringstream ss(line);
            std::string tok;
            while (std::getline(ss, tok, ',')) f.push_back(tok);
            if (f.size() != 16) throw std::invalid_argument("records: bad csv row");
            TrialRecord r;
            r.cell = std::stoi(f[0]);
            r.trial = std::stoi(f[1]);
            r.seed = std::stoull(f[2]);
            r.n = std::stoi(f[3]);
            r.m = std::stoll(f[4]);
            r.delta = std::stoll(f[5]);
            r.d2 = std::stoll(f[6]);
            r.gap = std::stoll(f[7]);
            r.mu_max = std::stoi(f[8]);
            r.mu_min = std::stoi(f[9]);
            r.rho_full = parse_rational(f[10]);
            r.lower_bound = std::stoll(f[11]);
            r.colors_used = std::stoll(f[12]);
            r.first_class = f[13] == "1";
            r.strategy = f[14];
            r.wall_ms = std::stod(f[15]);
            out.push_back(std::move(r));
        }
        return out;
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        TrialRecord r;
        r.cell = j.at("cell").get<int>();
        r.trial = j.at("trial").get<int>();
        r.seed = j.at("seed").get<uint64_t>();
        r.n = j.at("n").get<int>();
        r.m = j.at("m").get<long long>();
        r.delta = j.at("delta").get<long long>();
        r.d2 = j.at("d2").get<long long>();
        r.gap = j.at("gap").get<long long>();
        r.mu_max = j.at("mu_max").get<int>();
        r.mu_min = j.at("mu_min").get<int>();
        r.rho_full = parse_rational(j.at("rho_full").get<std::string>());
        r.lower_bound = j.at("lower_bound").get<long long>();
        r.colors_used = j.at("colors_used").get<long long>();
        r.first_class = j.at("first_class").get<bool>();
        r.strategy = j.at("strategy").get<std::string>();
        r.wall_ms = std::stod(j.at("wall_ms").get<std::string>());
        out.push_back(std::move(r));
    }
    return out;
}

void emit_summary(std::ostream& out, const std::vector<CellSummary>& cells, EmitFormat fmt) {
    auto hist_str = [](const CellSummary& s) {
        std::string h;
        for (size_t i = 0; i < s.strategy_histogram.size(); ++i) {
            if (i > 0) h += ';';
            h += s.strategy_histogram[i].first + ":" +
                 std::to_string(s.strategy_histogram[i].second);
        }
        return h;
    };
    if (fmt == EmitFormat::csv) {
        out << "cell,n,trials,mean_m,mean_gap,median_gap,mean_delta,median_delta,mean_colors,"
               "median_colors,first_class_fraction,strategies\n";
        for (const CellSummary& s : cells)
            out << s.cell << ',' << s.n << ',' << s.trials << ',' << s.mean_m << ',' << s.mean_gap
                << ',' << s.median_gap << ',' << s.mean_delta << ',' << s.median_delta << ','
                << s.mean_colors << ',' << s.median_colors << ',' << s.first_class_fraction.str()
                << ',' << hist_str(s) << '\n';
        return;
    }
    for (const CellSummary& s : cells) {
        nlohmann::ordered_json j;
        j["cell"] = s.cell;
        j["n"] = s.n;
        j["trials"] = s.trials;
        j["mean_m"] = s.mean_m;
        j["mean_gap"] = s.mean_gap;
        j["median_gap"] = s.median_gap;
        j["mean_delta"] = s.mean_delta;
        j["median_delta"] = s.median_delta;
        j["mean_colors"] = s.mean_colors;
        j["median_colors"] = s.median_colors;
        j["first_class_fraction"] = s.first_class_fraction.str();
        j["strategies"] = hist_str(s);
        out << j.dump() << '\n';
    }
}

}  // namespace mg
