// Command-line front end: exact and sampled motif censuses, significance
// profiles against a configuration-model null ensemble, budget grid search,
// and synthetic corpus generation.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "homm/census.hpp"
#include "homm/errors.hpp"
#include "homm/hypergraph.hpp"
#include "homm/rng.hpp"
#include "homm/sampler.hpp"
#include "homm/significance.hpp"
#include "homm/synthetic.hpp"
#include "homm/version.hpp"

namespace {

using namespace homm;

struct CommonOptions {
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = hardware concurrency
    std::string format = "csv";
    std::string output = "-";
    int min_size = 2;
    int max_size = 5;
    bool integer_ids = false;
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int effective_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count) on up to `workers` threads. Results must be
// written into index-addressed slots so the outcome is worker-count
// independent.
template <class Fn>
void parallel_indices(std::size_t count, int workers, Fn&& fn) {
    const std::size_t pool_size =
        std::min(static_cast<std::size_t>(std::max(workers, 1)), count);
    if (pool_size <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (std::size_t w = 0; w < pool_size; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

Hypergraph load_input(const std::string& path, const CommonOptions& common) {
    LoadOptions opts;
    opts.min_size = common.min_size;
    opts.max_size = common.max_size;
    opts.require_integer_ids = common.integer_ids;
    if (path == "-") return load_hyperedge_list(std::cin, opts);
    return load_hyperedge_list_file(path, opts);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw config_error("cannot open output file: " + path);
    out << text;
}

std::string input_stem(const std::string& path) {
    if (path == "-") return "stdin";
    return std::filesystem::path(path).stem().string();
}

std::vector<double> parse_ratios(const std::string& text, int k) {
    std::vector<double> ratios;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) {
        try {
            ratios.push_back(std::stod(part));
        } catch (const std::exception&) {
            throw config_error("bad --ratios component: " + part);
        }
    }
    if (static_cast<int>(ratios.size()) != k - 2)
        throw config_error("--ratios needs " + std::to_string(k - 2) +
                           " components for k=" + std::to_string(k));
    return ratios;
}

MotifCensus run_exact(const Hypergraph& h, int k, const std::string& algo) {
    if (algo == "baseline") return count_baseline(h, k);
    return k == 3 ? count_exact_3(h) : count_exact_4(h);
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

struct CountOptions {
    std::string input;
    int k = 3;
    std::string algo = "efficient";
    std::uint64_t samples = 0;
    std::string ratios;
};

int cmd_count(const CountOptions& opt, const CommonOptions& common, const std::string& cmdline) {
    if (opt.algo != "baseline" && opt.algo != "efficient" && opt.algo != "sample")
        throw config_error("--algo must be baseline, efficient or sample");
    if (opt.algo == "sample") {
        if (opt.samples == 0) throw config_error("--algo sample requires -S > 0");
        if (opt.k < 3 || opt.k > 5) throw config_error("sampled censuses support k in 3..5");
    } else if (opt.k != 3 && opt.k != 4) {
        throw config_error("exact censuses support k in {3,4}; use --algo sample for k=5");
    }

    const Hypergraph h = load_input(opt.input, common);
    MetaLines meta{{"command", cmdline}, {"version", kVersion}, {"input", opt.input}};

    std::ostringstream body;
    if (opt.algo == "sample") {
        const SampleBudget budget =
            opt.ratios.empty()
                ? SampleBudget::split_default(h, opt.k, opt.samples)
                : SampleBudget::split(h, opt.k, opt.samples, parse_ratios(opt.ratios, opt.k));
        const EstimateCensus est =
            sample_census(h, opt.k, budget, derive_seed(common.seed, "sample"));
        meta.emplace_back("runtime_s", format_double(est.meta.runtime_seconds));
        if (common.format == "json")
            write_estimate_json(est, body, meta);
        else
            write_estimate_csv(est, body, meta);
    } else {
        const MotifCensus census = run_exact(h, opt.k, opt.algo);
        meta.emplace_back("runtime_s", format_double(census.meta.runtime_seconds));
        if (common.format == "json")
            write_census_json(census, body, meta);
        else
            write_census_csv(census, body, meta);
    }
    write_text(common.output, body.str());
    return 0;
}

// ---------------------------------------------------------------------------
// profile
// ---------------------------------------------------------------------------

struct ProfileOptions {
    std::vector<std::string> inputs;
    int k = 3;
    std::string algo = "efficient";
    std::uint64_t samples = 0;
    std::string ratios;
    int null_samples = 10;
    int swap_mult = 10;
    double epsilon = 4.0;
    std::string matrix_output;
};

int cmd_profile(const ProfileOptions& opt, const CommonOptions& common,
                const std::string& cmdline) {
    if (opt.inputs.empty()) throw config_error("profile needs at least one input");
    if (opt.algo == "sample" && opt.samples == 0)
        throw config_error("--algo sample requires -S > 0");
    if (opt.algo != "sample" && (opt.k < 3 || opt.k > 4))
        throw config_error("exact profiles support k in {3,4}; use --algo sample for k=5");

    const int workers = effective_workers(common.workers);
    std::vector<std::pair<std::string, SignificanceProfile>> profiles;
    std::vector<CensusCounts> reals;
    std::vector<std::vector<CensusCounts>> null_sets;

    for (std::size_t idx = 0; idx < opt.inputs.size(); ++idx) {
        const auto& path = opt.inputs[idx];
        const Hypergraph h = load_input(path, common);
        SampleBudget budget;
        if (opt.algo == "sample")
            budget = opt.ratios.empty()
                         ? SampleBudget::split_default(h, opt.k, opt.samples)
                         : SampleBudget::split(h, opt.k, opt.samples,
                                               parse_ratios(opt.ratios, opt.k));

        auto census_of = [&](const Hypergraph& g, std::uint64_t seed) -> CensusCounts {
            if (opt.algo == "sample") return sample_census(g, opt.k, budget, seed).as_counts();
            return to_counts(run_exact(g, opt.k, opt.algo));
        };

        reals.push_back(census_of(h, derive_seed(common.seed, "real", idx)));

        const NullEnsemble ensemble = sample_null_ensemble(
            h, opt.null_samples, derive_seed(common.seed, "ensemble", idx), opt.swap_mult);
        std::vector<CensusCounts> nulls(ensemble.replicas.size());
        parallel_indices(ensemble.replicas.size(), workers, [&](std::size_t r) {
            nulls[r] = census_of(ensemble.replicas[r],
                                 derive_seed(common.seed, "null-census", idx * 1000 + r));
        });
        null_sets.push_back(std::move(nulls));
    }

    // Order 5 profiles need one shared indexing across datasets.
    std::vector<CanonicalPattern> shared_patterns;
    if (opt.k == 5) {
        std::set<CanonicalPattern> seen;
        for (std::size_t i = 0; i < reals.size(); ++i) {
            for (const auto& [p, c] : reals[i]) seen.insert(p);
            for (const auto& nc : null_sets[i])
                for (const auto& [p, c] : nc) seen.insert(p);
        }
        shared_patterns.assign(seen.begin(), seen.end());
    }

    for (std::size_t i = 0; i < reals.size(); ++i) {
        SignificanceProfile p =
            opt.k == 5
                ? abundance_profile(opt.k, reals[i], null_sets[i], opt.epsilon, shared_patterns)
                : abundance_profile(opt.k, reals[i], null_sets[i], opt.epsilon);
        profiles.emplace_back(input_stem(opt.inputs[i]), std::move(p));
    }

    MetaLines meta{{"command", cmdline},
                   {"version", kVersion},
                   {"seed", std::to_string(common.seed)},
                   {"null-samples", std::to_string(opt.null_samples)},
                   {"algo", opt.algo}};

    std::ostringstream body;
    if (common.format == "json")
        write_profiles_json(profiles, body, meta);
    else
        write_profiles_csv(profiles, body, meta);

    if (profiles.size() >= 2) {
        const CorrelationMatrix matrix = profile_correlation_matrix(profiles);
        std::ostringstream mbody;
        if (common.format == "json")
            write_matrix_json(matrix, mbody, meta);
        else
            write_matrix_csv(matrix, mbody, meta);
        if (!opt.matrix_output.empty())
            write_text(opt.matrix_output, mbody.str());
        else
            body << '\n' << mbody.str();
    }
    write_text(common.output, body.str());
    return 0;
}

// ---------------------------------------------------------------------------
// metrics
// ---------------------------------------------------------------------------

struct MetricsOptions {
    std::string input;
    int k = 4;
    std::string s_list = "100,250,500,1000";
    std::string ratios;
    int reps = 10;
    int null_samples = 10;
    int swap_mult = 10;
    double epsilon = 4.0;
};

int cmd_metrics(const MetricsOptions& opt, const CommonOptions& common,
                const std::string& cmdline) {
    if (opt.k != 3 && opt.k != 4)
        throw config_error("metrics compares against exact censuses; k must be 3 or 4");
    std::vector<std::uint64_t> s_values;
    {
        std::stringstream ss(opt.s_list);
        std::string part;
        while (std::getline(ss, part, ','))
            try {
                s_values.push_back(std::stoull(part));
            } catch (const std::exception&) {
                throw config_error("bad --S-list component: " + part);
            }
        if (s_values.empty()) throw config_error("--S-list is empty");
    }

    const Hypergraph h = load_input(opt.input, common);
    const int workers = effective_workers(common.workers);

    const MotifCensus exact = run_exact(h, opt.k, "efficient");
    const NullEnsemble ensemble = sample_null_ensemble(
        h, opt.null_samples, derive_seed(common.seed, "ensemble"), opt.swap_mult);
    std::vector<CensusCounts> nulls(ensemble.replicas.size());
    parallel_indices(ensemble.replicas.size(), workers, [&](std::size_t r) {
        nulls[r] = to_counts(run_exact(ensemble.replicas[r], opt.k, "efficient"));
    });
    const SignificanceProfile exact_profile =
        abundance_profile(opt.k, to_counts(exact), nulls, opt.epsilon);

    std::ostringstream body;
    body << "# command: " << cmdline << '\n';
    body << "# version: " << kVersion << '\n';
    body << "# input: " << opt.input << '\n';
    body << "# seed: " << common.seed << '\n';
    body << "# reps: " << opt.reps << '\n';
    body << "# null-samples: " << opt.null_samples << '\n';
    body << "S,rho,maxae,mae,approx_runtime_s\n";

    for (std::uint64_t S : s_values) {
        const SampleBudget budget =
            opt.ratios.empty() ? SampleBudget::split_default(h, opt.k, S)
                               : SampleBudget::split(h, opt.k, S, parse_ratios(opt.ratios, opt.k));
        std::vector<double> rho(opt.reps), maxae(opt.reps), mae(opt.reps), rt(opt.reps);
        parallel_indices(opt.reps, workers, [&](std::size_t rep) {
            const EstimateCensus est = sample_census(
                h, opt.k, budget, derive_seed(common.seed, "metrics", S * 10000 + rep));
            const SignificanceProfile p =
                abundance_profile(opt.k, est.as_counts(), nulls, opt.epsilon);
            const ProfileMetrics m = profile_metrics(p, exact_profile);
            rho[rep] = m.rho.value_or(0.0);
            maxae[rep] = m.maxae;
            mae[rep] = m.mae;
            rt[rep] = est.meta.runtime_seconds;
        });
        auto mean = [&](const std::vector<double>& v) {
            double acc = 0.0;
            for (double x : v) acc += x;
            return acc / static_cast<double>(v.size());
        };
        body << S << ',' << format_double(mean(rho)) << ',' << format_double(mean(maxae)) << ','
             << format_double(mean(mae)) << ',' << format_double(mean(rt)) << '\n';
    }
    write_text(common.output, body.str());
    return 0;
}

// ---------------------------------------------------------------------------
// budget-search
// ---------------------------------------------------------------------------

struct BudgetOptions {
    std::vector<std::string> inputs;
    std::uint64_t base = 50;
    std::string a_grid = "1,2,3,4";
    std::string b_grid = "1,2,3,4";
    int reps = 5;
    int null_samples = 10;
    int swap_mult = 10;
    double epsilon = 4.0;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw config_error(std::string("bad ") + what + " component: " + part);
        }
    if (out.empty()) throw config_error(std::string(what) + " is empty");
    return out;
}

int cmd_budget_search(const BudgetOptions& opt, const CommonOptions& common,
                      const std::string& cmdline) {
    if (opt.inputs.empty()) throw config_error("budget-search needs at least one input");
    std::vector<Hypergraph> corpora;
    for (const auto& path : opt.inputs) corpora.push_back(load_input(path, common));

    const auto a_grid = parse_int_list(opt.a_grid, "--a-grid");
    const auto b_grid = parse_int_list(opt.b_grid, "--b-grid");
    const BudgetSearchResult res =
        budget_search(corpora, opt.base, a_grid, b_grid, opt.reps,
                      derive_seed(common.seed, "budget"), opt.null_samples, opt.epsilon,
                      opt.swap_mult);

    std::ostringstream body;
    if (common.format == "json") {
        body << "{\n  \"meta\": {\"version\": \"" << kVersion << "\", \"base_s2\": " << opt.base
             << ", \"seed\": " << common.seed << "},\n";
        body << "  \"best\": {\"s3_multiplier\": " << res.best_a
             << ", \"s4_multiplier\": " << res.best_b << "},\n  \"mean_rho\": [";
        for (std::size_t ai = 0; ai < res.a_values.size(); ++ai) {
            body << (ai ? ", [" : "[");
            for (std::size_t bi = 0; bi < res.b_values.size(); ++bi)
                body << (bi ? ", " : "") << format_double(res.mean_rho[ai][bi]);
            body << ']';
        }
        body << "]\n}\n";
    } else {
        body << "# command: " << cmdline << '\n';
        body << "# version: " << kVersion << '\n';
        body << "# seed: " << common.seed << '\n';
        body << "# base-s2: " << opt.base << '\n';
        body << "# reps: " << opt.reps << '\n';
        body << "# best: s3_mult=" << res.best_a << ",s4_mult=" << res.best_b << '\n';
        body << "s3_mult\\s4_mult";
        for (int b : res.b_values) body << ',' << b;
        body << '\n';
        for (std::size_t ai = 0; ai < res.a_values.size(); ++ai) {
            body << res.a_values[ai];
            for (std::size_t bi = 0; bi < res.b_values.size(); ++bi)
                body << ',' << format_double(res.mean_rho[ai][bi]);
            body << '\n';
        }
    }
    write_text(common.output, body.str());
    return 0;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateOptions {
    std::size_t n = 0;
    std::string sizes;
    double nesting = 0.0;
};

int cmd_generate(const GenerateOptions& opt, const CommonOptions& common,
                 const std::string& cmdline) {
    GenSpec spec;
    spec.n = opt.n;
    spec.nesting_prob = opt.nesting;
    spec.seed = derive_seed(common.seed, "generate");
    {
        std::stringstream ss(opt.sizes);
        std::string part;
        while (std::getline(ss, part, ',')) {
            const auto colon = part.find(':');
            if (colon == std::string::npos)
                throw config_error("--sizes expects size:count pairs, got: " + part);
            try {
                spec.edge_counts[std::stoi(part.substr(0, colon))] =
                    std::stoull(part.substr(colon + 1));
            } catch (const std::exception&) {
                throw config_error("bad --sizes component: " + part);
            }
        }
        if (spec.edge_counts.empty()) throw config_error("--sizes is empty");
    }

    const GenResult res = generate_hypergraph(spec);
    std::ostringstream body;
    body << "# command: " << cmdline << '\n';
    body << "# version: " << kVersion << '\n';
    body << "# seed: " << common.seed << '\n';
    body << "# vertices: " << res.hypergraph.vertex_count() << '\n';
    body << "# edges: " << res.hypergraph.edge_count() << '\n';
    body << "# nested-emitted: " << res.nested_emitted << '\n';
    body << "# dedup-collisions: " << res.dedup_collisions << '\n';
    serialize_hyperedge_list(res.hypergraph, body);
    write_text(common.output, body.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergraph motif mining: exact and sampled censuses of connected "
                 "sub-hypergraph patterns of orders 3-5, significance profiles against "
                 "a configuration-model null, budget search, and corpus generation."};
    app.set_version_flag("--version", std::string("homm ") + homm::kVersion);
    app.require_subcommand(1);

    const std::string cmdline = join_args(argc, argv);
    CommonOptions common;

    auto add_common = [&](CLI::App* sub, bool with_sizes = true) {
        sub->add_option("--seed", common.seed, "Master RNG seed (all randomness derives from it)");
        sub->add_option("--workers", common.workers,
                        "Worker threads (0 = hardware concurrency); results do not depend on it");
        sub->add_option("--format", common.format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("-o,--output", common.output, "Output path ('-' = stdout)");
        if (with_sizes) {
            sub->add_option("--min-size", common.min_size, "Smallest hyperedge size to ingest");
            sub->add_option("--max-size", common.max_size, "Largest hyperedge size to ingest");
            sub->add_flag("--integer-ids", common.integer_ids,
                          "Require integer vertex tokens (otherwise labels are interned)");
        }
    };

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "Motif census of one hypergraph");
    count->add_option("input", count_opt.input, "Hyperedge list file ('-' = stdin)")->required();
    count->add_option("-k", count_opt.k, "Motif order (3..5; 5 needs --algo sample)")->required();
    count->add_option("--algo", count_opt.algo, "baseline | efficient | sample");
    count->add_option("-S", count_opt.samples, "Total sample budget (sample algo)");
    count->add_option("--ratios", count_opt.ratios, "Budget ratios a:b[:c] for S_3.. vs S_2");
    add_common(count);

    ProfileOptions profile_opt;
    auto* profile = app.add_subcommand("profile", "Abundance profiles vs null ensemble");
    profile->add_option("inputs", profile_opt.inputs, "Hyperedge list files")->required();
    profile->add_option("-k", profile_opt.k, "Motif order")->required();
    profile->add_option("--algo", profile_opt.algo, "efficient | baseline | sample");
    profile->add_option("-S", profile_opt.samples, "Total sample budget (sample algo)");
    profile->add_option("--ratios", profile_opt.ratios, "Budget ratios a:b[:c]");
    profile->add_option("--null-samples", profile_opt.null_samples, "Null ensemble size");
    profile->add_option("--swap-mult", profile_opt.swap_mult, "Swap attempts per edge");
    profile->add_option("--epsilon", profile_opt.epsilon, "Abundance smoothing constant");
    profile->add_option("--matrix-output", profile_opt.matrix_output,
                        "Correlation matrix path (default: appended to output)");
    add_common(profile);

    MetricsOptions metrics_opt;
    auto* metrics =
        app.add_subcommand("metrics", "Accuracy of sampled profiles against the exact profile");
    metrics->add_option("input", metrics_opt.input, "Hyperedge list file")->required();
    metrics->add_option("-k", metrics_opt.k, "Motif order (3 or 4)");
    metrics->add_option("--S-list", metrics_opt.s_list, "Comma-separated sample budgets");
    metrics->add_option("--ratios", metrics_opt.ratios, "Budget ratios a:b[:c]");
    metrics->add_option("--reps", metrics_opt.reps, "Repetitions per budget");
    metrics->add_option("--null-samples", metrics_opt.null_samples, "Null ensemble size");
    metrics->add_option("--swap-mult", metrics_opt.swap_mult, "Swap attempts per edge");
    metrics->add_option("--epsilon", metrics_opt.epsilon, "Abundance smoothing constant");
    add_common(metrics);

    BudgetOptions budget_opt;
    auto* budget =
        app.add_subcommand("budget-search", "Grid search over per-size sample budget multipliers");
    budget->add_option("inputs", budget_opt.inputs, "Hyperedge list files")->required();
    budget->add_option("--base", budget_opt.base, "S_2 base sample count");
    budget->add_option("--a-grid", budget_opt.a_grid, "S_3 multipliers (comma list)");
    budget->add_option("--b-grid", budget_opt.b_grid, "S_4 multipliers (comma list)");
    budget->add_option("--reps", budget_opt.reps, "Repetitions per cell");
    budget->add_option("--null-samples", budget_opt.null_samples, "Null ensemble size");
    budget->add_option("--swap-mult", budget_opt.swap_mult, "Swap attempts per edge");
    budget->add_option("--epsilon", budget_opt.epsilon, "Abundance smoothing constant");
    add_common(budget);

    GenerateOptions gen_opt;
    auto* gen = app.add_subcommand("generate", "Synthetic hypergraph corpus");
    gen->add_option("--n", gen_opt.n, "Vertex count")->required();
    gen->add_option("--sizes", gen_opt.sizes, "size:count pairs, e.g. 2:5500,3:2100")->required();
    gen->add_option("--nesting", gen_opt.nesting, "Nested sub-edge probability per edge");
    add_common(gen, /*with_sizes=*/false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help/message
        return code == 0 ? 0 : 1;     // usage errors exit 1
    }

    try {
        if (count->parsed()) return cmd_count(count_opt, common, cmdline);
        if (profile->parsed()) return cmd_profile(profile_opt, common, cmdline);
        if (metrics->parsed()) return cmd_metrics(metrics_opt, common, cmdline);
        if (budget->parsed()) return cmd_budget_search(budget_opt, common, cmdline);
        if (gen->parsed()) return cmd_generate(gen_opt, common, cmdline);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
