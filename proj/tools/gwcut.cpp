// gwcut: Goemans-Williamson MaxCut clustering pipeline.
//
// Subcommands: cluster, recurse, vectorize, gen, oracle, alpha.
// Exit codes: 0 success, 2 input/validation error, 3 numeric error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwcut/csv.hpp"
#include "gwcut/datasets.hpp"
#include "gwcut/errors.hpp"
#include "gwcut/pipeline.hpp"
#include "gwcut/rounding.hpp"
#include "gwcut/svg.hpp"
#include "gwcut/vectorizer.hpp"

namespace fs = std::filesystem;
using njson = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Shared plumbing

struct Timer {
    std::map<std::string, double> stages;

    template <class F>
    auto time(const std::string& name, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            stages[name] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        } else {
            auto result = f();
            stages[name] += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return result;
        }
    }
};

struct OutDir {
    fs::path root;
    std::vector<std::string> artifacts;

    explicit OutDir(const fs::path& p) : root(p) {
        std::error_code ec;
        fs::create_directories(root, ec);
        if (ec) throw gwcut::input_error("cannot create output directory " + root.string() +
                                         ": " + ec.message());
    }

    fs::path file(const std::string& name) {
        artifacts.push_back(name);
        return root / name;
    }
};

void write_json(const fs::path& path, const njson& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gwcut::input_error("cannot write file: " + path.string());
    out << j.dump(2) << '\n';
}

void write_manifest(OutDir& dir, const std::string& command, const njson& config,
                    std::uint64_t seed, const Timer& timer) {
    njson manifest;
    manifest["command"] = command;
    manifest["seed"] = seed;
    manifest["config"] = config;
    manifest["artifacts"] = dir.artifacts;
    njson timings;
    for (const auto& [stage, secs] : timer.stages) timings[stage] = secs;
    manifest["timings"] = timings;
    write_json(dir.root / "manifest.json", manifest);
}

// Config-file merge: a key from the --config JSON applies only when the flag
// was not given on the command line.
class ConfigFile {
public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw gwcut::input_error("cannot open config file: " + path);
        try {
            in >> json_;
        } catch (const nlohmann::json::exception& e) {
            throw gwcut::input_error("config file " + path + ": " + e.what());
        }
        if (!json_.is_object())
            throw gwcut::input_error("config file " + path + " must hold a JSON object");
    }

    template <class T>
    void merge(const CLI::App& app, const std::string& flag, T& target) const {
        if (json_.is_null()) return;
        const CLI::Option* opt = app.get_option_no_throw(flag);
        if (opt == nullptr || opt->count() > 0) return;
        const std::string key = flag.substr(2); // strip "--"
        const auto it = json_.find(key);
        if (it == json_.end()) return;
        try {
            if constexpr (std::is_same_v<T, std::string>) {
                target = it->template get<std::string>();
            } else if constexpr (std::is_same_v<T, bool>) {
                target = it->template get<bool>();
            } else {
                target = it->template get<T>();
            }
        } catch (const nlohmann::json::exception&) {
            throw gwcut::input_error("config key '" + key + "' has the wrong type");
        }
    }

private:
    nlohmann::json json_;
};

gwcut::Metric parse_metric(const std::string& name) {
    if (name == "euclidean") return gwcut::Metric::euclidean;
    if (name == "squared_euclidean") return gwcut::Metric::squared_euclidean;
    throw gwcut::input_error("unknown metric '" + name +
                             "' (expected euclidean or squared_euclidean)");
}

gwcut::RecurseOn parse_recurse_on(const std::string& name) {
    if (name == "pca") return gwcut::RecurseOn::pca;
    if (name == "raw-embedding" || name == "raw_embedding")
        return gwcut::RecurseOn::raw_embedding;
    throw gwcut::input_error("unknown recurse-on mode '" + name +
                             "' (expected pca or raw-embedding)");
}

// Common flags of the clustering commands.
struct RunOptions {
    std::string points_path;
    std::string matrix_path;
    std::string gen_name;
    bool header = false;
    std::string metric = "euclidean";
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    unsigned threads = 1;
    std::size_t pad_to = 0;
    std::size_t rank = 0;
    std::size_t max_sweeps = 500;
    double objective_tol = 1e-7;
    std::string out_dir = "out";
    std::string config_path;
    // generator parameters
    std::size_t gen_count = 100;
    double gen_noise = 0.05;
    double gen_separation = 4.0;
    double gen_edge = 1.0;
    std::uint64_t gen_seed = 0;
    bool gen_seed_given = false;
};

void add_shared_flags(CLI::App* cmd, RunOptions& opt) {
    cmd->add_option("--seed", opt.seed, "Random seed for solver and rounding");
    cmd->add_option("--trials", opt.trials, "Number of rounding hyperplanes");
    cmd->add_option("--threads", opt.threads,
                    "Worker threads for rounding trials (results are identical)");
    cmd->add_option("--out-dir", opt.out_dir, "Output directory");
    cmd->add_option("--config", opt.config_path, "JSON file of default flag values");
}

void add_solver_flags(CLI::App* cmd, RunOptions& opt) {
    cmd->add_option("--rank", opt.rank, "Embedding rank (0 = full, one row per point)");
    cmd->add_option("--max-sweeps", opt.max_sweeps, "Coordinate-descent sweep cap");
    cmd->add_option("--objective-tol", opt.objective_tol,
                    "Relative objective change that counts as converged");
    cmd->add_option("--pad-to", opt.pad_to,
                    "Zero-pad the weight matrix to this dimension (>= point count)");
}

void add_input_flags(CLI::App* cmd, RunOptions& opt, bool with_gen) {
    cmd->add_option("--points", opt.points_path, "CSV of points, one per row");
    cmd->add_option("--matrix", opt.matrix_path, "CSV of a symmetric weight matrix");
    cmd->add_flag("--header", opt.header, "Skip the first row of the points CSV");
    cmd->add_option("--metric", opt.metric, "Distance metric: euclidean | squared_euclidean");
    if (with_gen) {
        cmd->add_option("--gen", opt.gen_name, "Generate the input: moons | two_cubes");
        cmd->add_option("--count", opt.gen_count, "Generated point count (even)");
        cmd->add_option("--noise", opt.gen_noise, "Moons Gaussian noise scale");
        cmd->add_option("--separation", opt.gen_separation, "Two-cubes center separation");
        cmd->add_option("--edge", opt.gen_edge, "Two-cubes edge length");
        cmd->add_option("--gen-seed", opt.gen_seed, "Generator seed (defaults to --seed)");
    }
}

void merge_shared(const CLI::App& cmd, const ConfigFile& cfg, RunOptions& opt) {
    cfg.merge(cmd, "--seed", opt.seed);
    cfg.merge(cmd, "--trials", opt.trials);
    cfg.merge(cmd, "--threads", opt.threads);
    cfg.merge(cmd, "--out-dir", opt.out_dir);
    cfg.merge(cmd, "--metric", opt.metric);
    cfg.merge(cmd, "--rank", opt.rank);
    cfg.merge(cmd, "--max-sweeps", opt.max_sweeps);
    cfg.merge(cmd, "--objective-tol", opt.objective_tol);
    cfg.merge(cmd, "--pad-to", opt.pad_to);
}

gwcut::PipelineConfig pipeline_config(const RunOptions& opt, std::size_t iterations,
                                      std::size_t pca_dim, const std::string& recurse_on) {
    gwcut::PipelineConfig cfg;
    cfg.iterations = iterations;
    cfg.pca_dim = pca_dim;
    cfg.pad_to = opt.pad_to;
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    cfg.solver.rank = opt.rank;
    cfg.solver.max_sweeps = opt.max_sweeps;
    cfg.solver.objective_tol = opt.objective_tol;
    cfg.metric = parse_metric(opt.metric);
    cfg.recurse_on = parse_recurse_on(recurse_on);
    cfg.threads = opt.threads;
    return cfg;
}

struct LoadedInput {
    std::optional<gwcut::PointSet> points;
    std::optional<gwcut::WeightMatrix> weights;
    std::vector<int> labels; // nonempty only for generated data
    std::string description;
};

LoadedInput load_input(const RunOptions& opt, bool allow_gen) {
    const int sources = int(!opt.points_path.empty()) + int(!opt.matrix_path.empty()) +
                        int(allow_gen && !opt.gen_name.empty());
    if (sources == 0)
        throw gwcut::input_error(allow_gen ? "no input: give --points, --matrix or --gen"
                                           : "no input: give --points or --matrix");
    if (sources > 1) throw gwcut::input_error("give exactly one input source");

    LoadedInput in;
    if (!opt.points_path.empty()) {
        in.points = gwcut::read_points_csv(opt.points_path, opt.header);
        in.description = opt.points_path;
    } else if (!opt.matrix_path.empty()) {
        in.weights = gwcut::validate_weights(gwcut::read_matrix_csv(opt.matrix_path));
        in.description = opt.matrix_path;
    } else {
        const std::uint64_t gseed = opt.gen_seed_given ? opt.gen_seed : opt.seed;
        gwcut::LabeledPoints data;
        if (opt.gen_name == "moons") {
            data = gwcut::gen_moons(opt.gen_count, opt.gen_noise, gseed);
        } else if (opt.gen_name == "two_cubes" || opt.gen_name == "cubes") {
            data = gwcut::gen_two_cubes(opt.gen_count, opt.gen_separation, opt.gen_edge, gseed);
        } else {
            throw gwcut::input_error("unknown generator '" + opt.gen_name +
                                     "' (expected moons or two_cubes)");
        }
        in.points = std::move(data.points);
        in.labels = std::move(data.labels);
        in.description = opt.gen_name;
    }
    return in;
}

njson quality_json(const gwcut::ClusterQuality& q) {
    njson j;
    j["within_cluster_variance"] = q.within_cluster_variance;
    j["between_centroid_distance"] = q.between_centroid_distance;
    j["separation_ratio"] = q.separation_ratio;
    return j;
}

njson report_json(const gwcut::RoundingReport& report) {
    njson j;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    njson best;
    best["cut_value"] = report.best.cut_value;
    best["signs"] = report.best.signs;
    j["best"] = best;
    j["sampled_mean_cut"] = report.sampled_mean_cut;
    j["closed_form_expected_cut"] = report.closed_form_expected_cut;
    j["relaxed_objective"] = report.relaxed_objective;
    j["ratio_to_relaxation"] = report.ratio_to_relaxation;
    return j;
}

njson embedding_sidecar(const gwcut::IterationResult& res) {
    njson j;
    j["ambient_dim"] = res.embedding.ambient_dim;
    j["count"] = res.embedding.count;
    j["objective"] = res.report.relaxed_objective;
    j["converged"] = res.solver_converged;
    j["sweeps"] = res.solver_sweeps;
    return j;
}

void warn_flags(const gwcut::IterationResult& res) {
    if (res.degenerate_input)
        std::cerr << "warning: degenerate input, total weight is zero\n";
    if (!res.solver_converged)
        std::cerr << "warning: solver hit the sweep cap before converging\n";
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_alpha() {
    const auto am = gwcut::alpha_minimum();
    std::cout << "alpha = " << gwcut::format_double(am.alpha) << "\n"
              << "theta0 = " << gwcut::format_double(am.theta) << "\n";
    return 0;
}

int cmd_oracle(const RunOptions& opt) {
    Timer timer;
    const auto w = timer.time("load", [&] {
        return gwcut::validate_weights(gwcut::read_matrix_csv(opt.matrix_path));
    });
    const auto exact = timer.time("enumerate", [&] { return gwcut::brute_force_maxcut(w); });

    std::cout << "maxcut = " << gwcut::format_double(exact.value) << "\n";
    std::cout << "partitions_enumerated = " << exact.enumerated << "\n";
    std::cout << "signs =";
    for (const int s : exact.partition.signs) std::cout << ' ' << s;
    std::cout << "\n";

    OutDir dir(opt.out_dir);
    timer.time("write", [&] {
        gwcut::write_partition_csv(dir.file("partition.csv"), exact.partition);
    });
    njson config;
    config["matrix"] = opt.matrix_path;
    write_manifest(dir, "oracle", config, 0, timer);
    return 0;
}

int cmd_gen(const RunOptions& opt, const std::string& dataset) {
    Timer timer;
    RunOptions gen_opt = opt;
    gen_opt.gen_name = dataset;
    const auto in = timer.time("generate", [&] { return load_input(gen_opt, true); });

    OutDir dir(opt.out_dir);
    timer.time("write", [&] {
        gwcut::write_points_csv(dir.file("points.csv"), *in.points);
        gwcut::write_labels_csv(dir.file("labels.csv"), in.labels);
    });

    njson config;
    config["dataset"] = dataset;
    config["count"] = opt.gen_count;
    if (dataset == "moons") {
        config["noise"] = opt.gen_noise;
    } else {
        config["separation"] = opt.gen_separation;
        config["edge"] = opt.gen_edge;
    }
    const std::uint64_t gseed = opt.gen_seed_given ? opt.gen_seed : opt.seed;
    config["seed"] = gseed;
    write_manifest(dir, "gen", config, gseed, timer);
    std::cout << "wrote " << in.points->count() << " points to " << dir.root.string() << "\n";
    return 0;
}

njson run_options_json(const RunOptions& opt, const LoadedInput& in) {
    njson config;
    config["input"] = in.description;
    config["metric"] = opt.metric;
    config["trials"] = opt.trials;
    config["threads"] = opt.threads;
    config["pad_to"] = opt.pad_to;
    config["rank"] = opt.rank;
    config["max_sweeps"] = opt.max_sweeps;
    config["objective_tol"] = opt.objective_tol;
    return config;
}

void write_iteration_artifacts(OutDir& dir, const gwcut::IterationResult& res,
                               const std::string& prefix) {
    if (res.points.count() > 0)
        gwcut::write_points_csv(dir.file(prefix + "points.csv"), res.points);
    gwcut::write_partition_csv(dir.file(prefix + "partition.csv"), res.partition);
    gwcut::write_points_csv(dir.file(prefix + "pca.csv"), res.pca_coords);
    njson quality = quality_json(res.quality);
    quality["explained_variance"] = res.explained_variance;
    write_json(dir.file(prefix + "quality.json"), quality);
    gwcut::write_scatter_svg(dir.file(prefix + "scatter.svg"), res.pca_coords,
                             res.partition.signs, "PC1", "PC2");
}

int cmd_cluster(const RunOptions& opt, std::size_t pca_dim) {
    Timer timer;
    const auto in = timer.time("load", [&] { return load_input(opt, true); });
    const auto cfg = pipeline_config(opt, 1, pca_dim, "pca");
    const auto res = timer.time("solve", [&] {
        return in.points ? gwcut::run_gwa_once(*in.points, cfg)
                         : gwcut::run_gwa_once(*in.weights, cfg);
    });
    warn_flags(res);

    OutDir dir(opt.out_dir);
    timer.time("write", [&] {
        gwcut::write_partition_csv(dir.file("partition.csv"), res.partition);
        write_json(dir.file("report.json"), report_json(res.report));
        gwcut::write_embedding_csv(dir.file("embedding.csv"), res.embedding);
        write_json(dir.file("embedding.json"), embedding_sidecar(res));
        write_json(dir.file("quality.json"), quality_json(res.quality));
        gwcut::write_scatter_svg(dir.file("scatter.svg"), res.pca_coords, res.partition.signs,
                                 "PC1", "PC2");
    });

    njson config = run_options_json(opt, in);
    config["pca_dim"] = pca_dim;
    write_manifest(dir, "cluster", config, opt.seed, timer);

    std::cout << "cut = " << gwcut::format_double(res.partition.cut_value)
              << "  relaxed_objective = " << gwcut::format_double(res.report.relaxed_objective)
              << "  ratio = " << gwcut::format_double(res.report.ratio_to_relaxation) << "\n";
    return 0;
}

int cmd_recurse(const RunOptions& opt, std::size_t iterations, std::size_t pca_dim,
                const std::string& recurse_on) {
    Timer timer;
    const auto in = timer.time("load", [&] { return load_input(opt, true); });
    const auto cfg = pipeline_config(opt, iterations, pca_dim, recurse_on);
    const auto rec = timer.time("solve", [&] {
        return in.points ? gwcut::run_recursive(*in.points, cfg)
                         : gwcut::run_recursive(*in.weights, cfg);
    });
    if (rec.degenerate_stop)
        std::cerr << "warning: recursion stopped early, PCA coordinates collapsed\n";

    OutDir dir(opt.out_dir);
    njson summary;
    summary["degenerate_stop"] = rec.degenerate_stop;
    njson iters = njson::array();
    timer.time("write", [&] {
        for (const auto& res : rec.iterations) {
            warn_flags(res);
            const std::string prefix = "iter_" + std::to_string(res.index) + "_";
            write_iteration_artifacts(dir, res, prefix);
            njson entry;
            entry["index"] = res.index;
            entry["cut_value"] = res.partition.cut_value;
            entry["relaxed_objective"] = res.report.relaxed_objective;
            entry["expected_cut"] = res.report.closed_form_expected_cut;
            entry["converged"] = res.solver_converged;
            entry["sweeps"] = res.solver_sweeps;
            entry["quality"] = quality_json(res.quality);
            iters.push_back(entry);
        }
    });
    summary["iterations"] = iters;
    write_json(dir.root / "summary.json", summary);
    dir.artifacts.push_back("summary.json");

    njson config = run_options_json(opt, in);
    config["iterations"] = iterations;
    config["pca_dim"] = pca_dim;
    config["recurse_on"] = recurse_on;
    write_manifest(dir, "recurse", config, opt.seed, timer);

    for (const auto& res : rec.iterations)
        std::cout << "iter " << res.index << ": cut = "
                  << gwcut::format_double(res.partition.cut_value)
                  << "  separation_ratio = "
                  << gwcut::format_double(res.quality.separation_ratio) << "\n";
    return 0;
}

int cmd_vectorize(const RunOptions& opt, const std::string& corpus,
                  const std::string& lex_side_effects, const std::string& lex_humans,
                  std::size_t window, const std::string& targets_csv, bool then_cluster,
                  std::size_t pca_dim) {
    Timer timer;

    gwcut::TargetList targets;
    if (!targets_csv.empty()) {
        targets.anchor.clear();
        targets.contexts.clear();
        std::size_t start = 0;
        while (start <= targets_csv.size()) {
            const auto comma = targets_csv.find(',', start);
            const std::string tok = targets_csv.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (targets.anchor.empty())
                targets.anchor = tok;
            else
                targets.contexts.push_back(tok);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    gwcut::validate_targets(targets);

    const auto lex = timer.time("load", [&] {
        return gwcut::Lexicons::from_files(lex_side_effects, lex_humans);
    });
    const auto docs = timer.time("load", [&] {
        const fs::path path = corpus;
        return fs::is_directory(path) ? gwcut::read_corpus_dir(path)
                                      : gwcut::read_corpus_jsonl(path);
    });
    const auto vectors = timer.time("vectorize", [&] {
        return gwcut::vectorize_corpus(docs, targets, lex, window);
    });

    OutDir dir(opt.out_dir);
    timer.time("write", [&] {
        gwcut::write_vectors_csv(dir.file("vectors.csv"), targets, vectors.vectors);
    });

    njson config;
    config["corpus"] = corpus;
    config["window"] = window;
    config["targets"] = targets.anchor;
    for (const auto& c : targets.contexts) config["targets"] = config["targets"].get<std::string>() + "," + c;
    config["lexicon_side_effects"] = lex_side_effects;
    config["lexicon_human"] = lex_humans;
    config["then_cluster"] = then_cluster;

    if (then_cluster) {
        const auto cfg = pipeline_config(opt, 1, pca_dim, "pca");
        const auto res = timer.time("solve", [&] {
            return gwcut::run_gwa_once(vectors.points, cfg);
        });
        warn_flags(res);
        timer.time("write", [&] {
            gwcut::write_partition_csv(dir.file("partition.csv"), res.partition);
            write_json(dir.file("report.json"), report_json(res.report));
            gwcut::write_scatter_svg(dir.file("scatter.svg"), res.pca_coords,
                                     res.partition.signs, "PC1", "PC2");
        });
        std::cout << "cut = " << gwcut::format_double(res.partition.cut_value) << "\n";
    }

    write_manifest(dir, "vectorize", config, opt.seed, timer);
    std::cout << "vectorized " << vectors.vectors.size() << " documents\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goemans-Williamson MaxCut clustering with recursive and padded variants"};
    app.require_subcommand(1);

    RunOptions opt;
    std::size_t iterations = 4;
    std::size_t pca_dim = 2;
    std::string recurse_on = "pca";
    std::string dataset;
    std::string corpus;
    std::string lex_side_effects;
    std::string lex_humans;
    std::size_t window = 10;
    std::string targets_csv;
    bool then_cluster = false;

    auto* cluster = app.add_subcommand("cluster", "One GWA pass: weights, relaxation, rounding");
    add_input_flags(cluster, opt, true);
    add_shared_flags(cluster, opt);
    add_solver_flags(cluster, opt);
    cluster->add_option("--pca-dim", pca_dim, "PCA dimension for the scatter output (2 or 3)");

    auto* recurse = app.add_subcommand("recurse", "Recursive GWA over PCA re-embeddings");
    add_input_flags(recurse, opt, true);
    add_shared_flags(recurse, opt);
    add_solver_flags(recurse, opt);
    recurse->add_option("--iterations", iterations, "Recursion depth, 1 to 5");
    recurse->add_option("--pca-dim", pca_dim, "PCA dimension fed to the next iteration");
    recurse->add_option("--recurse-on", recurse_on, "Recurse on: pca | raw-embedding");

    auto* vectorize = app.add_subcommand("vectorize",
                                         "Conditional-probability article vectors");
    vectorize->add_option("corpus", corpus, "Directory of .txt files or a JSON-lines file")
        ->required();
    vectorize->add_option("--lexicon-side-effects", lex_side_effects,
                          "Phrase file replaced by the side-effect token");
    vectorize->add_option("--lexicon-human", lex_humans,
                          "Phrase file replaced by the human token");
    vectorize->add_option("--window", window, "Co-occurrence window size (even)");
    vectorize->add_option("--targets", targets_csv,
                          "Comma-separated anchor,context,... token list");
    vectorize->add_flag("--then-cluster", then_cluster, "Cluster the vectors afterwards");
    add_shared_flags(vectorize, opt);
    add_solver_flags(vectorize, opt);
    vectorize->add_option("--pca-dim", pca_dim, "PCA dimension for the chained clustering");

    auto* gen = app.add_subcommand("gen", "Write a synthetic dataset");
    gen->add_option("--dataset", dataset, "moons | two_cubes")->required();
    gen->add_option("--count", opt.gen_count, "Point count (even)");
    gen->add_option("--noise", opt.gen_noise, "Moons Gaussian noise scale");
    gen->add_option("--separation", opt.gen_separation, "Two-cubes center separation");
    gen->add_option("--edge", opt.gen_edge, "Two-cubes edge length");
    gen->add_option("--gen-seed", opt.gen_seed, "Generator seed (defaults to --seed)");
    add_shared_flags(gen, opt);

    auto* oracle = app.add_subcommand("oracle", "Exact MaxCut by enumeration (n <= 22)");
    oracle->add_option("--matrix", opt.matrix_path, "CSV of a symmetric weight matrix")
        ->required();
    add_shared_flags(oracle, opt);

    app.add_subcommand("alpha", "Print the rounding guarantee constant and its minimizer");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();

        ConfigFile cfg_file;
        const CLI::Option* config_opt = sub->get_option_no_throw("--config");
        if (config_opt != nullptr && config_opt->count() > 0) cfg_file.load(opt.config_path);
        merge_shared(*sub, cfg_file, opt);
        cfg_file.merge(*sub, "--iterations", iterations);
        cfg_file.merge(*sub, "--pca-dim", pca_dim);
        cfg_file.merge(*sub, "--recurse-on", recurse_on);
        cfg_file.merge(*sub, "--window", window);
        cfg_file.merge(*sub, "--targets", targets_csv);
        cfg_file.merge(*sub, "--points", opt.points_path);
        cfg_file.merge(*sub, "--matrix", opt.matrix_path);
        cfg_file.merge(*sub, "--gen", opt.gen_name);
        cfg_file.merge(*sub, "--count", opt.gen_count);
        cfg_file.merge(*sub, "--noise", opt.gen_noise);
        cfg_file.merge(*sub, "--separation", opt.gen_separation);
        cfg_file.merge(*sub, "--edge", opt.gen_edge);
        const CLI::Option* gen_seed_opt = sub->get_option_no_throw("--gen-seed");
        opt.gen_seed_given = gen_seed_opt != nullptr && gen_seed_opt->count() > 0;

        if (sub->get_name() == "alpha") return cmd_alpha();
        if (sub->get_name() == "oracle") return cmd_oracle(opt);
        if (sub->get_name() == "gen") return cmd_gen(opt, dataset);
        if (sub->get_name() == "cluster") return cmd_cluster(opt, pca_dim);
        if (sub->get_name() == "recurse") return cmd_recurse(opt, iterations, pca_dim, recurse_on);
        if (sub->get_name() == "vectorize")
            return cmd_vectorize(opt, corpus, lex_side_effects, lex_humans, window, targets_csv,
                                 then_cluster, pca_dim);
        throw gwcut::input_error("unknown subcommand");
    } catch (const gwcut::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gwcut::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
