#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cheeger/bounds.hpp"
#include "cheeger/charts.hpp"
#include "cheeger/cheeger_exact.hpp"
#include "cheeger/dataset.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/linear.hpp"
#include "cheeger/mlp.hpp"
#include "cheeger/record.hpp"
#include "cheeger/reports.hpp"
#include "cheeger/spectral.hpp"
#include "cheeger/train.hpp"

namespace cheeger::cli {

namespace detail {

inline std::filesystem::path output_root() {
    if (const char* env = std::getenv("CHEEGER_LAB_DIR")) return env;
    return "cheeger_lab_out";
}

inline std::vector<int> parse_size_list(const std::string& text) {
    std::vector<int> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            fail(errc::invalid_parameters, "bad size list entry '" + item + "'");
        }
    }
    if (sizes.empty()) fail(errc::invalid_parameters, "empty size list");
    return sizes;
}

inline std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

inline std::string fmt_precise(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Edge-list text: one "u v" pair per line, 0-indexed; blank lines and
// #-comments skipped. The graph must come out regular.
inline Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_failure, "cannot open graph file " + path.string());
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::stringstream ss(line);
        int u, v;
        if (!(ss >> u)) continue;  // blank
        if (!(ss >> v))
            fail(errc::invalid_parameters,
                 "line " + std::to_string(line_no) + " of " + path.string() + ": expected 'u v'");
        edges.push_back({u, v});
        max_vertex = std::max({max_vertex, u, v});
    }
    if (edges.empty()) fail(errc::invalid_parameters, "no edges in " + path.string());
    const int n = max_vertex + 1;
    if (n > kMaxVertices)
        fail(errc::invalid_parameters, "graph has " + std::to_string(n) + " vertices, cap is 64");
    Graph probe = graph_from_edges(n, 0, edges);
    probe.k = probe.degree_of(0);
    const auto violations = validate(probe);
    if (!violations.empty())
        fail(errc::invalid_parameters, "graph file is not a simple regular graph: " + violations.front());
    return probe;
}

struct GraphSource {
    std::string graph_file;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;

    Graph load() const {
        if (!graph_file.empty()) return load_edge_list(graph_file);
        if (n == 0 || k == 0)
            fail(errc::invalid_parameters, "need either --graph or both --n and --k");
        return generate_regular(n, k, Seed{seed, 0});
    }
};

// Dataset argument: either one records file, or a dataset directory plus the
// sizes to pull from it (pooled in listed order).
inline std::vector<GraphRecord> load_dataset_arg(const std::string& dataset,
                                                 const std::string& sizes) {
    if (dataset.empty()) fail(errc::invalid_parameters, "--dataset is required");
    const std::filesystem::path path = dataset;
    if (std::filesystem::is_directory(path)) {
        if (sizes.empty())
            fail(errc::invalid_parameters, "--dataset is a directory; pass --sizes to select records");
        std::vector<GraphRecord> pooled;
        for (int n : parse_size_list(sizes)) {
            auto records = load_records(path, n);
            pooled.insert(pooled.end(), records.begin(), records.end());
        }
        return pooled;
    }
    if (!std::filesystem::exists(path)) fail(errc::io_failure, "no such file: " + dataset);
    return read_records_jsonl(path);
}

inline nlohmann::json report_to_json(const TrainReport& r) {
    return nlohmann::json{{"final_train_loss", r.final_train_loss},
                          {"train_losses", r.train_losses},
                          {"val_losses", r.val_losses},
                          {"mean_dev_train", r.mean_dev_train},
                          {"mean_dev_val", r.mean_dev_val},
                          {"std_dev_val", r.std_dev_val},
                          {"best_epoch", r.best_epoch},
                          {"epochs_run", r.epochs_run}};
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_failure, "cannot open " + path.string() + " for writing");
    out << content;
    if (!out) fail(errc::io_failure, "short write to " + path.string());
}

}  // namespace detail

// Parses argv (program name excluded) and runs one subcommand.
// Exit status: 0 success, 1 usage error, 2 data or solver error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cheeger-constant toolkit: exact solver, spectral bounds, and learned estimators"};
    app.name("cheeger-lab");
    app.require_subcommand(1);

    // ---- generate ----------------------------------------------------------
    struct {
        std::string sizes;
        int n = 0;
        int k = 0;
        int count = 2000;
        std::uint64_t seed = 0;
        int threads = 1;
        std::string out_dir;
    } gen;
    {
        CLI::App* cmd = app.add_subcommand(
            "generate", "Build a dataset of solved random regular graphs (restartable)");
        auto* sizes_opt = cmd->add_option("--sizes", gen.sizes, "Comma-separated graph sizes");
        cmd->add_option("--n", gen.n, "Single graph size")->excludes(sizes_opt);
        cmd->add_option("--k", gen.k,
                        "Restrict to one degree (default: weighted mix over 3..min(8, n-2))");
        cmd->add_option("--count", gen.count, "Records per size")->capture_default_str();
        cmd->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
        cmd->add_option("--threads", gen.threads, "Worker threads")->capture_default_str();
        cmd->add_option("--out", gen.out_dir, "Dataset directory (default <root>/dataset)");
        cmd->callback([&] {
            DatasetConfig config;
            const std::vector<int> sizes =
                gen.sizes.empty() ? std::vector<int>{gen.n} : detail::parse_size_list(gen.sizes);
            if (sizes == std::vector<int>{0})
                fail(errc::invalid_parameters, "pass --sizes or --n");
            for (int n : sizes) {
                if (gen.k > 0)
                    config.plan.push_back(make_size_plan(n, gen.count, {gen.k}, {1.0}));
                else
                    config.plan.push_back(default_size_plan(n, gen.count));
            }
            config.master = gen.seed;
            config.threads = gen.threads;
            config.out_dir = gen.out_dir.empty() ? detail::output_root() / "dataset"
                                                  : std::filesystem::path(gen.out_dir);
            const DatasetSummary summary = build_dataset(config);
            for (const auto& s : summary.sizes)
                out << "n=" << s.n << ": " << s.records << " records (" << s.generated
                    << " new) -> " << s.path.string() << "\n";
        });
    }

    // ---- solve --------------------------------------------------------------
    struct {
        detail::GraphSource src;
        std::string format = "text";
    } solve;
    {
        CLI::App* cmd = app.add_subcommand("solve", "Exact Cheeger constant of one graph");
        cmd->add_option("--n", solve.src.n, "Vertex count (with --k)");
        cmd->add_option("--k", solve.src.k, "Degree (with --n)");
        cmd->add_option("--seed", solve.src.seed, "Generation seed")->capture_default_str();
        cmd->add_option("--graph", solve.src.graph_file, "Edge-list file ('u v' per line)");
        cmd->add_option("--format", solve.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->callback([&] {
            const Graph g = solve.src.load();
            const CheegerResult r = cheeger_exact(g);
            if (solve.format == "json") {
                nlohmann::json j{{"n", g.n},
                                 {"k", g.k},
                                 {"h", r.h},
                                 {"h_num", r.boundary},
                                 {"h_den", r.size},
                                 {"witness", r.witness_vertices()}};
                out << j.dump() << "\n";
            } else {
                out << "h = " << detail::fmt_g(r.h) << " (= " << r.boundary << "/" << r.size
                    << ")\n";
                out << "witness =";
                for (int v : r.witness_vertices()) out << " " << v;
                out << "\n";
            }
        });
    }

    // ---- spectrum -----------------------------------------------------------
    struct {
        detail::GraphSource src;
        int eigs = 0;
        std::string format = "text";
    } spec;
    {
        CLI::App* cmd = app.add_subcommand("spectrum", "Adjacency eigenvalues, sorted descending");
        cmd->add_option("--n", spec.src.n, "Vertex count (with --k)");
        cmd->add_option("--k", spec.src.k, "Degree (with --n)");
        cmd->add_option("--seed", spec.src.seed, "Generation seed")->capture_default_str();
        cmd->add_option("--graph", spec.src.graph_file, "Edge-list file ('u v' per line)");
        cmd->add_option("--eigs", spec.eigs, "Print only the top m eigenvalues");
        cmd->add_option("--format", spec.format, "Output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
        cmd->callback([&] {
            const Graph g = spec.src.load();
            const Spectrum s = spectrum(g);
            const int count = spec.eigs > 0 ? std::min(spec.eigs, s.size()) : s.size();
            if (spec.format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (int i = 0; i < count; ++i) j.push_back(s[i]);
                out << j.dump() << "\n";
            } else {
                const char* sep = spec.format == "csv" ? "," : " ";
                for (int i = 0; i < count; ++i)
                    out << (i ? sep : "") << detail::fmt_precise(s[i]);
                out << "\n";
            }
        });
    }

    // ---- bounds -------------------------------------------------------------
    struct {
        int k = 0;
        int n = 0;
        double lambda1 = 0;
        std::string format = "text";
    } bnd;
    {
        CLI::App* cmd = app.add_subcommand("bounds", "Spectral bounds on h(G) from k, n, lambda1");
        cmd->add_option("--k", bnd.k, "Degree")->required();
        cmd->add_option("--n", bnd.n, "Vertex count")->required();
        cmd->add_option("--lambda1", bnd.lambda1, "Second-largest adjacency eigenvalue")
            ->required();
        cmd->add_option("--format", bnd.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->callback([&] {
            const BoundSet b = bounds(bnd.k, bnd.n, bnd.lambda1);
            if (bnd.format == "json") {
                nlohmann::json j{{"lower", b.lower},
                                 {"upper_gap", b.upper_gap},
                                 {"upper_mohar_size", b.upper_mohar_size},
                                 {"upper_mohar_spec", b.upper_mohar_spec},
                                 {"upper", b.upper}};
                out << j.dump() << "\n";
            } else {
                out << "lower            " << detail::fmt_g(b.lower) << "\n";
                out << "upper_gap        " << detail::fmt_g(b.upper_gap) << "\n";
                out << "upper_mohar_size " << detail::fmt_g(b.upper_mohar_size) << "\n";
                out << "upper_mohar_spec " << detail::fmt_g(b.upper_mohar_spec) << "\n";
                out << "upper            " << detail::fmt_g(b.upper) << "\n";
            }
        });
    }

    // ---- fit ----------------------------------------------------------------
    struct {
        std::string dataset;
        std::string sizes;
        int eigs = 2;
        std::string out_path;
    } fit;
    {
        CLI::App* cmd =
            app.add_subcommand("fit", "Least-squares linear model on the top eigenvalues");
        cmd->add_option("--dataset", fit.dataset, "Records file or dataset directory")->required();
        cmd->add_option("--sizes", fit.sizes, "Sizes to pool when --dataset is a directory");
        cmd->add_option("--eigs", fit.eigs, "Number of top eigenvalues (1..4)")
            ->capture_default_str();
        cmd->add_option("--out", fit.out_path, "Model file (default <root>/models/linear.txt)");
        cmd->callback([&] {
            const auto records = detail::load_dataset_arg(fit.dataset, fit.sizes);
            const SampleSet samples = to_samples(records, fit.eigs);
            const LinearModel model = fit_linear(samples);
            const std::filesystem::path path = fit.out_path.empty()
                                                   ? detail::output_root() / "models" / "linear.txt"
                                                   : std::filesystem::path(fit.out_path);
            detail::write_file(path, serialize_linear(model));
            out << "fit m=" << fit.eigs << " on " << samples.size() << " records\n";
            out << "coeffs =";
            for (double c : model.coeffs) out << " " << detail::fmt_precise(c);
            out << "\nintercept = " << detail::fmt_precise(model.intercept) << "\n";
            out << "in-sample mean dh = " << detail::fmt_g(100 * mean_model_deviation(model, samples))
                << "%\n";
            out << "model -> " << path.string() << "\n";
        });
    }

    // ---- train --------------------------------------------------------------
    struct {
        std::string dataset;
        std::string sizes;
        int eigs = 2;
        int epochs = 0;
        std::string regime = "full";
        std::uint64_t seed = 0;
        std::string out_path;
    } trn;
    {
        CLI::App* cmd = app.add_subcommand("train", "Train the neural estimator on a dataset");
        cmd->add_option("--dataset", trn.dataset, "Records file or dataset directory")->required();
        cmd->add_option("--sizes", trn.sizes, "Sizes to pool when --dataset is a directory");
        cmd->add_option("--eigs", trn.eigs, "Number of top eigenvalues fed to the net")
            ->capture_default_str();
        cmd->add_option("--epochs", trn.epochs, "Override the regime's epoch count");
        cmd->add_option("--regime", trn.regime, "moderate (50 epochs) or full (early-stopped)")
            ->check(CLI::IsMember({"moderate", "full"}))
            ->capture_default_str();
        cmd->add_option("--seed", trn.seed, "Training seed")->capture_default_str();
        cmd->add_option("--out", trn.out_path, "Model file (default <root>/models/mlp.txt)");
        cmd->callback([&] {
            const auto records = detail::load_dataset_arg(trn.dataset, trn.sizes);
            const SampleSet samples = to_samples(records, trn.eigs);
            TrainConfig cfg = trn.regime == "moderate" ? TrainConfig::moderate({trn.seed, 0})
                                                       : TrainConfig::full({trn.seed, 0});
            if (trn.epochs > 0) cfg.epochs = trn.epochs;
            auto [model, report] = train(samples, cfg);
            const std::filesystem::path path = trn.out_path.empty()
                                                   ? detail::output_root() / "models" / "mlp.txt"
                                                   : std::filesystem::path(trn.out_path);
            detail::write_file(path, serialize_mlp(model));
            detail::write_file(path.string() + ".report.json",
                               detail::report_to_json(report).dump(2) + "\n");
            out << "trained " << trn.regime << " regime on " << samples.size() << " records ("
                << report.epochs_run << " epochs)\n";
            out << "final train MSE = " << detail::fmt_g(report.final_train_loss) << "\n";
            out << "mean dh train = " << detail::fmt_g(100 * report.mean_dev_train)
                << "%, val = " << detail::fmt_g(100 * report.mean_dev_val)
                << "%, val stddev = " << detail::fmt_g(100 * report.std_dev_val) << "%\n";
            out << "model -> " << path.string() << "\n";
        });
    }

    // ---- predict ------------------------------------------------------------
    struct {
        std::string model;
        std::string dataset;
        std::string sizes;
        std::string format = "text";
        std::string out_path;
    } prd;
    {
        CLI::App* cmd =
            app.add_subcommand("predict", "Estimate h for dataset records with a model file");
        cmd->add_option("--model", prd.model, "Linear or MLP model file")->required();
        cmd->add_option("--dataset", prd.dataset, "Records file or dataset directory")->required();
        cmd->add_option("--sizes", prd.sizes, "Sizes to pool when --dataset is a directory");
        cmd->add_option("--format", prd.format, "Output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", prd.out_path, "Write output here instead of stdout");
        cmd->callback([&] {
            std::ifstream in(prd.model);
            if (!in) fail(errc::io_failure, "cannot open model file " + prd.model);
            std::stringstream buffer;
            buffer << in.rdbuf();
            const std::string text = buffer.str();
            std::optional<LinearModel> linear;
            std::optional<MlpModel> mlp;
            int arity = 0;
            if (text.rfind("format linear-model/1", 0) == 0) {
                linear = parse_linear(text);
                arity = linear->arity();
            } else if (text.rfind("format mlp-model/1", 0) == 0) {
                mlp = parse_mlp(text);
                arity = mlp->arity();
            } else {
                fail(errc::io_failure, "unrecognized model format in " + prd.model);
            }
            const auto records = detail::load_dataset_arg(prd.dataset, prd.sizes);
            const SampleSet samples = to_samples(records, arity);
            std::string body;
            nlohmann::json array = nlohmann::json::array();
            double dev_sum = 0;
            for (std::size_t i = 0; i < samples.size(); ++i) {
                const double est = linear ? predict_linear(*linear, samples[i].inputs)
                                          : mlp_forward(*mlp, samples[i].inputs);
                const double dev = deviation(est, records[i].h);
                dev_sum += dev;
                if (prd.format == "json") {
                    array.push_back({{"n", records[i].n},
                                     {"k", records[i].k},
                                     {"index", records[i].index},
                                     {"h", records[i].h},
                                     {"estimate", est},
                                     {"deviation", dev}});
                } else {
                    const char* sep = prd.format == "csv" ? "," : " ";
                    body += std::to_string(records[i].n) + sep + std::to_string(records[i].k) +
                            sep + std::to_string(records[i].index) + sep +
                            detail::fmt_precise(records[i].h) + sep + detail::fmt_precise(est) +
                            sep + detail::fmt_precise(dev) + "\n";
                }
            }
            std::string output;
            if (prd.format == "json") {
                output = array.dump() + "\n";
            } else {
                const char* header = prd.format == "csv" ? "n,k,index,h,estimate,deviation\n"
                                                         : "n k index h estimate deviation\n";
                output = header + body;
            }
            if (prd.out_path.empty()) {
                out << output;
            } else {
                detail::write_file(prd.out_path, output);
                out << "predictions -> " << prd.out_path << "\n";
            }
            if (prd.format == "text")
                out << "mean dh = " << detail::fmt_g(100 * dev_sum / double(samples.size()))
                    << "% over " << samples.size() << " records\n";
        });
    }

    // ---- report -------------------------------------------------------------
    struct {
        std::string dataset;
        std::string sizes;
        std::string train_sizes;
        std::string regime;
        int eigs = 2;
        int trainings = 3;
        std::uint64_t seed = 0;
        std::string out_dir;
    } rpt;
    {
        CLI::App* cmd = app.add_subcommand(
            "report", "Bound table, regression and prediction experiments, charts");
        cmd->add_option("--dataset", rpt.dataset, "Dataset directory")->required();
        cmd->add_option("--sizes", rpt.sizes, "Sizes to analyze")->required();
        cmd->add_option("--train-sizes", rpt.train_sizes,
                        "Sizes used to train predictive models (default: all sizes)");
        cmd->add_option("--regime", rpt.regime,
                        "Also run the neural experiment in this regime (moderate|full)")
            ->check(CLI::IsMember({"moderate", "full"}));
        cmd->add_option("--eigs", rpt.eigs, "Eigenvalues fed to the net")->capture_default_str();
        cmd->add_option("--trainings", rpt.trainings, "Trainings per size before selection")
            ->capture_default_str();
        cmd->add_option("--seed", rpt.seed, "Experiment seed")->capture_default_str();
        cmd->add_option("--out", rpt.out_dir, "Report directory (default <root>/report)");
        cmd->callback([&] {
            const std::vector<int> sizes = detail::parse_size_list(rpt.sizes);
            const std::vector<int> train_sizes = rpt.train_sizes.empty()
                                                     ? sizes
                                                     : detail::parse_size_list(rpt.train_sizes);
            const RecordsBySize by_size = load_sizes(rpt.dataset, sizes);
            ChartBundle bundle;
            bundle.bound_deviations = bound_deviation_report(by_size, sizes);
            bundle.regression = regression_experiment(by_size, {1, 2, 3, 4}, train_sizes, sizes);
            if (!rpt.regime.empty())
                bundle.dnn = dnn_experiment(by_size, train_sizes, sizes,
                                            rpt.regime == "full" ? TrainingRegime::full
                                                                 : TrainingRegime::moderate,
                                            Seed{rpt.seed, 0}, rpt.trainings, rpt.eigs);
            const std::filesystem::path dir = rpt.out_dir.empty()
                                                  ? detail::output_root() / "report"
                                                  : std::filesystem::path(rpt.out_dir);
            const Manifest manifest = emit_charts(bundle, dir);
            out << format_table(*bundle.bound_deviations) << "\n";
            out << "wrote " << manifest.files.size() << " files to " << dir.string() << "\n";
            for (const auto& w : manifest.warnings) out << "warning: " << w << "\n";
        });
    }

    // ---- verify -------------------------------------------------------------
    struct {
        int max_n = 12;
        int samples = 200;
        std::uint64_t seed = 0;
    } vfy;
    {
        CLI::App* cmd = app.add_subcommand(
            "verify", "Oracle-equivalence and invariant sweep over random graphs");
        cmd->add_option("--max-n", vfy.max_n, "Largest size (6..16; the slow oracle caps at 16)")
            ->check(CLI::Range(6, 16))
            ->capture_default_str();
        cmd->add_option("--samples", vfy.samples, "Number of graphs")->capture_default_str();
        cmd->add_option("--seed", vfy.seed, "Sweep seed")->capture_default_str();
        cmd->callback([&] {
            Rng rng(Seed{vfy.seed, 0xBEEF});
            int done = 0;
            for (int i = 0; i < vfy.samples; ++i) {
                const int n = 6 + int(rng.below(std::uint64_t(vfy.max_n - 5)));
                std::vector<int> ks;
                for (int k = 3; k <= std::min(8, n - 2); ++k)
                    if ((n * k) % 2 == 0) ks.push_back(k);
                const int k = ks[std::size_t(rng.below(ks.size()))];
                const Graph g = generate_regular(n, k, Seed{vfy.seed, derive(0xF00D, i)});
                const auto violations = validate(g);
                if (!violations.empty())
                    fail(errc::invalid_parameters, "generated graph invalid: " + violations.front());
                const CheegerResult fast = cheeger_exact(g);
                const CheegerResult naive = cheeger_naive(g);
                if (fast.boundary * naive.size != naive.boundary * fast.size)
                    fail(errc::invalid_parameters,
                         "oracle mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
                if (edge_boundary(g, fast.witness) != fast.boundary)
                    fail(errc::invalid_parameters, "witness does not reproduce the boundary");
                const Spectrum s = spectrum(g);
                double sum = 0, sum_sq = 0;
                for (double v : s.values) {
                    sum += v;
                    sum_sq += v * v;
                }
                if (std::abs(s[0] - k) > 1e-8 || std::abs(sum) > 1e-8 * n ||
                    std::abs(sum_sq - double(n) * k) > 1e-8 * n * n)
                    fail(errc::invalid_spectrum, "spectrum invariants failed");
                const BoundSet b = bounds(k, n, s[1]);
                if (fast.h < b.lower - 1e-9 || fast.h > b.upper + 1e-9)
                    fail(errc::invalid_parameters, "bound sandwich violated");
                ++done;
            }
            out << "verify: " << done << " graphs OK (6 <= n <= " << vfy.max_n << ")\n";
        });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace cheeger::cli
