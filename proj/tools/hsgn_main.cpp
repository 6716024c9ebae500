#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsgn/errors.hpp"
#include "hsgn/pipeline.hpp"

namespace {

std::vector<std::string> split_grid(const std::string& text) {
    std::vector<std::string> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty()) values.push_back(item);
    return values;
}

void print_summary(const hsgn::RunReport& report) {
    std::printf("graph: %zu nodes, %zu edges\n", report.nodes, report.edges);
    if (report.ground_truth_duplicates > 0)
        std::printf("warning: %d node(s) listed in more than one community; "
                    "first assignment kept\n",
                    report.ground_truth_duplicates);
    if (report.reconstruction.passes.empty()) {
        std::printf("reconstruction: disabled\n");
    } else {
        const auto& passes = report.reconstruction.passes;
        std::size_t added = 0;
        for (const auto& p : passes) added += p.edges_added;
        std::printf("reconstruction: %zu pass(es), %zu edge(s) added (%zu -> %zu)\n",
                    passes.size(), added, passes.front().edges_before,
                    passes.back().edges_after);
    }
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto& t = report.trials[i];
        std::printf("trial %2zu  seed %llu  iters %3d  objective %.6g",
                    i + 1, (unsigned long long)t.seed, t.iters, t.objective);
        if (t.nmi) std::printf("  NMI %6.2f%%  Purity %6.2f%%",
                               100.0 * *t.nmi, 100.0 * *t.purity);
        std::printf("\n");
    }
    if (report.aggregate) {
        const auto& a = *report.aggregate;
        std::printf("aggregate (%zu trials): NMI %.2f%% +- %.2f%%   "
                    "Purity %.2f%% +- %.2f%%\n",
                    report.trials.size(), 100.0 * a.nmi_mean, 100.0 * a.nmi_std,
                    100.0 * a.purity_mean, 100.0 * a.purity_std);
    }
}

void write_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw hsgn::DataError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"community detection via high-order-proximity network "
                 "enhancement and symmetry/graph-regularized NMF"};

    hsgn::PipelineConfig cfg;
    std::string communities;
    int k = 0;
    std::string epsilon_text = "5";
    std::string solver_text = "sgn";
    std::string nmi_norm_text = "sqrt";
    std::string sweep_text;
    std::string grid_text;
    std::string output_path;
    std::string dump_enhanced;
    std::string dump_factors;
    std::string dump_hop;

    app.add_option("--edges", cfg.edges_path, "edge-list file (SNAP format)")
        ->required();
    app.add_option("--communities", communities,
                   "ground-truth communities file (one community per line)");
    app.add_option("--k", k, "number of communities (defaults to ground truth's)");
    app.add_option("--theta", cfg.theta, "balance/equality coefficient")
        ->capture_default_str();
    app.add_option("--lambda", cfg.lambda, "graph-regularization coefficient")
        ->capture_default_str();
    app.add_option("--epsilon", epsilon_text,
                   "proximity threshold (> 1) or 'disabled'")
        ->capture_default_str();
    app.add_option("--r", cfg.r, "max proximity order (1..6)")
        ->check(CLI::Range(1, 6))->capture_default_str();
    app.add_option("--d", cfg.d, "reconstruction passes (1..6)")
        ->check(CLI::Range(1, 6))->capture_default_str();
    app.add_option("--beta", cfg.beta, "damping of the x update, in (0, 1]")
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "objective-difference stopping threshold")
        ->capture_default_str();
    app.add_option("--max-iters", cfg.max_iters, "iteration cap per trial")
        ->capture_default_str();
    app.add_option("--trials", cfg.trials, "number of seeded trials")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "base seed; trial t uses seed + t")
        ->capture_default_str();
    app.add_option("--solver", solver_text, "sgn or snmf")
        ->check(CLI::IsMember({"sgn", "snmf"}))->capture_default_str();
    app.add_flag("--no-reconstruct", cfg.no_reconstruct,
                 "skip the proximity reconstruction stage");
    app.add_option("--nmi-norm", nmi_norm_text, "sqrt or mean normalization")
        ->check(CLI::IsMember({"sqrt", "mean"}))->capture_default_str();
    app.add_option("--budget", cfg.budget,
                   "path-extension budget for enumeration")
        ->capture_default_str();
    app.add_option("--output", output_path, "write the JSON report here");
    app.add_option("--sweep", sweep_text, "sweep one axis: theta|lambda|epsilon|r|d")
        ->check(CLI::IsMember({"theta", "lambda", "epsilon", "r", "d"}));
    app.add_option("--grid", grid_text, "comma-separated grid for --sweep");
    app.add_option("--dump-enhanced", dump_enhanced,
                   "write the enhanced graph as an edge list");
    app.add_option("--dump-factors", dump_factors,
                   "write the best trial's factor matrix as text");
    app.add_option("--dump-hop", dump_hop,
                   "write the input graph's proximity table as text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!communities.empty()) cfg.communities_path = communities;
        if (app.count("--k") > 0) cfg.k = k;
        cfg.epsilon = hsgn::parse_epsilon(epsilon_text);
        cfg.solver = solver_text == "snmf" ? hsgn::SolverKind::Snmf
                                           : hsgn::SolverKind::Sgn;
        cfg.nmi_norm = nmi_norm_text == "mean" ? hsgn::NmiNorm::Mean
                                               : hsgn::NmiNorm::Sqrt;
        if (!dump_enhanced.empty()) cfg.dump_enhanced = dump_enhanced;
        if (!dump_factors.empty()) cfg.dump_factors = dump_factors;
        if (!dump_hop.empty()) cfg.dump_hop = dump_hop;

        if (!sweep_text.empty() || !grid_text.empty()) {
            if (sweep_text.empty() || grid_text.empty())
                throw std::invalid_argument("--sweep and --grid go together");
            const auto axis = hsgn::parse_sweep_axis(sweep_text);
            if (!axis) throw std::invalid_argument("unknown sweep axis: " + sweep_text);
            const auto points = hsgn::sweep(cfg, *axis, split_grid(grid_text));
            for (const auto& point : points) {
                std::printf("=== %s = %s ===\n", sweep_text.c_str(),
                            point.value.c_str());
                print_summary(point.report);
            }
            if (!output_path.empty())
                write_json(hsgn::sweep_json(*axis, points), output_path);
        } else {
            const hsgn::RunReport report = hsgn::run_pipeline(cfg);
            print_summary(report);
            if (!output_path.empty())
                write_json(hsgn::report_json(report), output_path);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const hsgn::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
