#include "hsgn/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <stdexcept>

#include "hsgn/errors.hpp"

namespace hsgn {
namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    return out;
}

double mean_of(const std::vector<double>& values) {
    double sum = 0.0;
    for (const double v : values) sum += v;
    return sum / double(values.size());
}

double population_std(const std::vector<double>& values, double mean) {
    double sum = 0.0;
    for (const double v : values) sum += (v - mean) * (v - mean);
    return std::sqrt(sum / double(values.size()));
}

double parse_full_double(const std::string& text) {
    std::size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    if (consumed != text.size())
        throw std::invalid_argument("not a number: " + text);
    return value;
}

int parse_full_int(const std::string& text) {
    std::size_t consumed = 0;
    const int value = std::stoi(text, &consumed);
    if (consumed != text.size())
        throw std::invalid_argument("not an integer: " + text);
    return value;
}

} // namespace

bool PipelineConfig::reconstruction_enabled() const {
    return !no_reconstruct && std::isfinite(epsilon);
}

std::string PipelineConfig::variant() const {
    if (solver == SolverKind::Sgn)
        return reconstruction_enabled() ? "hsgn" : "hsgn-i";
    return reconstruction_enabled() ? "hop+snmf" : "snmf";
}

RunReport run_pipeline(const PipelineConfig& cfg) {
    auto edge_stream = open_input(cfg.edges_path);
    const Graph graph = Graph::load_edge_list(edge_stream);
    std::optional<GroundTruth> truth;
    if (cfg.communities_path) {
        auto community_stream = open_input(*cfg.communities_path);
        truth = GroundTruth::load(community_stream, graph);
    }
    return run_pipeline_on(graph, truth, cfg);
}

RunReport run_pipeline_on(const Graph& graph,
                          const std::optional<GroundTruth>& truth,
                          const PipelineConfig& cfg) {
    int k = 0;
    if (cfg.k)
        k = *cfg.k;
    else if (truth)
        k = truth->k_true;
    else
        throw std::invalid_argument(
            "community count is required when no ground truth is given");
    if (k < 1) throw std::invalid_argument("community count must be >= 1");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    SgnConfig solver_cfg;
    solver_cfg.k = k;
    solver_cfg.theta = cfg.theta;
    solver_cfg.lambda = cfg.lambda;
    solver_cfg.beta = cfg.beta;
    solver_cfg.tol = cfg.tol;
    solver_cfg.max_iters = cfg.max_iters;
    if (cfg.solver == SolverKind::Sgn) {
        solver_cfg.validate(); // fail before the reconstruction stage runs
    } else {
        if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be positive");
        if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    }

    RunReport report;
    report.config = cfg;
    report.k_used = k;
    report.nodes = graph.node_count();
    report.edges = graph.edge_count();
    if (truth) report.ground_truth_duplicates = truth->duplicate_assignments;

    if (cfg.reconstruction_enabled())
        report.reconstruction =
            reconstruct_iterative(graph, cfg.r, cfg.epsilon, cfg.d, cfg.budget);
    else
        report.reconstruction.final_graph = graph;
    const Graph& enhanced = report.reconstruction.final_graph;

    if (cfg.dump_hop) {
        const HopTable table = HopTable::build(graph, cfg.r, cfg.budget);
        auto out = open_output(*cfg.dump_hop);
        table.dump(out, graph);
    }
    if (cfg.dump_enhanced) {
        auto out = open_output(*cfg.dump_enhanced);
        enhanced.write_edge_list(out);
    }

    Matrix best_x;
    double best_objective = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t seed = cfg.seed + std::uint64_t(trial);
        const auto start = std::chrono::steady_clock::now();
        Matrix x;
        std::vector<double> trace;
        if (cfg.solver == SolverKind::Sgn) {
            solver_cfg.seed = seed;
            SgnResult result = sgn_train(enhanced, solver_cfg);
            x = std::move(result.factors.x);
            trace = std::move(result.trace);
        } else {
            SnmfResult result =
                snmf_train(enhanced, k, seed, cfg.tol, cfg.max_iters);
            x = std::move(result.x);
            trace = std::move(result.trace);
        }
        const Partition partition = assign(x);
        const auto elapsed = std::chrono::steady_clock::now() - start;

        TrialRecord record;
        record.seed = seed;
        record.iters = int(trace.size());
        record.objective = trace.back();
        record.trace = std::move(trace);
        if (truth) {
            record.nmi = nmi(partition, *truth, cfg.nmi_norm);
            record.purity = purity(partition, *truth);
        }
        record.wall_ms =
            std::chrono::duration<double, std::milli>(elapsed).count();
        const double objective = record.objective;
        report.trials.push_back(std::move(record));

        if (objective < best_objective) {
            best_objective = objective;
            best_x = std::move(x);
        }
    }

    if (cfg.dump_factors) {
        auto out = open_output(*cfg.dump_factors);
        out << std::setprecision(9);
        for (std::size_t i = 0; i < best_x.rows(); ++i) {
            for (std::size_t c = 0; c < best_x.cols(); ++c) {
                if (c > 0) out << ' ';
                out << best_x(i, c);
            }
            out << '\n';
        }
    }

    if (truth) {
        std::vector<double> nmis;
        std::vector<double> purities;
        for (const TrialRecord& t : report.trials) {
            nmis.push_back(*t.nmi);
            purities.push_back(*t.purity);
        }
        Aggregate agg;
        agg.nmi_mean = mean_of(nmis);
        agg.nmi_std = population_std(nmis, agg.nmi_mean);
        agg.purity_mean = mean_of(purities);
        agg.purity_std = population_std(purities, agg.purity_mean);
        report.aggregate = agg;
    }
    return report;
}

nlohmann::json report_json(const RunReport& report) {
    const PipelineConfig& cfg = report.config;
    nlohmann::json j;
    j["config"] = {
        {"edges", cfg.edges_path},
        {"communities",
         cfg.communities_path ? nlohmann::json(*cfg.communities_path)
                              : nlohmann::json()},
        {"k", report.k_used},
        {"theta", cfg.theta},
        {"lambda", cfg.lambda},
        {"epsilon", std::isfinite(cfg.epsilon) ? nlohmann::json(cfg.epsilon)
                                               : nlohmann::json("disabled")},
        {"r", cfg.r},
        {"d", cfg.d},
        {"beta", cfg.beta},
        {"tol", cfg.tol},
        {"max_iters", cfg.max_iters},
        {"trials", cfg.trials},
        {"seed", cfg.seed},
        {"solver", cfg.solver == SolverKind::Sgn ? "sgn" : "snmf"},
        {"reconstruct", cfg.reconstruction_enabled()},
        {"nmi_norm", cfg.nmi_norm == NmiNorm::Sqrt ? "sqrt" : "mean"},
        {"variant", cfg.variant()},
    };
    j["graph"] = {
        {"nodes", report.nodes},
        {"edges", report.edges},
        {"ground_truth_duplicates", report.ground_truth_duplicates},
    };
    nlohmann::json passes = nlohmann::json::array();
    for (const ReconstructionPass& p : report.reconstruction.passes)
        passes.push_back({{"edges_before", p.edges_before},
                          {"edges_added", p.edges_added},
                          {"edges_after", p.edges_after}});
    j["reconstruction"] = {{"passes", std::move(passes)}};
    nlohmann::json trials = nlohmann::json::array();
    for (const TrialRecord& t : report.trials)
        trials.push_back({
            {"seed", t.seed},
            {"iters", t.iters},
            {"objective", t.objective},
            {"trace", t.trace},
            {"nmi", t.nmi ? nlohmann::json(*t.nmi) : nlohmann::json()},
            {"purity", t.purity ? nlohmann::json(*t.purity) : nlohmann::json()},
            {"wall_ms", t.wall_ms},
        });
    j["trials"] = std::move(trials);
    if (report.aggregate) {
        const Aggregate& a = *report.aggregate;
        j["aggregate"] = {
            {"nmi_mean", a.nmi_mean},         {"nmi_std", a.nmi_std},
            {"purity_mean", a.purity_mean},   {"purity_std", a.purity_std},
            {"std_formula", "population"},
        };
    } else {
        j["aggregate"] = nullptr;
    }
    return j;
}

std::vector<SweepPoint> sweep(const PipelineConfig& base, SweepAxis axis,
                              const std::vector<std::string>& grid) {
    if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
    auto edge_stream = open_input(base.edges_path);
    const Graph graph = Graph::load_edge_list(edge_stream);
    std::optional<GroundTruth> truth;
    if (base.communities_path) {
        auto community_stream = open_input(*base.communities_path);
        truth = GroundTruth::load(community_stream, graph);
    }
    std::vector<SweepPoint> points;
    points.reserve(grid.size());
    for (const std::string& value : grid) {
        PipelineConfig cfg = base;
        switch (axis) {
        case SweepAxis::Theta: cfg.theta = parse_full_double(value); break;
        case SweepAxis::Lambda: cfg.lambda = parse_full_double(value); break;
        case SweepAxis::Epsilon: cfg.epsilon = parse_epsilon(value); break;
        case SweepAxis::R: cfg.r = parse_full_int(value); break;
        case SweepAxis::D: cfg.d = parse_full_int(value); break;
        }
        points.push_back({value, run_pipeline_on(graph, truth, cfg)});
    }
    return points;
}

nlohmann::json sweep_json(SweepAxis axis, const std::vector<SweepPoint>& points) {
    nlohmann::json j;
    j["sweep"] = std::string(sweep_axis_name(axis));
    nlohmann::json entries = nlohmann::json::array();
    for (const SweepPoint& p : points)
        entries.push_back({{"value", p.value}, {"report", report_json(p.report)}});
    j["points"] = std::move(entries);
    return j;
}

std::optional<SweepAxis> parse_sweep_axis(std::string_view name) {
    if (name == "theta") return SweepAxis::Theta;
    if (name == "lambda") return SweepAxis::Lambda;
    if (name == "epsilon") return SweepAxis::Epsilon;
    if (name == "r") return SweepAxis::R;
    if (name == "d") return SweepAxis::D;
    return std::nullopt;
}

std::string_view sweep_axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::Theta: return "theta";
    case SweepAxis::Lambda: return "lambda";
    case SweepAxis::Epsilon: return "epsilon";
    case SweepAxis::R: return "r";
    case SweepAxis::D: return "d";
    }
    return "";
}

double parse_epsilon(const std::string& text) {
    if (text == "disabled") return kEpsilonDisabled;
    return parse_full_double(text);
}

} // namespace hsgn
