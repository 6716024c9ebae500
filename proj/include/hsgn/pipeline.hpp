#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hsgn/eval.hpp"
#include "hsgn/graph.hpp"
#include "hsgn/hop.hpp"
#include "hsgn/reconstruct.hpp"
#include "hsgn/solver.hpp"

namespace hsgn {

enum class SolverKind { Sgn, Snmf };

// Everything one experiment needs: input locations, model hyper-parameters
// and the trial protocol.
struct PipelineConfig {
    std::string edges_path;
    std::optional<std::string> communities_path;
    std::optional<int> k;     // defaults to the ground truth's community count
    double theta = 0.125;     // 2^-3
    double lambda = 1.0;
    double epsilon = 5.0;     // kEpsilonDisabled switches reconstruction off
    int r = 2;
    int d = 3;
    double beta = 0.5;
    double tol = 1e-4; // absolute objective-difference threshold
    int max_iters = 200;
    int trials = 10;
    std::uint64_t seed = 1;
    SolverKind solver = SolverKind::Sgn;
    bool no_reconstruct = false;
    NmiNorm nmi_norm = NmiNorm::Sqrt;
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::optional<std::string> dump_enhanced; // enhanced graph as edge list
    std::optional<std::string> dump_factors;  // x of the best trial, text
    std::optional<std::string> dump_hop;      // hop table of the input graph

    bool reconstruction_enabled() const;
    // hsgn | hsgn-i (no reconstruction) | hop+snmf | snmf
    std::string variant() const;
};

struct TrialRecord {
    std::uint64_t seed = 0;
    int iters = 0;
    double objective = 0.0;        // final trace value
    std::vector<double> trace;     // objective after each iteration
    std::optional<double> nmi;
    std::optional<double> purity;
    double wall_ms = 0.0; // excluded from determinism guarantees
};

struct Aggregate {
    double nmi_mean = 0.0;
    double nmi_std = 0.0; // population formula over trials
    double purity_mean = 0.0;
    double purity_std = 0.0;
};

struct RunReport {
    PipelineConfig config;
    int k_used = 0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    int ground_truth_duplicates = 0;
    ReconstructionReport reconstruction; // empty pass list when disabled
    std::vector<TrialRecord> trials;
    std::optional<Aggregate> aggregate;  // present when ground truth is given
};

// load -> reconstruct -> per-trial train/assign/score -> aggregate.
// Trial t runs with seed (base seed + t).
RunReport run_pipeline(const PipelineConfig& cfg);
RunReport run_pipeline_on(const Graph& graph,
                          const std::optional<GroundTruth>& truth,
                          const PipelineConfig& cfg);

nlohmann::json report_json(const RunReport& report);

enum class SweepAxis { Theta, Lambda, Epsilon, R, D };

struct SweepPoint {
    std::string value; // grid value as given (epsilon accepts "disabled")
    RunReport report;
};

// One-at-a-time sensitivity sweep: rerun the pipeline per grid value with the
// chosen axis overridden and everything else fixed.
std::vector<SweepPoint> sweep(const PipelineConfig& base, SweepAxis axis,
                              const std::vector<std::string>& grid);

nlohmann::json sweep_json(SweepAxis axis, const std::vector<SweepPoint>& points);

std::optional<SweepAxis> parse_sweep_axis(std::string_view name);
std::string_view sweep_axis_name(SweepAxis axis);
double parse_epsilon(const std::string& text); // accepts "disabled"

} // namespace hsgn
