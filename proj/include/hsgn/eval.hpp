#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsgn/graph.hpp"
#include "hsgn/solver.hpp"

namespace hsgn {

// Co-occurrence table between a predicted and a reference labeling.
struct Contingency {
    std::size_t n = 0;
    std::vector<std::vector<std::int64_t>> table; // predicted x reference
    std::vector<std::int64_t> row_sums;
    std::vector<std::int64_t> col_sums;

    static Contingency build(std::span<const int> predicted,
                             std::span<const int> reference);
};

enum class NmiNorm {
    Sqrt, // I / sqrt(H_p H_t), the default convention
    Mean, // 2I / (H_p + H_t), kept for sensitivity checks
};

// Normalized mutual information in [0, 1] with natural-log entropies. A
// zero-entropy side scores 0 unless both sides are the single-cluster
// partition (which are then identical and score 1). Symmetric in its
// arguments and invariant to relabeling either side.
double nmi(std::span<const int> predicted, std::span<const int> reference,
           NmiNorm norm = NmiNorm::Sqrt);
double nmi(const Partition& predicted, const GroundTruth& truth,
           NmiNorm norm = NmiNorm::Sqrt);

// Fraction of nodes that fall in their predicted cluster's majority reference
// class; always in (0, 1].
double purity(std::span<const int> predicted, std::span<const int> reference);
double purity(const Partition& predicted, const GroundTruth& truth);

} // namespace hsgn
