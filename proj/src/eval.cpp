#include "hsgn/eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hsgn {
namespace {

// Sorting before accumulation makes the sum independent of how labels are
// numbered, so relabeling either side reproduces results bit for bit.
double sorted_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (const double t : terms) sum += t;
    return sum;
}

double entropy(const std::vector<std::int64_t>& sums, double n,
               std::vector<double>& scratch) {
    scratch.clear();
    for (const std::int64_t s : sums) {
        if (s <= 0) continue;
        const double p = double(s) / n;
        scratch.push_back(-p * std::log(p));
    }
    return sorted_sum(scratch);
}

} // namespace

Contingency Contingency::build(std::span<const int> predicted,
                               std::span<const int> reference) {
    if (predicted.size() != reference.size())
        throw std::invalid_argument("labelings cover different node sets");
    if (predicted.empty())
        throw std::invalid_argument("labelings are empty");
    int k_pred = 0;
    int k_ref = 0;
    for (const int v : predicted) {
        if (v < 0) throw std::invalid_argument("negative predicted label");
        k_pred = std::max(k_pred, v + 1);
    }
    for (const int v : reference) {
        if (v < 0) throw std::invalid_argument("negative reference label");
        k_ref = std::max(k_ref, v + 1);
    }
    Contingency c;
    c.n = predicted.size();
    c.table.assign(std::size_t(k_pred), std::vector<std::int64_t>(std::size_t(k_ref), 0));
    for (std::size_t i = 0; i < predicted.size(); ++i)
        c.table[std::size_t(predicted[i])][std::size_t(reference[i])] += 1;
    c.row_sums.assign(std::size_t(k_pred), 0);
    c.col_sums.assign(std::size_t(k_ref), 0);
    for (std::size_t r = 0; r < c.table.size(); ++r)
        for (std::size_t t = 0; t < c.table[r].size(); ++t) {
            c.row_sums[r] += c.table[r][t];
            c.col_sums[t] += c.table[r][t];
        }
    return c;
}

double nmi(std::span<const int> predicted, std::span<const int> reference,
           NmiNorm norm) {
    const Contingency c = Contingency::build(predicted, reference);
    const double n = double(c.n);
    std::vector<double> scratch;
    const double h_pred = entropy(c.row_sums, n, scratch);
    const double h_ref = entropy(c.col_sums, n, scratch);
    if (h_pred == 0.0 || h_ref == 0.0)
        return (h_pred == 0.0 && h_ref == 0.0) ? 1.0 : 0.0;

    scratch.clear();
    for (std::size_t r = 0; r < c.table.size(); ++r) {
        for (std::size_t t = 0; t < c.table[r].size(); ++t) {
            const std::int64_t joint = c.table[r][t];
            if (joint <= 0) continue;
            const double p = double(joint) / n;
            const double lift =
                (n * double(joint)) / (double(c.row_sums[r]) * double(c.col_sums[t]));
            scratch.push_back(p * std::log(lift));
        }
    }
    const double info = sorted_sum(scratch);
    const double value = norm == NmiNorm::Sqrt
                             ? info / std::sqrt(h_pred * h_ref)
                             : 2.0 * info / (h_pred + h_ref);
    return std::clamp(value, 0.0, 1.0);
}

double nmi(const Partition& predicted, const GroundTruth& truth, NmiNorm norm) {
    return nmi(std::span<const int>(predicted.assignment),
               std::span<const int>(truth.labels), norm);
}

double purity(std::span<const int> predicted, std::span<const int> reference) {
    const Contingency c = Contingency::build(predicted, reference);
    std::int64_t hits = 0;
    for (const auto& row : c.table)
        hits += *std::max_element(row.begin(), row.end());
    return double(hits) / double(c.n);
}

double purity(const Partition& predicted, const GroundTruth& truth) {
    return purity(std::span<const int>(predicted.assignment),
                  std::span<const int>(truth.labels));
}

} // namespace hsgn
