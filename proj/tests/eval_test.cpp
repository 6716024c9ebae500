#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hsgn/eval.hpp"
#include "oracles.hpp"

using hsgn::Contingency;
using hsgn::nmi;
using hsgn::NmiNorm;
using hsgn::purity;

namespace {

std::vector<int> random_labels(std::mt19937_64& rng, std::size_t n, int k) {
    std::vector<int> labels(n);
    for (auto& l : labels) l = int(rng() % std::uint64_t(k));
    return labels;
}

std::vector<int> permute_labels(std::mt19937_64& rng, std::vector<int> labels) {
    const int k = 1 + *std::max_element(labels.begin(), labels.end());
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[std::size_t(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& l : labels) l = perm[std::size_t(l)];
    return labels;
}

} // namespace

TEST_SUITE("eval") {

TEST_CASE("contingency bookkeeping") {
    const std::vector<int> pred{0, 0, 1, 1, 2};
    const std::vector<int> ref{0, 1, 1, 1, 0};
    const Contingency c = Contingency::build(pred, ref);
    CHECK(c.n == 5);
    std::int64_t total = 0;
    for (const auto& row : c.table)
        for (const auto v : row) total += v;
    CHECK(total == 5);
    CHECK(c.row_sums == std::vector<std::int64_t>{2, 2, 1});
    CHECK(c.col_sums == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("identical partitions score 1") {
    const std::vector<int> labels{0, 0, 1, 1, 2, 2};
    CHECK(nmi(labels, labels) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(purity(labels, labels) == 1.0);
}

TEST_CASE("single predicted cluster against a split reference scores 0") {
    const std::vector<int> pred{0, 0, 0, 0};
    const std::vector<int> ref{0, 0, 1, 1};
    CHECK(nmi(pred, ref) == 0.0);
    CHECK(nmi(ref, pred) == 0.0);
}

TEST_CASE("independent partitions score 0") {
    const std::vector<int> pred{0, 0, 1, 1};
    const std::vector<int> ref{0, 1, 0, 1};
    CHECK(nmi(pred, ref) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("both single-cluster partitions are identical and score 1") {
    const std::vector<int> a{0, 0, 0};
    CHECK(nmi(a, a) == 1.0);
}

TEST_CASE("purity examples") {
    const std::vector<int> single(10, 0);
    std::vector<int> ref(10, 1);
    for (int i = 0; i < 6; ++i) ref[std::size_t(i)] = 0; // majority class of 6
    CHECK(purity(single, ref) == doctest::Approx(0.6).epsilon(1e-12));

    const std::vector<int> pred{0, 0, 1, 1};
    const std::vector<int> truth{0, 1, 1, 1};
    CHECK(purity(pred, truth) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("single-cluster purity equals the largest community share") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 5 + rng() % 20;
        const std::vector<int> pred(n, 0);
        const std::vector<int> ref = random_labels(rng, n, 3);
        std::vector<std::int64_t> sizes(3, 0);
        for (const int l : ref) sizes[std::size_t(l)] += 1;
        const double expected =
            double(*std::max_element(sizes.begin(), sizes.end())) / double(n);
        CHECK(purity(pred, ref) == expected);
    }
}

TEST_CASE("label permutations leave both metrics bitwise unchanged") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 6 + rng() % 30;
        const std::vector<int> pred = random_labels(rng, n, 2 + int(rng() % 4));
        const std::vector<int> ref = random_labels(rng, n, 2 + int(rng() % 4));
        const double base_nmi = nmi(pred, ref);
        const double base_purity = purity(pred, ref);
        for (int p = 0; p < 5; ++p) {
            const auto shuffled_pred = permute_labels(rng, pred);
            const auto shuffled_ref = permute_labels(rng, ref);
            CHECK(nmi(shuffled_pred, shuffled_ref) == base_nmi);
            CHECK(purity(shuffled_pred, shuffled_ref) == base_purity);
        }
    }
}

TEST_CASE("nmi is symmetric") {
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4 + rng() % 25;
        const std::vector<int> a = random_labels(rng, n, 2 + int(rng() % 5));
        const std::vector<int> b = random_labels(rng, n, 2 + int(rng() % 5));
        CHECK(std::abs(nmi(a, b) - nmi(b, a)) <= 1e-12);
        CHECK(std::abs(nmi(a, b, NmiNorm::Mean) - nmi(b, a, NmiNorm::Mean)) <=
              1e-12);
    }
}

TEST_CASE("metrics stay inside [0, 1]") {
    std::mt19937_64 rng(139);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + rng() % 40;
        const std::vector<int> a = random_labels(rng, n, 1 + int(rng() % 6));
        const std::vector<int> b = random_labels(rng, n, 1 + int(rng() % 6));
        for (const NmiNorm norm : {NmiNorm::Sqrt, NmiNorm::Mean}) {
            const double v = nmi(a, b, norm);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        const double p = purity(a, b);
        CHECK(p > 0.0);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("mean normalization stays consistent with sqrt") {
    // identical partitions score 1 under both; independent ones score 0
    const std::vector<int> labels{0, 1, 0, 1, 2, 2};
    CHECK(nmi(labels, labels, NmiNorm::Mean) == doctest::Approx(1.0).epsilon(1e-12));
    const std::vector<int> pred{0, 0, 1, 1};
    const std::vector<int> ref{0, 1, 0, 1};
    CHECK(nmi(pred, ref, NmiNorm::Mean) == doctest::Approx(0.0).epsilon(1e-12));
    // sqrt(Hp Ht) <= (Hp + Ht)/2, so the sqrt normalization never scores lower
    std::mt19937_64 rng(151);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5 + rng() % 30;
        const std::vector<int> a = random_labels(rng, n, 2 + int(rng() % 4));
        const std::vector<int> b = random_labels(rng, n, 2 + int(rng() % 4));
        CHECK(nmi(a, b, NmiNorm::Sqrt) >= nmi(a, b, NmiNorm::Mean) - 1e-12);
    }
}

TEST_CASE("node-set mismatch raises") {
    const std::vector<int> a{0, 1};
    const std::vector<int> b{0, 1, 1};
    CHECK_THROWS_AS(nmi(a, b), std::invalid_argument);
    CHECK_THROWS_AS(purity(a, b), std::invalid_argument);
}

} // TEST_SUITE
