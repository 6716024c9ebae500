#pragma once

#include <cstdint>
#include <vector>

#include "hsgn/graph.hpp"
#include "hsgn/matrix.hpp"

namespace hsgn {

// The three nonnegative factors of the symmetry-regularized model. x carries
// the community indicator; y and u widen the solution space and are pulled
// toward x by the equality penalties.
struct FactorSet {
    Matrix x, y, u;
};

struct SgnConfig {
    int k = 2;            // community count, fixed in advance
    double theta = 0.125; // balance/equality coefficient, > 0
    double lambda = 1.0;  // graph-regularization weight, >= 0
    double beta = 0.5;    // damping of the x update, in (0, 1]; 1 = undamped
    // Stop once |J_t - J_{t-1}| drops below this. The threshold is absolute,
    // so it has to suit the objective's scale (roughly the edge count): 1e-4
    // works down to toy graphs, 1e-1 matches runs on networks with tens of
    // thousands of edges.
    double tol = 1e-4;
    int max_iters = 200;
    std::uint64_t seed = 1;

    void validate() const; // throws std::invalid_argument
};

// Degree diagonal of the (enhanced) adjacency. The similarity matrix equals
// the adjacency itself, so the Laplacian stays implicit as diag(degree) - A.
struct LaplacianPieces {
    std::vector<double> degree;

    static LaplacianPieces from(const Graph& graph);
};

// Independent uniform draws from the open interval (0, 0.5). One generator,
// seeded once, fills x then y then u row-major, so equal seeds give
// bitwise-equal factors.
FactorSet init_factors(std::size_t n, int k, std::uint64_t seed);

// (1/4)||XX^T - A||_F^2 + (lambda/2) Tr(X^T L X)
//   + (theta/2) (||YU^T - A||_F^2 + ||X - Y||_F^2 + ||X - U||_F^2)
double sgn_objective(const Graph& adjacency, const FactorSet& factors,
                     const SgnConfig& cfg, const LaplacianPieces& lap);

// One multiplicative-update round. x first, damped:
//   x <- x (1 - beta + beta ((1+lambda) A X + theta Y + theta U)
//                           / (X X^T X + 2 theta X + lambda D X)),
// with the pre-update x on both sides of the ratio; then the undamped
//   y <- y (A U + X) / (Y U^T U + Y)    against the fresh x, and
//   u <- u (A Y + X) / (U Y^T Y + U)    against the fresh x and y.
// A zero denominator leaves the entry untouched (only reachable where the
// entry is already 0, making the update a no-op anyway). Nonnegativity is
// preserved throughout.
FactorSet sgn_step(const Graph& adjacency, const FactorSet& factors,
                   const SgnConfig& cfg, const LaplacianPieces& lap);

// Analytic gradients of sgn_objective with respect to each factor, i.e. the
// denominator-minus-numerator differences of the update ratios:
//   grad_x = (XX^T - A)X + lambda L X + theta (2X - Y - U)
//   grad_y = theta ((YU^T - A)U + Y - X)
//   grad_u = theta ((UY^T - A)Y + U - X)
FactorSet sgn_gradient(const Graph& adjacency, const FactorSet& factors,
                       const SgnConfig& cfg, const LaplacianPieces& lap);

struct SgnResult {
    FactorSet factors;
    std::vector<double> trace; // objective after each iteration
};

// Builds the Laplacian pieces, seeds the factors and iterates sgn_step until
// the objective difference drops below cfg.tol (the initial objective counts
// as the first comparison point) or cfg.max_iters is reached.
SgnResult sgn_train(const Graph& adjacency, const SgnConfig& cfg);

// Plain symmetric-NMF baseline with the adjusted update
//   x <- x (0.5 + (A X) / (2 X X^T X)),
// objective (1/2)||A - XX^T||_F^2, same stopping rules and assignment path.
double snmf_objective(const Graph& adjacency, const Matrix& x);
Matrix snmf_step(const Graph& adjacency, const Matrix& x);

struct SnmfResult {
    Matrix x;
    std::vector<double> trace;
};

SnmfResult snmf_train(const Graph& adjacency, int k, std::uint64_t seed,
                      double tol = 1e-4, int max_iters = 200);

// Hard community assignment per node.
struct Partition {
    std::vector<int> assignment; // entries in 0..K-1
};

// Node i joins the community of its largest factor entry; ties resolve toward
// the smaller index.
Partition assign(const Matrix& x);

} // namespace hsgn
