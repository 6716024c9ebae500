#include "hsgn/solver.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hsgn {
namespace {

// A * M for the sparse symmetric adjacency and a dense n x K matrix.
Matrix adjacency_times(const Graph& g, const Matrix& m) {
    Matrix out(m.rows(), m.cols(), 0.0);
    const std::size_t k = m.cols();
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        double* oi = out.row(i);
        for (const NodeId w : g.neighbors(NodeId(i))) {
            const double* mw = m.row(w);
            for (std::size_t c = 0; c < k; ++c) oi[c] += mw[c];
        }
    }
    return out;
}

// M^T M, a K x K Gram matrix.
Matrix gram(const Matrix& m) {
    const std::size_t k = m.cols();
    Matrix out(k, k, 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* r = m.row(i);
        for (std::size_t a = 0; a < k; ++a) {
            const double va = r[a];
            double* oa = out.row(a);
            for (std::size_t b = a; b < k; ++b) oa[b] += va * r[b];
        }
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < a; ++b) out(a, b) = out(b, a);
    return out;
}

// (n x K) times (K x K).
Matrix times_square(const Matrix& m, const Matrix& s) {
    const std::size_t k = m.cols();
    Matrix out(m.rows(), k, 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* r = m.row(i);
        double* o = out.row(i);
        for (std::size_t a = 0; a < k; ++a) {
            const double v = r[a];
            const double* sa = s.row(a);
            for (std::size_t b = 0; b < k; ++b) o[b] += v * sa[b];
        }
    }
    return out;
}

double frobenius_sq(const Matrix& m) {
    double sum = 0.0;
    for (const double v : m.data()) sum += v * v;
    return sum;
}

// Tr(A^T B) over same-shape matrices.
double inner(const Matrix& a, const Matrix& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        sum += a.data()[i] * b.data()[i];
    return sum;
}

void check_factor_shapes(const Graph& g, const FactorSet& f,
                         const LaplacianPieces& lap) {
    if (f.x.rows() != g.node_count() || !f.x.same_shape(f.y) || !f.x.same_shape(f.u))
        throw std::invalid_argument("factor dimensions do not match the graph");
    if (f.x.cols() == 0)
        throw std::invalid_argument("factors need at least one column");
    if (lap.degree.size() != g.node_count())
        throw std::invalid_argument("laplacian pieces do not match the graph");
}

} // namespace

void SgnConfig::validate() const {
    if (k < 1) throw std::invalid_argument("community count k must be >= 1");
    if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda must be nonnegative");
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in (0, 1]");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
}

LaplacianPieces LaplacianPieces::from(const Graph& graph) {
    LaplacianPieces lap;
    lap.degree.resize(graph.node_count());
    for (std::size_t v = 0; v < graph.node_count(); ++v)
        lap.degree[v] = double(graph.degree(NodeId(v)));
    return lap;
}

FactorSet init_factors(std::size_t n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() {
        for (;;) {
            const double u = double(rng() >> 11) * 0x1p-53; // [0, 1)
            if (u != 0.0) return 0.5 * u;                   // (0, 0.5)
        }
    };
    FactorSet f{Matrix(n, std::size_t(k)), Matrix(n, std::size_t(k)),
                Matrix(n, std::size_t(k))};
    for (double& v : f.x.data()) v = draw();
    for (double& v : f.y.data()) v = draw();
    for (double& v : f.u.data()) v = draw();
    return f;
}

double sgn_objective(const Graph& adjacency, const FactorSet& factors,
                     const SgnConfig& cfg, const LaplacianPieces& lap) {
    check_factor_shapes(adjacency, factors, lap);
    const double a_norm_sq = 2.0 * double(adjacency.edge_count()); // binary A

    const Matrix ax = adjacency_times(adjacency, factors.x);
    const Matrix gx = gram(factors.x);
    const double tr_xax = inner(ax, factors.x); // sum_ij a_ij (XX^T)_ij
    const double fit_x = frobenius_sq(gx) - 2.0 * tr_xax + a_norm_sq;

    double tr_xdx = 0.0; // Tr(X^T D X)
    for (std::size_t i = 0; i < factors.x.rows(); ++i) {
        const double* r = factors.x.row(i);
        double row_sq = 0.0;
        for (std::size_t c = 0; c < factors.x.cols(); ++c) row_sq += r[c] * r[c];
        tr_xdx += lap.degree[i] * row_sq;
    }
    const double laplace = tr_xdx - tr_xax; // Tr(X^T L X), W == A

    const Matrix au = adjacency_times(adjacency, factors.u);
    const Matrix gy = gram(factors.y);
    const Matrix gu = gram(factors.u);
    const double tr_yau = inner(au, factors.y); // sum_ij a_ij (YU^T)_ij
    const double fit_yu = inner(gy, gu) - 2.0 * tr_yau + a_norm_sq;

    double eq = 0.0; // ||X - Y||^2 + ||X - U||^2
    for (std::size_t i = 0; i < factors.x.data().size(); ++i) {
        const double dy = factors.x.data()[i] - factors.y.data()[i];
        const double du = factors.x.data()[i] - factors.u.data()[i];
        eq += dy * dy + du * du;
    }

    return 0.25 * fit_x + 0.5 * cfg.lambda * laplace +
           0.5 * cfg.theta * (fit_yu + eq);
}

FactorSet sgn_step(const Graph& adjacency, const FactorSet& factors,
                   const SgnConfig& cfg, const LaplacianPieces& lap) {
    check_factor_shapes(adjacency, factors, lap);
    const std::size_t n = factors.x.rows();
    const std::size_t k = factors.x.cols();

    const Matrix ax = adjacency_times(adjacency, factors.x);
    const Matrix xg = times_square(factors.x, gram(factors.x)); // X X^T X
    Matrix nx(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
            const double xv = factors.x(i, c);
            const double num = (1.0 + cfg.lambda) * ax(i, c) +
                               cfg.theta * (factors.y(i, c) + factors.u(i, c));
            const double den =
                xg(i, c) + 2.0 * cfg.theta * xv + cfg.lambda * lap.degree[i] * xv;
            nx(i, c) = den == 0.0
                           ? xv
                           : xv * (1.0 - cfg.beta + cfg.beta * num / den);
        }
    }

    const Matrix au = adjacency_times(adjacency, factors.u);
    const Matrix yg = times_square(factors.y, gram(factors.u)); // Y U^T U
    Matrix ny(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
            const double yv = factors.y(i, c);
            const double den = yg(i, c) + yv;
            ny(i, c) = den == 0.0 ? yv : yv * (au(i, c) + nx(i, c)) / den;
        }
    }

    const Matrix ay = adjacency_times(adjacency, ny); // A^T Y with A symmetric
    const Matrix ug = times_square(factors.u, gram(ny)); // U Y^T Y
    Matrix nu(n, k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
            const double uv = factors.u(i, c);
            const double den = ug(i, c) + uv;
            nu(i, c) = den == 0.0 ? uv : uv * (ay(i, c) + nx(i, c)) / den;
        }
    }

    return {std::move(nx), std::move(ny), std::move(nu)};
}

FactorSet sgn_gradient(const Graph& adjacency, const FactorSet& factors,
                       const SgnConfig& cfg, const LaplacianPieces& lap) {
    check_factor_shapes(adjacency, factors, lap);
    const std::size_t n = factors.x.rows();
    const std::size_t k = factors.x.cols();

    const Matrix ax = adjacency_times(adjacency, factors.x);
    const Matrix xg = times_square(factors.x, gram(factors.x));
    Matrix gx(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c) {
            const double xv = factors.x(i, c);
            gx(i, c) = xg(i, c) - ax(i, c) +
                       cfg.lambda * (lap.degree[i] * xv - ax(i, c)) +
                       cfg.theta * (2.0 * xv - factors.y(i, c) - factors.u(i, c));
        }

    const Matrix au = adjacency_times(adjacency, factors.u);
    const Matrix yg = times_square(factors.y, gram(factors.u));
    Matrix gy(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c)
            gy(i, c) = cfg.theta *
                       (yg(i, c) - au(i, c) + factors.y(i, c) - factors.x(i, c));

    const Matrix ay = adjacency_times(adjacency, factors.y);
    const Matrix ug = times_square(factors.u, gram(factors.y));
    Matrix gu(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c)
            gu(i, c) = cfg.theta *
                       (ug(i, c) - ay(i, c) + factors.u(i, c) - factors.x(i, c));

    return {std::move(gx), std::move(gy), std::move(gu)};
}

SgnResult sgn_train(const Graph& adjacency, const SgnConfig& cfg) {
    cfg.validate();
    const LaplacianPieces lap = LaplacianPieces::from(adjacency);
    FactorSet factors = init_factors(adjacency.node_count(), cfg.k, cfg.seed);
    std::vector<double> trace;
    trace.reserve(std::size_t(cfg.max_iters));
    double previous = sgn_objective(adjacency, factors, cfg, lap);
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        factors = sgn_step(adjacency, factors, cfg, lap);
        const double objective = sgn_objective(adjacency, factors, cfg, lap);
        trace.push_back(objective);
        if (std::abs(objective - previous) < cfg.tol) break;
        previous = objective;
    }
    return {std::move(factors), std::move(trace)};
}

double snmf_objective(const Graph& adjacency, const Matrix& x) {
    if (x.rows() != adjacency.node_count())
        throw std::invalid_argument("factor dimensions do not match the graph");
    const double a_norm_sq = 2.0 * double(adjacency.edge_count());
    const Matrix ax = adjacency_times(adjacency, x);
    return 0.5 * (a_norm_sq - 2.0 * inner(ax, x) + frobenius_sq(gram(x)));
}

Matrix snmf_step(const Graph& adjacency, const Matrix& x) {
    if (x.rows() != adjacency.node_count())
        throw std::invalid_argument("factor dimensions do not match the graph");
    const Matrix ax = adjacency_times(adjacency, x);
    const Matrix xg = times_square(x, gram(x));
    Matrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.data().size(); ++i) {
        const double den = 2.0 * xg.data()[i];
        out.data()[i] = den == 0.0 ? x.data()[i]
                                   : x.data()[i] * (0.5 + ax.data()[i] / den);
    }
    return out;
}

SnmfResult snmf_train(const Graph& adjacency, int k, std::uint64_t seed,
                      double tol, int max_iters) {
    if (k < 1) throw std::invalid_argument("community count k must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    Matrix x = init_factors(adjacency.node_count(), k, seed).x;
    std::vector<double> trace;
    trace.reserve(std::size_t(max_iters));
    double previous = snmf_objective(adjacency, x);
    for (int iter = 0; iter < max_iters; ++iter) {
        x = snmf_step(adjacency, x);
        const double objective = snmf_objective(adjacency, x);
        trace.push_back(objective);
        if (std::abs(objective - previous) < tol) break;
        previous = objective;
    }
    return {std::move(x), std::move(trace)};
}

Partition assign(const Matrix& x) {
    Partition p;
    p.assignment.resize(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        const double* r = x.row(i);
        int best = 0;
        for (std::size_t c = 1; c < x.cols(); ++c)
            if (r[c] > r[best]) best = int(c);
        p.assignment[i] = best;
    }
    return p;
}

} // namespace hsgn
