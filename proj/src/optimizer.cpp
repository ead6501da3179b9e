#include "qent/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "qent/inequalities.hpp"
#include "qent/rng.hpp"
#include "qent/spectral.hpp"

namespace qent {

UnitaryParams params_from_generator(const ComplexMatrix& h) {
    if (!h.is_hermitian(kHermitianTol))
        throw NotHermitian("params_from_generator: generator must be Hermitian");
    const int n = h.dim();
    UnitaryParams p{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
    for (int i = 0; i < n; ++i) p.theta[static_cast<std::size_t>(i)] = h(i, i).real();
    std::size_t t = static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            p.theta[t++] = h(i, j).real();
            p.theta[t++] = h(i, j).imag();
        }
    return p;
}

ComplexMatrix generator_from_params(const UnitaryParams& p) {
    if (p.dim < 1) throw DomainError("generator_from_params: dim must be >= 1");
    if (p.theta.size() != static_cast<std::size_t>(p.dim) * p.dim)
        throw DomainError("generator_from_params: need dim^2 parameters");
    const int n = p.dim;
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i) h(i, i) = p.theta[static_cast<std::size_t>(i)];
    std::size_t t = static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double re = p.theta[t++];
            const double im = p.theta[t++];
            h(i, j) = cplx{re, im};
            h(j, i) = cplx{re, -im};
        }
    return h;
}

UnitaryMatrix build_unitary(const UnitaryParams& p) {
    for (double x : p.theta)
        if (!std::isfinite(x)) throw NonFinite("build_unitary: non-finite parameter");
    return exp_i_hermitian(generator_from_params(p));
}

double sigma_sum(const DensityMatrix& rho, const UnitaryMatrix& u, BipartitionShape shape) {
    if (shape.total() != rho.dim())
        throw ShapeMismatch("sigma_sum: shape does not factor the dimension");
    const DensityMatrix rotated = conjugate(rho, u);
    return von_neumann_entropy(block_marginal_first(rotated, shape)) +
           von_neumann_entropy(block_marginal_second(rotated, shape));
}

namespace {

struct SimplexOutcome {
    int iterations = 0;
    bool converged = false;
};

// Standard Nelder-Mead with reflection 1, expansion 2, contraction 0.5,
// shrink 0.5. Termination: simplex diameter below tol, or best-value
// improvement below tol over a window of 2n iterations.
SimplexOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           const std::vector<double>& x0, double step, int max_iters, double tol) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> xs(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) xs[i + 1][i] += step;
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);

    std::vector<std::size_t> order(n + 1);
    const int window = 2 * static_cast<int>(n);
    double window_best = *std::min_element(fs.begin(), fs.end());

    SimplexOutcome out;
    for (int iter = 0; iter < max_iters; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        const std::size_t best = order[0];
        const std::size_t worst = order[n];
        const std::size_t second_worst = order[n - 1];

        double diameter = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t d = 0; d < n; ++d)
                diameter = std::max(diameter, std::abs(xs[i][d] - xs[best][d]));
        if (diameter < tol) {
            out.converged = true;
            out.iterations = iter;
            return out;
        }
        if (window > 0 && iter > 0 && iter % window == 0) {
            if (window_best - fs[best] < tol) {
                out.converged = true;
                out.iterations = iter;
                return out;
            }
            window_best = fs[best];
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += xs[i][d];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coeff) {
            std::vector<double> x(n);
            for (std::size_t d = 0; d < n; ++d)
                x[d] = centroid[d] + coeff * (centroid[d] - xs[worst][d]);
            return x;
        };

        const std::vector<double> xr = blend(1.0);
        const double fr = f(xr);
        if (fr < fs[best]) {
            const std::vector<double> xe = blend(2.0);
            const double fe = f(xe);
            if (fe < fr) {
                xs[worst] = xe;
                fs[worst] = fe;
            } else {
                xs[worst] = xr;
                fs[worst] = fr;
            }
        } else if (fr < fs[second_worst]) {
            xs[worst] = xr;
            fs[worst] = fr;
        } else {
            const std::vector<double> xc = blend(fr < fs[worst] ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc < std::min(fr, fs[worst])) {
                xs[worst] = xc;
                fs[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < n; ++d)
                        xs[i][d] = xs[best][d] + 0.5 * (xs[i][d] - xs[best][d]);
                    fs[i] = f(xs[i]);
                }
            }
        }
    }
    out.iterations = max_iters;
    out.converged = false;
    return out;
}

}  // namespace

OptimizationResult minimize_sigma(const DensityMatrix& rho, BipartitionShape shape,
                                  const OptimizerConfig& config) {
    if (shape.total() != rho.dim())
        throw ShapeMismatch("minimize_sigma: shape does not factor the dimension");
    if (config.restarts < 1 || config.max_iters < 1 || !(config.tol > 0.0))
        throw DomainError("minimize_sigma: config fields must be positive");

    const int n = rho.dim();
    const std::size_t nparams = static_cast<std::size_t>(n) * n;
    const double s_rho = von_neumann_entropy(rho);
    constexpr double kPi = 3.14159265358979323846;

    OptimizationResult result;
    result.params = UnitaryParams{n, std::vector<double>(nparams, 0.0)};
    result.sigma = std::numeric_limits<double>::infinity();
    int best_restart = -1;

    auto objective = [&](const std::vector<double>& theta) {
        return sigma_sum(rho, build_unitary(UnitaryParams{n, theta}), shape);
    };

    for (int r = 0; r < config.restarts; ++r) {
        std::vector<double> x0(nparams, 0.0);
        if (r == 1) {
            // start at the eigenbasis of rho: u = V† diagonalizes it
            const UnitaryMatrix u0(rho.eigenvectors().adjoint(), 1e-9);
            x0 = params_from_generator(principal_log_generator(u0)).theta;
        } else if (r >= 2) {
            Rng rng(split_seed(config.seed, static_cast<std::uint64_t>(r)));
            for (double& x : x0) x = (2.0 * rng.uniform() - 1.0) * kPi;
        }

        bool improved_this_restart = false;
        auto tracked = [&](const std::vector<double>& theta) {
            const double value = objective(theta);
            if (value < result.sigma) {
                result.sigma = value;
                result.params.theta = theta;
                improved_this_restart = true;
            }
            return value;
        };

        const SimplexOutcome outcome =
            nelder_mead(tracked, x0, 0.5, config.max_iters, config.tol);
        result.iterations += outcome.iterations;
        ++result.restarts_used;
        if (improved_this_restart || best_restart < 0) {
            best_restart = r;
            result.converged = outcome.converged;
        }
    }

    result.information = result.sigma - s_rho;
    return result;
}

}  // namespace qent
