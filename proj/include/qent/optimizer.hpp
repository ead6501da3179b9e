#pragma once

#include <cstdint>
#include <vector>

#include "qent/density.hpp"

namespace qent {

// Chart on the unitary group: u = exp(i H(theta)) with theta packing the
// Hermitian generator as [diagonal (N entries) | re, im of the strict upper
// triangle row-major (N(N-1) entries)], N^2 parameters in total.
struct UnitaryParams {
    int dim = 0;
    std::vector<double> theta;
};

UnitaryParams params_from_generator(const ComplexMatrix& h);
ComplexMatrix generator_from_params(const UnitaryParams& p);

// exp(i H(theta)); throws NonFinite on non-finite parameters.
UnitaryMatrix build_unitary(const UnitaryParams& p);

// Sigma(u) = S(R1(u)) + S(R2(u)), the marginal von Neumann entropy sum of
// u rho u†. Bounded below by S(rho).
double sigma_sum(const DensityMatrix& rho, const UnitaryMatrix& u, BipartitionShape shape);

struct OptimizerConfig {
    int restarts = 8;
    int max_iters = 5000;
    double tol = 1e-8;
    std::uint64_t seed = 0;
};

// Best Sigma found over multi-start Nelder-Mead descent in theta-space.
// Restart 0 starts at theta = 0 (identity), restart 1 at the eigenbasis of
// rho (theta from the principal log of V†), the rest at seeded random
// points. "Best found" only; no global-optimality claim.
struct OptimizationResult {
    UnitaryParams params;
    double sigma = 0.0;
    double information = 0.0;  // sigma - S(rho)
    int iterations = 0;
    int restarts_used = 0;
    bool converged = false;
};

OptimizationResult minimize_sigma(const DensityMatrix& rho, BipartitionShape shape,
                                  const OptimizerConfig& config);

}  // namespace qent
