#pragma once

#include <functional>
#include <vector>

#include "qent/complex_matrix.hpp"

namespace qent {

// Eigendecomposition of a Hermitian matrix: H = V diag(eigenvalues) V†,
// eigenvalues ascending, columns of V orthonormal.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

inline constexpr double kHermitianTol = 1e-10;
inline constexpr int kJacobiSweepCap = 100;
inline constexpr double kJacobiThreshold = 1e-12;

// Cyclic Jacobi diagonalization for complex Hermitian matrices. Stops once
// the off-diagonal Frobenius norm drops below kJacobiThreshold scaled by
// max(1, ||H||_F); throws NoConvergence past kJacobiSweepCap sweeps and
// NotHermitian when max|H - H†| exceeds kHermitianTol.
Spectrum hermitian_eig(const ComplexMatrix& h);

// V diag(f(lambda)) V† with eigenvalues in [-1e-9, 0) clipped to 0 before f
// is applied. Throws DomainError if f produces a non-finite value.
ComplexMatrix matrix_function(const ComplexMatrix& h, const std::function<double(double)>& f);

// Eigendecomposition of a unitary matrix: U = W diag(exp(i*phase)) W†, with
// principal phases in (-pi, pi]. Found by diagonalizing the commuting
// Hermitian pair (U + U†)/2 and (U - U†)/(2i), splitting any degenerate
// cosine eigenspace with the sine part.
struct UnitaryEig {
    std::vector<double> phases;
    ComplexMatrix eigenvectors;
};

UnitaryEig unitary_eig(const UnitaryMatrix& u);

// Hermitian H with exp(iH) = u and spectrum in (-pi, pi].
ComplexMatrix principal_log_generator(const UnitaryMatrix& u);

// exp(iH) for Hermitian H, via the spectral decomposition.
UnitaryMatrix exp_i_hermitian(const ComplexMatrix& h);

}  // namespace qent
