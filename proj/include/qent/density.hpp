#pragma once

#include <vector>

#include "qent/complex_matrix.hpp"
#include "qent/shape.hpp"
#include "qent/spectral.hpp"

namespace qent {

// Validated density matrix: Hermitian within 1e-10, eigenvalues >= -1e-9
// (the roundoff band [-1e-9, 0) is clipped to 0), trace 1 within 1e-9.
// The clipped spectrum and eigenvectors are computed once at validation and
// carried along, since every entropy downstream reads them.
class DensityMatrix {
  public:
    static constexpr double kHermTol = 1e-10;
    static constexpr double kEigenFloor = -1e-9;
    static constexpr double kTraceTol = 1e-9;

    static DensityMatrix validate(const ComplexMatrix& m);

    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

  private:
    DensityMatrix(ComplexMatrix m, std::vector<double> ev, ComplexMatrix vec);

    ComplexMatrix m_;
    std::vector<double> eigenvalues_;   // ascending, clipped at 0
    ComplexMatrix eigenvectors_;
};

DensityMatrix validate_density(const ComplexMatrix& m);

// Embed rho as the top-left block of a target_dim x target_dim matrix,
// padding with zero rows and columns.
DensityMatrix zero_pad(const DensityMatrix& rho, int target_dim);

// First marginal of the n x n grid of m x m blocks: entry (k,l) = Tr R_kl.
DensityMatrix block_marginal_first(const DensityMatrix& rho, BipartitionShape shape);

// Second marginal: the m x m sum of diagonal blocks sum_k R_kk.
DensityMatrix block_marginal_second(const DensityMatrix& rho, BipartitionShape shape);

// u rho u†.
DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryMatrix& u);

}  // namespace qent
