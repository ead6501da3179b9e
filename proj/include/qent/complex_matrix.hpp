#pragma once

#include <complex>
#include <vector>

#include "qent/errors.hpp"

namespace qent {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<cplx> entries);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diag(const std::vector<double>& d);
    static ComplexMatrix diag(const std::vector<cplx>& d);

    int dim() const { return dim_; }
    cplx& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * dim_ + j];
    }
    const std::vector<cplx>& entries() const { return e_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    double off_diagonal_norm() const;  // Frobenius norm of the off-diagonal part
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;
    bool all_finite() const;

  private:
    int dim_;
    std::vector<cplx> e_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// (A + A†)/2
ComplexMatrix hermitized(const ComplexMatrix& a);

// Kronecker product: block (j,k) of the result equals a(j,k) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Unitary matrix; U†U = I within tolerance is enforced at construction.
class UnitaryMatrix {
  public:
    static constexpr double kUnitaryTol = 1e-10;

    explicit UnitaryMatrix(ComplexMatrix m, double tol = kUnitaryTol);
    static UnitaryMatrix identity(int dim);

    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const cplx& operator()(int i, int j) const { return m_(i, j); }

  private:
    ComplexMatrix m_;
};

}  // namespace qent
