#include "qent/complex_matrix.hpp"

#include <cmath>
#include <utility>

namespace qent {

namespace {

void require_valid_dim(int dim) {
    if (dim < 1) throw Error("ComplexMatrix: dimension must be >= 1");
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("ComplexMatrix: dimension mismatch");
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    require_valid_dim(dim);
    e_.assign(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<cplx> entries) : dim_(dim), e_(std::move(entries)) {
    require_valid_dim(dim);
    if (e_.size() != static_cast<std::size_t>(dim) * dim)
        throw Error("ComplexMatrix: entry count must equal dim^2");
    if (!all_finite()) throw NonFinite("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<cplx>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx ComplexMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& v : e_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::off_diagonal_norm() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (i != j) s += std::norm((*this)(i, j));
    return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    const ComplexMatrix p = adjoint() * (*this);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(p(i, j) - want) > tol) return false;
        }
    return true;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& v : e_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (int k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return cplx{s, 0.0} * a; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b);
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

ComplexMatrix hermitized(const ComplexMatrix& a) {
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    ComplexMatrix r(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return r;
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    if (!m_.is_unitary(tol)) throw Error("UnitaryMatrix: U†U deviates from identity");
}

UnitaryMatrix UnitaryMatrix::identity(int dim) { return UnitaryMatrix(ComplexMatrix::identity(dim)); }

}  // namespace qent
