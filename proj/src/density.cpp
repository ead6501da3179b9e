#include "qent/density.hpp"

#include <cmath>
#include <utility>

namespace qent {

DensityMatrix::DensityMatrix(ComplexMatrix m, std::vector<double> ev, ComplexMatrix vec)
    : m_(std::move(m)), eigenvalues_(std::move(ev)), eigenvectors_(std::move(vec)) {}

DensityMatrix DensityMatrix::validate(const ComplexMatrix& m) {
    if (!m.is_hermitian(kHermTol)) throw NotHermitian("density matrix is not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > kTraceTol || std::abs(m.trace().imag()) > kTraceTol)
        throw TraceNotOne("density matrix trace deviates from 1");

    Spectrum s = hermitian_eig(m);
    for (double& lam : s.eigenvalues) {
        if (lam < kEigenFloor) throw NotPositive("density matrix has a negative eigenvalue");
        if (lam < 0.0) lam = 0.0;
    }
    return DensityMatrix(m, std::move(s.eigenvalues), std::move(s.eigenvectors));
}

DensityMatrix validate_density(const ComplexMatrix& m) { return DensityMatrix::validate(m); }

DensityMatrix zero_pad(const DensityMatrix& rho, int target_dim) {
    if (target_dim < rho.dim()) throw DimensionMismatch("zero_pad: target_dim below current dim");
    if (target_dim == rho.dim()) return rho;
    ComplexMatrix padded(target_dim);
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j) padded(i, j) = rho.matrix()(i, j);
    return DensityMatrix::validate(padded);
}

DensityMatrix block_marginal_first(const DensityMatrix& rho, BipartitionShape shape) {
    if (shape.total() != rho.dim())
        throw ShapeMismatch("block_marginal_first: shape does not factor the dimension");
    const int n = shape.n, m = shape.m;
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            cplx tr{0.0, 0.0};
            for (int t = 0; t < m; ++t) tr += rho.matrix()(k * m + t, l * m + t);
            out(k, l) = tr;
        }
    return DensityMatrix::validate(out);
}

DensityMatrix block_marginal_second(const DensityMatrix& rho, BipartitionShape shape) {
    if (shape.total() != rho.dim())
        throw ShapeMismatch("block_marginal_second: shape does not factor the dimension");
    const int n = shape.n, m = shape.m;
    ComplexMatrix out(m);
    for (int t = 0; t < m; ++t)
        for (int s = 0; s < m; ++s) {
            cplx acc{0.0, 0.0};
            for (int k = 0; k < n; ++k) acc += rho.matrix()(k * m + t, k * m + s);
            out(t, s) = acc;
        }
    return DensityMatrix::validate(out);
}

DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryMatrix& u) {
    if (u.dim() != rho.dim()) throw DimensionMismatch("conjugate: unitary/state dimension mismatch");
    ComplexMatrix r = u.matrix() * rho.matrix() * u.matrix().adjoint();
    return DensityMatrix::validate(hermitized(r));
}

}  // namespace qent
