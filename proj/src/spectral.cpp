#include "qent/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qent {

namespace {

// One complex Jacobi rotation zeroing A(p,q). With b = A(p,q) = |b| w,
// a = A(p,p), d = A(q,q), the rotation
//   R[p][p] = c, R[p][q] = s w, R[q][p] = -s conj(w), R[q][q] = c
// with tan(2θ) = 2|b| / (d - a) makes (R† A R)(p,q) vanish. The inner
// rotation angle is the standard |θ| <= π/4 choice.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const cplx b = a(p, q);
    const double babs = std::abs(b);
    if (babs == 0.0) return;
    const cplx w = b / babs;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * babs);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(w) * aiq;
        a(i, q) = s * w * aip + c * aiq;
        a(p, i) = std::conj(a(i, p));
        a(q, i) = std::conj(a(i, q));
    }
    a(p, p) = app * c * c - 2.0 * c * s * babs + aqq * s * s;
    a(q, q) = app * s * s + 2.0 * c * s * babs + aqq * c * c;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (int i = 0; i < n; ++i) {
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(w) * viq;
        v(i, q) = s * w * vip + c * viq;
    }
}

Spectrum sorted_spectrum(const ComplexMatrix& a, const ComplexMatrix& v) {
    const int n = a.dim();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    Spectrum s{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        s.eigenvalues[static_cast<std::size_t>(k)] = a(src, src).real();
        for (int i = 0; i < n; ++i) s.eigenvectors(i, k) = v(i, src);
    }
    return s;
}

}  // namespace

Spectrum hermitian_eig(const ComplexMatrix& h) {
    if (!h.is_hermitian(kHermitianTol)) throw NotHermitian("hermitian_eig: input is not Hermitian");

    const int n = h.dim();
    ComplexMatrix a = hermitized(h);
    ComplexMatrix v = ComplexMatrix::identity(n);
    if (n == 1) return sorted_spectrum(a, v);

    const double target = kJacobiThreshold * std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < kJacobiSweepCap; ++sweep) {
        if (a.off_diagonal_norm() <= target) return sorted_spectrum(a, v);
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
    if (a.off_diagonal_norm() <= target) return sorted_spectrum(a, v);
    throw NoConvergence("hermitian_eig: sweep cap exceeded");
}

ComplexMatrix matrix_function(const ComplexMatrix& h, const std::function<double(double)>& f) {
    const Spectrum s = hermitian_eig(h);
    const int n = h.dim();
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double lam = s.eigenvalues[static_cast<std::size_t>(k)];
        if (lam < 0.0 && lam >= -1e-9) lam = 0.0;
        const double fy = f(lam);
        if (!std::isfinite(fy)) throw DomainError("matrix_function: f not finite at an eigenvalue");
        y[static_cast<std::size_t>(k)] = fy;
    }
    const ComplexMatrix& vec = s.eigenvectors;
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                acc += y[static_cast<std::size_t>(k)] * vec(i, k) * std::conj(vec(j, k));
            r(i, j) = acc;
        }
    return r;
}

UnitaryEig unitary_eig(const UnitaryMatrix& u) {
    const int n = u.dim();
    const ComplexMatrix& m = u.matrix();
    const ComplexMatrix madj = m.adjoint();
    const ComplexMatrix hcos = 0.5 * (m + madj);
    ComplexMatrix hsin(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cplx d = m(i, j) - madj(i, j);
            hsin(i, j) = cplx{0.5 * d.imag(), -0.5 * d.real()};  // (U - U†)/(2i)
        }

    Spectrum sc = hermitian_eig(hcos);
    ComplexMatrix w = sc.eigenvectors;

    // Split degenerate cosine eigenspaces with the commuting sine part.
    const double group_tol = 1e-8;
    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && sc.eigenvalues[static_cast<std::size_t>(hi)] -
                                 sc.eigenvalues[static_cast<std::size_t>(hi - 1)] <=
                             group_tol)
            ++hi;
        const int g = hi - lo;
        if (g > 1) {
            ComplexMatrix block(g);
            for (int r = 0; r < g; ++r)
                for (int col = 0; col < g; ++col) {
                    cplx acc{0.0, 0.0};
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            acc += std::conj(w(i, lo + r)) * hsin(i, j) * w(j, lo + col);
                    block(r, col) = acc;
                }
            const Spectrum sb = hermitian_eig(hermitized(block));
            ComplexMatrix mixed(n);
            for (int i = 0; i < n; ++i)
                for (int col = 0; col < g; ++col) {
                    cplx acc{0.0, 0.0};
                    for (int r = 0; r < g; ++r) acc += w(i, lo + r) * sb.eigenvectors(r, col);
                    mixed(i, col) = acc;
                }
            for (int i = 0; i < n; ++i)
                for (int col = 0; col < g; ++col) w(i, lo + col) = mixed(i, col);
        }
        lo = hi;
    }

    UnitaryEig result{std::vector<double>(static_cast<std::size_t>(n)), w};
    for (int k = 0; k < n; ++k) {
        cplx cosk{0.0, 0.0}, sink{0.0, 0.0};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const cplx pref = std::conj(w(i, k)) * w(j, k);
                cosk += pref * hcos(i, j);
                sink += pref * hsin(i, j);
            }
        result.phases[static_cast<std::size_t>(k)] = std::atan2(sink.real(), cosk.real());
    }
    return result;
}

ComplexMatrix principal_log_generator(const UnitaryMatrix& u) {
    const UnitaryEig e = unitary_eig(u);
    const int n = u.dim();
    ComplexMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                acc += e.phases[static_cast<std::size_t>(k)] * e.eigenvectors(i, k) *
                       std::conj(e.eigenvectors(j, k));
            h(i, j) = acc;
        }
    return hermitized(h);
}

UnitaryMatrix exp_i_hermitian(const ComplexMatrix& h) {
    if (!h.all_finite()) throw NonFinite("exp_i_hermitian: non-finite generator");
    const Spectrum s = hermitian_eig(h);
    const int n = h.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (int k = 0; k < n; ++k) {
                const double lam = s.eigenvalues[static_cast<std::size_t>(k)];
                const cplx phase{std::cos(lam), std::sin(lam)};
                acc += phase * s.eigenvectors(i, k) * std::conj(s.eigenvectors(j, k));
            }
            r(i, j) = acc;
        }
    return UnitaryMatrix(std::move(r), 1e-9);
}

}  // namespace qent
