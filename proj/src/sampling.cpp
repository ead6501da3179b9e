#include "qent/sampling.hpp"

#include <cmath>
#include <vector>

#include "qent/rng.hpp"

namespace qent {

UnitaryMatrix haar_unitary(int dim, std::uint64_t seed) {
    if (dim < 1) throw DomainError("haar_unitary: dim must be >= 1");
    Rng rng(seed);
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();

    // Column-wise MGS, orthogonalized twice for orthonormality near machine
    // precision. Normalizing by the real column norm fixes the R-diagonal
    // phases to +1.
    ComplexMatrix q(dim);
    for (int j = 0; j < dim; ++j) {
        std::vector<cplx> v(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = g(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                cplx proj{0.0, 0.0};
                for (int i = 0; i < dim; ++i) proj += std::conj(q(i, k)) * v[static_cast<std::size_t>(i)];
                for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] -= proj * q(i, k);
            }
        }
        double norm = 0.0;
        for (int i = 0; i < dim; ++i) norm += std::norm(v[static_cast<std::size_t>(i)]);
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw NoConvergence("haar_unitary: degenerate Ginibre sample");
        for (int i = 0; i < dim; ++i) q(i, j) = v[static_cast<std::size_t>(i)] / norm;
    }
    return UnitaryMatrix(std::move(q));
}

ComplexMatrix ginibre_density(int dim, int rank, std::uint64_t seed) {
    if (dim < 1) throw DomainError("ginibre_density: dim must be >= 1");
    if (rank < 1 || rank > dim) throw DomainError("ginibre_density: need 1 <= rank <= dim");
    Rng rng(seed);
    std::vector<cplx> g(static_cast<std::size_t>(dim) * rank);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < rank; ++k)
            g[static_cast<std::size_t>(i) * rank + k] = rng.complex_normal();

    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            cplx acc{0.0, 0.0};
            for (int k = 0; k < rank; ++k)
                acc += g[static_cast<std::size_t>(i) * rank + k] *
                       std::conj(g[static_cast<std::size_t>(j) * rank + k]);
            m(i, j) = acc;
        }
    const double tr = m.trace().real();
    return (1.0 / tr) * m;
}

}  // namespace qent
