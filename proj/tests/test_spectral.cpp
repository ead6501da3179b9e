#include <doctest.h>

#include <cmath>
#include <complex>

#include "qent/rng.hpp"
#include "qent/sampling.hpp"
#include "qent/spectral.hpp"
#include "test_support.hpp"

using namespace qent;

TEST_SUITE("spectral") {

TEST_CASE("complex matrix construction validates") {
    CHECK_THROWS_AS(ComplexMatrix(0), Error);
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<cplx>(3)), Error);
    std::vector<cplx> bad(4, cplx{0.0, 0.0});
    bad[2] = cplx{std::nan(""), 0.0};
    CHECK_THROWS_AS(ComplexMatrix(2, bad), NonFinite);
}

TEST_CASE("kron identity and diagonal cases") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix a = ComplexMatrix::diag(std::vector<double>{1.0, 2.0});
    const ComplexMatrix b = ComplexMatrix::diag(std::vector<double>{3.0, 4.0});
    const ComplexMatrix expect = ComplexMatrix::diag(std::vector<double>{3.0, 4.0, 6.0, 8.0});
    CHECK(max_abs_diff(kron(a, b), expect) == 0.0);
}

TEST_CASE("kron of Haar unitaries stays unitary") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const UnitaryMatrix u1 = haar_unitary(2, split_seed(11, seed));
        const UnitaryMatrix u2 = haar_unitary(3, split_seed(12, seed));
        CHECK(kron(u1.matrix(), u2.matrix()).is_unitary(1e-10));
    }
}

TEST_CASE("hermitian_eig on identity and diagonal input") {
    const Spectrum s = hermitian_eig(ComplexMatrix::identity(3));
    for (double lam : s.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.eigenvectors.is_unitary(1e-10));

    const Spectrum d = hermitian_eig(ComplexMatrix::diag(std::vector<double>{3.0, 1.0, 2.0}));
    CHECK(d.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(d.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig 2x2 closed form") {
    ComplexMatrix h(2);
    h(0, 1) = 1.0;
    h(1, 0) = 1.0;
    const Spectrum s = hermitian_eig(h);
    CHECK(s.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    // eigenvectors (1, -1)/sqrt(2) and (1, 1)/sqrt(2) up to phase
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cplx overlap_minus =
        inv_sqrt2 * (std::conj(s.eigenvectors(0, 0)) - std::conj(s.eigenvectors(1, 0)));
    const cplx overlap_plus =
        inv_sqrt2 * (std::conj(s.eigenvectors(0, 1)) + std::conj(s.eigenvectors(1, 1)));
    CHECK(std::abs(overlap_minus) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(overlap_plus) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("hermitian_eig matches the 2x2 characteristic polynomial") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix h = test::random_hermitian(rng, 2);
        const double a = h(0, 0).real(), d = h(1, 1).real();
        const double babs = std::abs(h(0, 1));
        const double mean = 0.5 * (a + d);
        const double disc = std::sqrt(0.25 * (a - d) * (a - d) + babs * babs);
        const Spectrum s = hermitian_eig(h);
        CHECK(s.eigenvalues[0] == doctest::Approx(mean - disc).epsilon(1e-10));
        CHECK(s.eigenvalues[1] == doctest::Approx(mean + disc).epsilon(1e-10));
    }
}

TEST_CASE("hermitian_eig reconstruction invariant") {
    Rng rng(7);
    for (int dim : {2, 3, 4, 6, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix h = test::random_hermitian(rng, dim);
            const Spectrum s = hermitian_eig(h);
            CHECK(s.eigenvectors.is_unitary(1e-10));
            ComplexMatrix rebuilt(dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    cplx acc{0.0, 0.0};
                    for (int k = 0; k < dim; ++k)
                        acc += s.eigenvalues[static_cast<std::size_t>(k)] * s.eigenvectors(i, k) *
                               std::conj(s.eigenvectors(j, k));
                    rebuilt(i, j) = acc;
                }
            CHECK(max_abs_diff(rebuilt, h) <= 1e-10);
            for (std::size_t k = 1; k < s.eigenvalues.size(); ++k)
                CHECK(s.eigenvalues[k] >= s.eigenvalues[k - 1]);
        }
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("matrix_function diagonal and identity cases") {
    const ComplexMatrix d = ComplexMatrix::diag(std::vector<double>{1.0, 2.0});
    const ComplexMatrix squared = matrix_function(d, [](double x) { return x * x; });
    CHECK(max_abs_diff(squared, ComplexMatrix::diag(std::vector<double>{1.0, 4.0})) <= 1e-12);

    Rng rng(101);
    const ComplexMatrix h = test::random_hermitian(rng, 5);
    CHECK(max_abs_diff(matrix_function(h, [](double x) { return x; }), h) <= 1e-10);
}

TEST_CASE("matrix_function sqrt of a rank-1 projector") {
    ComplexMatrix p(2);
    p(0, 0) = p(0, 1) = p(1, 0) = p(1, 1) = 0.5;
    const ComplexMatrix root = matrix_function(p, [](double x) { return std::sqrt(x); });
    CHECK(max_abs_diff(root, p) <= 1e-10);
}

TEST_CASE("matrix_function exp then ln round-trips positive definite input") {
    Rng rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const int dim = 2 + trial % 4;
        ComplexMatrix h = test::random_hermitian(rng, dim);
        const ComplexMatrix e = matrix_function(h, [](double x) { return std::exp(x); });
        const ComplexMatrix back = matrix_function(e, [](double x) { return std::log(x); });
        CHECK(max_abs_diff(back, hermitized(h)) <= 1e-8);
    }
}

TEST_CASE("matrix_function reports a domain error for ln at zero") {
    ComplexMatrix p(2);
    p(0, 0) = p(0, 1) = p(1, 0) = p(1, 1) = 0.5;  // eigenvalues 1 and 0
    CHECK_THROWS_AS(matrix_function(p, [](double x) { return std::log(x); }), DomainError);
}

TEST_CASE("haar_unitary is deterministic per seed") {
    const UnitaryMatrix a = haar_unitary(4, 99);
    const UnitaryMatrix b = haar_unitary(4, 99);
    CHECK(max_abs_diff(a.matrix(), b.matrix()) == 0.0);
    const UnitaryMatrix c = haar_unitary(4, 100);
    CHECK(max_abs_diff(a.matrix(), c.matrix()) > 1e-3);
}

TEST_CASE("haar_unitary dim 1 gives a unit-modulus number") {
    const UnitaryMatrix u = haar_unitary(1, 3);
    CHECK(std::abs(u(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("haar_unitary unitarity sweep") {
    for (int dim : {2, 3, 4, 6, 8})
        for (std::uint64_t seed = 0; seed < 1000; ++seed)
            REQUIRE(haar_unitary(dim, split_seed(500, seed * 5 + dim)).matrix().is_unitary(1e-10));
}

TEST_CASE("haar moment |U11|^2 averages to 1/dim") {
    const int samples = 10000;
    double acc = 0.0;
    for (int t = 0; t < samples; ++t)
        acc += std::norm(haar_unitary(4, split_seed(7777, static_cast<std::uint64_t>(t)))(0, 0));
    CHECK(acc / samples == doctest::Approx(0.25).epsilon(0.04));  // within 0.01 absolute
    CHECK(std::abs(acc / samples - 0.25) <= 0.01);
}

TEST_CASE("ginibre_density basics") {
    const ComplexMatrix rho = ginibre_density(4, 4, 31);
    CHECK(rho.is_hermitian(1e-12));
    CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-12);
    CHECK(std::abs(rho.trace().imag()) <= 1e-12);

    const ComplexMatrix pure = ginibre_density(4, 1, 32);
    const Spectrum s = hermitian_eig(pure);
    CHECK(s.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-10));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(s.eigenvalues[static_cast<std::size_t>(k)]) <= 1e-10);

    CHECK_THROWS_AS(ginibre_density(3, 4, 0), DomainError);
    CHECK_THROWS_AS(ginibre_density(3, 0, 0), DomainError);
}

TEST_CASE("ginibre qubit eigenvalue gap matches the Bloch-ball oracle") {
    // Hilbert-Schmidt measure on qubits is the uniform Bloch ball; the
    // eigenvalue gap of rho = (I + r.sigma)/2 is |r|, so rejection-sampled
    // ball radii give an independent estimate of the mean gap.
    const int samples = 10000;
    double gap_mean = 0.0;
    for (int t = 0; t < samples; ++t) {
        const ComplexMatrix rho = ginibre_density(2, 2, split_seed(4242, static_cast<std::uint64_t>(t)));
        const double a = rho(0, 0).real(), d = rho(1, 1).real();
        const double babs = std::abs(rho(0, 1));
        gap_mean += std::sqrt((a - d) * (a - d) + 4.0 * babs * babs);
    }
    gap_mean /= samples;

    Rng rng(31337);
    double oracle_mean = 0.0;
    int accepted = 0;
    while (accepted < samples) {
        const double x = 2.0 * rng.uniform() - 1.0;
        const double y = 2.0 * rng.uniform() - 1.0;
        const double z = 2.0 * rng.uniform() - 1.0;
        const double r2 = x * x + y * y + z * z;
        if (r2 > 1.0) continue;
        oracle_mean += std::sqrt(r2);
        ++accepted;
    }
    oracle_mean /= samples;

    CHECK(std::abs(gap_mean - oracle_mean) / oracle_mean <= 0.02);
}

TEST_CASE("unitary_eig recovers principal phases") {
    for (int dim : {2, 3, 4, 6}) {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            const UnitaryMatrix u = haar_unitary(dim, split_seed(808, seed * 7 + dim));
            const ComplexMatrix h = principal_log_generator(u);
            CHECK(h.is_hermitian(1e-9));
            const UnitaryMatrix rebuilt = exp_i_hermitian(h);
            CHECK(max_abs_diff(rebuilt.matrix(), u.matrix()) <= 1e-9);
        }
    }
}

TEST_CASE("unitary_eig handles degenerate phases") {
    // permutation matrix: eigenvalues +1, +1, -1
    ComplexMatrix p(3);
    p(0, 1) = 1.0;
    p(1, 0) = 1.0;
    p(2, 2) = 1.0;
    const UnitaryMatrix u(p);
    const ComplexMatrix h = principal_log_generator(u);
    CHECK(max_abs_diff(exp_i_hermitian(h).matrix(), u.matrix()) <= 1e-9);

    const ComplexMatrix hid = principal_log_generator(UnitaryMatrix::identity(4));
    CHECK(hid.frobenius_norm() <= 1e-9);
}

TEST_CASE("rng split streams differ and are stable") {
    CHECK(split_seed(1, 0) != split_seed(1, 1));
    CHECK(split_seed(1, 0) != split_seed(2, 0));
    Rng a(split_seed(5, 3)), b(split_seed(5, 3));
    for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());
}

}  // TEST_SUITE
