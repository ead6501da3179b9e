#include <doctest.h>

#include <cmath>

#include "qent/density.hpp"
#include "qent/rng.hpp"
#include "qent/sampling.hpp"
#include "qent/tomogram.hpp"
#include "test_support.hpp"

using namespace qent;

TEST_SUITE("states") {

TEST_CASE("validate_density accepts the maximally mixed qutrit") {
    const DensityMatrix rho = validate_density((1.0 / 3.0) * ComplexMatrix::identity(3));
    CHECK(rho.dim() == 3);
    for (double lam : rho.eigenvalues()) CHECK(lam == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("validate_density rejects constructed violations") {
    CHECK_THROWS_AS(validate_density(ComplexMatrix::diag(std::vector<double>{0.6, 0.6, -0.2})),
                    NotPositive);
    CHECK_THROWS_AS(validate_density(ComplexMatrix::diag(std::vector<double>{0.6, 0.5})),
                    TraceNotOne);
    ComplexMatrix skew(2);
    skew(0, 0) = 0.5;
    skew(1, 1) = 0.5;
    skew(0, 1) = cplx{0.0, 0.3};
    skew(1, 0) = cplx{0.0, 0.3};  // not conjugate
    CHECK_THROWS_AS(validate_density(skew), NotHermitian);
}

TEST_CASE("the Bell state validates as a rank-1 state") {
    const DensityMatrix bell = test::bell_state();
    CHECK(bell.eigenvalues()[3] == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(bell.eigenvalues()[static_cast<std::size_t>(k)]) <= 1e-12);
}

TEST_CASE("zero_pad embeds as a leading block") {
    const DensityMatrix q = test::padded_mixed_qutrit();
    // explicit construction: pad the 3x3 mixed state
    const DensityMatrix mixed3 = validate_density((1.0 / 3.0) * ComplexMatrix::identity(3));
    const DensityMatrix padded = zero_pad(mixed3, 4);
    CHECK(max_abs_diff(padded.matrix(), q.matrix()) == 0.0);
    CHECK(padded.eigenvalues()[0] == 0.0);

    const DensityMatrix same = zero_pad(mixed3, 3);
    CHECK(max_abs_diff(same.matrix(), mixed3.matrix()) == 0.0);
    CHECK_THROWS_AS(zero_pad(mixed3, 2), DimensionMismatch);
}

TEST_CASE("block marginals of the padded mixed qutrit") {
    const DensityMatrix q = test::padded_mixed_qutrit();
    const DensityMatrix r1 = block_marginal_first(q, {2, 2});
    const DensityMatrix r2 = block_marginal_second(q, {2, 2});
    const ComplexMatrix expect =
        ComplexMatrix::diag(std::vector<double>{2.0 / 3.0, 1.0 / 3.0});
    CHECK(max_abs_diff(r1.matrix(), expect) <= 1e-15);
    CHECK(max_abs_diff(r2.matrix(), expect) <= 1e-15);
}

TEST_CASE("block marginals recover tensor factors") {
    const DensityMatrix rho1 = test::random_density(2, 11);
    const DensityMatrix rho2 = test::random_density(3, 12);
    const DensityMatrix prod = validate_density(kron(rho1.matrix(), rho2.matrix()));
    CHECK(max_abs_diff(block_marginal_first(prod, {2, 3}).matrix(), rho1.matrix()) <= 1e-12);
    CHECK(max_abs_diff(block_marginal_second(prod, {2, 3}).matrix(), rho2.matrix()) <= 1e-12);
}

TEST_CASE("block marginals of the Bell state are maximally mixed") {
    const DensityMatrix bell = test::bell_state();
    const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
    CHECK(max_abs_diff(block_marginal_first(bell, {2, 2}).matrix(), half) <= 1e-15);
    CHECK(max_abs_diff(block_marginal_second(bell, {2, 2}).matrix(), half) <= 1e-15);
    CHECK_THROWS_AS(block_marginal_first(bell, {2, 3}), ShapeMismatch);
}

TEST_CASE("block marginals equal explicit double-index partial sums") {
    for (const BipartitionShape shape :
         {BipartitionShape{2, 2}, BipartitionShape{2, 3}, BipartitionShape{3, 2},
          BipartitionShape{2, 4}, BipartitionShape{3, 4}}) {
        const int dim = shape.total();
        const DensityMatrix rho = test::random_density(dim, 100 + static_cast<std::uint64_t>(dim) * shape.n);
        const DensityMatrix r1 = block_marginal_first(rho, shape);
        const DensityMatrix r2 = block_marginal_second(rho, shape);
        for (int j = 0; j < shape.n; ++j)
            for (int jp = 0; jp < shape.n; ++jp) {
                cplx acc{0.0, 0.0};
                for (int k = 0; k < shape.m; ++k)
                    acc += rho.matrix()(j * shape.m + k, jp * shape.m + k);
                CHECK(std::abs(r1.matrix()(j, jp) - acc) <= 1e-12);
            }
        for (int k = 0; k < shape.m; ++k)
            for (int kp = 0; kp < shape.m; ++kp) {
                cplx acc{0.0, 0.0};
                for (int j = 0; j < shape.n; ++j)
                    acc += rho.matrix()(j * shape.m + k, j * shape.m + kp);
                CHECK(std::abs(r2.matrix()(k, kp) - acc) <= 1e-12);
            }
    }
}

TEST_CASE("conjugation preserves the spectrum") {
    const DensityMatrix rho = test::random_density(4, 55);
    CHECK(max_abs_diff(conjugate(rho, UnitaryMatrix::identity(4)).matrix(), rho.matrix()) <=
          1e-14);

    // the eigenvector basis diagonalizes
    const UnitaryMatrix diagonalizer(rho.eigenvectors().adjoint(), 1e-9);
    const DensityMatrix diag = conjugate(rho, diagonalizer);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(std::abs(diag.matrix()(i, j)) <= 1e-10);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const UnitaryMatrix u = haar_unitary(4, split_seed(900, seed));
        const DensityMatrix rotated = conjugate(rho, u);
        for (int k = 0; k < 4; ++k)
            CHECK(rotated.eigenvalues()[static_cast<std::size_t>(k)] ==
                  doctest::Approx(rho.eigenvalues()[static_cast<std::size_t>(k)]).epsilon(1e-9));
    }
    CHECK_THROWS_AS(conjugate(rho, UnitaryMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("tomogram of a diagonal state under the identity") {
    const DensityMatrix rho =
        validate_density(ComplexMatrix::diag(std::vector<double>{0.1, 0.2, 0.3, 0.4}));
    const Tomogram t = extract_tomogram(rho, UnitaryMatrix::identity(4));
    for (int s = 0; s < 4; ++s)
        CHECK(t.probs[s] == doctest::Approx(0.1 * (s + 1)).epsilon(1e-14));
}

TEST_CASE("tomogram of the Bell state under the identity") {
    const Tomogram t = extract_tomogram(test::bell_state(), UnitaryMatrix::identity(4));
    CHECK(t.probs[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(t.probs[1] == 0.0);
    CHECK(t.probs[2] == 0.0);
    CHECK(t.probs[3] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("tomograms normalize under Haar unitaries") {
    const DensityMatrix rho = test::random_density(6, 77);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Tomogram t = extract_tomogram(rho, haar_unitary(6, split_seed(321, seed)));
        double sum = 0.0;
        for (int s = 0; s < 6; ++s) sum += t.probs[s];
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
    CHECK_THROWS_AS(extract_tomogram(rho, UnitaryMatrix::identity(4)), DimensionMismatch);
}

TEST_CASE("tomogram equals the diagonal of the conjugated state") {
    const DensityMatrix rho = test::random_density(4, 88);
    const UnitaryMatrix u = haar_unitary(4, 99);
    const Tomogram t = extract_tomogram(rho, u);
    const DensityMatrix rotated = conjugate(rho, u);
    for (int s = 0; s < 4; ++s)
        CHECK(t.probs[s] == doctest::Approx(rotated.matrix()(s, s).real()).epsilon(1e-13));
}

TEST_CASE("basis labels per scheme") {
    CHECK(basis_labels(LabelScheme::linear_index, 3) == std::vector<std::string>{"1", "2", "3"});
    CHECK(basis_labels(LabelScheme::spin_projection, 4) ==
          std::vector<std::string>{"-3/2", "-1/2", "+1/2", "+3/2"});
    CHECK(basis_labels(LabelScheme::spin_projection, 3) ==
          std::vector<std::string>{"-1", "0", "+1"});
    CHECK(basis_labels(LabelScheme::spin_pair, 4) ==
          std::vector<std::string>{"+1/2,+1/2", "+1/2,-1/2", "-1/2,+1/2", "-1/2,-1/2"});
    CHECK_THROWS_AS(basis_labels(LabelScheme::spin_pair, 3), WrongLabelScheme);
}

TEST_CASE("qudit32 omega splits") {
    auto spin_tomogram = [](std::vector<double> w) {
        return Tomogram{ProbabilityVector(std::move(w)), LabelScheme::spin_projection,
                        basis_labels(LabelScheme::spin_projection, 4), "test"};
    };

    const auto [u1, u2] = qudit32_omegas(spin_tomogram({0.25, 0.25, 0.25, 0.25}));
    CHECK(u1[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(u2[0] == doctest::Approx(0.5).epsilon(1e-14));

    const auto [d1, d2] = qudit32_omegas(spin_tomogram({1.0, 0.0, 0.0, 0.0}));
    CHECK(d1[0] == 1.0);
    CHECK(d2[0] == 1.0);

    const auto [w1, w2] = qudit32_omegas(spin_tomogram({0.1, 0.2, 0.3, 0.4}));
    CHECK(w1[0] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(w1[1] == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(w2[0] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(w2[1] == doctest::Approx(0.6).epsilon(1e-14));

    const Tomogram linear{ProbabilityVector({0.1, 0.2, 0.3, 0.4}), LabelScheme::linear_index,
                          basis_labels(LabelScheme::linear_index, 4), ""};
    CHECK_THROWS_AS(qudit32_omegas(linear), WrongLabelScheme);
}

TEST_CASE("omegas coincide with the marginals of the (2,2) reshape") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const DensityMatrix rho = test::random_density(4, split_seed(1000, seed));
        const UnitaryMatrix u = haar_unitary(4, split_seed(2000, seed));
        const Tomogram t = extract_tomogram(rho, u, LabelScheme::spin_projection);
        const auto [omega1, omega2] = qudit32_omegas(t);
        const JointTable joint = reshape_joint(t.probs, {2, 2});
        const ProbabilityVector ma = marginal_A(joint);
        const ProbabilityVector mb = marginal_B(joint);
        for (int i = 0; i < 2; ++i) {
            CHECK(omega1[i] == doctest::Approx(ma[i]).epsilon(1e-14));
            CHECK(omega2[i] == doctest::Approx(mb[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("tomograms factorize under local unitaries") {
    const DensityMatrix rho1 = test::random_density(2, 5);
    const DensityMatrix rho2 = test::random_density(2, 6);
    const UnitaryMatrix u1 = haar_unitary(2, 7);
    const UnitaryMatrix u2 = haar_unitary(2, 8);

    const DensityMatrix prod = validate_density(kron(rho1.matrix(), rho2.matrix()));
    const UnitaryMatrix ulocal(kron(u1.matrix(), u2.matrix()));

    const Tomogram joint_t = extract_tomogram(prod, ulocal);
    const Tomogram t1 = extract_tomogram(rho1, u1);
    const Tomogram t2 = extract_tomogram(rho2, u2);

    // outer product structure
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            CHECK(joint_t.probs[j * 2 + k] == doctest::Approx(t1.probs[j] * t2.probs[k]).epsilon(1e-12));

    // A-marginal of the reshape equals the first local tomogram
    const ProbabilityVector ma = marginal_A(reshape_joint(joint_t.probs, {2, 2}));
    for (int j = 0; j < 2; ++j) CHECK(std::abs(ma[j] - t1.probs[j]) <= 1e-10);
}

}  // TEST_SUITE
