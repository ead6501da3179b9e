#include "qent/inequalities.hpp"

#include <cmath>

namespace qent {

namespace {

double spectrum_entropy(const std::vector<double>& lam) {
    double h = 0.0;
    for (double x : lam)
        if (x > 0.0) h -= x * std::log(x);
    return h;
}

double spectrum_q_entropy(const std::vector<double>& lam, double q) {
    if (!(q > 0.0)) throw InvalidQ("quantum_q_entropy: q must be > 0");
    if (q == 1.0) return spectrum_entropy(lam);
    double sum = 0.0;
    for (double x : lam)
        if (x > 0.0) sum += std::pow(x, q);
    return (1.0 - sum) / (q - 1.0);
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) { return spectrum_entropy(rho.eigenvalues()); }

double quantum_q_entropy(const DensityMatrix& rho, double q) {
    return spectrum_q_entropy(rho.eigenvalues(), q);
}

double tomographic_q_entropy(const Tomogram& t, double q) { return tsallis_entropy(t.probs, q); }

InequalityReport check_quantum_subadditivity(const DensityMatrix& rho, BipartitionShape shape,
                                             double q) {
    if (q < 1.0) throw InvalidQ("check_quantum_subadditivity: guaranteed regime is q >= 1");
    const DensityMatrix r1 = block_marginal_first(rho, shape);
    const DensityMatrix r2 = block_marginal_second(rho, shape);
    const double lhs = quantum_q_entropy(rho, q);
    const double rhs = quantum_q_entropy(r1, q) + quantum_q_entropy(r2, q);
    return make_report(InequalityName::quantum_subadditivity, lhs, rhs, q, shape);
}

InequalityReport check_araki_lieb(const DensityMatrix& rho, BipartitionShape shape) {
    const DensityMatrix r1 = block_marginal_first(rho, shape);
    const DensityMatrix r2 = block_marginal_second(rho, shape);
    const double lhs = std::abs(von_neumann_entropy(r1) - von_neumann_entropy(r2));
    const double rhs = von_neumann_entropy(rho);
    return make_report(InequalityName::araki_lieb, lhs, rhs, 1.0, shape);
}

InequalityReport tomographic_subadditivity_from(const Tomogram& t, BipartitionShape shape,
                                                double q) {
    if (q < 1.0) throw InvalidQ("tomographic_subadditivity: guaranteed regime is q >= 1");
    const JointTable joint = reshape_joint(t.probs, shape);
    const double lhs = tsallis_entropy(t.probs, q);
    const double rhs = tsallis_entropy(marginal_A(joint), q) + tsallis_entropy(marginal_B(joint), q);
    InequalityReport r =
        make_report(InequalityName::tomographic_subadditivity, lhs, rhs, q, shape);
    if (!t.unitary_label.empty()) r.unitary_label = t.unitary_label;
    return r;
}

InequalityReport check_tomographic_subadditivity(const DensityMatrix& rho, const UnitaryMatrix& u,
                                                 BipartitionShape shape, double q) {
    if (shape.total() != rho.dim())
        throw ShapeMismatch("check_tomographic_subadditivity: shape does not factor the dimension");
    const LabelScheme scheme = (shape.n == 2 && shape.m == 2)
                                   ? LabelScheme::spin_projection
                                   : LabelScheme::linear_index;
    return tomographic_subadditivity_from(extract_tomogram(rho, u, scheme), shape, q);
}

double qudit32_conditional_q_entropy(const Tomogram& t, double q) {
    if (!(q > 0.0)) throw InvalidQ("qudit32_conditional_q_entropy: q must be > 0");
    const auto [omega1, omega2] = qudit32_omegas(t);
    (void)omega2;
    return tsallis_entropy(t.probs, q) - tsallis_entropy(omega1, q);
}

InformationValue information_I(const DensityMatrix& rho, const UnitaryMatrix& u,
                               BipartitionShape shape) {
    const DensityMatrix rotated = conjugate(rho, u);
    const DensityMatrix r1 = block_marginal_first(rotated, shape);
    const DensityMatrix r2 = block_marginal_second(rotated, shape);
    const double value =
        von_neumann_entropy(r1) + von_neumann_entropy(r2) - von_neumann_entropy(rho);
    return InformationValue{value, InformationKind::I_of_u, 1.0};
}

InformationValue deformed_information(const DensityMatrix& rho, const UnitaryMatrix& u,
                                      BipartitionShape shape, double q) {
    if (q < 1.0) throw InvalidQ("deformed_information: guaranteed regime is q >= 1");
    const DensityMatrix rotated = conjugate(rho, u);
    const DensityMatrix r1 = block_marginal_first(rotated, shape);
    const DensityMatrix r2 = block_marginal_second(rotated, shape);
    const double value =
        quantum_q_entropy(r1, q) + quantum_q_entropy(r2, q) - quantum_q_entropy(rho, q);
    return InformationValue{value, InformationKind::deformed_I_of_u, q};
}

BipartiteMutualInfo mutual_information_bipartite(const DensityMatrix& rho, BipartitionShape shape) {
    const DensityMatrix r1 = block_marginal_first(rho, shape);
    const DensityMatrix r2 = block_marginal_second(rho, shape);
    const double value =
        von_neumann_entropy(r1) + von_neumann_entropy(r2) - von_neumann_entropy(rho);
    // the columns of each eigenvector matrix diagonalize the marginal:
    // V† R V = diag, so the local transform is the adjoint
    UnitaryMatrix u1(r1.eigenvectors().adjoint(), 1e-9);
    UnitaryMatrix u2(r2.eigenvectors().adjoint(), 1e-9);
    return BipartiteMutualInfo{InformationValue{value, InformationKind::I_q, 1.0}, u1, u2};
}

}  // namespace qent
