#pragma once

#include "qent/density.hpp"
#include "qent/report.hpp"
#include "qent/tomogram.hpp"

namespace qent {

// -Tr rho ln rho over the clipped spectrum, 0 ln 0 = 0. Nats.
double von_neumann_entropy(const DensityMatrix& rho);

// Deformed entropy S_q(rho) = (1 - Tr rho^q)/(q - 1), von Neumann at q = 1.
double quantum_q_entropy(const DensityMatrix& rho, double q);

// Tsallis entropy of the tomogram probabilities.
double tomographic_q_entropy(const Tomogram& t, double q);

// S_q(rho) <= S_q(R1) + S_q(R2) with R1, R2 the block marginals. q >= 1.
InequalityReport check_quantum_subadditivity(const DensityMatrix& rho, BipartitionShape shape,
                                             double q);

// |S(R1) - S(R2)| <= S(rho); the margin is S(rho) - |S(R1) - S(R2)|.
InequalityReport check_araki_lieb(const DensityMatrix& rho, BipartitionShape shape);

// Classical deformed subadditivity of the reshaped tomogram probabilities;
// for a spin-3/2 tomogram the marginals coincide with Omega1, Omega2.
InequalityReport tomographic_subadditivity_from(const Tomogram& t, BipartitionShape shape,
                                                double q);

InequalityReport check_tomographic_subadditivity(const DensityMatrix& rho, const UnitaryMatrix& u,
                                                 BipartitionShape shape, double q);

// H_q(A|B) = H_q(w) - H_q(Omega1) for the spin-3/2 tomogram, where Omega1
// is the negative/positive projection split. Chain relation holds by
// construction.
double qudit32_conditional_q_entropy(const Tomogram& t, double q);

// I(u) = S(R1(u)) + S(R2(u)) - S(rho), the unitary-dependent information;
// nonnegative for every u.
InformationValue information_I(const DensityMatrix& rho, const UnitaryMatrix& u,
                               BipartitionShape shape);

// q-deformed analog of I(u); q >= 1.
InformationValue deformed_information(const DensityMatrix& rho, const UnitaryMatrix& u,
                                      BipartitionShape shape, double q);

// S(R1) + S(R2) - S(rho) of the direct block marginals, together with the
// local unitaries that diagonalize R1 and R2 (entropies are basis-invariant,
// so this equals the value at u10 x u20; the unitaries are kept for audit).
struct BipartiteMutualInfo {
    InformationValue info;
    UnitaryMatrix u1_diag;
    UnitaryMatrix u2_diag;
};

BipartiteMutualInfo mutual_information_bipartite(const DensityMatrix& rho, BipartitionShape shape);

}  // namespace qent
