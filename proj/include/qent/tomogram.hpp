#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qent/density.hpp"
#include "qent/prob.hpp"

namespace qent {

// Basis labeling for the tomogram index s = 1..N:
//   linear_index     "1", "2", ... "N"
//   spin_pair        two-qubit pairs (m1, m2), N = 4 only, ordered
//                    (+1/2,+1/2), (+1/2,-1/2), (-1/2,+1/2), (-1/2,-1/2)
//   spin_projection  single spin j = (N-1)/2 with m ascending, e.g. N = 4:
//                    -3/2, -1/2, +1/2, +3/2
enum class LabelScheme { linear_index, spin_pair, spin_projection };

std::vector<std::string> basis_labels(LabelScheme scheme, int dim);

// w(s, u) = (u rho u†)_ss together with its basis labels and a description
// of the unitary that produced it.
struct Tomogram {
    ProbabilityVector probs;
    LabelScheme scheme;
    std::vector<std::string> labels;
    std::string unitary_label;
};

// Diagonal of u rho u†. Entries in [-1e-12, 0) are clipped to 0 and the
// vector renormalized when the total stays within 1e-10 of 1; larger
// deviations are errors.
Tomogram extract_tomogram(const DensityMatrix& rho, const UnitaryMatrix& u,
                          LabelScheme scheme = LabelScheme::linear_index,
                          std::string unitary_label = "");

// Spin-3/2 pair of coarse-grained distributions:
//   Omega1 = (w(-3/2)+w(-1/2), w(+1/2)+w(+3/2))   negative/positive split
//   Omega2 = (w(-3/2)+w(+1/2), w(-1/2)+w(+3/2))
// Requires a length-4 spin_projection tomogram.
std::pair<ProbabilityVector, ProbabilityVector> qudit32_omegas(const Tomogram& t);

}  // namespace qent
