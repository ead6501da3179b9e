#pragma once

#include <cstdint>

#include "qent/complex_matrix.hpp"

namespace qent {

// Haar-distributed random unitary: QR of a complex Ginibre matrix via
// twice-iterated modified Gram-Schmidt. MGS yields R with a positive real
// diagonal, which is exactly the phase convention the Haar measure needs.
// Deterministic in (dim, seed).
UnitaryMatrix haar_unitary(int dim, std::uint64_t seed);

// Random density matrix G G† / Tr(G G†) with G a dim x rank complex
// standard-Gaussian matrix (Hilbert-Schmidt measure at rank = dim).
ComplexMatrix ginibre_density(int dim, int rank, std::uint64_t seed);

}  // namespace qent
