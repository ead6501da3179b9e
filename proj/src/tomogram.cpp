#include "qent/tomogram.hpp"

#include <cmath>

namespace qent {

std::vector<std::string> basis_labels(LabelScheme scheme, int dim) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(dim));
    switch (scheme) {
        case LabelScheme::linear_index:
            for (int s = 1; s <= dim; ++s) labels.push_back(std::to_string(s));
            break;
        case LabelScheme::spin_pair:
            if (dim != 4) throw WrongLabelScheme("spin_pair labels require dim = 4");
            labels = {"+1/2,+1/2", "+1/2,-1/2", "-1/2,+1/2", "-1/2,-1/2"};
            break;
        case LabelScheme::spin_projection:
            // m = -(dim-1)/2 .. +(dim-1)/2 ascending; halves when dim is even
            for (int k = 0; k < dim; ++k) {
                const int twice_m = 2 * k - (dim - 1);
                if (dim % 2 == 1) {
                    const int m = twice_m / 2;
                    labels.push_back(m > 0 ? "+" + std::to_string(m) : std::to_string(m));
                } else {
                    labels.push_back((twice_m > 0 ? "+" : "") + std::to_string(twice_m) + "/2");
                }
            }
            break;
    }
    return labels;
}

Tomogram extract_tomogram(const DensityMatrix& rho, const UnitaryMatrix& u, LabelScheme scheme,
                          std::string unitary_label) {
    if (u.dim() != rho.dim())
        throw DimensionMismatch("extract_tomogram: unitary/state dimension mismatch");
    const int n = rho.dim();

    std::vector<double> w(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        cplx diag{0.0, 0.0};
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                diag += u(s, a) * rho.matrix()(a, b) * std::conj(u(s, b));
        double x = diag.real();
        if (x < 0.0) {
            if (x < -1e-12) throw NotPositive("extract_tomogram: negative diagonal entry");
            x = 0.0;
        }
        w[static_cast<std::size_t>(s)] = x;
    }

    double sum = 0.0;
    for (double x : w) sum += x;
    if (std::abs(sum - 1.0) > 1e-10)
        throw InvalidProbability("extract_tomogram: diagonal does not sum to 1");
    for (double& x : w) x /= sum;

    return Tomogram{ProbabilityVector(std::move(w)), scheme, basis_labels(scheme, n),
                    std::move(unitary_label)};
}

std::pair<ProbabilityVector, ProbabilityVector> qudit32_omegas(const Tomogram& t) {
    if (t.scheme != LabelScheme::spin_projection || t.probs.size() != 4)
        throw WrongLabelScheme("qudit32_omegas: need a length-4 spin_projection tomogram");
    const ProbabilityVector& w = t.probs;
    ProbabilityVector omega1({w[0] + w[1], w[2] + w[3]});
    ProbabilityVector omega2({w[0] + w[2], w[1] + w[3]});
    return {omega1, omega2};
}

}  // namespace qent
