#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qent/shape.hpp"

namespace qent {

// Margins this far below zero still count as satisfied; everything the
// library checks is an exact inequality, so only roundoff lives here.
inline constexpr double kMarginTol = 1e-9;

enum class InequalityName {
    classical_subadditivity,
    quantum_subadditivity,
    araki_lieb,
    tomographic_subadditivity,
    information_nonnegativity,
};

const char* to_string(InequalityName name);

// One checked inequality: lhs <= rhs with margin = rhs - lhs (for the
// Araki-Lieb form the margin is S(rho) - |S(R1) - S(R2)|, so "satisfied"
// keeps the uniform margin >= 0 reading).
struct InequalityReport {
    InequalityName name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double q = 1.0;
    BipartitionShape shape{1, 1};
    bool satisfied = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> unitary_label;
};

InequalityReport make_report(InequalityName name, double lhs, double rhs, double q,
                             BipartitionShape shape);

enum class InformationKind { I_of_u, Sigma, I_q, deformed_I_of_u };

const char* to_string(InformationKind kind);

struct InformationValue {
    double value = 0.0;
    InformationKind kind = InformationKind::I_of_u;
    double q = 1.0;
};

struct SuiteAggregate {
    int checks_run = 0;
    int violations = 0;
    double worst_margin = 0.0;
};

SuiteAggregate aggregate(const std::vector<InequalityReport>& reports);

}  // namespace qent
