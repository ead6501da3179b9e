#include "qent/report.hpp"

#include <algorithm>
#include <limits>

namespace qent {

const char* to_string(InequalityName name) {
    switch (name) {
        case InequalityName::classical_subadditivity: return "classical_subadditivity";
        case InequalityName::quantum_subadditivity: return "quantum_subadditivity";
        case InequalityName::araki_lieb: return "araki_lieb";
        case InequalityName::tomographic_subadditivity: return "tomographic_subadditivity";
        case InequalityName::information_nonnegativity: return "information_nonnegativity";
    }
    return "unknown";
}

const char* to_string(InformationKind kind) {
    switch (kind) {
        case InformationKind::I_of_u: return "I_of_u";
        case InformationKind::Sigma: return "Sigma";
        case InformationKind::I_q: return "I_q";
        case InformationKind::deformed_I_of_u: return "deformed_I_of_u";
    }
    return "unknown";
}

InequalityReport make_report(InequalityName name, double lhs, double rhs, double q,
                             BipartitionShape shape) {
    InequalityReport r;
    r.name = name;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.q = q;
    r.shape = shape;
    r.satisfied = r.margin >= -kMarginTol;
    return r;
}

SuiteAggregate aggregate(const std::vector<InequalityReport>& reports) {
    SuiteAggregate a;
    a.checks_run = static_cast<int>(reports.size());
    a.worst_margin = std::numeric_limits<double>::infinity();
    for (const InequalityReport& r : reports) {
        if (!r.satisfied) ++a.violations;
        a.worst_margin = std::min(a.worst_margin, r.margin);
    }
    if (reports.empty()) a.worst_margin = 0.0;
    return a;
}

std::vector<BipartitionShape> ordered_factorizations(int dim) {
    std::vector<BipartitionShape> shapes;
    for (int n = 2; n * 2 <= dim; ++n)
        if (dim % n == 0) shapes.push_back({n, dim / n});
    return shapes;
}

int smallest_padded_dim(int dim) {
    int target = std::max(dim, 4);
    while (ordered_factorizations(target).empty()) ++target;
    return target;
}

}  // namespace qent
