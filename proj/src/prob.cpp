#include "qent/prob.hpp"

#include <cmath>
#include <utility>

namespace qent {

namespace {

double entropy_of(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p)
        if (x > 0.0) h -= x * std::log(x);
    return h;
}

double tsallis_of(const std::vector<double>& p, double q) {
    if (!(q > 0.0)) throw InvalidQ("tsallis_entropy: q must be > 0");
    if (q == 1.0) return entropy_of(p);
    double sum_pq = 0.0;
    for (double x : p)
        if (x > 0.0) sum_pq += std::pow(x, q);
    return (1.0 - sum_pq) / (q - 1.0);
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : p_(std::move(probs)) {
    if (p_.empty()) throw InvalidProbability("ProbabilityVector: empty");
    double sum = 0.0;
    for (double& x : p_) {
        if (!std::isfinite(x)) throw InvalidProbability("ProbabilityVector: non-finite entry");
        if (x < 0.0) {
            if (x < kNegativeClip) throw InvalidProbability("ProbabilityVector: negative entry");
            x = 0.0;
        }
        sum += x;
    }
    if (std::abs(sum - 1.0) > kSumTol)
        throw InvalidProbability("ProbabilityVector: entries do not sum to 1");
}

JointTable::JointTable(BipartitionShape shape, std::vector<double> table)
    : shape_(shape), t_(std::move(table)) {
    if (shape_.n < 1 || shape_.m < 1) throw ShapeMismatch("JointTable: shape factors must be >= 1");
    if (t_.size() != static_cast<std::size_t>(shape_.total()))
        throw ShapeMismatch("JointTable: table size does not match shape");
    // delegate the nonnegativity and normalization checks
    ProbabilityVector check(t_);
    t_ = check.probs();
}

ProbabilityVector JointTable::flatten() const { return ProbabilityVector(t_); }

JointTable reshape_joint(const ProbabilityVector& p, BipartitionShape shape) {
    if (shape.total() != p.size())
        throw ShapeMismatch("reshape_joint: shape.n * shape.m must equal the vector length");
    return JointTable(shape, p.probs());
}

ProbabilityVector marginal_A(const JointTable& joint) {
    std::vector<double> out(static_cast<std::size_t>(joint.rows()), 0.0);
    for (int j = 0; j < joint.rows(); ++j)
        for (int k = 0; k < joint.cols(); ++k) out[static_cast<std::size_t>(j)] += joint.at(j, k);
    return ProbabilityVector(std::move(out));
}

ProbabilityVector marginal_B(const JointTable& joint) {
    std::vector<double> out(static_cast<std::size_t>(joint.cols()), 0.0);
    for (int j = 0; j < joint.rows(); ++j)
        for (int k = 0; k < joint.cols(); ++k) out[static_cast<std::size_t>(k)] += joint.at(j, k);
    return ProbabilityVector(std::move(out));
}

ProbabilityVector conditional_given_B(const JointTable& joint, int k) {
    if (k < 0 || k >= joint.cols()) throw ShapeMismatch("conditional_given_B: column out of range");
    double colsum = 0.0;
    for (int j = 0; j < joint.rows(); ++j) colsum += joint.at(j, k);
    if (colsum <= 1e-15)
        throw ZeroConditioningEvent("conditional_given_B: conditioning column has zero weight");
    std::vector<double> out(static_cast<std::size_t>(joint.rows()));
    for (int j = 0; j < joint.rows(); ++j) out[static_cast<std::size_t>(j)] = joint.at(j, k) / colsum;
    return ProbabilityVector(std::move(out));
}

double shannon_entropy(const ProbabilityVector& p) { return entropy_of(p.probs()); }

double tsallis_entropy(const ProbabilityVector& p, double q) { return tsallis_of(p.probs(), q); }

double conditional_entropy_shannon(const JointTable& joint) {
    // average form; zero-weight columns contribute nothing
    double h = 0.0;
    for (int k = 0; k < joint.cols(); ++k) {
        double colsum = 0.0;
        for (int j = 0; j < joint.rows(); ++j) colsum += joint.at(j, k);
        if (colsum <= 1e-15) continue;
        double hk = 0.0;
        for (int j = 0; j < joint.rows(); ++j) {
            const double c = joint.at(j, k) / colsum;
            if (c > 0.0) hk -= c * std::log(c);
        }
        h += colsum * hk;
    }

    const double difference_form =
        shannon_entropy(joint.flatten()) - shannon_entropy(marginal_B(joint));
    if (std::abs(h - difference_form) > 1e-10)
        throw Error("conditional_entropy_shannon: chain identity violated beyond 1e-10");
    return h;
}

double conditional_entropy_q(const JointTable& joint, double q) {
    if (!(q > 0.0)) throw InvalidQ("conditional_entropy_q: q must be > 0");
    return tsallis_entropy(joint.flatten(), q) - tsallis_entropy(marginal_B(joint), q);
}

double classical_subadditivity_margin(const JointTable& joint, double q) {
    const double lhs = tsallis_entropy(joint.flatten(), q);
    const double rhs = tsallis_entropy(marginal_A(joint), q) + tsallis_entropy(marginal_B(joint), q);
    return rhs - lhs;
}

InequalityReport check_classical_subadditivity(const JointTable& joint, double q) {
    if (q < 1.0) throw InvalidQ("check_classical_subadditivity: guaranteed regime is q >= 1");
    const double lhs = tsallis_entropy(joint.flatten(), q);
    const double rhs = tsallis_entropy(marginal_A(joint), q) + tsallis_entropy(marginal_B(joint), q);
    return make_report(InequalityName::classical_subadditivity, lhs, rhs, q, joint.shape());
}

}  // namespace qent
