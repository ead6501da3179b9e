#pragma once

#include <vector>

#include "qent/errors.hpp"
#include "qent/report.hpp"
#include "qent/shape.hpp"

namespace qent {

// Finite probability distribution. Entries in [-1e-12, 0) are clipped to 0
// at construction; the total must be 1 within 1e-9.
class ProbabilityVector {
  public:
    static constexpr double kNegativeClip = -1e-12;
    static constexpr double kSumTol = 1e-9;

    explicit ProbabilityVector(std::vector<double> probs);

    int size() const { return static_cast<int>(p_.size()); }
    double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& probs() const { return p_; }

  private:
    std::vector<double> p_;
};

// A probability vector arranged as an n x m table P(j,k) under the shared
// row-major index map. Reshaping and flattening copy entries exactly.
class JointTable {
  public:
    JointTable(BipartitionShape shape, std::vector<double> table);

    int rows() const { return shape_.n; }
    int cols() const { return shape_.m; }
    BipartitionShape shape() const { return shape_; }
    double at(int j, int k) const { return t_[static_cast<std::size_t>(j) * shape_.m + k]; }

    ProbabilityVector flatten() const;

  private:
    BipartitionShape shape_;
    std::vector<double> t_;
};

JointTable reshape_joint(const ProbabilityVector& p, BipartitionShape shape);

// Row sums: P1(j) = sum_k P(j,k). Length n.
ProbabilityVector marginal_A(const JointTable& joint);

// Column sums: P2(k) = sum_j P(j,k). Length m.
ProbabilityVector marginal_B(const JointTable& joint);

// Bayes conditional P(j|k) for column k (0-based). Throws
// ZeroConditioningEvent when the column weight is below 1e-15.
ProbabilityVector conditional_given_B(const JointTable& joint, int k);

// -sum p ln p in nats, with 0 ln 0 = 0.
double shannon_entropy(const ProbabilityVector& p);

// Tsallis entropy (1 - sum p^q)/(q - 1); the q = 1 branch is Shannon.
double tsallis_entropy(const ProbabilityVector& p, double q);

// Average-form conditional entropy sum_k P2(k) H(A|k); the chain identity
// against H(A,B) - H(B) is recomputed and checked on every call.
double conditional_entropy_shannon(const JointTable& joint);

// Conditional q-entropy as the difference H_q(A,B) - H_q(B).
double conditional_entropy_q(const JointTable& joint, double q);

// rhs - lhs of the deformed subadditivity; no regime guard, any q > 0.
double classical_subadditivity_margin(const JointTable& joint, double q);

// Guarded check of H_q(A,B) <= H_q(A) + H_q(B), valid for q >= 1.
InequalityReport check_classical_subadditivity(const JointTable& joint, double q);

}  // namespace qent
