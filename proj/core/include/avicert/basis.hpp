#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace avicert {

/// Non-repeating multivariate monomial feature map. Terms are enumerated in
/// graded lexicographic order: total degree ascending, and within a degree in
/// the order produced by non-decreasing variable-index tuples (x1*x1, x1*x2,
/// x2*x2, ...). The order is pure integer enumeration, so it is stable across
/// runs and platforms and is part of the weight-file format.
struct PolynomialBasis {
  int dim = 0;
  std::vector<int> degrees;               // sorted ascending, unique, each >= 1
  std::vector<std::vector<int>> terms;    // exponent multi-indices, length dim
  int max_degree = 0;

  int size() const { return static_cast<int>(terms.size()); }
  int min_degree() const { return degrees.empty() ? 0 : degrees.front(); }

  /// phi(x): component j is prod_i x(i)^{e_j(i)}.
  Eigen::VectorXd eval(const Eigen::VectorXd& x) const;

  /// Analytic Jacobian of phi, size() x dim.
  Eigen::MatrixXd gradient(const Eigen::VectorXd& x) const;
};

/// Number of monomials of exact total degree `degree` in `dim` variables
/// (multisets of size degree over dim symbols).
std::int64_t monomial_count(int dim, int degree);

/// Builds the basis for the given total degrees. Throws ConfigError if dim < 1,
/// degrees is empty, or any degree < 1.
PolynomialBasis build_basis(int dim, const std::vector<int>& degrees);

/// Feature matrix for a batch of states: row p is phi(states[p]).
Eigen::MatrixXd feature_matrix(const PolynomialBasis& basis,
                               const std::vector<Eigen::VectorXd>& states);

/// Linear-in-parameter value approximator V(x) = w'phi(x).
struct LinearCritic {
  PolynomialBasis basis;
  Eigen::VectorXd weights;

  double value(const Eigen::VectorXd& x) const;

  /// dV/dx, length dim.
  Eigen::VectorXd state_gradient(const Eigen::VectorXd& x) const;
};

/// Linear-in-parameter policy approximator h(x) = W'sigma(x), W is
/// basis.size() x m.
struct LinearActor {
  PolynomialBasis basis;
  Eigen::MatrixXd weights;

  Eigen::VectorXd value(const Eigen::VectorXd& x) const;
};

/// Minimizes ||features*W - targets||^2 + ridge*||W||^2 over W via SVD.
/// features is samples x n_terms, targets samples x q; returns n_terms x q.
/// With ridge == 0 a rank-deficient system throws IllConditioned (naming the
/// smallest singular value); callers that prefer a regularized retry use
/// LeastSquaresSolver with RankPolicy::ridge_fallback.
Eigen::MatrixXd least_squares_fit(const Eigen::MatrixXd& features,
                                  const Eigen::MatrixXd& targets,
                                  double ridge = 0.0);

enum class RankPolicy {
  strict,          // throw IllConditioned on rank deficiency at ridge == 0
  ridge_fallback,  // retry with ridge = 1e-10 * sigma_max^2
};

/// Cached SVD of a fixed feature matrix, reusable across many target sets.
/// The iteration engine decomposes its (fixed) sample features once and calls
/// solve() per sweep; solving is deterministic for fixed inputs.
class LeastSquaresSolver {
 public:
  LeastSquaresSolver(const Eigen::MatrixXd& features, double ridge,
                     RankPolicy policy);

  Eigen::MatrixXd solve(const Eigen::MatrixXd& targets) const;

  double smallest_sv() const { return smallest_sv_; }
  double largest_sv() const { return largest_sv_; }
  double ridge_used() const { return ridge_; }
  bool used_fallback() const { return used_fallback_; }

 private:
  Eigen::MatrixXd u_;
  Eigen::MatrixXd v_;
  Eigen::VectorXd inv_sv_;  // sigma / (sigma^2 + ridge), zero where truncated
  double smallest_sv_ = 0.0;
  double largest_sv_ = 0.0;
  double ridge_ = 0.0;
  bool used_fallback_ = false;
};

/// Weight persistence with the grlex term order as part of the format.
/// Round-trips are bit-exact at double precision (17-significant-digit
/// decimal serialization).
std::string critic_to_json(const LinearCritic& critic);
LinearCritic critic_from_json(const std::string& text);
std::string actor_to_json(const LinearActor& actor);
LinearActor actor_from_json(const std::string& text);

}  // namespace avicert
