#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "avicert/basis.hpp"
#include "avicert/dynamics.hpp"

namespace avicert {

struct InnerLoopConfig {
  double tolerance = 1e-9;
  int max_iterations = 50;
};

struct InnerSolution {
  Eigen::VectorXd control;
  int iterations = 0;
};

/// Fixed point of the control-affine minimizer
///   u = -1/2 R^{-1} g' dV/dx(F(x) + g u)
/// by successive approximation from u0 = 0. Converges for small enough dt;
/// non-convergence within max_iterations throws InnerLoopDivergence carrying
/// x and the last two iterates.
InnerSolution solve_control(const SystemModel& model, const LinearCritic& critic,
                            const Eigen::VectorXd& x,
                            const InnerLoopConfig& inner = {});

struct AviConfig {
  DomainBox domain;
  int sample_count = 0;
  std::uint64_t rng_seed = 0;
  double outer_tolerance = 0.01;
  int max_outer_iterations = 1000;
  InnerLoopConfig inner;
  /// The +-c of the bounding sweeps: target gains shift*U(x,0) per step.
  /// 0 for plain iteration. Must lie in (-1, 1).
  double utility_shift = 0.0;
  /// Initial critic weights; empty means zero.
  Eigen::VectorXd initial_critic_weights;
  int threads = 1;  // <= 0 means all hardware threads

  /// Throws ConfigError on violated invariants (sample_count below the basis
  /// term count, |utility_shift| >= 1, non-positive tolerances, bad domain).
  void validate(const PolynomialBasis& basis) const;
};

/// Full iteration history of one value-iteration run.
struct AviRun {
  AviConfig config;
  std::vector<Eigen::VectorXd> samples;
  /// One weight vector per iteration, including the initial critic, so the
  /// per-iteration error can be reconstructed for every sweep afterwards.
  std::vector<Eigen::VectorXd> weight_history;
  std::vector<double> residual_max_history;
  /// Per-sample |V^{i+1}(x) - V^i(x)| for each iteration.
  std::vector<Eigen::VectorXd> sample_residual_history;
  /// Iteration count at which the tolerance was met; nullopt if it never was.
  std::optional<int> converged_at;
  /// Whether the initial critic satisfied 0 <= V0(x) <= (1-|shift|) U(x,0) at
  /// the samples (required by the convergence-to-bounds guarantees).
  bool initial_bound_ok = true;

  int iterations() const { return static_cast<int>(weight_history.size()) - 1; }
  bool converged() const { return converged_at.has_value(); }
  LinearCritic critic_at(int iteration, const PolynomialBasis& basis) const;
};

struct AviStepResult {
  LinearCritic critic;                    // the fitted next critic
  Eigen::VectorXd targets;                // per-sample Bellman targets
  std::vector<Eigen::VectorXd> controls;  // per-sample inner-loop controls
};

/// One sweep: for each sample solves the inner loop against critic_i, forms
/// target U(x,u) + shift*U(x,0) + V_i(f(x,u)), and fits the next weights by
/// least squares (with ridge fallback on degenerate sampling).
AviStepResult avi_step(const SystemModel& model, const LinearCritic& critic_i,
                       const std::vector<Eigen::VectorXd>& samples,
                       double utility_shift, const InnerLoopConfig& inner = {},
                       int threads = 1);

/// Uniform i.i.d. samples over the box from a splitmix-free, platform-stable
/// mt19937_64 stream.
std::vector<Eigen::VectorXd> sample_domain(const DomainBox& domain, int count,
                                           std::uint64_t seed);

/// Outer loop: iterates sweeps until the per-sample residual drops below
/// outer_tolerance everywhere or max_outer_iterations is hit (the run is then
/// returned with converged_at unset). Inner-loop failures abort with context.
AviRun run_avi(const SystemModel& model, const PolynomialBasis& basis,
               const AviConfig& config);

/// One-shot actor fit: regresses the converged inner-loop controls at the
/// samples onto the actor basis.
LinearActor train_actor(const SystemModel& model, const LinearCritic& critic,
                        const PolynomialBasis& actor_basis,
                        const std::vector<Eigen::VectorXd>& samples,
                        const InnerLoopConfig& inner = {}, int threads = 1);

}  // namespace avicert
