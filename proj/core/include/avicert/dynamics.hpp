#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>

#include "avicert/errors.hpp"

namespace avicert {

/// Componentwise bounds of the compact training domain. The origin must lie
/// strictly inside.
struct DomainBox {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  int dim() const { return static_cast<int>(lower.size()); }
  bool contains(const Eigen::VectorXd& x) const;

  /// Throws ConfigError unless lower < upper componentwise and 0 is interior.
  void validate() const;
};

/// Discrete-time control-affine plant x+ = F(x) + g u with stage utility
/// U(x,u) = Q(x) + u'Ru. Q must be smooth, convex, and positive definite;
/// R symmetric positive definite.
struct SystemModel {
  int state_dim = 0;
  int control_dim = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> drift;  // F
  Eigen::MatrixXd input_map;                                     // g, n x m
  std::function<double(const Eigen::VectorXd&)> state_weight;    // Q
  Eigen::MatrixXd control_weight;                                // R, m x m
  double dt = 1.0;
};

/// One step of the plant: F(x) + g u. Throws DomainEscape if the result is
/// not finite.
Eigen::VectorXd step(const SystemModel& model, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& u);

/// Stage utility U(x,u) = Q(x) + u'Ru.
double utility(const SystemModel& model, const Eigen::VectorXd& x,
               const Eigen::VectorXd& u);

/// Planar orbital maneuver plant (4 states, 2 controls), explicit-Euler
/// discretized with sampling interval dt. States are the in-plane position
/// offset from the target circular orbit and its rate; the gravity deviation
/// term 1/r^3 - 1 vanishes on the unit circle (1+X)^2 + Y^2 = 1.
/// Q(x) = q_scale*dt*x'x, R = r_scale*dt*I2. Evaluation with r < r_min
/// throws SingularState.
SystemModel orbital_model(double dt, double q_scale = 100.0, double r_scale = 1.0,
                          double r_min = 1e-6);

/// Scalar linear plant x+ = a x + b u with Q(x) = q x^2 and R = [r].
/// Used as the closed-form reference plant in the test oracles.
SystemModel scalar_linear_model(double a, double b, double q, double r);

/// Parameters needed to reconstruct a SystemModel from a [model] config
/// section; this is what run bundles persist.
struct ModelConfig {
  std::string name = "orbital";  // "orbital" | "scalar_linear"
  double dt = 0.01;
  double q_scale = 100.0;
  double r_scale = 1.0;
  double r_min = 1e-6;
  // scalar_linear parameters
  double a = 0.9;
  double b = 0.1;
  double q = 1.0;
  double r = 1.0;
  DomainBox domain;

  /// Throws ConfigError on unknown names or non-positive dt/weights.
  SystemModel build() const;
};

}  // namespace avicert
