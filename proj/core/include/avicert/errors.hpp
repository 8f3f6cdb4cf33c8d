#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace avicert {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration, bad CLI input, or violated call contract.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A dynamics evaluation produced a non-finite state.
class DomainEscape : public Error {
 public:
  DomainEscape(const std::string& what, Eigen::VectorXd state)
      : Error(what), state(std::move(state)) {}
  Eigen::VectorXd state;
};

/// The orbital model was evaluated inside its gravitational singularity guard.
class SingularState : public Error {
 public:
  SingularState(const std::string& what, Eigen::VectorXd state, double radius)
      : Error(what), state(std::move(state)), radius(radius) {}
  Eigen::VectorXd state;
  double radius;
};

/// Rank-deficient least-squares system solved without regularization.
class IllConditioned : public Error {
 public:
  IllConditioned(const std::string& what, double smallest_sv, double largest_sv)
      : Error(what), smallest_sv(smallest_sv), largest_sv(largest_sv) {}
  double smallest_sv;
  double largest_sv;
};

/// The control fixed-point iteration failed to contract. Usually means the
/// sampling time of the model is too large for the current critic.
class InnerLoopDivergence : public Error {
 public:
  InnerLoopDivergence(const std::string& what, Eigen::VectorXd state,
                      Eigen::VectorXd last_control, Eigen::VectorXd previous_control)
      : Error(what),
        state(std::move(state)),
        last_control(std::move(last_control)),
        previous_control(std::move(previous_control)) {}
  Eigen::VectorXd state;
  Eigen::VectorXd last_control;
  Eigen::VectorXd previous_control;
};

/// The critic is not positive on the non-origin part of the grid, so no
/// sublevel-set region of attraction can be issued.
class PositivityViolation : public Error {
 public:
  PositivityViolation(const std::string& what, Eigen::VectorXd state, double value)
      : Error(what), state(std::move(state)), value(value) {}
  Eigen::VectorXd state;
  double value;
};

}  // namespace avicert
