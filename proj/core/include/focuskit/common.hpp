#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace focuskit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Thrown when an iterative solver fails to converge or a numerical
/// precondition (off-orbit point, degenerate tangent) is violated at runtime.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed user input (bad dimensions, bad config values).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace focuskit
