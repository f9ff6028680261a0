#pragma once

#include <functional>

#include <Eigen/Dense>

namespace contactnet {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct NumericDerivatives {
    Eigen::VectorXd gradient;
    Eigen::MatrixXd hessian;
};

// Central-difference gradient and Hessian with per-coordinate step
// h_i = eps^(1/3) * max(1, |theta_i|), eps = 2^-52. The Hessian is
// symmetrized as (H + H')/2. Throws NonFiniteEvaluation when f is not finite
// at a probe point.
Eigen::VectorXd numeric_gradient(const Objective& f,
                                 const Eigen::VectorXd& theta);
NumericDerivatives numeric_derivatives(const Objective& f,
                                       const Eigen::VectorXd& theta);

struct TrustRegionOptions {
    double initial_radius = 1.0;
    double max_radius = 100.0;
    double gradient_tolerance = 1e-6; // infinity norm
    double min_radius = 1e-12;
    int max_iterations = 500;
};

struct MLEResult {
    Eigen::VectorXd theta; // internal-scale optimum
    double value = 0.0;    // objective at the optimum
    Eigen::VectorXd gradient;
    Eigen::MatrixXd hessian;    // symmetrized, of the objective
    Eigen::MatrixXd covariance; // inverse of the negative Hessian
    Eigen::VectorXd se;         // sqrt of covariance diagonal
    double gradient_norm = 0.0; // infinity norm at the optimum
    bool converged = false;     // gradient tolerance met
    bool covariance_ok = false; // negative Hessian positive definite
    int iterations = 0;
    double final_radius = 0.0;
};

// Maximizes f with a dogleg trust-region Newton method driven by numerical
// derivatives. Step acceptance requires an actual objective increase; the
// radius shrinks by 0.25 when the model ratio is below 0.25 and doubles when
// it exceeds 0.75 at the boundary. Deterministic given (f, theta0, options).
// Evaluations of f that throw or return non-finite values reject the step.
MLEResult maximize(const Objective& f, const Eigen::VectorXd& theta0,
                   const TrustRegionOptions& options = {});

} // namespace contactnet
