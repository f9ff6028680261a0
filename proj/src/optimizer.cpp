#include "contactnet/optimizer.hpp"

#include <cmath>
#include <limits>

#include "contactnet/errors.hpp"

namespace contactnet {

namespace {

// eps^(1/3) with eps = 2^-52, fixed so derivative values are reproducible.
const double kStep = std::pow(std::ldexp(1.0, -52), 1.0 / 3.0);

double eval_checked(const Objective& f, const Eigen::VectorXd& theta) {
    const double v = f(theta);
    if (!std::isfinite(v)) {
        throw NonFiniteEvaluation("objective not finite at probe point");
    }
    return v;
}

// Objective wrapper for trial points: failures become -inf so the trust
// region treats them as rejected steps.
double eval_trial(const Objective& f, const Eigen::VectorXd& theta) {
    try {
        const double v = f(theta);
        return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity();
    } catch (const Error&) {
        return -std::numeric_limits<double>::infinity();
    }
}

} // namespace

Eigen::VectorXd numeric_gradient(const Objective& f,
                                 const Eigen::VectorXd& theta) {
    const Eigen::Index k = theta.size();
    Eigen::VectorXd g(k);
    Eigen::VectorXd probe = theta;
    for (Eigen::Index i = 0; i < k; ++i) {
        const double h = kStep * std::max(1.0, std::abs(theta[i]));
        probe[i] = theta[i] + h;
        const double fp = eval_checked(f, probe);
        probe[i] = theta[i] - h;
        const double fm = eval_checked(f, probe);
        probe[i] = theta[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

NumericDerivatives numeric_derivatives(const Objective& f,
                                       const Eigen::VectorXd& theta) {
    const Eigen::Index k = theta.size();
    NumericDerivatives d;
    d.gradient = numeric_gradient(f, theta);
    d.hessian.resize(k, k);

    const double f0 = eval_checked(f, theta);
    Eigen::VectorXd h(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        h[i] = kStep * std::max(1.0, std::abs(theta[i]));
    }

    Eigen::VectorXd probe = theta;
    for (Eigen::Index i = 0; i < k; ++i) {
        probe[i] = theta[i] + h[i];
        const double fp = eval_checked(f, probe);
        probe[i] = theta[i] - h[i];
        const double fm = eval_checked(f, probe);
        probe[i] = theta[i];
        d.hessian(i, i) = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
    }
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i + 1; j < k; ++j) {
            probe[i] = theta[i] + h[i];
            probe[j] = theta[j] + h[j];
            const double fpp = eval_checked(f, probe);
            probe[j] = theta[j] - h[j];
            const double fpm = eval_checked(f, probe);
            probe[i] = theta[i] - h[i];
            const double fmm = eval_checked(f, probe);
            probe[j] = theta[j] + h[j];
            const double fmp = eval_checked(f, probe);
            probe[i] = theta[i];
            probe[j] = theta[j];
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
            d.hessian(i, j) = v;
            d.hessian(j, i) = v;
        }
    }
    d.hessian = ((d.hessian + d.hessian.transpose()) / 2.0).eval();
    return d;
}

namespace {

// Dogleg step for minimizing g'p + p'Bp/2 within ||p|| <= radius. B is the
// curvature of the negated objective; when it is not positive definite a
// ridge is added until the Newton solve succeeds.
Eigen::VectorXd dogleg_step(const Eigen::VectorXd& g, const Eigen::MatrixXd& B,
                            double radius) {
    const double gnorm = g.norm();
    if (gnorm == 0.0) {
        return Eigen::VectorXd::Zero(g.size());
    }

    const double gBg = g.dot(B * g);
    // Steepest-descent (Cauchy) point; unbounded curvature directions run to
    // the boundary.
    Eigen::VectorXd cauchy;
    if (gBg > 0.0) {
        cauchy = -(gnorm * gnorm / gBg) * g;
    } else {
        return -(radius / gnorm) * g;
    }

    Eigen::VectorXd newton;
    bool have_newton = false;
    {
        Eigen::LLT<Eigen::MatrixXd> llt(B);
        if (llt.info() == Eigen::Success) {
            newton = llt.solve(-g);
            have_newton = true;
        } else {
            // Ridge escalation keeps the step well-defined on indefinite
            // curvature.
            const double scale = std::max(B.diagonal().cwiseAbs().maxCoeff(), 1.0);
            for (double ridge = 1e-8 * scale; ridge <= 1e8 * scale; ridge *= 10.0) {
                Eigen::MatrixXd Br = B;
                Br.diagonal().array() += ridge;
                Eigen::LLT<Eigen::MatrixXd> ridged(Br);
                if (ridged.info() == Eigen::Success) {
                    newton = ridged.solve(-g);
                    have_newton = true;
                    break;
                }
            }
        }
    }

    if (!have_newton) {
        return cauchy.norm() <= radius ? cauchy : (radius / cauchy.norm()) * cauchy;
    }
    if (newton.norm() <= radius) {
        return newton;
    }
    if (cauchy.norm() >= radius) {
        return (radius / cauchy.norm()) * cauchy;
    }
    // Boundary intersection of the dogleg path cauchy -> newton.
    const Eigen::VectorXd d = newton - cauchy;
    const double a = d.squaredNorm();
    const double b = 2.0 * cauchy.dot(d);
    const double c = cauchy.squaredNorm() - radius * radius;
    const double tau = (-b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a);
    return cauchy + tau * d;
}

} // namespace

MLEResult maximize(const Objective& f, const Eigen::VectorXd& theta0,
                   const TrustRegionOptions& options) {
    MLEResult result;
    result.theta = theta0;
    result.value = eval_checked(f, theta0);

    double radius = options.initial_radius;
    NumericDerivatives d = numeric_derivatives(f, result.theta);
    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        const double gnorm = d.gradient.lpNorm<Eigen::Infinity>();
        if (gnorm < options.gradient_tolerance) {
            result.converged = true;
            break;
        }
        if (radius < options.min_radius) {
            break;
        }

        // Minimize the model of -f.
        const Eigen::VectorXd step =
            dogleg_step(-d.gradient, -d.hessian, radius);
        const double predicted =
            d.gradient.dot(step) + 0.5 * step.dot(d.hessian * step);
        if (!(predicted > 0.0) || step.norm() == 0.0) {
            radius *= 0.25;
            continue;
        }
        const Eigen::VectorXd trial = result.theta + step;
        const double value = eval_trial(f, trial);
        const double actual = value - result.value;
        const double ratio = actual / predicted;

        if (ratio < 0.25) {
            radius *= 0.25;
        } else if (ratio > 0.75 && step.norm() >= 0.99 * radius) {
            radius = std::min(2.0 * radius, options.max_radius);
        }
        if (actual > 0.0) {
            result.theta = trial;
            result.value = value;
            d = numeric_derivatives(f, result.theta);
        }
    }

    result.iterations = iter;
    result.final_radius = radius;
    result.gradient = d.gradient;
    result.hessian = d.hessian;
    result.gradient_norm = d.gradient.lpNorm<Eigen::Infinity>();

    // Observed Fisher information: covariance is the inverse of -H.
    const Eigen::Index k = theta0.size();
    Eigen::MatrixXd info = -d.hessian;
    Eigen::LLT<Eigen::MatrixXd> llt(info);
    if (llt.info() == Eigen::Success) {
        result.covariance = llt.solve(Eigen::MatrixXd::Identity(k, k));
        result.covariance_ok = true;
    } else {
        // Indefinite Hessian at the optimum: report pseudo-inverse based
        // standard errors but flag them unreliable.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(info);
        Eigen::VectorXd inv = es.eigenvalues();
        for (Eigen::Index i = 0; i < k; ++i) {
            inv[i] = std::abs(inv[i]) > 1e-12 ? 1.0 / inv[i] : 0.0;
        }
        result.covariance =
            es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
        result.covariance_ok = false;
    }
    result.se.resize(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const double v = result.covariance(i, i);
        result.se[i] = v > 0.0 ? std::sqrt(v) : std::numeric_limits<double>::quiet_NaN();
    }
    return result;
}

} // namespace contactnet
