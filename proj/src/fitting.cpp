#include "contactnet/fitting.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "contactnet/common.hpp"
#include "contactnet/errors.hpp"

namespace contactnet {

ThetaBinary FittedModel::theta_binary() const {
    return unpack_binary(mle.theta, spec.n_covariates());
}

ThetaOrdinal FittedModel::theta_ordinal() const {
    return unpack_ordinal(mle.theta, spec.n_covariates());
}

ThetaMultinomial FittedModel::theta_multinomial() const {
    return unpack_multinomial(mle.theta, spec.n_covariates());
}

Vector5d FittedModel::category_probs(const Eigen::VectorXd& x) const {
    switch (spec.kind) {
    case ModelKind::ordinal_latent:
        return ordinal_probs(theta_ordinal(), x);
    case ModelKind::multinomial_latent:
        return multinomial_probs(theta_multinomial(), x);
    case ModelKind::binary_latent: {
        const ThetaBinary t = theta_binary();
        const double contact = binary_prob(t, x);
        Vector5d probs;
        probs[0] = 1.0 - contact;
        for (int k = 0; k < 4; ++k) {
            probs[k + 1] = t.gamma[k] * contact;
        }
        return probs;
    }
    case ModelKind::ordinal_standard: {
        ThetaOrdinal t;
        t.alpha = cutpoints_from_internal(mle.theta.head<4>());
        t.beta = mle.theta.segment(4, spec.n_covariates());
        return ordinal_category_probs(t.alpha, t.beta.dot(x));
    }
    case ModelKind::binary_standard: {
        ThetaBinary t;
        t.beta = mle.theta;
        const double contact = binary_prob(t, x);
        Vector5d probs;
        // No duration sub-model: spread contact mass by the placeholder
        // uniform mix; callers needing durations should fit a latent or
        // ordinal model.
        probs[0] = 1.0 - contact;
        for (int k = 0; k < 4; ++k) {
            probs[k + 1] = contact / 4.0;
        }
        return probs;
    }
    }
    throw Error("unhandled model kind");
}

std::vector<ConfidenceInterval> confidence_intervals(const MLEResult& result) {
    std::vector<ConfidenceInterval> cis;
    cis.reserve(static_cast<std::size_t>(result.theta.size()));
    for (Eigen::Index i = 0; i < result.theta.size(); ++i) {
        ConfidenceInterval ci;
        ci.low = result.theta[i] - kZ95 * result.se[i];
        ci.high = result.theta[i] + kZ95 * result.se[i];
        ci.degenerate = !std::isfinite(result.se[i]);
        cis.push_back(ci);
    }
    return cis;
}

namespace {

// Observed duration-category frequencies (union rule), floored away from
// zero so initial latent parameters stay interior.
Eigen::VectorXd category_frequencies(const DyadDataset& data) {
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(kDurationCategories);
    for (const auto& obs : data.observations) {
        counts[obs.duration] += 1.0;
    }
    Eigen::VectorXd freq = counts / counts.sum();
    for (int k = 0; k < kDurationCategories; ++k) {
        freq[k] = std::max(freq[k], 1e-3);
    }
    return freq / freq.sum();
}

Eigen::VectorXd standard_start(ModelKind kind, const DyadDataset& data) {
    const int m = data.n_covariates();
    const Eigen::VectorXd freq = category_frequencies(data);
    if (kind == ModelKind::binary_standard) {
        Eigen::VectorXd theta = Eigen::VectorXd::Zero(1 + m);
        theta[0] = logit(1.0 - freq[0]);
        return theta;
    }
    // Ordinal cutpoints from the empirical cumulative distribution.
    Eigen::Vector4d alpha;
    double cum = 0.0;
    double prev = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4; ++k) {
        cum += freq[k];
        double a = logit(std::min(cum, 1.0 - 1e-6));
        if (a <= prev + 1e-3) {
            a = prev + 1e-3;
        }
        alpha[k] = a;
        prev = a;
    }
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(4 + m);
    theta.head<4>() = internal_from_cutpoints(alpha);
    return theta;
}

MLEResult run_standard(ModelKind kind, const DyadDataset& data) {
    const Objective f = [&](const Eigen::VectorXd& theta) {
        return standard_loglik(kind, theta, data);
    };
    return maximize(f, standard_start(kind, data));
}

Eigen::VectorXd latent_start(ModelKind kind, const DyadDataset& data) {
    const int m = data.n_covariates();
    const Eigen::VectorXd freq = category_frequencies(data);
    Eigen::Vector4d p_init;
    p_init << 0.5, 0.9, 0.9, 0.95;
    Eigen::Vector4d q_init;
    for (int k = 0; k < 4; ++k) {
        q_init[k] = logit(p_init[k]);
    }

    Eigen::VectorXd theta = Eigen::VectorXd::Zero(internal_size(kind, m));
    switch (kind) {
    case ModelKind::binary_latent: {
        const MLEResult standard = run_standard(ModelKind::binary_standard, data);
        theta.head(1 + m) = standard.theta;
        Eigen::Vector4d gamma = freq.tail<4>() / freq.tail<4>().sum();
        theta.segment<3>(1 + m) = gamma_logits(gamma);
        theta.tail<4>() = q_init;
        break;
    }
    case ModelKind::ordinal_latent: {
        const MLEResult standard = run_standard(ModelKind::ordinal_standard, data);
        theta.head(4 + m) = standard.theta;
        theta.tail<4>() = q_init;
        break;
    }
    case ModelKind::multinomial_latent: {
        for (int k = 0; k < 4; ++k) {
            theta[k] = std::log(freq[k + 1] / freq[0]);
        }
        theta.tail<4>() = q_init;
        break;
    }
    default:
        throw Error("latent_start requires a latent model kind");
    }
    return theta;
}

// Numeric Jacobian of the internal -> natural map, for delta-method SEs.
Eigen::MatrixXd natural_jacobian(ModelKind kind, const Eigen::VectorXd& internal,
                                 int m) {
    const double eps = std::pow(std::ldexp(1.0, -52), 1.0 / 3.0);
    const Eigen::Index rows = natural_size(kind, m);
    Eigen::MatrixXd J(rows, internal.size());
    Eigen::VectorXd probe = internal;
    for (Eigen::Index i = 0; i < internal.size(); ++i) {
        const double h = eps * std::max(1.0, std::abs(internal[i]));
        probe[i] = internal[i] + h;
        const Eigen::VectorXd up = natural_params(kind, probe, m);
        probe[i] = internal[i] - h;
        const Eigen::VectorXd down = natural_params(kind, probe, m);
        probe[i] = internal[i];
        J.col(i) = (up - down) / (2.0 * h);
    }
    return J;
}

} // namespace

FittedModel fit(const ModelSpec& spec, const DyadDataset& data) {
    if (data.n_covariates() != spec.n_covariates()) {
        throw DimensionMismatch("dataset has " +
                                std::to_string(data.n_covariates()) +
                                " covariates, model spec expects " +
                                std::to_string(spec.n_covariates()));
    }
    FittedModel model;
    model.spec = spec;
    model.covariate_names = spec.covariate_names();
    model.n_nodes = data.n_nodes;
    model.n_dyads = data.n_dyads();

    if (is_latent(spec.kind)) {
        const Objective f = [&](const Eigen::VectorXd& theta) {
            return joint_loglik(spec.kind, theta, data);
        };
        model.mle = maximize(f, latent_start(spec.kind, data));
    } else {
        model.mle = run_standard(spec.kind, data);
    }

    const int m = spec.n_covariates();
    model.loglik = model.mle.value;
    model.n_params = static_cast<int>(model.mle.theta.size());
    model.aic = 2.0 * model.n_params - 2.0 * model.loglik;

    const Eigen::VectorXd natural =
        natural_params(spec.kind, model.mle.theta, m);
    const Eigen::MatrixXd J = natural_jacobian(spec.kind, model.mle.theta, m);
    model.natural_covariance = J * model.mle.covariance * J.transpose();

    const auto info = param_info(spec.kind, model.covariate_names);
    for (std::size_t i = 0; i < info.size(); ++i) {
        ParameterEstimate est;
        est.name = info[i].name;
        est.role = info[i].role;
        est.estimate = natural[static_cast<Eigen::Index>(i)];
        const double var =
            model.natural_covariance(static_cast<Eigen::Index>(i),
                                     static_cast<Eigen::Index>(i));
        est.se = var > 0.0 ? std::sqrt(var) : 0.0;
        if (info[i].role == ParamRole::probability) {
            // Logit-scale Wald interval mapped through the logistic so the
            // interval stays inside [0,1].
            const Eigen::Index q = info[i].internal_index;
            const double qhat = model.mle.theta[q];
            const double qse = model.mle.se[q];
            if (std::abs(qhat) > kBoundaryLogit || !std::isfinite(qse)) {
                est.degenerate = true;
                est.ci_low = 0.0;
                est.ci_high = 1.0;
                est.estimate = qhat > 0.0 ? 1.0 : 0.0;
            } else {
                est.ci_low = logistic(qhat - kZ95 * qse);
                est.ci_high = logistic(qhat + kZ95 * qse);
            }
        } else {
            est.ci_low = est.estimate - kZ95 * est.se;
            est.ci_high = est.estimate + kZ95 * est.se;
        }
        model.parameters.push_back(std::move(est));
    }
    return model;
}

std::string fitted_model_to_json(const FittedModel& model) {
    nlohmann::json j;
    j["model"] = to_string(model.spec.kind);
    j["distance"] = to_string(model.spec.distance);
    j["covariates"] = model.covariate_names;
    j["covariate_indices"] = model.spec.covariates;
    j["n_nodes"] = model.n_nodes;
    j["n_dyads"] = model.n_dyads;
    j["loglik"] = model.loglik;
    j["aic"] = model.aic;
    j["n_params"] = model.n_params;
    nlohmann::json params = nlohmann::json::array();
    for (const auto& p : model.parameters) {
        params.push_back({{"name", p.name},
                          {"estimate", p.estimate},
                          {"se", p.se},
                          {"ci_low", p.ci_low},
                          {"ci_high", p.ci_high},
                          {"degenerate", p.degenerate}});
    }
    j["parameters"] = params;
    j["diagnostics"] = {{"converged", model.mle.converged},
                        {"iterations", model.mle.iterations},
                        {"gradient_norm", model.mle.gradient_norm},
                        {"final_trust_radius", model.mle.final_radius},
                        {"covariance_ok", model.mle.covariance_ok}};
    j["internal"] = {{"theta", std::vector<double>(model.mle.theta.begin(),
                                                   model.mle.theta.end())}};
    return j.dump(2);
}

FittedModel fitted_model_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    FittedModel model;
    model.spec.kind = parse_model_kind(j.at("model").get<std::string>());
    model.spec.distance = parse_distance_kind(j.at("distance").get<std::string>());
    model.spec.covariates = j.at("covariate_indices").get<std::vector<int>>();
    model.covariate_names = j.at("covariates").get<std::vector<std::string>>();
    model.n_nodes = j.at("n_nodes").get<int>();
    model.n_dyads = j.at("n_dyads").get<int>();
    model.loglik = j.at("loglik").get<double>();
    model.aic = j.at("aic").get<double>();
    model.n_params = j.at("n_params").get<int>();
    const auto theta = j.at("internal").at("theta").get<std::vector<double>>();
    model.mle.theta = Eigen::Map<const Eigen::VectorXd>(
        theta.data(), static_cast<Eigen::Index>(theta.size()));
    const auto& diag = j.at("diagnostics");
    model.mle.converged = diag.at("converged").get<bool>();
    model.mle.iterations = diag.at("iterations").get<int>();
    model.mle.gradient_norm = diag.at("gradient_norm").get<double>();
    model.mle.final_radius = diag.at("final_trust_radius").get<double>();
    model.mle.covariance_ok = diag.at("covariance_ok").get<bool>();
    for (const auto& p : j.at("parameters")) {
        ParameterEstimate est;
        est.name = p.at("name").get<std::string>();
        est.estimate = p.at("estimate").get<double>();
        est.se = p.at("se").get<double>();
        est.ci_low = p.at("ci_low").get<double>();
        est.ci_high = p.at("ci_high").get<double>();
        est.degenerate = p.at("degenerate").get<bool>();
        model.parameters.push_back(std::move(est));
    }
    return model;
}

std::string fitted_model_table(const FittedModel& model) {
    std::ostringstream out;
    char line[160];
    out << to_string(model.spec.kind) << " model, " << to_string(model.spec.distance)
        << " distance; n=" << model.n_nodes << ", dyads=" << model.n_dyads
        << "\n";
    std::snprintf(line, sizeof(line), "%-24s %10s %10s %20s\n", "parameter",
                  "estimate", "se", "95% CI");
    out << line;
    for (const auto& p : model.parameters) {
        if (p.degenerate) {
            std::snprintf(line, sizeof(line), "%-24s %10.2f %10s %20s\n",
                          p.name.c_str(), p.estimate, "(NA)", "[0, 1.00]");
        } else {
            char ci[48];
            std::snprintf(ci, sizeof(ci), "[%.2f, %.2f]", p.ci_low, p.ci_high);
            std::snprintf(line, sizeof(line), "%-24s %10.2f %10.2f %20s\n",
                          p.name.c_str(), p.estimate, p.se, ci);
        }
        out << line;
    }
    std::snprintf(line, sizeof(line),
                  "loglik %.3f  AIC %.1f  %s after %d iterations\n",
                  model.loglik, model.aic,
                  model.mle.converged ? "converged" : "NOT converged",
                  model.mle.iterations);
    out << line;
    return out.str();
}

} // namespace contactnet
