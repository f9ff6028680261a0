#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "contactnet/likelihood.hpp"
#include "contactnet/models.hpp"
#include "contactnet/optimizer.hpp"
#include "contactnet/params.hpp"

namespace contactnet {

inline constexpr double kZ95 = 1.959963984540054;

struct ParameterEstimate {
    std::string name;
    ParamRole role = ParamRole::coefficient;
    double estimate = 0.0;
    double se = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    bool degenerate = false; // boundary reporting probability
};

struct FittedModel {
    ModelSpec spec;
    std::vector<std::string> covariate_names;
    std::vector<ParameterEstimate> parameters; // natural scale
    double loglik = 0.0;
    double aic = 0.0;
    int n_params = 0;
    int n_nodes = 0;
    int n_dyads = 0;
    MLEResult mle; // internal scale machinery
    Eigen::MatrixXd natural_covariance;

    ThetaBinary theta_binary() const;
    ThetaOrdinal theta_ordinal() const;
    ThetaMultinomial theta_multinomial() const;

    // Category probabilities at covariate row x under the fitted dyad model;
    // for the binary kinds category mass is gamma-weighted contact
    // probability.
    Vector5d category_probs(const Eigen::VectorXd& x) const;
};

// Wald 95% intervals on the internal scale.
struct ConfidenceInterval {
    double low = 0.0;
    double high = 0.0;
    bool degenerate = false;
};
std::vector<ConfidenceInterval> confidence_intervals(const MLEResult& result);

// Maximizes the model's log-likelihood. Latent kinds are initialized from
// the corresponding standard fit, reporting probabilities from
// (0.5, 0.9, 0.9, 0.95) and the duration mix from observed category
// frequencies. Reports AIC = 2k - 2*loglik and delta-method natural-scale
// standard errors; reporting-probability intervals are logit-scale Wald
// intervals mapped through the logistic.
FittedModel fit(const ModelSpec& spec, const DyadDataset& data);

std::string fitted_model_to_json(const FittedModel& model);
FittedModel fitted_model_from_json(const std::string& text);

// Human-readable estimate table in the style of the coefficient tables.
std::string fitted_model_table(const FittedModel& model);

} // namespace contactnet
