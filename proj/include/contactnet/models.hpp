#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "contactnet/design.hpp"

namespace contactnet {

using Vector5d = Eigen::Matrix<double, 5, 1>;

enum class DistanceKind { metric, topo, axtopo, angular };

DistanceKind parse_distance_kind(std::string_view name);
std::string to_string(DistanceKind kind);

enum class ModelKind {
    binary_latent,
    ordinal_latent,
    multinomial_latent,
    binary_standard,
    ordinal_standard,
};

ModelKind parse_model_kind(std::string_view name);
std::string to_string(ModelKind kind);
bool is_latent(ModelKind kind);

// Selects which dyad models run and over which covariate columns.
struct ModelSpec {
    ModelKind kind = ModelKind::ordinal_latent;
    std::vector<int> covariates; // indices into DyadCovariates columns
    DistanceKind distance = DistanceKind::angular;

    int n_covariates() const { return static_cast<int>(covariates.size()); }
    std::vector<std::string> covariate_names() const;

    // Named covariate subsets: "full" plus the nested reductions
    // model1 = {distance, same_floor}, model2 = {same_group, shared_projects},
    // model3 = {same_group}, model4 = full minus group sociality counts.
    static std::vector<int> covariate_set(std::string_view name);
};

// Binary contact model: logit P(Y=1) = beta0 + beta' x, with a duration mix
// gamma over categories 1..4 and reporting probabilities p.
struct ThetaBinary {
    Eigen::VectorXd beta;   // intercept first, then one effect per covariate
    Eigen::Vector4d gamma;  // simplex over duration categories 1..4
    Eigen::Vector4d p;      // reporting probability per category
};

// Proportional odds duration model: logit P(D <= d_k) = alpha_k - beta' x.
struct ThetaOrdinal {
    Eigen::Vector4d alpha;  // ascending cutpoints
    Eigen::VectorXd beta;
    Eigen::Vector4d p;
};

// Baseline-category logit model with non-contact as the baseline.
struct ThetaMultinomial {
    Eigen::Vector4d alpha;
    Eigen::MatrixXd effects; // 4 x m, one row per duration category 1..4
    Eigen::Vector4d p;
};

double binary_prob(const ThetaBinary& theta, const Eigen::VectorXd& x);

// Probabilities over duration categories 0..4; exact normalization, the last
// category is the complement.
Vector5d ordinal_probs(const ThetaOrdinal& theta, const Eigen::VectorXd& x);
Vector5d ordinal_category_probs(const Eigen::Vector4d& alpha, double linear);

Vector5d multinomial_probs(const ThetaMultinomial& theta,
                           const Eigen::VectorXd& x);

} // namespace contactnet
