#include "contactnet/models.hpp"

#include <cmath>

#include "contactnet/common.hpp"
#include "contactnet/errors.hpp"

namespace contactnet {

DistanceKind parse_distance_kind(std::string_view name) {
    if (name == "metric") {
        return DistanceKind::metric;
    }
    if (name == "topo") {
        return DistanceKind::topo;
    }
    if (name == "axtopo") {
        return DistanceKind::axtopo;
    }
    if (name == "angular") {
        return DistanceKind::angular;
    }
    throw Error("unknown distance kind '" + std::string(name) + "'");
}

std::string to_string(DistanceKind kind) {
    switch (kind) {
    case DistanceKind::metric:
        return "metric";
    case DistanceKind::topo:
        return "topo";
    case DistanceKind::axtopo:
        return "axtopo";
    case DistanceKind::angular:
        return "angular";
    }
    return "?";
}

ModelKind parse_model_kind(std::string_view name) {
    if (name == "binary") {
        return ModelKind::binary_latent;
    }
    if (name == "ordinal") {
        return ModelKind::ordinal_latent;
    }
    if (name == "multinomial") {
        return ModelKind::multinomial_latent;
    }
    if (name == "standard-binary") {
        return ModelKind::binary_standard;
    }
    if (name == "standard-ordinal") {
        return ModelKind::ordinal_standard;
    }
    throw Error("unknown model kind '" + std::string(name) + "'");
}

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::binary_latent:
        return "binary";
    case ModelKind::ordinal_latent:
        return "ordinal";
    case ModelKind::multinomial_latent:
        return "multinomial";
    case ModelKind::binary_standard:
        return "standard-binary";
    case ModelKind::ordinal_standard:
        return "standard-ordinal";
    }
    return "?";
}

bool is_latent(ModelKind kind) {
    return kind == ModelKind::binary_latent ||
           kind == ModelKind::ordinal_latent ||
           kind == ModelKind::multinomial_latent;
}

std::vector<std::string> ModelSpec::covariate_names() const {
    std::vector<std::string> names;
    names.reserve(covariates.size());
    for (int c : covariates) {
        names.emplace_back(kCovariateNames[static_cast<std::size_t>(c)]);
    }
    return names;
}

std::vector<int> ModelSpec::covariate_set(std::string_view name) {
    if (name == "full") {
        return {0, 1, 2, 3, 4, 5, 6, 7, 8};
    }
    if (name == "model1") {
        return {3, 7};
    }
    if (name == "model2") {
        return {2, 8};
    }
    if (name == "model3") {
        return {2};
    }
    if (name == "model4") {
        return {2, 3, 4, 5, 6, 7, 8};
    }
    throw Error("unknown covariate set '" + std::string(name) + "'");
}

double binary_prob(const ThetaBinary& theta, const Eigen::VectorXd& x) {
    if (theta.beta.size() != x.size() + 1) {
        throw DimensionMismatch("binary model has " +
                                std::to_string(theta.beta.size()) +
                                " coefficients for " + std::to_string(x.size()) +
                                " covariates");
    }
    return logistic(theta.beta[0] + theta.beta.tail(x.size()).dot(x));
}

Vector5d ordinal_category_probs(const Eigen::Vector4d& alpha, double linear) {
    for (int k = 1; k < 4; ++k) {
        if (!(alpha[k] > alpha[k - 1])) {
            throw CutpointsNotAscending("cutpoints must be strictly ascending");
        }
    }
    Vector5d probs;
    double prev = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double cum = logistic(alpha[k] - linear);
        probs[k] = cum - prev;
        prev = cum;
    }
    probs[4] = 1.0 - prev; // complement keeps the sum exactly 1
    return probs;
}

Vector5d ordinal_probs(const ThetaOrdinal& theta, const Eigen::VectorXd& x) {
    if (theta.beta.size() != x.size()) {
        throw DimensionMismatch("ordinal model has " +
                                std::to_string(theta.beta.size()) +
                                " coefficients for " + std::to_string(x.size()) +
                                " covariates");
    }
    return ordinal_category_probs(theta.alpha, theta.beta.dot(x));
}

Vector5d multinomial_probs(const ThetaMultinomial& theta,
                           const Eigen::VectorXd& x) {
    if (theta.effects.cols() != x.size()) {
        throw DimensionMismatch("multinomial model has " +
                                std::to_string(theta.effects.cols()) +
                                " columns for " + std::to_string(x.size()) +
                                " covariates");
    }
    // Baseline-logit softmax, guarded against overflow by shifting with the
    // largest exponent (the baseline has implicit logit 0).
    Eigen::Vector4d logits = theta.alpha + theta.effects * x;
    const double shift = std::max(0.0, logits.maxCoeff());
    double denom = std::exp(-shift);
    Eigen::Vector4d numer;
    for (int k = 0; k < 4; ++k) {
        numer[k] = std::exp(logits[k] - shift);
        denom += numer[k];
    }
    Vector5d probs;
    probs[0] = std::exp(-shift) / denom;
    for (int k = 0; k < 4; ++k) {
        probs[k + 1] = numer[k] / denom;
    }
    return probs;
}

} // namespace contactnet
