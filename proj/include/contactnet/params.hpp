#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "contactnet/models.hpp"

namespace contactnet {

// The optimizer works on unconstrained internal vectors:
//   reporting probabilities p  -> logit scale,
//   duration mix gamma         -> softmax of 3 free reals (category 4 pinned),
//   cutpoints alpha            -> alpha1 plus log-spaced positive increments.
// Natural-scale vectors are the flattened (alpha | beta | gamma | p) layout
// used for reporting, delta-method covariances and JSON output.

// Boundary reporting estimates are detected on the logit scale.
inline constexpr double kBoundaryLogit = 15.0;

int internal_size(ModelKind kind, int n_covariates);
int natural_size(ModelKind kind, int n_covariates);

ThetaBinary unpack_binary(const Eigen::VectorXd& internal, int n_covariates);
ThetaOrdinal unpack_ordinal(const Eigen::VectorXd& internal, int n_covariates);
ThetaMultinomial unpack_multinomial(const Eigen::VectorXd& internal,
                                    int n_covariates);

Eigen::VectorXd pack_binary(const ThetaBinary& theta);
Eigen::VectorXd pack_ordinal(const ThetaOrdinal& theta);
Eigen::VectorXd pack_multinomial(const ThetaMultinomial& theta);

// Standard (no reporting error) variants share the leading blocks of the
// latent layouts; these helpers slice them out.
Eigen::VectorXd standard_internal_from_latent(ModelKind kind,
                                              const Eigen::VectorXd& internal,
                                              int n_covariates);

// Maps an internal vector to the natural-scale parameter vector.
Eigen::VectorXd natural_params(ModelKind kind, const Eigen::VectorXd& internal,
                               int n_covariates);

enum class ParamRole { cutpoint, coefficient, mix, probability };

struct ParamInfo {
    std::string name;
    ParamRole role;
    int internal_index; // index of the driving internal coordinate, or -1
};

// Descriptions of the natural parameter vector, aligned with natural_params.
std::vector<ParamInfo> param_info(ModelKind kind,
                                  const std::vector<std::string>& covariates);

Eigen::Vector4d softmax_gamma(const Eigen::Vector3d& u);
Eigen::Vector3d gamma_logits(const Eigen::Vector4d& gamma);
Eigen::Vector4d cutpoints_from_internal(const Eigen::Vector4d& a);
Eigen::Vector4d internal_from_cutpoints(const Eigen::Vector4d& alpha);

} // namespace contactnet
