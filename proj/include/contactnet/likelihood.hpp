#pragma once

#include <vector>

#include <Eigen/Dense>

#include "contactnet/data.hpp"
#include "contactnet/design.hpp"
#include "contactnet/models.hpp"

namespace contactnet {

// Per-dyad observation: the two directed reports and the symmetrized
// duration category. duration > 0 exactly when at least one side reported.
struct DyadObservation {
    int report_ij = 0;
    int report_ji = 0;
    int duration = 0;
};

// Observation + covariate rows for the unordered dyads of one day's node
// set, with covariates already restricted to the model's columns.
struct DyadDataset {
    std::vector<DyadObservation> observations;
    Eigen::MatrixXd X; // one row per dyad, selected covariates
    std::vector<std::pair<int, int>> dyads; // node-set indices, i < j

    int n_dyads() const { return static_cast<int>(observations.size()); }
    int n_covariates() const { return static_cast<int>(X.cols()); }
    int n_nodes = 0;
};

DyadDataset assemble_dataset(const ReportedNetwork& reported,
                             const DurationMatrix& durations,
                             const DyadCovariates& design,
                             const std::vector<int>& covariate_subset);

// Synthetic ground-truth variant: observations from a generator's output.
DyadDataset assemble_dataset(const ReportedNetwork& reported,
                             const DyadCovariates& design,
                             const std::vector<int>& covariate_subset);

// Joint probability of one dyad's reports and symmetrized duration under the
// binary latent model:
//   P(1,1,d_k) = gamma_k P(Y=1) p_k^2
//   P(1,0,d_k) = P(0,1,d_k) = gamma_k P(Y=1) p_k (1-p_k)
//   P(0,0)     = P(Y=0) + sum_k gamma_k P(Y=1) (1-p_k)^2
double dyad_outcome_prob_binary(const ThetaBinary& theta,
                                const Eigen::VectorXd& x,
                                const DyadObservation& obs);

// Same structure with category probabilities from the proportional odds
// model: P(1,1,d_k) = P(D=d_k) p_k^2, etc.
double dyad_outcome_prob_ordinal(const ThetaOrdinal& theta,
                                 const Eigen::VectorXd& x,
                                 const DyadObservation& obs);

double dyad_outcome_prob_multinomial(const ThetaMultinomial& theta,
                                     const Eigen::VectorXd& x,
                                     const DyadObservation& obs);

// Shared outcome arithmetic given the 5-vector of category probabilities.
double dyad_outcome_prob(const Vector5d& category_probs,
                         const Eigen::Vector4d& p, const DyadObservation& obs);

// Sum of log dyad outcome probabilities over the dataset (dyad-independent
// product). Terms are reduced order-independently. Throws ZeroLikelihood
// when any dyad outcome has probability <= 0 under theta.
double joint_loglik(ModelKind kind, const Eigen::VectorXd& internal_theta,
                    const DyadDataset& data);

// Log-likelihood of the corresponding no-reporting-error model on the
// union-rule data: logistic for the binary kind, proportional odds for the
// ordinal kind (categories taken directly from the symmetrized durations).
double standard_loglik(ModelKind kind, const Eigen::VectorXd& internal_theta,
                       const DyadDataset& data);

} // namespace contactnet
