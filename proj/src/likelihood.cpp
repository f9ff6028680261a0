#include "contactnet/likelihood.hpp"

#include <cmath>

#include "contactnet/common.hpp"
#include "contactnet/errors.hpp"
#include "contactnet/params.hpp"

namespace contactnet {

namespace {

void check_observation(const DyadObservation& obs) {
    const bool any_report = obs.report_ij != 0 || obs.report_ji != 0;
    if (any_report != (obs.duration > 0)) {
        throw InconsistentObservation(
            "duration category must be positive exactly when a report exists");
    }
    if (obs.duration < 0 || obs.duration >= kDurationCategories) {
        throw InconsistentObservation("duration category out of range");
    }
}

} // namespace

DyadDataset assemble_dataset(const ReportedNetwork& reported,
                             const DurationMatrix& durations,
                             const DyadCovariates& design,
                             const std::vector<int>& covariate_subset) {
    const int n = reported.n();
    if (durations.n() != n) {
        throw DimensionMismatch("duration matrix size does not match network");
    }
    DyadDataset data;
    data.n_nodes = n;
    Eigen::MatrixXd rows(n * (n - 1) / 2,
                         static_cast<Eigen::Index>(covariate_subset.size()));
    int r = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            DyadObservation obs;
            obs.report_ij = reported.reports(a, b);
            obs.report_ji = reported.reports(b, a);
            obs.duration = durations.categories(a, b);
            check_observation(obs);
            data.observations.push_back(obs);
            data.dyads.emplace_back(a, b);
            // Design rows are indexed by roster dyads; map through the day's
            // node set.
            const int full_row =
                design.row_of(reported.nodes[static_cast<std::size_t>(a)],
                              reported.nodes[static_cast<std::size_t>(b)]);
            for (std::size_t c = 0; c < covariate_subset.size(); ++c) {
                rows(r, static_cast<Eigen::Index>(c)) =
                    design.X(full_row, covariate_subset[c]);
            }
            ++r;
        }
    }
    data.X = std::move(rows);
    return data;
}

DyadDataset assemble_dataset(const ReportedNetwork& reported,
                             const DyadCovariates& design,
                             const std::vector<int>& covariate_subset) {
    return assemble_dataset(reported, symmetrize(reported), design,
                            covariate_subset);
}

double dyad_outcome_prob(const Vector5d& category_probs,
                         const Eigen::Vector4d& p, const DyadObservation& obs) {
    check_observation(obs);
    if (obs.report_ij != 0 && obs.report_ji != 0) {
        const double pk = p[obs.duration - 1];
        return category_probs[obs.duration] * pk * pk;
    }
    if (obs.report_ij != 0 || obs.report_ji != 0) {
        const double pk = p[obs.duration - 1];
        return category_probs[obs.duration] * pk * (1.0 - pk);
    }
    double prob = category_probs[0];
    for (int k = 1; k < kDurationCategories; ++k) {
        const double miss = 1.0 - p[k - 1];
        prob += category_probs[k] * miss * miss;
    }
    return prob;
}

double dyad_outcome_prob_binary(const ThetaBinary& theta,
                                const Eigen::VectorXd& x,
                                const DyadObservation& obs) {
    const double contact = binary_prob(theta, x);
    Vector5d probs;
    probs[0] = 1.0 - contact;
    for (int k = 0; k < 4; ++k) {
        probs[k + 1] = theta.gamma[k] * contact;
    }
    return dyad_outcome_prob(probs, theta.p, obs);
}

double dyad_outcome_prob_ordinal(const ThetaOrdinal& theta,
                                 const Eigen::VectorXd& x,
                                 const DyadObservation& obs) {
    return dyad_outcome_prob(ordinal_probs(theta, x), theta.p, obs);
}

double dyad_outcome_prob_multinomial(const ThetaMultinomial& theta,
                                     const Eigen::VectorXd& x,
                                     const DyadObservation& obs) {
    return dyad_outcome_prob(multinomial_probs(theta, x), theta.p, obs);
}

namespace {

template <typename PerDyad>
double accumulate_loglik(const DyadDataset& data, PerDyad&& prob_of) {
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(data.n_dyads()));
    for (int r = 0; r < data.n_dyads(); ++r) {
        const double prob = prob_of(r);
        if (!(prob > 0.0) || !std::isfinite(prob)) {
            throw ZeroLikelihood("dyad " + std::to_string(r) +
                                 " has zero or non-finite outcome probability");
        }
        terms.push_back(std::log(prob));
    }
    return ordered_sum(std::move(terms));
}

} // namespace

double joint_loglik(ModelKind kind, const Eigen::VectorXd& internal_theta,
                    const DyadDataset& data) {
    const int m = data.n_covariates();
    switch (kind) {
    case ModelKind::binary_latent: {
        const ThetaBinary theta = unpack_binary(internal_theta, m);
        return accumulate_loglik(data, [&](int r) {
            return dyad_outcome_prob_binary(theta, data.X.row(r).transpose(),
                                            data.observations[static_cast<std::size_t>(r)]);
        });
    }
    case ModelKind::ordinal_latent: {
        const ThetaOrdinal theta = unpack_ordinal(internal_theta, m);
        return accumulate_loglik(data, [&](int r) {
            return dyad_outcome_prob_ordinal(theta, data.X.row(r).transpose(),
                                             data.observations[static_cast<std::size_t>(r)]);
        });
    }
    case ModelKind::multinomial_latent: {
        const ThetaMultinomial theta = unpack_multinomial(internal_theta, m);
        return accumulate_loglik(data, [&](int r) {
            return dyad_outcome_prob_multinomial(
                theta, data.X.row(r).transpose(),
                data.observations[static_cast<std::size_t>(r)]);
        });
    }
    default:
        throw Error("joint_loglik requires a latent model kind");
    }
}

double standard_loglik(ModelKind kind, const Eigen::VectorXd& internal_theta,
                       const DyadDataset& data) {
    const int m = data.n_covariates();
    switch (kind) {
    case ModelKind::binary_standard: {
        ThetaBinary theta;
        theta.beta = internal_theta;
        return accumulate_loglik(data, [&](int r) {
            const auto& obs = data.observations[static_cast<std::size_t>(r)];
            const double prob = binary_prob(theta, data.X.row(r).transpose());
            const bool contact = obs.duration > 0;
            return contact ? prob : 1.0 - prob;
        });
    }
    case ModelKind::ordinal_standard: {
        const Eigen::Vector4d alpha =
            cutpoints_from_internal(internal_theta.head<4>());
        const Eigen::VectorXd beta = internal_theta.segment(4, m);
        return accumulate_loglik(data, [&](int r) {
            const auto& obs = data.observations[static_cast<std::size_t>(r)];
            const Vector5d probs =
                ordinal_category_probs(alpha, beta.dot(data.X.row(r)));
            return probs[obs.duration];
        });
    }
    default:
        throw Error("standard_loglik requires a standard model kind");
    }
}

} // namespace contactnet
