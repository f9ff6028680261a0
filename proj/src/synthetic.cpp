#include "contactnet/synthetic.hpp"

#include "contactnet/errors.hpp"
#include "contactnet/rng.hpp"

namespace contactnet {

SyntheticData generate_synthetic(const Roster& roster,
                                 const DyadCovariates& design,
                                 const std::vector<int>& covariate_subset,
                                 const GeneratorParams& params, ModelKind kind,
                                 std::uint64_t seed) {
    for (int k = 0; k < 4; ++k) {
        if (!(params.p[k] >= 0.0 && params.p[k] <= 1.0)) {
            throw InvalidProbability("reporting probability outside [0,1]: " +
                                     std::to_string(params.p[k]));
        }
    }
    const int n = roster.size();
    SyntheticData out;
    out.truth.contact = Eigen::MatrixXi::Zero(n, n);
    out.truth.categories = Eigen::MatrixXi::Zero(n, n);
    out.reported.day = "synthetic";
    out.reported.reports = Eigen::MatrixXi::Zero(n, n);
    out.reported.minutes = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        out.reported.nodes.push_back(i);
        out.reported.ids.push_back(roster.persons[static_cast<std::size_t>(i)].id);
    }

    Rng rng(seed);
    Eigen::VectorXd x(static_cast<Eigen::Index>(covariate_subset.size()));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int row = design.row_of(i, j);
            for (std::size_t c = 0; c < covariate_subset.size(); ++c) {
                x[static_cast<Eigen::Index>(c)] =
                    design.X(row, covariate_subset[c]);
            }

            int category = 0;
            switch (kind) {
            case ModelKind::binary_latent: {
                ThetaBinary theta{params.beta, params.gamma, params.p};
                if (rng.bernoulli(binary_prob(theta, x))) {
                    category = 1 + rng.categorical(params.gamma, 4);
                }
                break;
            }
            case ModelKind::ordinal_latent: {
                ThetaOrdinal theta{params.alpha, params.beta, params.p};
                category = rng.categorical(ordinal_probs(theta, x), 5);
                break;
            }
            case ModelKind::multinomial_latent: {
                ThetaMultinomial theta{params.alpha, params.effects, params.p};
                category = rng.categorical(multinomial_probs(theta, x), 5);
                break;
            }
            default:
                throw Error("synthetic generator requires a latent model kind");
            }

            if (category > 0) {
                out.truth.contact(i, j) = 1;
                out.truth.contact(j, i) = 1;
                out.truth.categories(i, j) = category;
                out.truth.categories(j, i) = category;
                const int minutes =
                    static_cast<int>(kCategoryMinutes[static_cast<std::size_t>(category)]);
                const double pk = params.p[category - 1];
                if (rng.bernoulli(pk)) {
                    out.reported.reports(i, j) = 1;
                    out.reported.minutes(i, j) = minutes;
                }
                if (rng.bernoulli(pk)) {
                    out.reported.reports(j, i) = 1;
                    out.reported.minutes(j, i) = minutes;
                }
            }
        }
    }
    return out;
}

} // namespace contactnet
