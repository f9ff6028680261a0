#include "contactnet/proportionality.hpp"

#include <cmath>

#include "contactnet/common.hpp"

namespace contactnet {

namespace {

// Separation presents as a coefficient running away with an exploding (or
// unavailable) standard error.
bool separated(double estimate, double se) {
    return std::abs(estimate) > 10.0 && (!std::isfinite(se) || se > 10.0);
}

} // namespace

std::vector<CutpointFit> proportionality_test(const DyadDataset& data,
                                              const std::vector<int>& covariates) {
    static constexpr int kMinutesCutoff[4] = {0, 5, 15, 60};
    std::vector<CutpointFit> fits;
    for (int cutoff = 0; cutoff < 4; ++cutoff) {
        // Recode the outcome as 1[D > cutoff] and run the plain logistic
        // model on the same covariates.
        DyadDataset dichotomized = data;
        for (auto& obs : dichotomized.observations) {
            const bool above = obs.duration > cutoff;
            obs.duration = above ? 1 : 0;
            obs.report_ij = above ? 1 : 0;
            obs.report_ji = 0;
        }
        ModelSpec spec;
        spec.kind = ModelKind::binary_standard;
        spec.covariates = covariates;
        const FittedModel model = fit(spec, dichotomized);

        CutpointFit out;
        out.category_cutoff = cutoff;
        out.minutes_cutoff = kMinutesCutoff[cutoff];
        out.loglik = model.loglik;
        for (const auto& p : model.parameters) {
            ParameterEstimate est = p;
            if (separated(est.estimate, est.se) || !model.mle.covariance_ok) {
                if (separated(est.estimate, est.se)) {
                    est.degenerate = true;
                    est.ci_low = std::numeric_limits<double>::quiet_NaN();
                    est.ci_high = std::numeric_limits<double>::quiet_NaN();
                    out.separation = true;
                }
            }
            out.coefficients.push_back(std::move(est));
        }
        fits.push_back(std::move(out));
    }
    return fits;
}

} // namespace contactnet
