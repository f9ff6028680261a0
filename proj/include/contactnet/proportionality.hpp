#pragma once

#include <vector>

#include "contactnet/fitting.hpp"
#include "contactnet/likelihood.hpp"

namespace contactnet {

// One dichotomized logistic fit: 1[D > cutoff] regressed on the covariates
// under the union rule. Coefficients that blow up from separation (empty or
// full cells) carry unbounded-interval markers instead of failing.
struct CutpointFit {
    int category_cutoff = 0; // duration category threshold (0..3)
    int minutes_cutoff = 0;  // 0, 5, 15, 60
    std::vector<ParameterEstimate> coefficients;
    bool separation = false;
    double loglik = 0.0;
};

// Proportional-odds diagnostic: fits separate logistic regressions at each
// duration cutpoint. Under proportional odds the covariate coefficients
// agree across cutoffs up to sampling noise. `covariates` are the design
// column indices matching the dataset's X.
std::vector<CutpointFit> proportionality_test(const DyadDataset& data,
                                              const std::vector<int>& covariates);

} // namespace contactnet
