#pragma once

#include <cstdint>
#include <optional>

#include "contactnet/data.hpp"
#include "contactnet/design.hpp"
#include "contactnet/models.hpp"

namespace contactnet {

// Generator parameters; the blocks used depend on the model kind:
//   binary      -> beta (intercept first), gamma, p
//   ordinal     -> alpha, beta, p
//   multinomial -> alpha, effects, p
struct GeneratorParams {
    Eigen::VectorXd beta;
    Eigen::Vector4d alpha = Eigen::Vector4d::Zero();
    Eigen::MatrixXd effects;
    Eigen::Vector4d gamma = Eigen::Vector4d::Constant(0.25);
    Eigen::Vector4d p = Eigen::Vector4d::Ones();
};

struct SyntheticData {
    TrueNetwork truth;
    ReportedNetwork reported;
};

// Inverts the latent reporting model: draws the true duration category per
// dyad from the chosen dyad model, then each directed report independently
// with the category's reporting probability. Reported minutes are the
// category representatives. No contacts are fabricated: a report implies a
// true contact. Bit-reproducible for a fixed seed.
SyntheticData generate_synthetic(const Roster& roster,
                                 const DyadCovariates& design,
                                 const std::vector<int>& covariate_subset,
                                 const GeneratorParams& params, ModelKind kind,
                                 std::uint64_t seed);

} // namespace contactnet
