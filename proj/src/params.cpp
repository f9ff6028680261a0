#include "contactnet/params.hpp"

#include <cmath>

#include "contactnet/common.hpp"
#include "contactnet/errors.hpp"

namespace contactnet {

int internal_size(ModelKind kind, int m) {
    switch (kind) {
    case ModelKind::binary_latent:
        return (1 + m) + 3 + 4;
    case ModelKind::ordinal_latent:
        return 4 + m + 4;
    case ModelKind::multinomial_latent:
        return 4 + 4 * m + 4;
    case ModelKind::binary_standard:
        return 1 + m;
    case ModelKind::ordinal_standard:
        return 4 + m;
    }
    return 0;
}

int natural_size(ModelKind kind, int m) {
    switch (kind) {
    case ModelKind::binary_latent:
        return (1 + m) + 4 + 4;
    case ModelKind::ordinal_latent:
        return 4 + m + 4;
    case ModelKind::multinomial_latent:
        return 4 + 4 * m + 4;
    case ModelKind::binary_standard:
        return 1 + m;
    case ModelKind::ordinal_standard:
        return 4 + m;
    }
    return 0;
}

Eigen::Vector4d softmax_gamma(const Eigen::Vector3d& u) {
    Eigen::Vector4d z;
    z << u[0], u[1], u[2], 0.0;
    const double shift = z.maxCoeff();
    Eigen::Vector4d e = (z.array() - shift).exp();
    return e / e.sum();
}

Eigen::Vector3d gamma_logits(const Eigen::Vector4d& gamma) {
    Eigen::Vector3d u;
    for (int k = 0; k < 3; ++k) {
        u[k] = std::log(gamma[k] / gamma[3]);
    }
    return u;
}

Eigen::Vector4d cutpoints_from_internal(const Eigen::Vector4d& a) {
    Eigen::Vector4d alpha;
    alpha[0] = a[0];
    for (int k = 1; k < 4; ++k) {
        alpha[k] = alpha[k - 1] + std::exp(a[k]);
    }
    return alpha;
}

Eigen::Vector4d internal_from_cutpoints(const Eigen::Vector4d& alpha) {
    for (int k = 1; k < 4; ++k) {
        if (!(alpha[k] > alpha[k - 1])) {
            throw CutpointsNotAscending("cutpoints must be strictly ascending");
        }
    }
    Eigen::Vector4d a;
    a[0] = alpha[0];
    for (int k = 1; k < 4; ++k) {
        a[k] = std::log(alpha[k] - alpha[k - 1]);
    }
    return a;
}

namespace {

Eigen::Vector4d probs_from_logits(const Eigen::Vector4d& q) {
    Eigen::Vector4d p;
    for (int k = 0; k < 4; ++k) {
        p[k] = logistic(q[k]);
    }
    return p;
}

Eigen::Vector4d logits_from_probs(const Eigen::Vector4d& p) {
    Eigen::Vector4d q;
    for (int k = 0; k < 4; ++k) {
        if (!(p[k] >= 0.0 && p[k] <= 1.0)) {
            throw InvalidProbability("reporting probability outside [0,1]: " +
                                     std::to_string(p[k]));
        }
        // Clamp exact boundaries to the detection threshold.
        const double v = std::min(std::max(p[k], logistic(-kBoundaryLogit)),
                                  logistic(kBoundaryLogit));
        q[k] = logit(v);
    }
    return q;
}

} // namespace

ThetaBinary unpack_binary(const Eigen::VectorXd& internal, int m) {
    ThetaBinary theta;
    theta.beta = internal.head(1 + m);
    theta.gamma = softmax_gamma(internal.segment<3>(1 + m));
    theta.p = probs_from_logits(internal.tail<4>());
    return theta;
}

ThetaOrdinal unpack_ordinal(const Eigen::VectorXd& internal, int m) {
    ThetaOrdinal theta;
    theta.alpha = cutpoints_from_internal(internal.head<4>());
    theta.beta = internal.segment(4, m);
    theta.p = probs_from_logits(internal.tail<4>());
    return theta;
}

ThetaMultinomial unpack_multinomial(const Eigen::VectorXd& internal, int m) {
    ThetaMultinomial theta;
    theta.alpha = internal.head<4>();
    theta.effects.resize(4, m);
    for (int k = 0; k < 4; ++k) {
        theta.effects.row(k) = internal.segment(4 + k * m, m).transpose();
    }
    theta.p = probs_from_logits(internal.tail<4>());
    return theta;
}

Eigen::VectorXd pack_binary(const ThetaBinary& theta) {
    const int m = static_cast<int>(theta.beta.size()) - 1;
    Eigen::VectorXd v(internal_size(ModelKind::binary_latent, m));
    v.head(1 + m) = theta.beta;
    v.segment<3>(1 + m) = gamma_logits(theta.gamma);
    v.tail<4>() = logits_from_probs(theta.p);
    return v;
}

Eigen::VectorXd pack_ordinal(const ThetaOrdinal& theta) {
    const int m = static_cast<int>(theta.beta.size());
    Eigen::VectorXd v(internal_size(ModelKind::ordinal_latent, m));
    v.head<4>() = internal_from_cutpoints(theta.alpha);
    v.segment(4, m) = theta.beta;
    v.tail<4>() = logits_from_probs(theta.p);
    return v;
}

Eigen::VectorXd pack_multinomial(const ThetaMultinomial& theta) {
    const int m = static_cast<int>(theta.effects.cols());
    Eigen::VectorXd v(internal_size(ModelKind::multinomial_latent, m));
    v.head<4>() = theta.alpha;
    for (int k = 0; k < 4; ++k) {
        v.segment(4 + k * m, m) = theta.effects.row(k).transpose();
    }
    v.tail<4>() = logits_from_probs(theta.p);
    return v;
}

Eigen::VectorXd standard_internal_from_latent(ModelKind kind,
                                              const Eigen::VectorXd& internal,
                                              int m) {
    switch (kind) {
    case ModelKind::binary_latent:
        return internal.head(1 + m);
    case ModelKind::ordinal_latent:
        return internal.head(4 + m);
    default:
        throw Error("no standard counterpart for model kind " +
                    to_string(kind));
    }
}

Eigen::VectorXd natural_params(ModelKind kind, const Eigen::VectorXd& internal,
                               int m) {
    Eigen::VectorXd nat(natural_size(kind, m));
    switch (kind) {
    case ModelKind::binary_latent: {
        const ThetaBinary t = unpack_binary(internal, m);
        nat.head(1 + m) = t.beta;
        nat.segment<4>(1 + m) = t.gamma;
        nat.tail<4>() = t.p;
        break;
    }
    case ModelKind::ordinal_latent: {
        const ThetaOrdinal t = unpack_ordinal(internal, m);
        nat.head<4>() = t.alpha;
        nat.segment(4, m) = t.beta;
        nat.tail<4>() = t.p;
        break;
    }
    case ModelKind::multinomial_latent: {
        const ThetaMultinomial t = unpack_multinomial(internal, m);
        nat.head<4>() = t.alpha;
        for (int k = 0; k < 4; ++k) {
            nat.segment(4 + k * m, m) = t.effects.row(k).transpose();
        }
        nat.tail<4>() = t.p;
        break;
    }
    case ModelKind::binary_standard:
        nat = internal;
        break;
    case ModelKind::ordinal_standard:
        nat.head<4>() = cutpoints_from_internal(internal.head<4>());
        nat.segment(4, m) = internal.segment(4, m);
        break;
    }
    return nat;
}

namespace {

const char* kCategoryLabels[4] = {"1-5", "6-15", "16-60", "61-480"};

void append_cutpoints(std::vector<ParamInfo>& info) {
    const char* labels[4] = {"cutpoint_le_0", "cutpoint_le_5", "cutpoint_le_15",
                             "cutpoint_le_60"};
    for (int k = 0; k < 4; ++k) {
        info.push_back({labels[k], ParamRole::cutpoint, -1});
    }
}

} // namespace

std::vector<ParamInfo> param_info(ModelKind kind,
                                  const std::vector<std::string>& covariates) {
    const int m = static_cast<int>(covariates.size());
    std::vector<ParamInfo> info;
    switch (kind) {
    case ModelKind::binary_latent:
        info.push_back({"intercept", ParamRole::coefficient, 0});
        for (int c = 0; c < m; ++c) {
            info.push_back({covariates[static_cast<std::size_t>(c)],
                            ParamRole::coefficient, 1 + c});
        }
        for (int k = 0; k < 4; ++k) {
            info.push_back({std::string("gamma_") + kCategoryLabels[k],
                            ParamRole::mix, -1});
        }
        for (int k = 0; k < 4; ++k) {
            info.push_back({std::string("p_") + kCategoryLabels[k],
                            ParamRole::probability, 1 + m + 3 + k});
        }
        break;
    case ModelKind::ordinal_latent:
        append_cutpoints(info);
        for (int c = 0; c < m; ++c) {
            info.push_back({covariates[static_cast<std::size_t>(c)],
                            ParamRole::coefficient, 4 + c});
        }
        for (int k = 0; k < 4; ++k) {
            info.push_back({std::string("p_") + kCategoryLabels[k],
                            ParamRole::probability, 4 + m + k});
        }
        break;
    case ModelKind::multinomial_latent:
        for (int k = 0; k < 4; ++k) {
            info.push_back({std::string("intercept_") + kCategoryLabels[k],
                            ParamRole::coefficient, k});
        }
        for (int k = 0; k < 4; ++k) {
            for (int c = 0; c < m; ++c) {
                info.push_back({covariates[static_cast<std::size_t>(c)] + "_" +
                                    kCategoryLabels[k],
                                ParamRole::coefficient, 4 + k * m + c});
            }
        }
        for (int k = 0; k < 4; ++k) {
            info.push_back({std::string("p_") + kCategoryLabels[k],
                            ParamRole::probability, 4 + 4 * m + k});
        }
        break;
    case ModelKind::binary_standard:
        info.push_back({"intercept", ParamRole::coefficient, 0});
        for (int c = 0; c < m; ++c) {
            info.push_back({covariates[static_cast<std::size_t>(c)],
                            ParamRole::coefficient, 1 + c});
        }
        break;
    case ModelKind::ordinal_standard:
        append_cutpoints(info);
        for (int c = 0; c < m; ++c) {
            info.push_back({covariates[static_cast<std::size_t>(c)],
                            ParamRole::coefficient, 4 + c});
        }
        break;
    }
    return info;
}

} // namespace contactnet
