#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "contactnet/data.hpp"

namespace contactnet {

// Column order of the dyad design matrix. Group 3 is the reference group, so
// only group 1/2 sociality counts appear.
inline constexpr std::array<std::string_view, 9> kCovariateNames = {
    "group1_count", "group2_count", "same_group",  "distance",
    "female_count", "same_sex",     "same_role",   "same_floor",
    "shared_projects"};
inline constexpr int kNumCovariates = 9;

// One row per unordered dyad (i < j in roster order).
struct DyadCovariates {
    int n_persons = 0;
    std::vector<std::pair<int, int>> dyads;
    Eigen::MatrixXd X; // dyads x 9

    int n_dyads() const { return static_cast<int>(dyads.size()); }
    // Row index of the dyad (i, j); order is lexicographic in (min, max).
    int row_of(int i, int j) const;
};

// Builds the nine-covariate design from roster attributes and a desk distance
// matrix aligned to roster indices. Counts accumulate per membership: a dyad
// with both members in group 1 has group1_count = 2; a person in several
// groups contributes to each group column; same_group is 1 when any group is
// shared. Shared projects are weighted 1 or 2 by mutual reporting.
DyadCovariates build_design(const Roster& roster,
                            const Eigen::MatrixXd& distances);

void write_design_csv(const DyadCovariates& design, const Roster& roster,
                      std::ostream& out);

} // namespace contactnet
