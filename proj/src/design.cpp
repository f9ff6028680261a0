#include "contactnet/design.hpp"

#include "contactnet/common.hpp"
#include "contactnet/errors.hpp"

namespace contactnet {

int DyadCovariates::row_of(int i, int j) const {
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    return lo * n_persons - lo * (lo + 1) / 2 + (hi - lo - 1);
}

DyadCovariates build_design(const Roster& roster,
                            const Eigen::MatrixXd& distances) {
    const int n = roster.size();
    if (distances.rows() != n || distances.cols() != n) {
        throw DimensionMismatch("distance matrix is " +
                                std::to_string(distances.rows()) + "x" +
                                std::to_string(distances.cols()) +
                                ", roster has " + std::to_string(n) +
                                " persons");
    }
    DyadCovariates design;
    design.n_persons = n;
    design.dyads.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    design.X.resize(n * (n - 1) / 2, kNumCovariates);
    int row = 0;
    for (int i = 0; i < n; ++i) {
        const Person& a = roster.persons[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            const Person& b = roster.persons[static_cast<std::size_t>(j)];
            const bool same_group = (a.groups[0] && b.groups[0]) ||
                                    (a.groups[1] && b.groups[1]) ||
                                    (a.groups[2] && b.groups[2]);
            const int shared_projects =
                (roster.project_reports.count({i, j}) ? 1 : 0) +
                (roster.project_reports.count({j, i}) ? 1 : 0);
            design.X(row, 0) = (a.groups[0] ? 1 : 0) + (b.groups[0] ? 1 : 0);
            design.X(row, 1) = (a.groups[1] ? 1 : 0) + (b.groups[1] ? 1 : 0);
            design.X(row, 2) = same_group ? 1.0 : 0.0;
            design.X(row, 3) = distances(i, j);
            design.X(row, 4) = (a.sex == Sex::female ? 1 : 0) +
                               (b.sex == Sex::female ? 1 : 0);
            design.X(row, 5) = a.sex == b.sex ? 1.0 : 0.0;
            design.X(row, 6) = a.role == b.role ? 1.0 : 0.0;
            design.X(row, 7) = a.floor == b.floor ? 1.0 : 0.0;
            design.X(row, 8) = shared_projects;
            design.dyads.emplace_back(i, j);
            ++row;
        }
    }
    return design;
}

void write_design_csv(const DyadCovariates& design, const Roster& roster,
                      std::ostream& out) {
    out << "i,j";
    for (const auto& name : kCovariateNames) {
        out << ',' << name;
    }
    out << '\n';
    for (int r = 0; r < design.n_dyads(); ++r) {
        const auto [i, j] = design.dyads[static_cast<std::size_t>(r)];
        out << roster.persons[static_cast<std::size_t>(i)].id << ','
            << roster.persons[static_cast<std::size_t>(j)].id;
        for (int c = 0; c < kNumCovariates; ++c) {
            out << ',' << format_value(design.X(r, c));
        }
        out << '\n';
    }
}

} // namespace contactnet
