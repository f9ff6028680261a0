#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace contactnet {

enum class Sex { female, male };
enum class Role { postdoc, grad_student, admin };

Sex parse_sex(const std::string& s);
Role parse_role(const std::string& s);
std::string to_string(Sex s);
std::string to_string(Role r);

// Weekday bit flags for the usual-days field (Mon..Fri).
enum : std::uint8_t {
    kMon = 1u << 0,
    kTue = 1u << 1,
    kWed = 1u << 2,
    kThu = 1u << 3,
    kFri = 1u << 4,
};
std::uint8_t parse_days(const std::string& s);

struct Person {
    std::string id;
    int age = 0;
    Sex sex = Sex::female;
    std::array<bool, 3> groups{}; // membership in research groups 1..3
    Role role = Role::grad_student;
    int floor = 0;
    std::string office_id;
    std::uint8_t usual_days = 0;

    bool in_group(int g) const { return groups[static_cast<std::size_t>(g - 1)]; }
};

// Person ordering is fixed at load time and defines all matrix indices.
struct Roster {
    std::vector<Person> persons;
    // Directed "i reports shared projects with j" pairs, by person index.
    std::set<std::pair<int, int>> project_reports;

    int size() const { return static_cast<int>(persons.size()); }
    // Index of `id`, or -1 when absent.
    int index_of(std::string_view id) const;
};

// Duration categories: 0 = non-contact, 1 = 1-5 min, 2 = 6-15, 3 = 16-60,
// 4 = 61-480. Minutes above 480 are rejected by the loaders.
inline constexpr int kDurationCategories = 5;
inline constexpr int kMaxMinutes = 480;

int duration_category(int minutes);

// Representative minutes per category, used when simulated category draws
// feed the epidemic model (configurable there).
inline constexpr std::array<double, 5> kCategoryMinutes = {0.0, 3.0, 10.0, 38.0,
                                                           120.0};

// One day of directed contact reports over the persons present that day.
struct ReportedNetwork {
    std::vector<int> nodes;       // roster indices, ascending
    std::vector<std::string> ids; // person ids aligned with `nodes`
    Eigen::MatrixXi reports;      // C: reports(i,j) = 1 iff i reported j
    Eigen::MatrixXi minutes;      // reported minutes, 0 where no report
    std::string day;

    int n() const { return static_cast<int>(nodes.size()); }
};

struct DurationMatrix {
    Eigen::MatrixXi categories; // symmetric, zero diagonal
    int n() const { return static_cast<int>(categories.rows()); }
};

// Synthetic ground truth (the latent network the generator drew).
struct TrueNetwork {
    Eigen::MatrixXi contact;    // symmetric 0/1
    Eigen::MatrixXi categories; // symmetric; contact==1 iff category>0
};

Roster load_roster(const std::filesystem::path& roster_csv,
                   const std::filesystem::path& projects_csv);

ReportedNetwork load_diary(const std::filesystem::path& diary_csv,
                           const Roster& roster, std::string_view day);

// Resolves inconsistent reports by keeping the longer duration; D is zero
// exactly where neither side reported.
DurationMatrix symmetrize(const ReportedNetwork& reported);

// Union-rule contact indicator: 1 iff at least one side reported.
Eigen::MatrixXi union_contacts(const ReportedNetwork& reported);

} // namespace contactnet
