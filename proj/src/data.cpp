#include "contactnet/data.hpp"

#include <map>
#include <sstream>

#include "contactnet/csv.hpp"
#include "contactnet/errors.hpp"

namespace contactnet {

Sex parse_sex(const std::string& s) {
    if (s == "female" || s == "f" || s == "F") {
        return Sex::female;
    }
    if (s == "male" || s == "m" || s == "M") {
        return Sex::male;
    }
    throw InvalidRecord("unknown sex value '" + s + "'");
}

Role parse_role(const std::string& s) {
    if (s == "postdoc") {
        return Role::postdoc;
    }
    if (s == "grad_student") {
        return Role::grad_student;
    }
    if (s == "admin") {
        return Role::admin;
    }
    throw UnknownRole("unknown role '" + s + "'");
}

std::string to_string(Sex s) { return s == Sex::female ? "female" : "male"; }

std::string to_string(Role r) {
    switch (r) {
    case Role::postdoc:
        return "postdoc";
    case Role::grad_student:
        return "grad_student";
    case Role::admin:
        return "admin";
    }
    return "?";
}

std::uint8_t parse_days(const std::string& s) {
    static const std::map<std::string, std::uint8_t> names = {
        {"Mon", kMon}, {"Tue", kTue}, {"Wed", kWed}, {"Thu", kThu}, {"Fri", kFri}};
    std::uint8_t mask = 0;
    std::string token;
    std::istringstream in(s);
    while (std::getline(in, token, '|')) {
        if (token.empty()) {
            continue;
        }
        auto it = names.find(token);
        if (it == names.end()) {
            throw InvalidRecord("unknown weekday '" + token + "'");
        }
        mask |= it->second;
    }
    return mask;
}

int Roster::index_of(std::string_view id) const {
    for (int i = 0; i < size(); ++i) {
        if (persons[static_cast<std::size_t>(i)].id == id) {
            return i;
        }
    }
    return -1;
}

int duration_category(int minutes) {
    if (minutes < 0 || minutes > kMaxMinutes) {
        throw MinutesOutOfRange("minutes out of range [0, 480]: " +
                                std::to_string(minutes));
    }
    if (minutes == 0) {
        return 0;
    }
    if (minutes <= 5) {
        return 1;
    }
    if (minutes <= 15) {
        return 2;
    }
    if (minutes <= 60) {
        return 3;
    }
    return 4;
}

namespace {

int parse_int(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception&) {
        throw InvalidRecord(context + ": not an integer: '" + s + "'");
    }
}

} // namespace

Roster load_roster(const std::filesystem::path& roster_csv,
                   const std::filesystem::path& projects_csv) {
    const CsvTable table = read_csv(roster_csv);
    table.require_columns({"id", "age", "sex", "group1", "group2", "group3",
                           "role", "floor", "office", "days"});
    const auto c_id = table.column("id");
    const auto c_age = table.column("age");
    const auto c_sex = table.column("sex");
    const std::array<std::size_t, 3> c_group = {
        table.column("group1"), table.column("group2"), table.column("group3")};
    const auto c_role = table.column("role");
    const auto c_floor = table.column("floor");
    const auto c_office = table.column("office");
    const auto c_days = table.column("days");

    Roster roster;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::string where =
            roster_csv.string() + ": row " + std::to_string(r + 2);
        Person p;
        p.id = row[c_id];
        if (p.id.empty()) {
            throw InvalidRecord(where + ": empty id");
        }
        if (roster.index_of(p.id) >= 0) {
            throw DuplicateId(where + ": duplicate id '" + p.id + "'");
        }
        p.age = parse_int(row[c_age], where);
        try {
            p.sex = parse_sex(row[c_sex]);
            p.role = parse_role(row[c_role]);
            p.usual_days = parse_days(row[c_days]);
        } catch (const UnknownRole& e) {
            throw UnknownRole(where + ": " + e.what());
        } catch (const InvalidRecord& e) {
            throw InvalidRecord(where + ": " + e.what());
        }
        for (int g = 0; g < 3; ++g) {
            p.groups[static_cast<std::size_t>(g)] =
                parse_int(row[c_group[static_cast<std::size_t>(g)]], where) != 0;
        }
        if (!p.groups[0] && !p.groups[1] && !p.groups[2]) {
            throw InvalidRecord(where + ": person '" + p.id +
                                "' belongs to no research group");
        }
        p.floor = parse_int(row[c_floor], where);
        p.office_id = row[c_office];
        roster.persons.push_back(std::move(p));
    }

    const CsvTable projects = read_csv(projects_csv);
    projects.require_columns({"reporter", "reportee"});
    const auto c_reporter = projects.column("reporter");
    const auto c_reportee = projects.column("reportee");
    for (std::size_t r = 0; r < projects.rows.size(); ++r) {
        const auto& row = projects.rows[r];
        const std::string where =
            projects_csv.string() + ": row " + std::to_string(r + 2);
        const int i = roster.index_of(row[c_reporter]);
        const int j = roster.index_of(row[c_reportee]);
        if (i < 0) {
            throw DanglingProjectRef(where + ": unknown reporter id '" +
                                     row[c_reporter] + "'");
        }
        if (j < 0) {
            throw DanglingProjectRef(where + ": unknown reportee id '" +
                                     row[c_reportee] + "'");
        }
        if (i == j) {
            throw InvalidRecord(where + ": self project report '" +
                                row[c_reporter] + "'");
        }
        roster.project_reports.insert({i, j});
    }
    return roster;
}

ReportedNetwork load_diary(const std::filesystem::path& diary_csv,
                           const Roster& roster, std::string_view day) {
    const CsvTable table = read_csv(diary_csv);
    table.require_columns({"reporter", "reportee", "minutes"});
    const auto c_reporter = table.column("reporter");
    const auto c_reportee = table.column("reportee");
    const auto c_minutes = table.column("minutes");
    // A contact-type column, when present, is ignored: no model uses it.

    const int n_all = roster.size();
    Eigen::MatrixXi reports = Eigen::MatrixXi::Zero(n_all, n_all);
    Eigen::MatrixXi minutes = Eigen::MatrixXi::Zero(n_all, n_all);

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::string where =
            diary_csv.string() + ": row " + std::to_string(r + 2);
        const int i = roster.index_of(row[c_reporter]);
        const int j = roster.index_of(row[c_reportee]);
        if (i < 0 || j < 0) {
            throw InvalidRecord(where + ": id not in roster: '" +
                                (i < 0 ? row[c_reporter] : row[c_reportee]) +
                                "'");
        }
        if (i == j) {
            throw SelfReport(where + ": self report by '" + row[c_reporter] +
                             "'");
        }
        const int m = parse_int(row[c_minutes], where);
        if (m < 1 || m > kMaxMinutes) {
            throw MinutesOutOfRange(where + ": minutes must be in 1..480, got " +
                                    std::to_string(m));
        }
        if (reports(i, j) != 0) {
            throw DuplicateReport(where + ": pair (" + row[c_reporter] + ", " +
                                  row[c_reportee] + ") reported twice");
        }
        reports(i, j) = 1;
        minutes(i, j) = m;
    }

    // Persons with no incident report on this day are treated as absent and
    // dropped from the node set.
    ReportedNetwork net;
    net.day = std::string(day);
    for (int i = 0; i < n_all; ++i) {
        bool present = false;
        for (int j = 0; j < n_all && !present; ++j) {
            present = reports(i, j) != 0 || reports(j, i) != 0;
        }
        if (present) {
            net.nodes.push_back(i);
            net.ids.push_back(roster.persons[static_cast<std::size_t>(i)].id);
        }
    }
    const int n = net.n();
    net.reports = Eigen::MatrixXi::Zero(n, n);
    net.minutes = Eigen::MatrixXi::Zero(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            net.reports(a, b) = reports(net.nodes[static_cast<std::size_t>(a)],
                                        net.nodes[static_cast<std::size_t>(b)]);
            net.minutes(a, b) = minutes(net.nodes[static_cast<std::size_t>(a)],
                                        net.nodes[static_cast<std::size_t>(b)]);
        }
    }
    return net;
}

DurationMatrix symmetrize(const ReportedNetwork& reported) {
    const int n = reported.n();
    DurationMatrix out;
    out.categories = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int m = std::max(reported.minutes(i, j), reported.minutes(j, i));
            const int cat = duration_category(m);
            out.categories(i, j) = cat;
            out.categories(j, i) = cat;
        }
    }
    return out;
}

Eigen::MatrixXi union_contacts(const ReportedNetwork& reported) {
    const int n = reported.n();
    Eigen::MatrixXi y = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && (reported.reports(i, j) != 0 || reported.reports(j, i) != 0)) {
                y(i, j) = 1;
            }
        }
    }
    return y;
}

} // namespace contactnet
