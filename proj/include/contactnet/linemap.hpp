#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace contactnet {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance_between(const Point& a, const Point& b);

// An axial line: one of the longest straight movement lines of the map.
struct AxialLine {
    std::string id;
    int floor = 0;
    Point a;
    Point b;

    double length() const { return distance_between(a, b); }
    Point endpoint(int end) const { return end == 0 ? a : b; }
};

struct Desk {
    std::string id;
    std::string line_id;
    Point point; // attachment point, on the named line
};

// Joins a line endpoint to a line endpoint on another floor (a staircase).
struct StairLink {
    std::string line_a;
    int end_a = 0;
    std::string line_b;
    int end_b = 0;
};

struct LineMap {
    std::vector<AxialLine> lines;
    std::vector<Desk> desks;
    std::vector<StairLink> stairs;

    int line_index(std::string_view id) const; // -1 when unknown
    int desk_index(std::string_view id) const;
};

// Geometric tolerance for intersections and desk attachment, in meters.
inline constexpr double kGeomTol = 1e-6;

// Reads the linemap JSON document:
//   {"lines":  [{"id", "floor", "points": [[x,y],[x,y]]}, ...],
//    "desks":  [{"id", "line", "point": [x,y]}, ...],
//    "stairs": [{"a": {"line", "end"}, "b": {"line", "end"}}, ...]}
LineMap parse_linemap(const std::filesystem::path& path);

} // namespace contactnet
