#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwlent/rational.hpp"

namespace pwlent {

struct Point {
    BigRational x, y;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const BigRational& s, const Point& a) { return {s * a.x, s * a.y}; }
inline BigRational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline BigRational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

std::string to_string(const Point& p);

struct Segment {
    Point p, q;

    Segment(Point a, Point b);
    Point direction() const { return q - p; }
    Point at(const BigRational& t) const { return p + t * direction(); }
    bool collinear_with(const Point& r) const { return cross(direction(), r - p).is_zero(); }
    // Parameter t of a point on the supporting line (p at 0, q at 1).
    BigRational param(const Point& r) const;
    bool contains(const Point& r) const;
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct NamedPoint {
    std::string name;
    Point p;
};

struct Edge {
    std::size_t a, b;
    std::string label;
};

struct Mark {
    std::string name;
    Point p;
    std::size_t edge;
};

struct PlanarGraph {
    std::vector<NamedPoint> vertices;
    std::vector<Edge> edges;
    std::vector<Mark> marks;

    Segment segment(std::size_t e) const { return {vertices[edges[e].a].p, vertices[edges[e].b].p}; }
    // Vertex or mark by name.
    std::optional<Point> find(const std::string& name) const;
    Point at(const std::string& name) const;
    bool contains(const Point& r) const;
};

}  // namespace pwlent
