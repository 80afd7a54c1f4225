#include "pwlent/geometry.hpp"

namespace pwlent {

std::string to_string(const Point& p) { return "(" + p.x.short_str() + ", " + p.y.short_str() + ")"; }

Segment::Segment(Point a, Point b) : p(std::move(a)), q(std::move(b)) {
    if (p == q) throw Error("degenerate segment at " + to_string(p));
}

BigRational Segment::param(const Point& r) const {
    Point d = direction();
    return d.x.is_zero() ? (r.y - p.y) / d.y : (r.x - p.x) / d.x;
}

bool Segment::contains(const Point& r) const {
    if (!collinear_with(r)) return false;
    BigRational t = param(r);
    return t.sign() >= 0 && t <= 1;
}

std::optional<Point> PlanarGraph::find(const std::string& name) const {
    for (const auto& v : vertices)
        if (v.name == name) return v.p;
    for (const auto& m : marks)
        if (m.name == name) return m.p;
    return std::nullopt;
}

Point PlanarGraph::at(const std::string& name) const {
    if (auto p = find(name)) return *p;
    throw Error("no point named " + name);
}

bool PlanarGraph::contains(const Point& r) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (segment(e).contains(r)) return true;
    return false;
}

}  // namespace pwlent
