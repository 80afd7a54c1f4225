#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pwlent/geometry.hpp"
#include "pwlent/piecewise1d.hpp"

namespace pwlent {

struct Params {
    BigRational a{-1}, b;

    static Params with_b(BigRational b) { return {BigRational(-1), std::move(b)}; }
};

// Closed quadrants: Q1 x>=0,y>=0; Q2 x<=0,y>=0; Q3 x<=0,y<=0; Q4 x>=0,y<=0.
struct QuadrantAffine {
    int quadrant;
    std::array<std::array<int, 2>, 2> linear;
    Point offset;

    Point apply(const Point& p) const;
};

QuadrantAffine quadrant_map(const Params& params, int quadrant);

// Points on the axes go to the lowest-index closed quadrant containing them.
int quadrant_of(const Point& p);

Point apply_F(const Params& params, const Point& p);
Point iterate_F(const Params& params, Point p, std::size_t k);

// λ F_{a,b}(p/λ) == F_{λa,λb}(p); throws for λ <= 0.
bool scale_conjugate_check(const Params& params, const BigRational& lambda, const Point& p);

enum class Chart { X, Y };

// Segment coordinate: x when the x-span is at least the y-span, otherwise y.
Chart chart_of(const Segment& s);
BigRational chart_value(Chart c, const Point& p);
// Point of the segment's supporting line with the given chart coordinate.
Point chart_point(const Segment& s, Chart c, const BigRational& u);

struct InducedMap {
    Segment segment;
    Chart chart;
    PiecewiseAffine1D map;
};

// F^k restricted to `seg`, read in the chart of `target` (default: seg itself).
// Throws when some piece of F^k(seg) leaves the target's supporting line, unless that piece
// lands inside one of `sinks`; such pieces are reported as constant (absorbed) and the map is
// then marked discontinuous.
InducedMap restrict_iterate_to_segment(const Params& params, const Segment& seg, std::size_t k,
                                       const std::optional<Segment>& target = std::nullopt,
                                       const std::vector<Segment>& sinks = {});

// Pieces of a segment cut at the axes, each inside one closed quadrant.
std::vector<Segment> split_at_axes(const Segment& s);

// Maximal segments of the graph that F collapses to a point.
std::vector<Segment> detect_plateaus(const PlanarGraph& graph);

}  // namespace pwlent
