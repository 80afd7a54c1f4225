#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pwlent/family.hpp"

namespace pwlent {

enum class Regime { NegB, AlphaWindow, BetaWindow, Band48 };

std::string regime_name(Regime r);
Regime parse_regime(std::string_view s);

// Accepted b: NegB b <= -2, AlphaWindow (-1,-3/4], BetaWindow (2/3,5/7], Band48 (4,8).
// Closure points of the intervals are accepted but reported as boundary values.
bool regime_contains(Regime r, const BigRational& b);
bool regime_boundary(Regime r, const BigRational& b);
// Throws for b outside the closure of the regime interval.
void require_regime(Regime r, const BigRational& b);

// Vertices are line endpoints and junctions; other named points become marks.
// Throws if two lines meet at a point that is not named.
PlanarGraph build_gamma(Regime r, const BigRational& b);

struct UncoveredPiece {
    Point p, q;  // p == q for a collapsed image point
    std::string source;  // label of the edge whose image this is
};

struct InvarianceReport {
    bool ok = true;
    std::vector<UncoveredPiece> uncovered;
};

InvarianceReport verify_invariance(const PlanarGraph& graph, const Params& params);

struct OrbitRelation {
    std::string from;
    Point p;
    std::string to;
};

// Exact relations F(from) = to between named points; throws if one fails.
std::vector<OrbitRelation> orbit_marks(Regime r, const BigRational& b);

// Named point of the regime, whether or not it lies on the graph at this b.
Point named_point(Regime r, const BigRational& b, std::string_view name);

}  // namespace pwlent
