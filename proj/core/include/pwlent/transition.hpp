#pragma once

#include <string>
#include <vector>

#include "pwlent/family.hpp"
#include "pwlent/piecewise1d.hpp"

namespace pwlent {

enum class Transition { Alpha, Beta };

std::string transition_name(Transition t);

// R -> RL, C -> RC, L -> RR.
Itinerary star_product(const Itinerary& s);

// Period 3*2^N pattern from the seed RLC, and period 2^N pattern from RC (N >= 1).
Itinerary upper_pattern(unsigned period);
Itinerary lower_pattern(unsigned period);

// phi: 16x+d on [0,(1-d)/16], 1 up to 7/8, then -8x+8.
// psi: 16x+d on [0,(1-d)/16], 1 up to 15/16, then -16x+16.
AffineFamily1D trapezoid_family(Transition t);

// alpha: b = -8(d+13)/(9d+128), d = -8(16b+13)/(9b+8).
// beta:  b = (563+40d)/(58d+816), d = (563-816b)/(58b-40).
BigRational d_to_b(Transition t, const BigRational& d);
BigRational b_to_d(Transition t, const BigRational& b);

// F^6 on Π = R7P7 in the x chart (alpha window), F^7 on Σ = R15R8 (beta window).
InducedMap build_g1(const BigRational& b);
InducedMap build_k1_from_F(const BigRational& b);

// Closed forms; the g maps need b in [-112/137, -13/16], k1 needs b in [603/874, 563/816].
PiecewiseAffine1D build_g2(const BigRational& b);
PiecewiseAffine1D build_g3(const BigRational& b);
PiecewiseAffine1D build_k1(const BigRational& b);
// k1's formulas continued to [x1', x2'] between its repelling fixed point and its preimage.
PiecewiseAffine1D build_k1_extension(const BigRational& b);

struct G2Constants {
    BigRational top, u1, u2, x1, x2;
};
G2Constants g2_constants(const BigRational& b);

// g2(s) == σ(min(g1(σ⁻¹ s), 0)) on [0, top] with σ(x) = (x+9b+8)/(8(b+1)); checked at the
// breakpoints of both sides and the midpoints between them.
bool g2_matches_g1(const BigRational& b);

// The map rescaled affinely to [0,1]: left slope 1/X, right slope -1/Y, plateau of length Z.
struct TrapezoidParams {
    BigRational X, Y, Z;
};
TrapezoidParams normalize_trapezoid(const PiecewiseAffine1D& m);

// Affine rescaling to [0,1] of a map on [lo,hi]: h∘m∘h⁻¹.
PiecewiseAffine1D rescale_to_unit(const PiecewiseAffine1D& m);

struct Certificate {
    Itinerary pattern;
    Interval d_window;
    BigRational d, b;
    std::vector<BigRational> orbit;  // period points, starting at 1
    RootInterval radius;
    bool zero_entropy;               // radius exactly 1
    bool bowen_franks;               // radius^p > 2, i.e. entropy > ln(2)/p
};

struct CertifiedInterval {
    Transition tag;
    BigRational lo, hi;
    Certificate lo_certificate, hi_certificate;
};

// Trapezoid-to-F entropy ratio: 6 for alpha (F^6 on Π), 7 for beta (F^7 on Σ).
unsigned entropy_power(Transition t);

Certificate certify_side(Transition t, const Itinerary& pattern, bool upper);
CertifiedInterval certify(Transition t, unsigned upper_period, unsigned lower_period);

// Recomputes d from b, the orbit, the itinerary and the radius classification from scratch.
bool verify_certificate(Transition t, const Certificate& c, bool upper);

// Longest common decimal prefix of lo and hi.
std::string digits_report(const CertifiedInterval& ci, unsigned max_places = 80);

}  // namespace pwlent
