#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwlent/polynomial.hpp"

namespace pwlent {

// c0 + c1*d
struct ParamAffine {
    BigRational c0, c1;

    ParamAffine() = default;
    ParamAffine(BigRational v) : c0(std::move(v)) {}
    ParamAffine(BigRational a, BigRational b) : c0(std::move(a)), c1(std::move(b)) {}

    BigRational at(const BigRational& d) const { return c0 + c1 * d; }
    bool constant() const { return c1.is_zero(); }

    friend ParamAffine operator+(const ParamAffine& a, const ParamAffine& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend ParamAffine operator-(const ParamAffine& a, const ParamAffine& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
    friend ParamAffine operator*(const BigRational& s, const ParamAffine& a) { return {s * a.c0, s * a.c1}; }
    friend bool operator==(const ParamAffine& a, const ParamAffine& b) = default;
};

struct AffinePiece {
    BigRational slope, offset;
    char name = '?';

    BigRational at(const BigRational& x) const { return slope * x + offset; }
    bool constant() const { return slope.is_zero(); }
    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

enum class TieBreak { Left, Right, PlateauPreferring };

using Itinerary = std::string;

struct Interval {
    BigRational lo, hi;
    BigRational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Pieces live on [lo, b_0], [b_0, b_1], ..., [b_{k-1}, hi].
class PiecewiseAffine1D {
public:
    PiecewiseAffine1D(BigRational lo, BigRational hi, std::vector<BigRational> breaks,
                      std::vector<AffinePiece> pieces, bool continuous);

    static PiecewiseAffine1D identity(const BigRational& lo, const BigRational& hi);

    const BigRational& lo() const { return lo_; }
    const BigRational& hi() const { return hi_; }
    const std::vector<BigRational>& breaks() const { return breaks_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    bool continuous() const { return continuous_; }
    std::size_t size() const { return pieces_.size(); }

    BigRational piece_lo(std::size_t i) const { return i == 0 ? lo_ : breaks_[i - 1]; }
    BigRational piece_hi(std::size_t i) const { return i + 1 == pieces_.size() ? hi_ : breaks_[i]; }

    bool contains(const BigRational& x) const { return lo_ <= x && x <= hi_; }
    std::size_t piece_index(const BigRational& x, TieBreak tie = TieBreak::Left) const;
    BigRational operator()(const BigRational& x) const;

    // Range of the map over [a, b] (a <= b, inside the domain).
    Interval image(const BigRational& a, const BigRational& b) const;

    // Adjacent pieces with identical formulas are fused.
    PiecewiseAffine1D merged() const;

private:
    BigRational lo_, hi_;
    std::vector<BigRational> breaks_;
    std::vector<AffinePiece> pieces_;
    bool continuous_;
};

// outer after inner; inner must map its domain into outer's domain.
PiecewiseAffine1D compose(const PiecewiseAffine1D& outer, const PiecewiseAffine1D& inner);

struct ParametricPiece {
    BigRational slope;
    ParamAffine offset;
    char name = '?';
};

// Family of maps affine in a parameter d; breakpoints and offsets are ParamAffine.
struct AffineFamily1D {
    ParamAffine lo, hi;
    std::vector<ParamAffine> breaks;
    std::vector<ParametricPiece> pieces;
    Interval d_range;

    ParamAffine piece_lo(std::size_t i) const { return i == 0 ? lo : breaks[i - 1]; }
    ParamAffine piece_hi(std::size_t i) const { return i + 1 == pieces.size() ? hi : breaks[i]; }
    std::size_t piece_named(char c) const;
    PiecewiseAffine1D at(const BigRational& d) const;
};

std::vector<BigRational> iterate_point(const PiecewiseAffine1D& m, const BigRational& x0, std::size_t k);

Itinerary itinerary_of(const PiecewiseAffine1D& m, const BigRational& x0, std::size_t k,
                       TieBreak tie = TieBreak::PlateauPreferring);

// Closed interval of d for which the orbit of x0 follows `pattern` and returns to x0
// after the last symbol; nullopt when empty.
std::optional<Interval> closing_window(const AffineFamily1D& family, const Itinerary& pattern,
                                       const BigRational& x0);

// The orbit point reached after following `pattern` from x0, as an affine function of d.
ParamAffine pattern_endpoint(const AffineFamily1D& family, const Itinerary& pattern, const BigRational& x0);

// Spectral radius of the Markov partition cut at the points of a periodic orbit.
RootInterval markov_radius_from_orbit(const PiecewiseAffine1D& m, const std::vector<BigRational>& orbit,
                                      unsigned digits);

// Points of the domain not captured after `depth` steps: those whose first `depth`
// iterates all avoid constancy pieces. depth 0 gives the whole domain.
std::vector<Interval> uncaptured_intervals(const PiecewiseAffine1D& m, std::size_t depth);

// Measure of the union of preimages of constancy pieces of orders < depth.
BigRational plateau_preimage_measure(const PiecewiseAffine1D& m, std::size_t depth);

}  // namespace pwlent
