#include "pwlent/transition.hpp"

#include <set>

#include "pwlent/graphs.hpp"

namespace pwlent {

namespace {

BigRational q(long n, long d = 1) { return {n, d}; }

bool power_of_two(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

void require_window(const BigRational& b, const BigRational& lo, const BigRational& hi, const char* what) {
    if (b < lo || b > hi)
        throw Error(std::string(what) + " needs b in [" + lo.short_str() + ", " + hi.short_str() + "], got " +
                    b.short_str());
}

// Every orbit point sits in the closed piece named by the pattern.
bool follows_pattern(const PiecewiseAffine1D& m, const std::vector<BigRational>& orbit, const Itinerary& pattern) {
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        bool found = false;
        for (std::size_t k = 0; k < m.size() && !found; ++k)
            found = m.pieces()[k].name == pattern[i] && m.piece_lo(k) <= orbit[i] && orbit[i] <= m.piece_hi(k);
        if (!found) return false;
    }
    return true;
}

bool exceeds_two(RootInterval r, unsigned period) {
    for (unsigned digits = 20; digits <= 160; digits *= 2) {
        refine(r, digits);
        if (r.lo.pow(period) > 2) return true;
        if (r.hi.pow(period) <= 2) return false;
    }
    return false;
}

}  // namespace

std::string transition_name(Transition t) { return t == Transition::Alpha ? "alpha" : "beta"; }

Itinerary star_product(const Itinerary& s) {
    Itinerary out;
    out.reserve(2 * s.size());
    for (char c : s) {
        switch (c) {
            case 'R': out += "RL"; break;
            case 'C': out += "RC"; break;
            case 'L': out += "RR"; break;
            default: throw Error(std::string("invalid itinerary symbol '") + c + "'");
        }
    }
    return out;
}

Itinerary upper_pattern(unsigned period) {
    if (period % 3 != 0 || !power_of_two(period / 3)) throw Error("upper period must be 3*2^N");
    Itinerary s = "RLC";
    while (s.size() < period) s = star_product(s);
    return s;
}

Itinerary lower_pattern(unsigned period) {
    if (period < 2 || !power_of_two(period)) throw Error("lower period must be 2^N with N >= 1");
    Itinerary s = "RC";
    while (s.size() < period) s = star_product(s);
    return s;
}

AffineFamily1D trapezoid_family(Transition t) {
    BigRational plateau_end = t == Transition::Alpha ? q(7, 8) : q(15, 16);
    BigRational right_slope = t == Transition::Alpha ? q(-8) : q(-16);
    return {
        ParamAffine(q(0)),
        ParamAffine(q(1)),
        {ParamAffine(q(1, 16), q(-1, 16)), ParamAffine(plateau_end)},
        {{q(16), ParamAffine(q(0), q(1)), 'L'}, {q(0), ParamAffine(q(1)), 'C'}, {right_slope, ParamAffine(-right_slope), 'R'}},
        {q(0), q(1)},
    };
}

BigRational d_to_b(Transition t, const BigRational& d) {
    BigRational num = t == Transition::Alpha ? -8 * (d + 13) : 563 + 40 * d;
    BigRational den = t == Transition::Alpha ? 9 * d + 128 : 58 * d + 816;
    if (den.is_zero()) throw Error("d = " + d.short_str() + " has no parameter image");
    return num / den;
}

BigRational b_to_d(Transition t, const BigRational& b) {
    BigRational num = t == Transition::Alpha ? -8 * (16 * b + 13) : 563 - 816 * b;
    BigRational den = t == Transition::Alpha ? 9 * b + 8 : 58 * b - 40;
    if (den.is_zero()) throw Error("b = " + b.short_str() + " has no trapezoid parameter");
    return num / den;
}

InducedMap build_g1(const BigRational& b) {
    require_regime(Regime::AlphaWindow, b);
    Segment pi(named_point(Regime::AlphaWindow, b, "P7"), named_point(Regime::AlphaWindow, b, "R7"));
    return restrict_iterate_to_segment(Params::with_b(b), pi, 6);
}

InducedMap build_k1_from_F(const BigRational& b) {
    require_regime(Regime::BetaWindow, b);
    Segment sigma(named_point(Regime::BetaWindow, b, "R15"), named_point(Regime::BetaWindow, b, "R8"));
    return restrict_iterate_to_segment(Params::with_b(b), sigma, 7);
}

G2Constants g2_constants(const BigRational& b) {
    BigRational bp = b + 1;
    return {
        (9 * b + 8) / (8 * bp),
        (137 * b + 112) / (128 * bp),
        7 * (9 * b + 8) / (64 * bp),
        (16 * b + 13) / (15 * bp),
        (119 * b + 107) / (120 * bp),
    };
}

namespace {

PiecewiseAffine1D g_pieces(const BigRational& b, const BigRational& lo, const BigRational& hi) {
    require_window(b, q(-112, 137), q(-13, 16), "g2/g3");
    G2Constants k = g2_constants(b);
    return PiecewiseAffine1D(lo, hi, {k.u1, k.u2},
                             {{q(16), -(16 * b + 13) / (b + 1), 'L'},
                              {q(0), k.top, 'C'},
                              {q(-8), (9 * b + 8) / (b + 1), 'R'}},
                             true);
}

PiecewiseAffine1D k_pieces(const BigRational& b, const BigRational& lo, const BigRational& hi) {
    require_window(b, q(603, 874), q(563, 816), "k1");
    BigRational M = 29 * b - 20;
    BigRational turn = 2 * b - q(3, 2);
    // At b = 603/874 the increasing branch shrinks to the left endpoint.
    if (lo == turn) return PiecewiseAffine1D(lo, hi, {q(0)}, {{q(0), M, 'C'}, {q(-16), M, 'R'}}, true);
    return PiecewiseAffine1D(lo, hi, {turn, q(0)}, {{q(16), 4 - 3 * b, 'L'}, {q(0), M, 'C'}, {q(-16), M, 'R'}}, true);
}

}  // namespace

PiecewiseAffine1D build_g2(const BigRational& b) { return g_pieces(b, q(0), g2_constants(b).top); }

PiecewiseAffine1D build_g3(const BigRational& b) {
    G2Constants k = g2_constants(b);
    return g_pieces(b, k.x1, k.x2);
}

PiecewiseAffine1D build_k1(const BigRational& b) { return k_pieces(b, 300 - 435 * b, 29 * b - 20); }

PiecewiseAffine1D build_k1_extension(const BigRational& b) {
    BigRational M = 29 * b - 20;
    BigRational x1 = (3 * b - 4) / 15;
    return k_pieces(b, x1, (M - x1) / 16);
}

bool g2_matches_g1(const BigRational& b) {
    PiecewiseAffine1D g2 = build_g2(b);
    InducedMap g1 = build_g1(b);
    auto sigma = [&](const BigRational& x) { return (x + 9 * b + 8) / (8 * (b + 1)); };
    auto sigma_inv = [&](const BigRational& s) { return 8 * (b + 1) * s - 9 * b - 8; };

    std::set<BigRational> pts{g2.lo(), g2.hi()};
    for (const auto& x : g2.breaks()) pts.insert(x);
    const auto& m = g1.map;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& p = m.pieces()[i];
        pts.insert(sigma(m.piece_hi(i)));
        if (!p.slope.is_zero()) pts.insert(sigma(-p.offset / p.slope));
    }
    std::vector<BigRational> all;
    for (const auto& s : pts)
        if (g2.lo() <= s && s <= g2.hi()) all.push_back(s);
    const std::size_t n = all.size();
    for (std::size_t i = 0; i + 1 < n; ++i) all.push_back((all[i] + all[i + 1]) / 2);
    for (const auto& s : all)
        if (g2(s) != sigma(min(m(sigma_inv(s)), BigRational(0)))) return false;
    return true;
}

PiecewiseAffine1D rescale_to_unit(const PiecewiseAffine1D& m) {
    BigRational lo = m.lo(), len = m.hi() - m.lo();
    std::vector<BigRational> breaks;
    for (const auto& x : m.breaks()) breaks.push_back((x - lo) / len);
    std::vector<AffinePiece> pieces;
    for (const auto& p : m.pieces())
        pieces.push_back({p.slope, (p.slope * lo + p.offset - lo) / len, p.name});
    return PiecewiseAffine1D(q(0), q(1), breaks, pieces, m.continuous());
}

TrapezoidParams normalize_trapezoid(const PiecewiseAffine1D& m) {
    PiecewiseAffine1D u = rescale_to_unit(m).merged();
    if (u.size() != 3 || u.pieces()[0].slope.sign() <= 0 || !u.pieces()[1].constant() ||
        u.pieces()[2].slope.sign() >= 0)
        throw Error("map is not increasing-constant-decreasing");
    if (!u(q(0)).is_zero() || !u(q(1)).is_zero()) throw Error("trapezoid must fix 0 and send 1 to 0");
    return {u.pieces()[0].slope.inverse(), -u.pieces()[2].slope.inverse(), u.piece_hi(1) - u.piece_lo(1)};
}

unsigned entropy_power(Transition t) { return t == Transition::Alpha ? 6 : 7; }

Certificate certify_side(Transition t, const Itinerary& pattern, bool upper) {
    AffineFamily1D fam = trapezoid_family(t);
    auto window = closing_window(fam, pattern, q(1));
    if (!window) throw Error("empty closing window for pattern " + pattern);

    BigRational b_lo = d_to_b(t, window->lo), b_hi = d_to_b(t, window->hi);
    // Upper side: the window end with the smaller b. Lower side: the larger b.
    bool take_lo = upper ? b_lo <= b_hi : b_lo >= b_hi;
    Certificate c;
    c.pattern = pattern;
    c.d_window = *window;
    c.d = take_lo ? window->lo : window->hi;
    c.b = take_lo ? b_lo : b_hi;

    const unsigned p = static_cast<unsigned>(pattern.size());
    PiecewiseAffine1D m = fam.at(c.d);
    std::vector<BigRational> orbit = iterate_point(m, q(1), p);
    if (orbit.back() != 1) throw Error("orbit does not close for pattern " + pattern);
    for (unsigned i = 1; i < p; ++i)
        if (orbit[i] == 1) throw Error("orbit closes early for pattern " + pattern);
    if (!follows_pattern(m, orbit, pattern)) throw Error("orbit leaves pattern " + pattern);
    orbit.pop_back();
    c.orbit = orbit;

    c.radius = markov_radius_from_orbit(m, orbit, 30);
    c.zero_entropy = c.radius.lo == 1 && c.radius.hi == 1;
    c.bowen_franks = !c.zero_entropy && exceeds_two(c.radius, p);
    if (upper && c.zero_entropy) throw Error("upper certificate has zero entropy");
    if (!upper && !c.zero_entropy) throw Error("lower certificate has positive entropy");
    return c;
}

CertifiedInterval certify(Transition t, unsigned upper_period, unsigned lower_period) {
    Certificate hi = certify_side(t, upper_pattern(upper_period), true);
    Certificate lo = certify_side(t, lower_pattern(lower_period), false);
    if (!(lo.b < hi.b)) throw Error("certificates do not bracket: lower b >= upper b");
    return {t, lo.b, hi.b, lo, hi};
}

bool verify_certificate(Transition t, const Certificate& c, bool upper) {
    if (b_to_d(t, c.b) != c.d) return false;
    PiecewiseAffine1D m = trapezoid_family(t).at(c.d);
    const unsigned p = static_cast<unsigned>(c.pattern.size());
    std::vector<BigRational> orbit = iterate_point(m, q(1), p);
    if (orbit.back() != 1) return false;
    orbit.pop_back();
    if (orbit != c.orbit || !follows_pattern(m, orbit, c.pattern)) return false;
    RootInterval r = markov_radius_from_orbit(m, orbit, 30);
    bool one = r.lo == 1 && r.hi == 1;
    return upper ? (!one && r.lo > 1) : one;
}

std::string digits_report(const CertifiedInterval& ci, unsigned max_places) {
    return common_decimal_prefix(ci.lo, ci.hi, max_places);
}

}  // namespace pwlent
