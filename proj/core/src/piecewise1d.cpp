#include "pwlent/piecewise1d.hpp"

#include <algorithm>
#include <set>

#include "pwlent/digraph.hpp"

namespace pwlent {

PiecewiseAffine1D::PiecewiseAffine1D(BigRational lo, BigRational hi, std::vector<BigRational> breaks,
                                     std::vector<AffinePiece> pieces, bool continuous)
    : lo_(std::move(lo)), hi_(std::move(hi)), breaks_(std::move(breaks)), pieces_(std::move(pieces)),
      continuous_(continuous) {
    if (lo_ > hi_) throw Error("empty domain");
    if (pieces_.size() != breaks_.size() + 1) throw Error("piece count must be breakpoint count + 1");
    BigRational prev = lo_;
    for (const auto& b : breaks_) {
        if (b <= prev) throw Error("breakpoints must be strictly increasing inside the domain");
        prev = b;
    }
    if (!breaks_.empty() && breaks_.back() >= hi_) throw Error("breakpoint outside the domain");
    if (continuous_) {
        for (std::size_t i = 0; i < breaks_.size(); ++i)
            if (pieces_[i].at(breaks_[i]) != pieces_[i + 1].at(breaks_[i]))
                throw Error("map claimed continuous is discontinuous at " + breaks_[i].short_str());
    }
}

PiecewiseAffine1D PiecewiseAffine1D::identity(const BigRational& lo, const BigRational& hi) {
    return PiecewiseAffine1D(lo, hi, {}, {AffinePiece{1, 0, 'I'}}, true);
}

std::size_t PiecewiseAffine1D::piece_index(const BigRational& x, TieBreak tie) const {
    if (!contains(x)) throw Error("point " + x.short_str() + " outside the domain");
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
    auto i = static_cast<std::size_t>(it - breaks_.begin());
    if (it == breaks_.end() || *it != x) return i;
    // x is the breakpoint between piece i and i+1.
    switch (tie) {
        case TieBreak::Left: return i;
        case TieBreak::Right: return i + 1;
        case TieBreak::PlateauPreferring:
            if (pieces_[i].constant()) return i;
            if (pieces_[i + 1].constant()) return i + 1;
            return i;
    }
    return i;
}

BigRational PiecewiseAffine1D::operator()(const BigRational& x) const { return pieces_[piece_index(x)].at(x); }

Interval PiecewiseAffine1D::image(const BigRational& a, const BigRational& b) const {
    if (a > b || !contains(a) || !contains(b)) throw Error("image of an invalid interval");
    std::size_t ia = piece_index(a, TieBreak::Right), ib = piece_index(b, TieBreak::Left);
    if (a == b) ia = ib = piece_index(a);
    BigRational mn = pieces_[ia].at(a), mx = mn;
    auto take = [&](const BigRational& v) {
        mn = min(mn, v);
        mx = max(mx, v);
    };
    take(pieces_[ib].at(b));
    for (std::size_t i = ia; i < ib; ++i) {
        take(pieces_[i].at(breaks_[i]));
        take(pieces_[i + 1].at(breaks_[i]));
    }
    return {mn, mx};
}

PiecewiseAffine1D PiecewiseAffine1D::merged() const {
    std::vector<BigRational> br;
    std::vector<AffinePiece> pc{pieces_[0]};
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        const auto& next = pieces_[i + 1];
        if (next.slope == pc.back().slope && next.offset == pc.back().offset) continue;
        br.push_back(breaks_[i]);
        pc.push_back(next);
    }
    return PiecewiseAffine1D(lo_, hi_, std::move(br), std::move(pc), continuous_);
}

PiecewiseAffine1D compose(const PiecewiseAffine1D& outer, const PiecewiseAffine1D& inner) {
    std::vector<BigRational> cuts;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        BigRational a = inner.piece_lo(i), b = inner.piece_hi(i);
        if (i > 0) cuts.push_back(a);
        const auto& p = inner.pieces()[i];
        if (p.constant()) continue;
        for (const auto& ob : outer.breaks()) {
            BigRational x = (ob - p.offset) / p.slope;
            if (a < x && x < b) cuts.push_back(x);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<AffinePiece> pieces;
    BigRational prev = inner.lo();
    for (std::size_t k = 0; k <= cuts.size(); ++k) {
        BigRational next = k < cuts.size() ? cuts[k] : inner.hi();
        BigRational m = (prev + next) / 2;
        const auto& ip = inner.pieces()[inner.piece_index(m)];
        BigRational y = ip.at(m);
        const auto& op = outer.pieces()[outer.piece_index(y)];
        pieces.push_back({op.slope * ip.slope, op.slope * ip.offset + op.offset, op.name});
        prev = next;
    }
    return PiecewiseAffine1D(inner.lo(), inner.hi(), std::move(cuts), std::move(pieces),
                             outer.continuous() && inner.continuous())
        .merged();
}

std::size_t AffineFamily1D::piece_named(char c) const {
    std::size_t found = pieces.size();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].name != c) continue;
        if (found != pieces.size()) throw Error(std::string("ambiguous piece name ") + c);
        found = i;
    }
    if (found == pieces.size()) throw Error(std::string("unknown piece name ") + c);
    return found;
}

PiecewiseAffine1D AffineFamily1D::at(const BigRational& d) const {
    if (d < d_range.lo || d > d_range.hi) throw Error("parameter " + d.short_str() + " outside the family range");
    std::vector<BigRational> br;
    std::vector<AffinePiece> pc;
    for (const auto& b : breaks) br.push_back(b.at(d));
    for (const auto& p : pieces) pc.push_back({p.slope, p.offset.at(d), p.name});
    return PiecewiseAffine1D(lo.at(d), hi.at(d), std::move(br), std::move(pc), true);
}

std::vector<BigRational> iterate_point(const PiecewiseAffine1D& m, const BigRational& x0, std::size_t k) {
    std::vector<BigRational> orbit{x0};
    if (!m.contains(x0)) throw Error("starting point outside the domain");
    for (std::size_t i = 0; i < k; ++i) {
        BigRational next = m(orbit.back());
        if (!m.contains(next)) throw Error("orbit escapes the domain at step " + std::to_string(i + 1));
        orbit.push_back(std::move(next));
    }
    return orbit;
}

Itinerary itinerary_of(const PiecewiseAffine1D& m, const BigRational& x0, std::size_t k, TieBreak tie) {
    Itinerary out;
    BigRational x = x0;
    for (std::size_t i = 0; i <= k; ++i) {
        std::size_t p = m.piece_index(x, tie);
        out.push_back(m.pieces()[p].name);
        if (i == k) break;
        x = m.pieces()[p].at(x);
        if (!m.contains(x)) break;
    }
    return out;
}

ParamAffine pattern_endpoint(const AffineFamily1D& family, const Itinerary& pattern, const BigRational& x0) {
    ParamAffine x(x0);
    for (char s : pattern) {
        const auto& p = family.pieces[family.piece_named(s)];
        x = p.slope * x + p.offset;
    }
    return x;
}

std::optional<Interval> closing_window(const AffineFamily1D& family, const Itinerary& pattern,
                                       const BigRational& x0) {
    if (pattern.empty()) throw Error("empty pattern");
    BigRational lo = family.d_range.lo, hi = family.d_range.hi;
    bool empty = false;
    // a0 + a1*d >= 0
    auto require = [&](const ParamAffine& c) {
        if (c.c1.is_zero()) {
            if (c.c0.sign() < 0) empty = true;
        } else if (c.c1.sign() > 0) {
            lo = max(lo, -c.c0 / c.c1);
        } else {
            hi = min(hi, -c.c0 / c.c1);
        }
    };
    for (std::size_t i = 0; i + 1 < family.pieces.size(); ++i)
        require(family.piece_hi(i) - family.piece_lo(i));
    require(family.piece_hi(family.pieces.size() - 1) - family.piece_lo(family.pieces.size() - 1));

    ParamAffine x(x0);
    for (char s : pattern) {
        std::size_t i = family.piece_named(s);
        require(x - family.piece_lo(i));
        require(family.piece_hi(i) - x);
        const auto& p = family.pieces[i];
        x = p.slope * x + p.offset;
    }
    ParamAffine gap = x - ParamAffine(x0);
    if (gap.c1.is_zero()) {
        if (!gap.c0.is_zero()) empty = true;
    } else {
        BigRational d = -gap.c0 / gap.c1;
        lo = max(lo, d);
        hi = min(hi, d);
    }
    if (empty || lo > hi) return std::nullopt;
    return Interval{lo, hi};
}

RootInterval markov_radius_from_orbit(const PiecewiseAffine1D& m, const std::vector<BigRational>& orbit,
                                      unsigned digits) {
    if (orbit.empty()) throw Error("empty orbit");
    if (!m.continuous()) throw Error("Markov partition needs a continuous map");
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (m(orbit[i]) != orbit[(i + 1) % orbit.size()]) throw Error("orbit is not periodic");
    }
    std::set<BigRational> cut(orbit.begin(), orbit.end());
    std::vector<BigRational> pts(cut.begin(), cut.end());
    Digraph dg;
    const std::size_t n = pts.size() - 1;
    dg.adj.assign(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        dg.labels.push_back("I" + std::to_string(i));
        Interval img = m.image(pts[i], pts[i + 1]);
        if (img.lo == img.hi) continue;
        if (!cut.count(img.lo) || !cut.count(img.hi)) throw Error("orbit does not induce a Markov partition");
        for (std::size_t j = 0; j < n; ++j)
            if (img.lo <= pts[j] && pts[j + 1] <= img.hi) dg.adj[i][j] = 1;
    }
    return spectral_radius(dg, digits);
}

namespace {

std::vector<Interval> normalize(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    for (auto& iv : v) {
        if (iv.lo >= iv.hi) continue;
        if (!out.empty() && iv.lo <= out.back().hi) {
            out.back().hi = max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    std::vector<Interval> out;
    for (const auto& x : a)
        for (const auto& y : b) {
            BigRational l = max(x.lo, y.lo), h = min(x.hi, y.hi);
            if (l < h) out.push_back({l, h});
        }
    return normalize(std::move(out));
}

}  // namespace

std::vector<Interval> uncaptured_intervals(const PiecewiseAffine1D& m, std::size_t depth) {
    std::vector<Interval> moving;
    bool has_plateau = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.pieces()[i].constant()) has_plateau = true;
        else moving.push_back({m.piece_lo(i), m.piece_hi(i)});
    }
    if (!has_plateau) throw Error("map has no constancy piece");
    moving = normalize(std::move(moving));
    std::vector<Interval> u{{m.lo(), m.hi()}};
    for (std::size_t k = 0; k < depth; ++k) {
        std::vector<Interval> pre;
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto& p = m.pieces()[i];
            if (p.constant()) continue;
            for (const auto& iv : u) {
                BigRational x0 = (iv.lo - p.offset) / p.slope, x1 = (iv.hi - p.offset) / p.slope;
                if (x1 < x0) std::swap(x0, x1);
                BigRational l = max(x0, m.piece_lo(i)), h = min(x1, m.piece_hi(i));
                if (l < h) pre.push_back({l, h});
            }
        }
        u = intersect(moving, normalize(std::move(pre)));
    }
    return u;
}

BigRational plateau_preimage_measure(const PiecewiseAffine1D& m, std::size_t depth) {
    BigRational left = 0;
    for (const auto& iv : uncaptured_intervals(m, depth)) left += iv.length();
    return (m.hi() - m.lo()) - left;
}

}  // namespace pwlent
