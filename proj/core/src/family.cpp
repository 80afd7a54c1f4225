#include "pwlent/family.hpp"

#include <algorithm>

namespace pwlent {

Point QuadrantAffine::apply(const Point& p) const {
    return {linear[0][0] * p.x + linear[0][1] * p.y + offset.x,
            linear[1][0] * p.x + linear[1][1] * p.y + offset.y};
}

QuadrantAffine quadrant_map(const Params& params, int quadrant) {
    Point off{params.a, params.b};
    switch (quadrant) {
        case 1: return {1, {{{1, -1}, {1, -1}}}, off};
        case 2: return {2, {{{-1, -1}, {1, -1}}}, off};
        case 3: return {3, {{{-1, -1}, {1, 1}}}, off};
        case 4: return {4, {{{1, -1}, {1, 1}}}, off};
    }
    throw Error("quadrant must be 1..4");
}

int quadrant_of(const Point& p) {
    int sx = p.x.sign(), sy = p.y.sign();
    if (sx >= 0 && sy >= 0) return 1;
    if (sx <= 0 && sy >= 0) return 2;
    if (sx <= 0 && sy <= 0) return 3;
    return 4;
}

Point apply_F(const Params& params, const Point& p) {
    return {p.x.abs() - p.y + params.a, p.x - p.y.abs() + params.b};
}

Point iterate_F(const Params& params, Point p, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) p = apply_F(params, p);
    return p;
}

bool scale_conjugate_check(const Params& params, const BigRational& lambda, const Point& p) {
    if (lambda.sign() <= 0) throw Error("conjugation factor must be positive");
    Point lhs = lambda * apply_F(params, lambda.inverse() * p);
    Point rhs = apply_F({lambda * params.a, lambda * params.b}, p);
    return lhs == rhs;
}

Chart chart_of(const Segment& s) {
    Point d = s.direction();
    return d.x.abs() >= d.y.abs() ? Chart::X : Chart::Y;
}

BigRational chart_value(Chart c, const Point& p) { return c == Chart::X ? p.x : p.y; }

Point chart_point(const Segment& s, Chart c, const BigRational& u) {
    Point d = s.direction();
    if (c == Chart::X) {
        if (d.x.is_zero()) throw Error("vertical segment has no x chart");
        return {u, s.p.y + (u - s.p.x) * d.y / d.x};
    }
    if (d.y.is_zero()) throw Error("horizontal segment has no y chart");
    return {s.p.x + (u - s.p.y) * d.x / d.y, u};
}

namespace {

// The image of u in [lo,hi] is base + u*dir.
struct Strand {
    BigRational lo, hi;
    Point base, dir;
    Point at(const BigRational& u) const { return base + u * dir; }
};

void split_coordinate(std::vector<Strand>& out, const Strand& s, bool use_x) {
    const BigRational& a = use_x ? s.base.x : s.base.y;
    const BigRational& v = use_x ? s.dir.x : s.dir.y;
    if (!v.is_zero()) {
        BigRational u = -a / v;
        if (s.lo < u && u < s.hi) {
            out.push_back({s.lo, u, s.base, s.dir});
            out.push_back({u, s.hi, s.base, s.dir});
            return;
        }
    }
    out.push_back(s);
}

std::vector<Strand> split_strands(const std::vector<Strand>& in) {
    std::vector<Strand> by_x, both;
    for (const auto& s : in) split_coordinate(by_x, s, true);
    for (const auto& s : by_x) split_coordinate(both, s, false);
    return both;
}

char piece_name(const BigRational& slope) { return slope.is_zero() ? 'C' : slope.sign() > 0 ? 'I' : 'D'; }

}  // namespace

InducedMap restrict_iterate_to_segment(const Params& params, const Segment& seg, std::size_t k,
                                       const std::optional<Segment>& target, const std::vector<Segment>& sinks) {
    Chart c = chart_of(seg);
    BigRational u0 = chart_value(c, seg.p), u1 = chart_value(c, seg.q);
    BigRational lo = min(u0, u1), hi = max(u0, u1);

    Point base = chart_point(seg, c, BigRational(0));
    Point dir = chart_point(seg, c, BigRational(1)) - base;
    std::vector<Strand> strands{{lo, hi, base, dir}};

    for (std::size_t step = 0; step < k; ++step) {
        std::vector<Strand> next;
        for (auto& s : split_strands(strands)) {
            Point mid = s.at((s.lo + s.hi) / 2);
            QuadrantAffine qa = quadrant_map(params, quadrant_of(mid));
            Point nb = qa.apply(s.base);
            Point nd = qa.apply(s.dir) - qa.offset;
            next.push_back({s.lo, s.hi, nb, nd});
        }
        strands = std::move(next);
    }

    const Segment& tgt = target ? *target : seg;
    Chart tc = chart_of(tgt);
    Point tdir = tgt.direction();
    std::vector<BigRational> breaks;
    std::vector<AffinePiece> pieces;
    bool continuous = true;
    for (std::size_t i = 0; i < strands.size(); ++i) {
        const Strand& s = strands[i];
        bool on_line = cross(s.dir, tdir).is_zero() && tgt.collinear_with(s.at(s.lo));
        if (!on_line) {
            Point p = s.at(s.lo), q = s.at(s.hi);
            bool sunk = std::any_of(sinks.begin(), sinks.end(),
                                    [&](const Segment& z) { return z.contains(p) && z.contains(q); });
            if (!sunk) throw Error("iterate of segment leaves the target line near " + to_string(p));
            continuous = false;
            pieces.push_back({BigRational(0), chart_value(tc, p), 'C'});
        } else {
            BigRational slope = chart_value(tc, s.dir);
            pieces.push_back({slope, chart_value(tc, s.base), piece_name(slope)});
        }
        if (i + 1 < strands.size()) breaks.push_back(s.hi);
    }
    PiecewiseAffine1D m(lo, hi, std::move(breaks), std::move(pieces), continuous);
    return {seg, c, m.merged()};
}

std::vector<Segment> split_at_axes(const Segment& s) {
    Point d = s.direction();
    std::vector<BigRational> ts{BigRational(0), BigRational(1)};
    if (!d.x.is_zero()) ts.push_back(-s.p.x / d.x);
    if (!d.y.is_zero()) ts.push_back(-s.p.y / d.y);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Segment> out;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (ts[i].sign() < 0 || ts[i + 1] > 1) continue;
        out.emplace_back(s.at(ts[i]), s.at(ts[i + 1]));
    }
    return out;
}

namespace {

Segment oriented(const Segment& s) { return s.q < s.p ? Segment(s.q, s.p) : s; }

bool collapsed_by_F(const Segment& s) {
    Point d = s.direction();
    int q = quadrant_of(s.at(BigRational(1, 2)));
    return (q == 1 && d.x == d.y) || (q == 3 && d.x == -d.y);
}

}  // namespace

std::vector<Segment> detect_plateaus(const PlanarGraph& graph) {
    std::vector<Segment> found;
    for (std::size_t e = 0; e < graph.edges.size(); ++e)
        for (const auto& piece : split_at_axes(graph.segment(e)))
            if (collapsed_by_F(piece)) found.push_back(oriented(piece));

    // Fuse collinear pieces that share an endpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < found.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < found.size() && !changed; ++j) {
                const Segment& a = found[i];
                const Segment& b = found[j];
                if (!a.collinear_with(b.p) || !a.collinear_with(b.q)) continue;
                if (a.q == b.p || b.q == a.p) {
                    Segment fused = a.q == b.p ? Segment(a.p, b.q) : Segment(b.p, a.q);
                    found[i] = fused;
                    found.erase(found.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                }
            }
    }
    std::sort(found.begin(), found.end(), [](const Segment& a, const Segment& b) {
        return a.p < b.p || (a.p == b.p && a.q < b.q);
    });
    return found;
}

}  // namespace pwlent
