#include "pwlent/graphs.hpp"

#include <algorithm>
#include <map>

namespace pwlent {

namespace {

// Coordinates affine in b: c0 + c1*b.
struct SymPoint {
    std::string_view name;
    ParamAffine x, y;
    bool optional = false;  // dropped when it misses the graph at this b
};

struct SymLine {
    std::string_view from, to;
};

struct RegimeTable {
    std::vector<SymPoint> points;
    std::vector<SymLine> lines;
    std::vector<std::pair<std::string_view, std::string_view>> relations;
};

BigRational q(long n, long d = 1) { return {n, d}; }
ParamAffine pa(BigRational c0, BigRational c1) { return {std::move(c0), std::move(c1)}; }

RegimeTable negb_table() {
    return {
        {
            {"P1", pa(-2, -1), pa(-1, 0)},
            {"P2", pa(-2, -1), pa(-3, 0)},
            {"P3", pa(0, -1), pa(-5, 0)},
            {"P4", pa(4, -1), pa(-5, 0)},
            {"P5", pa(8, -1), pa(-1, 0)},
            {"P6", pa(8, -1), pa(7, 0)},
            {"P7", pa(0, -1), pa(1, 0)},
            {"R1", pa(8, -1), pa(0, 0)},
            {"R2", pa(7, -1), pa(8, 0)},
            {"S", pa(-1, -1), pa(0, 0)},
        },
        {{"P1", "P2"}, {"P2", "P3"}, {"P3", "P4"}, {"P4", "P5"}, {"P5", "P6"}, {"R2", "P6"}, {"P1", "R2"}},
        {{"P1", "P2"}, {"P2", "P3"}, {"P3", "P4"}, {"P4", "P5"}, {"P5", "P6"}, {"P6", "P7"}, {"P7", "P1"},
         {"S", "P1"}, {"R2", "P1"}, {"R1", "R2"}},
    };
}

RegimeTable alpha_table() {
    return {
        {
            {"P1", pa(0, 0), pa(1, 1)},
            {"P2", pa(-2, -1), pa(-1, 0)},
            {"P3", pa(2, 1), pa(-3, 0)},
            {"P4", pa(4, 1), pa(-1, 2)},
            {"P5", pa(4, -1), pa(3, 4)},
            {"P6", pa(0, -5), pa(7, 4)},
            {"P7", pa(-8, -9), pa(-7, -8)},
            {"R1", pa(-1, -1), pa(0, 0)},
            {"R2", pa(0, 1), pa(-1, 0)},
            {"R3", pa(0, -1), pa(-1, 2)},
            {"R4", pa(0, -3), pa(-1, 2)},
            {"R5", pa(0, -5), pa(-1, 0)},
            {"R6", pa(0, -5), pa(-1, -4)},
            {"R7", pa(0, -1), pa(1, 0)},
            {"Q", pa(0, 0), pa(-1, 1)},
            {"T1", pa(0, -5), pa(0, 0)},
            {"T2", pa(-1, -5), pa(0, -4)},
            {"S", pa(-1, 0), pa(0, 1)},
        },
        {{"P2", "R2"}, {"P2", "T2"}, {"S", "P3"}, {"R3", "P4"}, {"R4", "P5"}, {"T2", "R6"}, {"R5", "P6"}},
        {{"P1", "P2"}, {"P2", "P3"}, {"P3", "P4"}, {"P4", "P5"}, {"P5", "P6"}, {"P6", "P7"},
         {"R1", "R2"}, {"R2", "R3"}, {"R3", "R4"}, {"R4", "R5"}, {"R5", "R6"}, {"R6", "R7"},
         {"T1", "T2"}, {"R7", "P2"}, {"T2", "P2"}, {"S", "R3"}},
    };
}

RegimeTable beta_table() {
    return {
        {
            {"P1", pa(-2, -1), pa(-1, 0)},
            {"P2", pa(2, 1), pa(-3, 0)},
            {"P3", pa(4, 1), pa(-1, 2)},
            {"P4", pa(4, -1), pa(5, 0)},
            {"Q", pa(0, 0), pa(-5, 7)},
            {"R1", pa(0, 0), pa(-1, 2)},
            {"R2", pa(0, -2), pa(1, -1)},
            {"R3", pa(-2, 3), pa(-1, 0)},
            {"R4", pa(-2, 3), pa(-3, 4)},
            {"R5", pa(0, -1), pa(-5, 8)},
            {"R6", pa(4, -7), pa(5, -8)},
            {"R7", pa(-10, 15), pa(9, -14)},
            {"S", pa(0, 0), pa(1, 1)},
            {"T1", pa(0, -1), pa(0, 0)},
            {"T2", pa(-1, 1), pa(0, 0)},
            {"W", pa(1, -3), pa(0, 0)},
            {"X1", pa(0, 0), pa(-1, 0)},
            {"X2", pa(0, 0), pa(-1, 1)},
            {"X3", pa(0, -1), pa(-1, 2)},
            {"X4", pa(0, -1), pa(1, -2)},
            {"X5", pa(-2, 3), pa(1, -2)},
            {"X6", pa(-4, 5), pa(-1, 2)},
            {"X7", pa(4, -7), pa(-3, 4)},
            {"Y1", pa(4, -7), pa(0, 0)},
            {"Y2", pa(-5, 7), pa(4, -6)},
            {"Z1", pa(-5, 7), pa(0, 0)},
            {"Z2", pa(4, -7), pa(-5, 8)},
            {"Z3", pa(0, -1), pa(9, -14)},
            {"R8", pa(-20, 29), pa(-1, 2), true},
            {"R15", pa(300, -435), pa(-1, 2), true},
        },
        {{"P1", "R3"}, {"R2", "X4"}, {"R2", "P4"}, {"R6", "Z3"}, {"R6", "T2"}, {"X7", "Z2"}, {"Z2", "R5"},
         {"Z3", "Y2"}, {"X4", "R5"}, {"X3", "P2"}, {"X3", "P3"}, {"X6", "R4"}, {"X2", "R4"}, {"R3", "X5"}},
        {{"P1", "P2"}, {"P2", "P3"}, {"P3", "P4"}, {"P4", "P1"},
         {"R1", "R2"}, {"R2", "R3"}, {"R3", "R4"}, {"R4", "R5"}, {"R5", "R6"}, {"R6", "R7"}, {"R7", "R8"},
         {"S", "P1"}, {"Q", "Z2"}, {"T1", "T2"}, {"T2", "X3"}, {"W", "X5"},
         {"X1", "X2"}, {"X2", "X3"}, {"X3", "X4"}, {"X4", "X5"}, {"X5", "X6"}, {"X6", "X7"}, {"X7", "X5"},
         {"Y1", "Y2"}, {"Y2", "X3"}, {"Z1", "Z2"}, {"Z2", "Z3"}, {"Z3", "R7"}},
    };
}

RegimeTable band48_table() {
    return {
        {
            {"P1", pa(0, 0), pa(1, 1)},
            {"P2", pa(-1, -1), pa(0, 0)},
            {"P3", pa(-2, -1), pa(-1, 0)},
            {"P4", pa(0, 0), pa(-1, 0)},
            {"P5", pa(0, 1), pa(-1, 0)},
            {"P6", pa(2, 1), pa(-3, 0)},
            {"P7", pa(-1, 1), pa(0, 0)},
            {"P8", pa(0, 0), pa(-1, 1)},
            {"P9", pa(4, 1), pa(-1, 2)},
            {"P10", pa(0, 1), pa(-1, 2)},
            {"P11", pa(-2, 1), pa(-1, 2)},
            {"P12", pa(4, -1), pa(5, 0)},
            {"P13", pa(0, -1), pa(1, 0)},
            {"P14", pa(-2, 1), pa(-1, 0)},
            {"P15", pa(-2, 1), pa(-3, 2)},
            {"P16", pa(-1, 1), pa(-1, 2)},
            {"P17", pa(-1, q(-1, 2)), pa(0, q(1, 2))},
            {"P18", pa(-1, q(3, 2)), pa(-1, 2)},
            {"X1", pa(q(1, 2), q(-1, 4)), pa(-1, 0)},
            {"X2", pa(0, q(-1, 2)), pa(-1, 0)},
            {"X3", pa(1, -1), pa(-1, 0)},
            {"X4", pa(q(1, 2), -1), pa(-1, 0)},
            {"X5", pa(0, -1), pa(-1, 0)},
            {"X6", pa(q(1, 2), q(-5, 4)), pa(-1, 0)},
            {"Y1", pa(q(-1, 2), q(1, 4)), pa(q(-1, 2), q(3, 4))},
            {"Y2", pa(0, q(1, 2)), pa(-1, q(1, 2))},
            {"Y4", pa(q(-1, 2), 1), pa(q(-1, 2), 0)},
            {"Y6", pa(q(-1, 2), q(5, 4)), pa(q(-1, 2), q(-1, 4))},
            {"W", pa(-1, 0), pa(0, 1)},
        },
        {{"P3", "P11"}, {"P3", "P5"}, {"X5", "P13"}, {"W", "P6"}, {"P8", "P10"}, {"P14", "P7"}, {"P15", "P11"},
         {"P11", "P9"}},
        {{"X2", "Y2"}, {"Y2", "P1"}, {"X4", "Y4"}, {"Y4", "P16"}, {"P16", "P2"}, {"P17", "P4"},
         {"X1", "Y1"}, {"Y1", "P17"}, {"X6", "Y6"}, {"Y6", "P18"}, {"P18", "P17"}, {"X5", "P5"}, {"X3", "P7"}},
    };
}

const RegimeTable& table_for(Regime r) {
    static const RegimeTable negb = negb_table(), alpha = alpha_table(), beta = beta_table(),
                             band = band48_table();
    switch (r) {
        case Regime::NegB: return negb;
        case Regime::AlphaWindow: return alpha;
        case Regime::BetaWindow: return beta;
        case Regime::Band48: return band;
    }
    throw Error("unknown regime");
}

Point eval(const SymPoint& s, const BigRational& b) { return {s.x.at(b), s.y.at(b)}; }

const SymPoint& sym(const RegimeTable& t, std::string_view name) {
    for (const auto& s : t.points)
        if (s.name == name) return s;
    throw Error("regime has no point named " + std::string(name));
}

struct Closure {
    std::optional<BigRational> lo, hi;
    bool lo_open, hi_open;
};

Closure closure_of(Regime r) {
    switch (r) {
        case Regime::NegB: return {std::nullopt, q(-2), true, false};
        case Regime::AlphaWindow: return {q(-1), q(-3, 4), true, false};
        case Regime::BetaWindow: return {q(2, 3), q(5, 7), true, false};
        case Regime::Band48: return {q(4), q(8), true, true};
    }
    throw Error("unknown regime");
}

// Intersection of two non-parallel segments, if any.
std::optional<Point> crossing(const Segment& s, const Segment& t) {
    Point d = s.direction(), e = t.direction();
    BigRational den = cross(d, e);
    if (den.is_zero()) return std::nullopt;
    BigRational u = cross(t.p - s.p, e) / den;
    BigRational v = cross(t.p - s.p, d) / den;
    if (u.sign() < 0 || u > 1 || v.sign() < 0 || v > 1) return std::nullopt;
    return s.at(u);
}

bool overlapping_collinear(const Segment& s, const Segment& t) {
    if (!s.collinear_with(t.p) || !s.collinear_with(t.q)) return false;
    BigRational a = s.param(t.p), c = s.param(t.q);
    return max(BigRational(0), min(a, c)) < min(BigRational(1), max(a, c));
}

}  // namespace

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::NegB: return "negb";
        case Regime::AlphaWindow: return "alpha";
        case Regime::BetaWindow: return "beta";
        case Regime::Band48: return "band48";
    }
    throw Error("unknown regime");
}

Regime parse_regime(std::string_view s) {
    for (Regime r : {Regime::NegB, Regime::AlphaWindow, Regime::BetaWindow, Regime::Band48})
        if (regime_name(r) == s) return r;
    throw Error("unknown regime '" + std::string(s) + "' (expected negb, alpha, beta or band48)");
}

bool regime_contains(Regime r, const BigRational& b) {
    Closure c = closure_of(r);
    if (c.lo && (c.lo_open ? b <= *c.lo : b < *c.lo)) return false;
    if (c.hi && (c.hi_open ? b >= *c.hi : b > *c.hi)) return false;
    return true;
}

bool regime_boundary(Regime r, const BigRational& b) {
    Closure c = closure_of(r);
    return (c.lo && b == *c.lo) || (c.hi && b == *c.hi);
}

void require_regime(Regime r, const BigRational& b) {
    if (!regime_contains(r, b) && !regime_boundary(r, b))
        throw Error("b = " + b.short_str() + " lies outside the " + regime_name(r) + " regime");
}

Point named_point(Regime r, const BigRational& b, std::string_view name) { return eval(sym(table_for(r), name), b); }

PlanarGraph build_gamma(Regime r, const BigRational& b) {
    require_regime(r, b);
    const RegimeTable& t = table_for(r);

    std::vector<Segment> lines;
    for (const auto& l : t.lines) lines.emplace_back(eval(sym(t, l.from), b), eval(sym(t, l.to), b));

    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (overlapping_collinear(lines[i], lines[j]))
                throw Error("graph lines overlap: " + std::string(t.lines[i].from) + "-" + std::string(t.lines[i].to));

    // Which lines carry each named point.
    std::vector<std::vector<std::size_t>> on(t.points.size());
    for (std::size_t k = 0; k < t.points.size(); ++k) {
        Point p = eval(t.points[k], b);
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (lines[i].contains(p)) on[k].push_back(i);
        if (on[k].empty() && !t.points[k].optional)
            throw Error("point " + std::string(t.points[k].name) + " misses the graph at b = " + b.short_str());
    }

    auto is_endpoint = [&](std::string_view name) {
        return std::any_of(t.lines.begin(), t.lines.end(),
                           [&](const SymLine& l) { return l.from == name || l.to == name; });
    };

    PlanarGraph g;
    std::map<Point, std::size_t> vertex_at;
    std::vector<std::pair<std::string, Point>> pending_marks;
    for (std::size_t k = 0; k < t.points.size(); ++k) {
        if (on[k].empty()) continue;
        Point p = eval(t.points[k], b);
        std::string name(t.points[k].name);
        bool vertex = is_endpoint(t.points[k].name) || on[k].size() >= 2;
        if (vertex && !vertex_at.count(p)) {
            vertex_at[p] = g.vertices.size();
            g.vertices.push_back({name, p});
        } else {
            pending_marks.emplace_back(name, p);
        }
    }

    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (auto x = crossing(lines[i], lines[j]); x && !vertex_at.count(*x))
                throw Error("unnamed crossing at " + to_string(*x));

    for (const auto& line : lines) {
        std::vector<std::pair<BigRational, std::size_t>> along;
        for (const auto& [p, idx] : vertex_at)
            if (line.contains(p)) along.emplace_back(line.param(p), idx);
        std::sort(along.begin(), along.end());
        for (std::size_t i = 0; i + 1 < along.size(); ++i) {
            std::size_t a = along[i].second, c = along[i + 1].second;
            g.edges.push_back({a, c, g.vertices[a].name + "-" + g.vertices[c].name});
        }
    }

    for (auto& [name, p] : pending_marks) {
        std::size_t e = 0;
        while (e < g.edges.size() && !g.segment(e).contains(p)) ++e;
        g.marks.push_back({name, p, e});
    }
    return g;
}

InvarianceReport verify_invariance(const PlanarGraph& graph, const Params& params) {
    InvarianceReport rep;
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        for (const auto& piece : split_at_axes(graph.segment(e))) {
            QuadrantAffine qa = quadrant_map(params, quadrant_of(piece.at(BigRational(1, 2))));
            Point a = qa.apply(piece.p), c = qa.apply(piece.q);
            const std::string& label = graph.edges[e].label;
            if (a == c) {
                if (!graph.contains(a)) {
                    rep.ok = false;
                    rep.uncovered.push_back({a, a, label});
                }
                continue;
            }
            Segment img(a, c);
            std::vector<std::pair<BigRational, BigRational>> cover;
            for (std::size_t f = 0; f < graph.edges.size(); ++f) {
                Segment s = graph.segment(f);
                if (!img.collinear_with(s.p) || !img.collinear_with(s.q)) continue;
                BigRational t0 = img.param(s.p), t1 = img.param(s.q);
                cover.emplace_back(min(t0, t1), max(t0, t1));
            }
            std::sort(cover.begin(), cover.end());
            BigRational reached(0);
            auto gap = [&](const BigRational& from, const BigRational& to) {
                rep.ok = false;
                rep.uncovered.push_back({img.at(from), img.at(to), label});
            };
            for (const auto& [lo, hi] : cover) {
                if (reached >= 1) break;
                if (lo > reached) gap(reached, min(lo, BigRational(1)));
                reached = max(reached, hi);
            }
            if (reached < 1) gap(reached, BigRational(1));
        }
    }
    return rep;
}

std::vector<OrbitRelation> orbit_marks(Regime r, const BigRational& b) {
    require_regime(r, b);
    const RegimeTable& t = table_for(r);
    Params params = Params::with_b(b);
    std::vector<OrbitRelation> out;
    for (const auto& [from, to] : t.relations) {
        Point p = eval(sym(t, from), b);
        if (apply_F(params, p) != eval(sym(t, to), b))
            throw Error("orbit relation F(" + std::string(from) + ") = " + std::string(to) + " fails at b = " +
                        b.short_str());
        out.push_back({std::string(from), p, std::string(to)});
    }
    return out;
}

}  // namespace pwlent
