#include "pwlent_cli/commands.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "pwlent/interval48.hpp"
#include "pwlent/measure.hpp"
#include "pwlent_cli/render.hpp"

namespace pwlent::cli {

namespace {

BigRational q(long n, long d = 1) { return {n, d}; }

std::string range_text(const ClassRange& r) {
    return std::string(r.lo_closed ? "[" : "(") + r.lo.short_str() + "," + r.hi.short_str() + (r.hi_closed ? "]" : ")");
}

std::string root_text(const RootInterval& r) { return "ln(root(" + r.poly.str() + "))"; }

}  // namespace

BigRational reduce_parameter(const std::optional<BigRational>& a, const BigRational& b) {
    if (!a) return b;
    if (a->sign() >= 0) throw Error("only a < 0 is conjugate to a = -1; got a = " + a->short_str());
    BigRational lambda = a->abs().inverse();
    Params reduced{-1, lambda * b};
    // Spot check the conjugacy λ F_{a,b}(p/λ) = F_{λa,λb}(p) at a few points.
    for (const Point& p : {Point{0, 0}, Point{3, -7}, Point{q(-5, 2), q(1, 3)}})
        if (!scale_conjugate_check({*a, b}, lambda, p)) throw Error("conjugation check failed");
    return reduced.b;
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    const char* dir = std::getenv("PWLENT_OUTPUT_DIR");
    if (dir && *dir && p.is_relative()) return std::filesystem::path(dir) / p;
    return p;
}

CommandResult cmd_entropy(const BigRational& b, unsigned digits, bool json) {
    EntropyResult e = entropy_or_bounds(b, digits);
    CrossCheck cc = cross_validate(b);
    CommandResult res;
    if (!cc.agree) res.status = CheckFailed;
    if (json) {
        Json j;
        j["schema"] = "pwlent.entropy";
        j["schema_version"] = kSchemaVersion;
        j["b"] = b.short_str();
        j["class"] = to_string(e.cls);
        j["exact"] = e.exact;
        j["lower"] = {{"family", family_name(e.lo_family)}, {"polynomial", e.lo_root.poly.str("x")}, {"value", e.lo_text}};
        j["upper"] = {{"family", family_name(e.hi_family)}, {"polynomial", e.hi_root.poly.str("x")}, {"value", e.hi_text}};
        Json polys = Json::array();
        for (const auto& p : cc.from_graph) polys.push_back(p.str("x"));
        j["markov_cross_check"] = {{"agree", cc.agree}, {"digraph_polynomials", polys}, {"node_counts", cc.node_counts}};
        res.body = j.dump(2) + "\n";
        return res;
    }
    std::ostringstream os;
    if (e.exact)
        os << to_string(e.cls) << " exact " << root_text(e.lo_root) << " ≈ " << e.lo_text << "\n";
    else
        os << to_string(e.cls) << " bounds " << root_text(e.lo_root) << " ≈ " << e.lo_text << " <= h <= "
           << root_text(e.hi_root) << " ≈ " << e.hi_text << "\n";
    os << "markov cross-check: " << (cc.agree ? "agree" : "DISAGREE");
    for (std::size_t i = 0; i < cc.from_graph.size(); ++i)
        os << (i ? ", " : " (") << cc.node_counts[i] << " nodes: " << cc.from_graph[i].str();
    os << ")\n";
    res.body = os.str();
    return res;
}

CommandResult cmd_table1(unsigned levels, unsigned digits) {
    std::ostringstream os;
    os << "set,interval,entropy\n";
    for (const auto& row : table1(levels, digits)) {
        const EntropyResult& e = row.entropy;
        std::string h = e.exact ? e.lo_text : "[" + e.lo_text + "," + e.hi_text + "]";
        os << to_string(row.cls) << ',' << csv_field(range_text(row.range)) << ',' << csv_field(h) << "\n";
    }
    return {os.str(), Ok};
}

CommandResult cmd_certify(Transition t, unsigned upper_period, unsigned lower_period) {
    CertifiedInterval ci = certify(t, upper_period, lower_period);
    bool ok = verify_certificate(t, ci.hi_certificate, true) && verify_certificate(t, ci.lo_certificate, false);
    Json j = certified_interval_to_json(ci);
    j["verified"] = ok;
    return {j.dump(2) + "\n", ok ? Ok : CheckFailed};
}

CommandResult cmd_graph(Regime r, const BigRational& b, const std::string& format) {
    PlanarGraph g = build_gamma(r, b);
    InvarianceReport inv = verify_invariance(g, Params::with_b(b));
    int status = inv.ok ? Ok : CheckFailed;
    if (format == "json") {
        Json j = graph_to_json(g, r, b);
        j["invariant"] = inv.ok;
        return {j.dump(2) + "\n", status};
    }
    if (format == "svg") return {graph_to_svg(g, r, b), status};
    if (format == "dot") return {graph_to_dot(g, r, b), status};
    throw Error("unknown graph format " + format);
}

CommandResult cmd_digraph(const BigRational& b, CoverMode mode, const std::string& format) {
    LevelClass lc = classify(b);
    PlanarGraph g = build_gamma(Regime::Band48, b);
    CoverDigraph cd = build_cover_digraph(g, band48_partition(b, lc.n), Params::with_b(b), mode);
    if (format == "dot") return {digraph_to_dot(cd.graph, to_string(lc) + "_" + cover_mode_name(mode)), Ok};
    if (format == "json") {
        Json j = cover_to_json(cd, b);
        j["class"] = to_string(lc);
        return {j.dump(2) + "\n", Ok};
    }
    throw Error("unknown digraph format " + format);
}

CommandResult cmd_measure(Regime r, const BigRational& b, std::size_t depth) {
    MeasureReport rep = full_measure_report(r, b, depth);
    std::ostringstream os;
    os << "edge,depth,length,captured,uncaptured\n";
    for (const auto& p : rep.profiles)
        for (std::size_t k = 0; k <= depth; ++k)
            os << p.edge << ',' << k << ',' << p.length.short_str() << ',' << p.by_depth[k].captured.short_str() << ','
               << p.by_depth[k].uncaptured.short_str() << "\n";
    for (std::size_t k = 0; k <= depth; ++k)
        os << "total," << k << ',' << rep.total_length.short_str() << ','
           << (rep.total_length - rep.uncaptured[k]).short_str() << ',' << rep.uncaptured[k].short_str() << "\n";
    return {os.str(), Ok};
}

std::vector<Check> run_property_suite() {
    std::vector<Check> out;
    auto check = [&](const std::string& name, const std::function<bool(std::string&)>& f) {
        std::string detail;
        bool ok = false;
        try {
            ok = f(detail);
        } catch (const std::exception& ex) {
            detail = ex.what();
        }
        out.push_back({name, ok, detail});
    };

    const std::vector<std::pair<Regime, std::vector<BigRational>>> samples{
        {Regime::NegB, {q(-3), q(-5, 2), q(-2), q(-17, 3)}},
        {Regime::AlphaWindow, {q(-4, 5), q(-163, 200), q(-3, 4)}},
        {Regime::BetaWindow, {q(68994, 100000), q(7, 10), q(5, 7)}},
        {Regime::Band48, {q(9, 2), q(5), q(6), q(31, 4)}},
    };
    for (const auto& [r, bs] : samples)
        check("invariance " + regime_name(r), [&](std::string& d) {
            for (const auto& b : bs) {
                if (!verify_invariance(build_gamma(r, b), Params::with_b(b)).ok) {
                    d = "fails at b=" + b.short_str();
                    return false;
                }
                orbit_marks(r, b);
            }
            return true;
        });
    check("negb single plateau", [](std::string& d) {
        auto ps = detect_plateaus(build_gamma(Regime::NegB, q(-3)));
        d = std::to_string(ps.size()) + " plateau(s)";
        return ps.size() == 1 && ps[0] == Segment({q(2), q(0)}, {q(10), q(8)});
    });
    check("band48 digraphs match closed forms", [](std::string& d) {
        for (unsigned n = 0; n < 3; ++n)
            for (LevelKind k : {LevelKind::S, LevelKind::T, LevelKind::U, LevelKind::V}) {
                LevelClass lc{n, k};
                if (!cross_validate(class_sample(lc)).agree) {
                    d = "mismatch in " + to_string(lc);
                    return false;
                }
            }
        return true;
    });
    check("root ordering and monotonicity n<=50", [](std::string&) {
        return verify_root_ordering(50) && verify_root_monotonicity(50);
    });
    for (Transition t : {Transition::Alpha, Transition::Beta})
        check("certificates " + transition_name(t) + " (24,32)", [&](std::string& d) {
            CertifiedInterval ci = certify(t, 24, 32);
            d = digits_report(ci);
            return verify_certificate(t, ci.hi_certificate, true) && verify_certificate(t, ci.lo_certificate, false);
        });
    check("g2 semiconjugate to g1", [](std::string&) { return g2_matches_g1(q(-163, 200)); });
    check("k1 equals F^7 on sigma", [](std::string&) {
        BigRational b(68994, 100000);
        PiecewiseAffine1D k = build_k1(b), f = build_k1_from_F(b).map;
        return k.lo() == f.lo() && k.hi() == f.hi() && k.breaks() == f.breaks() &&
               k.pieces().size() == f.pieces().size() &&
               std::equal(k.pieces().begin(), k.pieces().end(), f.pieces().begin(),
                          [](const AffinePiece& x, const AffinePiece& y) { return x.slope == y.slope && x.offset == y.offset; });
    });
    check("negb uncaptured fraction 2^-(4n+1)", [](std::string& d) {
        MeasureReport rep = full_measure_report(Regime::NegB, q(-3), 4);
        d = rep.uncaptured_fraction.short_str();
        return rep.uncaptured_fraction == BigRational(1, 1L << 17);
    });
    return out;
}

CommandResult cmd_verify() {
    std::ostringstream os;
    int status = Ok;
    for (const auto& c : run_property_suite()) {
        os << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
        if (!c.ok) status = CheckFailed;
    }
    return {os.str(), status};
}

}  // namespace pwlent::cli
