#include "pwlent/measure.hpp"

#include "pwlent/cover.hpp"
#include "pwlent/transition.hpp"

namespace pwlent {

namespace {

struct EdgeDef {
    const char* label;
    const char* from;
    const char* to;
};

const std::vector<EdgeDef>& edge_defs(Regime r) {
    static const std::vector<EdgeDef> negb{{"A", "P1", "P2"}, {"B", "P2", "P3"}, {"C", "P3", "P4"},
                                           {"D", "P4", "P5"}, {"E", "P5", "R1"}, {"G", "P6", "R2"},
                                           {"H", "P1", "S"},  {"P6R1", "P6", "R1"}, {"plateau", "S", "R2"}};
    static const std::vector<EdgeDef> alpha{{"Pi", "P7", "R7"}};
    static const std::vector<EdgeDef> beta{{"Sigma", "R15", "R8"}};
    static const std::vector<EdgeDef> none;
    switch (r) {
        case Regime::NegB: return negb;
        case Regime::AlphaWindow: return alpha;
        case Regime::BetaWindow: return beta;
        case Regime::Band48: return none;
    }
    return none;
}

std::size_t induced_power(Regime r) { return r == Regime::AlphaWindow ? 6 : 7; }

BigRational chart_length(const Segment& s) {
    Chart c = chart_of(s);
    return (chart_value(c, s.q) - chart_value(c, s.p)).abs();
}

}  // namespace

std::vector<std::string> measured_edges(Regime r) {
    std::vector<std::string> out;
    for (const auto& e : edge_defs(r)) {
        std::string l = e.label;
        if (l != "P6R1" && l != "plateau") out.push_back(l);
    }
    return out;
}

Segment labelled_segment(Regime r, const BigRational& b, const std::string& label) {
    require_regime(r, b);
    for (const auto& e : edge_defs(r))
        if (label == e.label) return {named_point(r, b, e.from), named_point(r, b, e.to)};
    throw Error("no edge labelled " + label + " in the " + regime_name(r) + " regime");
}

namespace {

// Segments whose points are captured within one more step (NegB: the feeder and the plateau).
std::vector<Segment> absorbing_segments(Regime r, const BigRational& b) {
    if (r != Regime::NegB) return {};
    return {labelled_segment(r, b, "P6R1"), labelled_segment(r, b, "plateau")};
}

bool absorbed(const std::vector<Segment>& sinks, const Point& a, const Point& c) {
    for (const auto& s : sinks)
        if (s.contains(a) && s.contains(c)) return true;
    return false;
}

}  // namespace

std::vector<Interval> uncaptured_on_edge(Regime r, const BigRational& b, const std::string& edge, std::size_t depth) {
    if (r == Regime::Band48) throw Error("capture profiles are defined for negb, alpha and beta");
    Segment seg = labelled_segment(r, b, edge);
    auto sinks = absorbing_segments(r, b);
    InducedMap im = restrict_iterate_to_segment(Params::with_b(b), seg, induced_power(r), std::nullopt, sinks);
    const PiecewiseAffine1D& m = im.map;
    // Moving pieces may leave the edge only into segments that capture at the next step;
    // uncaptured_intervals counts points leaving the domain as captured.
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.pieces()[i].constant()) continue;
        Interval img = m.image(m.piece_lo(i), m.piece_hi(i));
        bool ok = true;
        if (img.lo < m.lo())
            ok = ok && absorbed(sinks, chart_point(seg, im.chart, img.lo), chart_point(seg, im.chart, min(m.lo(), img.hi)));
        if (img.hi > m.hi())
            ok = ok && absorbed(sinks, chart_point(seg, im.chart, max(m.hi(), img.lo)), chart_point(seg, im.chart, img.hi));
        if (!ok)
            throw Error("edge " + edge + " is not mapped into itself by F^" + std::to_string(induced_power(r)));
    }
    return uncaptured_intervals(m, depth);
}

CaptureProfile edge_capture_profile(Regime r, const BigRational& b, const std::string& edge, std::size_t depth) {
    Segment seg = labelled_segment(r, b, edge);
    CaptureProfile prof{edge, chart_length(seg), {}};
    for (std::size_t k = 0; k <= depth; ++k) {
        BigRational left = 0;
        for (const auto& iv : uncaptured_on_edge(r, b, edge, k)) left += iv.length();
        prof.by_depth.push_back({prof.length - left, left});
    }
    return prof;
}

MeasureReport full_measure_report(Regime r, const BigRational& b, std::size_t depth) {
    MeasureReport rep{r, b, {}, 0, std::vector<BigRational>(depth + 1, BigRational(0)), 0};
    for (const auto& label : measured_edges(r)) rep.profiles.push_back(edge_capture_profile(r, b, label, depth));

    if (r == Regime::NegB) {
        Segment plateau = labelled_segment(r, b, "plateau");
        Segment feeder = labelled_segment(r, b, "P6R1");
        for (const auto& img : image_pieces(Params::with_b(b), feeder))
            if (!plateau.contains(img.p) || !plateau.contains(img.q))
                throw Error("feeder P6R1 is not mapped onto the plateau");
        CaptureProfile pf{"P6R1", chart_length(feeder), {}}, pp{"plateau", chart_length(plateau), {}};
        for (std::size_t k = 0; k <= depth; ++k) {
            pf.by_depth.push_back(k == 0 ? CaptureStep{0, pf.length} : CaptureStep{pf.length, 0});
            pp.by_depth.push_back({pp.length, 0});
        }
        rep.profiles.push_back(pf);
        rep.profiles.push_back(pp);
    }

    for (const auto& p : rep.profiles) {
        rep.total_length += p.length;
        for (std::size_t k = 0; k <= depth; ++k) rep.uncaptured[k] += p.by_depth[k].uncaptured;
    }
    rep.uncaptured_fraction = rep.uncaptured.back() / rep.total_length;
    return rep;
}

}  // namespace pwlent
