#include "pwlent/cover.hpp"

#include <algorithm>

#include "pwlent/graphs.hpp"

namespace pwlent {

std::string cover_mode_name(CoverMode m) {
    switch (m) {
        case CoverMode::Markov: return "markov";
        case CoverMode::Lower: return "lower";
        case CoverMode::Upper: return "upper";
    }
    throw Error("unknown cover mode");
}

std::vector<Segment> image_pieces(const Params& params, const Segment& s) {
    std::vector<Segment> out;
    for (const auto& piece : split_at_axes(s)) {
        Point a = apply_F(params, piece.p), c = apply_F(params, piece.q);
        if (a != c) out.emplace_back(a, c);
    }
    return out;
}

namespace {

using Span = std::pair<BigRational, BigRational>;

// Positive-length parameter intervals of `node` (within [0,1]) covered by the pieces.
std::vector<Span> coverage(const Segment& node, const std::vector<Segment>& pieces) {
    std::vector<Span> out;
    for (const auto& pc : pieces) {
        if (!node.collinear_with(pc.p) || !node.collinear_with(pc.q)) continue;
        BigRational t0 = node.param(pc.p), t1 = node.param(pc.q);
        BigRational lo = max(min(t0, t1), BigRational(0)), hi = min(max(t0, t1), BigRational(1));
        if (lo < hi) out.emplace_back(lo, hi);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool fully_covered(const std::vector<Span>& spans) {
    BigRational reached(0);
    for (const auto& [lo, hi] : spans) {
        if (lo > reached) return false;
        reached = max(reached, hi);
    }
    return reached >= 1;
}

std::vector<Segment> graph_segments(const PlanarGraph& g) {
    std::vector<Segment> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) out.push_back(g.segment(e));
    return out;
}

}  // namespace

CoverDigraph build_cover_digraph(const PlanarGraph& graph, const std::vector<CoverNode>& partition,
                                 const Params& params, CoverMode mode) {
    const std::size_t n = partition.size();
    std::vector<Segment> edges = graph_segments(graph);
    for (const auto& node : partition)
        if (!fully_covered(coverage(node.seg, edges)))
            throw Error("partition interval " + node.label + " is not contained in the graph");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!coverage(partition[i].seg, {partition[j].seg}).empty())
                throw Error("partition intervals " + partition[i].label + " and " + partition[j].label + " overlap");

    CoverDigraph cd{partition, {}, mode};
    cd.graph.adj.assign(n, std::vector<std::uint8_t>(n, 0));
    for (const auto& node : partition) cd.graph.labels.push_back(node.label);

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Segment> img = image_pieces(params, partition[i].seg);
        for (std::size_t j = 0; j < n; ++j) {
            auto spans = coverage(partition[j].seg, img);
            if (spans.empty()) continue;
            bool full = fully_covered(spans);
            if (mode == CoverMode::Markov && !full)
                throw Error("not a Markov partition: F(" + partition[i].label + ") partly covers " +
                            partition[j].label);
            if (full || mode == CoverMode::Upper) cd.graph.adj[i][j] = 1;
        }
    }
    return cd;
}

std::vector<CoverNode> band48_partition(const BigRational& b, unsigned level) {
    require_regime(Regime::Band48, b);
    Params params = Params::with_b(b);
    auto P = [&](const char* name) { return named_point(Regime::Band48, b, name); };

    // x_0 = b-10 and x_{k+1} = 4 x_k + b - 2 on the line y = -1.
    std::vector<Point> X{{b - 10, BigRational(-1)}};
    for (unsigned k = 0; k < level; ++k) X.push_back({4 * X.back().x + b - 2, BigRational(-1)});
    std::vector<Point> FX, F2X;
    for (const auto& p : X) {
        FX.push_back(apply_F(params, p));
        F2X.push_back(apply_F(params, FX.back()));
    }

    std::vector<CoverNode> out{
        {"A", {P("P9"), P("P18")}},  {"B", {P("P11"), P("P16")}}, {"D", {P("P12"), P("P17")}},
        {"E", {P("P2"), P("P3")}},   {"H", {P("P6"), P("Y6")}},   {"I", {P("Y4"), P("P7")}},
        {"G", {X[0], P("P4")}},
    };
    out.push_back({"K", level == 0 ? Segment(P("Y2"), P("Y1")) : Segment(FX[0], P("Y1"))});
    const unsigned n = level;
    out.push_back({"F1", {P("P3"), X[n]}});
    for (unsigned i = 2; i <= n + 1; ++i) out.push_back({"F" + std::to_string(i), {X[n - i + 2], X[n - i + 1]}});
    if (n >= 1) {
        out.push_back({"J2", {P("Y2"), FX[n - 1]}});
        for (unsigned i = 3; i <= n + 1; ++i)
            out.push_back({"J" + std::to_string(i), {FX[n - i + 2], FX[n - i + 1]}});
        out.push_back({"C1", {P("P1"), F2X[n - 1]}});
        for (unsigned i = 2; i <= n; ++i)
            out.push_back({"C" + std::to_string(i), {F2X[n - i + 1], F2X[n - i]}});
        out.push_back({"C" + std::to_string(n + 1), {F2X[0], P("P12")}});
    } else {
        out.push_back({"C1", {P("P1"), P("P12")}});
    }
    return out;
}

}  // namespace pwlent
