#include "pwlent_cli/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace pwlent::cli {

namespace {

Json point_json(const Point& p) { return Json::array({p.x.short_str(), p.y.short_str()}); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Json graph_to_json(const PlanarGraph& g, Regime r, const BigRational& b) {
    Json j;
    j["schema"] = "pwlent.graph";
    j["schema_version"] = kSchemaVersion;
    j["regime"] = regime_name(r);
    j["a"] = "-1";
    j["b"] = b.short_str();
    Json vs = Json::array();
    for (const auto& v : g.vertices) vs.push_back({{"name", v.name}, {"point", point_json(v.p)}});
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : g.edges)
        es.push_back({{"label", e.label}, {"from", g.vertices[e.a].name}, {"to", g.vertices[e.b].name}});
    j["edges"] = es;
    Json ms = Json::array();
    for (const auto& m : g.marks)
        ms.push_back({{"name", m.name}, {"point", point_json(m.p)}, {"edge", g.edges[m.edge].label}});
    j["marks"] = ms;
    Json ps = Json::array();
    for (const auto& s : detect_plateaus(g)) ps.push_back(Json::array({point_json(s.p), point_json(s.q)}));
    j["plateaus"] = ps;
    return j;
}

std::string graph_to_svg(const PlanarGraph& g, Regime r, const BigRational& b) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& v : g.vertices) {
        x0 = std::min(x0, v.p.x.to_double());
        x1 = std::max(x1, v.p.x.to_double());
        y0 = std::min(y0, v.p.y.to_double());
        y1 = std::max(y1, v.p.y.to_double());
    }
    const double size = 640, pad = 40;
    double span = std::max({x1 - x0, y1 - y0, 1e-12});
    double k = (size - 2 * pad) / span;
    auto px = [&](const BigRational& x) { return fmt(pad + (x.to_double() - x0) * k); };
    // SVG y grows downward.
    auto py = [&](const BigRational& y) { return fmt(size - pad - (y.to_double() - y0) * k); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "<title>" << regime_name(r) << " b=" << xml_escape(b.short_str()) << "</title>\n";
    os << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        Segment s = g.segment(e);
        os << "<line x1=\"" << px(s.p.x) << "\" y1=\"" << py(s.p.y) << "\" x2=\"" << px(s.q.x) << "\" y2=\""
           << py(s.q.y) << "\"><title>" << xml_escape(g.edges[e].label) << "</title></line>\n";
    }
    os << "</g>\n<g stroke=\"red\" stroke-width=\"3\">\n";
    for (const auto& s : detect_plateaus(g))
        os << "<line x1=\"" << px(s.p.x) << "\" y1=\"" << py(s.p.y) << "\" x2=\"" << px(s.q.x) << "\" y2=\""
           << py(s.q.y) << "\"/>\n";
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (const auto& v : g.vertices)
        os << "<circle cx=\"" << px(v.p.x) << "\" cy=\"" << py(v.p.y) << "\" r=\"3\"/><text x=\"" << px(v.p.x)
           << "\" y=\"" << py(v.p.y) << "\" dx=\"4\" dy=\"-4\">" << xml_escape(v.name) << "</text>\n";
    for (const auto& m : g.marks)
        os << "<circle cx=\"" << px(m.p.x) << "\" cy=\"" << py(m.p.y) << "\" r=\"2\" fill=\"blue\"/><text x=\""
           << px(m.p.x) << "\" y=\"" << py(m.p.y) << "\" dx=\"4\" dy=\"10\" fill=\"blue\">" << xml_escape(m.name)
           << "</text>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string graph_to_dot(const PlanarGraph& g, Regime r, const BigRational& b) {
    std::ostringstream os;
    os << "graph \"" << regime_name(r) << "\" {\n";
    os << "  label=\"b=" << b.short_str() << "\";\n";
    for (const auto& v : g.vertices)
        os << "  \"" << v.name << "\" [pos=\"" << fmt(v.p.x.to_double()) << ',' << fmt(v.p.y.to_double())
           << "!\", xlabel=\"(" << v.p.x.short_str() << ", " << v.p.y.short_str() << ")\"];\n";
    for (const auto& e : g.edges)
        os << "  \"" << g.vertices[e.a].name << "\" -- \"" << g.vertices[e.b].name << "\";\n";
    os << "}\n";
    return os.str();
}

Json cover_to_json(const CoverDigraph& cd, const BigRational& b) {
    Json j;
    j["schema"] = "pwlent.digraph";
    j["schema_version"] = kSchemaVersion;
    j["b"] = b.short_str();
    j["mode"] = cover_mode_name(cd.mode);
    Json nodes = Json::array();
    for (const auto& n : cd.nodes) nodes.push_back({{"label", n.label}, {"from", point_json(n.seg.p)}, {"to", point_json(n.seg.q)}});
    j["nodes"] = nodes;
    Json edges = Json::array();
    const Digraph& g = cd.graph;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g.edge(i, k)) edges.push_back(Json::array({g.labels[i], g.labels[k]}));
    j["edges"] = edges;
    Rome rome = find_rome(g);
    Json rj = Json::array();
    for (auto i : rome) rj.push_back(g.labels[i]);
    j["rome"] = rj;
    j["relevant_factor"] = rome_char_poly(g, rome).str("x");
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json orbit = Json::array();
    for (const auto& x : c.orbit) orbit.push_back(x.short_str());
    return {
        {"period", c.pattern.size()},
        {"pattern", c.pattern},
        {"d", c.d.short_str()},
        {"b", c.b.short_str()},
        {"d_window", Json::array({c.d_window.lo.short_str(), c.d_window.hi.short_str()})},
        {"orbit", orbit},
        {"radius", {{"lo", c.radius.lo.short_str()}, {"hi", c.radius.hi.short_str()}}},
        {"zero_entropy", c.zero_entropy},
        {"bowen_franks", c.bowen_franks},
    };
}

Json certified_interval_to_json(const CertifiedInterval& ci) {
    Json j;
    j["schema"] = "pwlent.certificate";
    j["schema_version"] = kSchemaVersion;
    j["transition"] = transition_name(ci.tag);
    j["entropy_power"] = entropy_power(ci.tag);
    j["lower"] = certificate_to_json(ci.lo_certificate);
    j["upper"] = certificate_to_json(ci.hi_certificate);
    BigRational width = ci.hi - ci.lo;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", width.to_double());
    j["bracket"] = {{"lo", ci.lo.short_str()}, {"hi", ci.hi.short_str()}, {"width", width.short_str()},
                    {"width_approx", buf}};
    j["digits"] = digits_report(ci);
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace pwlent::cli
