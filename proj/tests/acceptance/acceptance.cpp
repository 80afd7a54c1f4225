// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
//
//   acceptance                 exit 0 iff every criterion passes
//   acceptance --known-red 1   also exit 0 when criterion 1 fails with exactly the
//                              recorded mismatch set and everything else passes

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pwlent/interval48.hpp"
#include "pwlent/measure.hpp"
#include "pwlent/transition.hpp"

using namespace pwlent;

namespace {

BigRational q(long n, long d = 1) { return {n, d}; }
BigRational big(const char* s) { return BigRational::parse(s); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    std::string signature;  // compact description of what failed, compared for known reds

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool encloses(const RootInterval& r, const char* approx, unsigned places) {
    BigRational v = big(approx), half = BigRational(1, 2) * BigRational(10).pow(-static_cast<long>(places));
    return r.lo <= v + half && v - half <= r.hi;
}

// ---- 1 ---------------------------------------------------------------------

struct PrintedRow {
    const char* cls;
    BigRational lo, hi;
    bool lo_closed, hi_closed;
    const char* h_lo;
    const char* h_hi;
};

// Reference table, cell by cell. The U0 upper bound is given as "023031" there; read as 0.23031.
std::vector<PrintedRow> printed_table() {
    return {
        {"S0", q(4), q(14, 3), false, false, "0.14717", "0.28888"},
        {"T0", q(14, 3), q(21, 4), true, true, "0.20844", "0.20844"},
        {"U0", q(21, 4), q(11, 2), false, false, "0.14717", "0.23031"},
        {"V0", q(11, 2), q(20, 3), true, true, "0.18600", "0.18600"},
        {"S1", q(20, 3), q(34, 5), false, false, "0.11977", "0.21132"},
        {"T1", q(34, 5), q(85, 12), true, true, "0.16389", "0.16389"},
        {"U1", q(85, 12), q(43, 6), false, false, "0.11977", "0.18155"},
        {"V1", q(43, 6), q(84, 11), true, true, "0.15051", "0.15051"},
        {"S2", q(84, 11), q(682, 89), false, false, "0.10238", "0.17042"},
        {"T2", q(682, 89), q(31, 4), true, true, "0.13698", "0.13698"},
        {"U2", q(31, 4), q(171, 22), false, false, "0.10238", "0.15186"},
        {"V2", q(171, 22), q(340, 43), true, true, "0.12795", "0.12795"},
    };
}

// Cells whose certified rounding differs from the printed value; see the README.
const char* kKnownTableDiff = "S1.lo S2.hi S2.lo T2 U0.hi U1.hi U1.lo U2.hi U2.lo V2";

Outcome criterion1() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto rows = table1(3, 5);
    double ms = ms_since(t0);
    auto printed = printed_table();
    o.require(rows.size() == printed.size(), "12 rows");
    std::set<std::string> diff;
    for (std::size_t i = 0; i < std::min(rows.size(), printed.size()); ++i) {
        const auto& r = rows[i];
        const auto& p = printed[i];
        std::string cls = to_string(r.cls);
        o.require(cls == p.cls, "row order at " + cls);
        o.require(r.range.lo == p.lo && r.range.hi == p.hi && r.range.lo_closed == p.lo_closed &&
                      r.range.hi_closed == p.hi_closed,
                  "interval of " + cls);
        const EntropyResult& e = r.entropy;
        auto cell = [&](const std::string& name, const std::string& got, const char* want) {
            if (got == want) return;
            diff.insert(name);
            o.notes.push_back(name + ": certified " + got + ", printed " + want);
        };
        if (e.exact) {
            cell(cls, e.lo_text, p.h_lo);
        } else {
            cell(cls + ".lo", e.lo_text, p.h_lo);
            cell(cls + ".hi", e.hi_text, p.h_hi);
        }
    }
    o.require(ms < 5000, "runtime < 5 s");
    if (!diff.empty()) {
        o.pass = false;
        for (const auto& d : diff) o.signature += (o.signature.empty() ? "" : " ") + d;
    }
    std::ostringstream os;
    os << "intervals exact; " << 18 - diff.size() << " of 18 entropy cells agree; " << ms << " ms";
    o.notes.insert(o.notes.begin(), os.str());
    return o;
}

// ---- 2 ---------------------------------------------------------------------

Outcome criterion2() {
    Outcome o;
    const std::pair<RootFamily, const char*> roots[] = {{RootFamily::Alpha, "1.15855"},
                                                        {RootFamily::Beta, "1.33493"},
                                                        {RootFamily::Delta, "1.23175"},
                                                        {RootFamily::Gamma, "1.25898"},
                                                        {RootFamily::Phi, "1.20443"}};
    for (auto [f, v] : roots) {
        RootInterval r = isolate_unique_positive_root(family_polynomial(f, 0), 5);
        o.require(r.width() < q(1, 100000), family_name(f) + "_0 width");
        o.require(encloses(r, v, 5), family_name(f) + "_0 encloses " + v);
        o.notes.push_back(family_name(f) + "_0 in [" + r.lo.decimal(7) + ", " + r.hi.decimal(7) + "]");
    }
    return o;
}

// ---- 3, 4 ------------------------------------------------------------------

Outcome certificate_criterion(Transition t, const char* b24, const char* b32, const BigRational& width,
                              const char* digits, const char* stated_digits) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    CertifiedInterval ci = certify(t, 24, 32);
    double ms = ms_since(t0);
    o.require(ci.hi == big(b24), "upper rational b24");
    o.require(ci.lo == big(b32), "lower rational b32");
    o.require(ci.hi - ci.lo < width, "bracket width");
    std::string report = digits_report(ci);
    o.require(report == digits, "digit report " + report);
    if (stated_digits) o.require(report.rfind(stated_digits, 0) == 0, "stated digits are a prefix of the report");
    o.require(verify_certificate(t, ci.hi_certificate, true) && verify_certificate(t, ci.lo_certificate, false),
              "certificates re-verify");
    o.require(ms < 60000, "runtime < 60 s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "width %.3e, %.0f ms", (ci.hi - ci.lo).to_double(), ms);
    o.notes.push_back(buf);
    o.notes.push_back("digits " + report);
    return o;
}

Outcome criterion3() {
    return certificate_criterion(Transition::Alpha, "-1049417824596806956103568/1284474531463219438945271",
                                 "-140850476140085945702816746162288/172399253286857828660669132569609",
                                 4 * BigRational(10).pow(-40), "-0.817001660127394075579379106922368833240", nullptr);
}

Outcome criterion4() {
    // Full 49-digit common prefix; the shorter 41-digit reference value must be a prefix of it.
    return certificate_criterion(Transition::Beta, "945506314303393205598153/1370433212950874384162254",
                                 "798396920638883099973166531706985228123/1157210312199077596904301690272087447914",
                                 5 * BigRational(10).pow(-50), "0.6899324282045742867004889129507817387052603507745",
                                 "0.68993242820457428670048891295078173870526");
}

// ---- 5 ---------------------------------------------------------------------

Outcome criterion5() {
    Outcome o;
    o.require(certify_side(Transition::Alpha, upper_pattern(3), true).b == q(-888, 1087), "b3");
    o.require(certify_side(Transition::Alpha, lower_pattern(4), false).b == q(-7112, 8705), "b4");
    Certificate c6 = certify_side(Transition::Alpha, upper_pattern(6), true);
    o.require(c6.b == q(-910224, 1114103), "b6");
    o.require(certify_side(Transition::Alpha, lower_pattern(8), false).b == q(-116508784, 142605321), "b8");
    o.require(c6.d == q(7295, 8191), "d6 = 7295/8191");
    std::vector<BigRational> orbit{q(1), q(0), q(7295, 8191), q(7168, 8191), q(8184, 8191), q(56, 8191)};
    o.require(c6.orbit == orbit, "six-point orbit");
    o.notes.push_back("b3 b4 b6 b8 exact; orbit 1, 0, 7295/8191, 7168/8191, 8184/8191, 56/8191");
    return o;
}

// ---- 6 ---------------------------------------------------------------------

Outcome criterion6() {
    Outcome o;
    const RootFamily all[] = {RootFamily::Alpha, RootFamily::Beta, RootFamily::Delta, RootFamily::Gamma,
                              RootFamily::Phi};
    for (const BigRational& eps : {q(1, 10), q(1, 100), q(1, 1000)}) {
        unsigned n = continuity_level_bound(eps);
        // One positive root and P(1+eps) > 0 put the root below 1+eps.
        for (unsigned m : {n, n + 5})
            for (RootFamily f : all)
                o.require(family_polynomial(f, m).sign_at(1 + eps) > 0,
                          family_name(f) + "_" + std::to_string(m) + " < 1+" + eps.short_str());
        o.notes.push_back("eps=" + eps.short_str() + ": n=" + std::to_string(n) +
                          ", all five roots < 1+eps at n and n+5");
    }
    RootInterval r = isolate_unique_positive_root(family_polynomial(RootFamily::Beta, continuity_level_bound(q(1, 10))), 20);
    o.require(r.hi < q(11, 10), "isolated beta_n below 1.1");
    o.require(verify_root_ordering(50), "ordering n <= 50");
    return o;
}

// ---- 7 ---------------------------------------------------------------------

Digraph random_digraph(std::mt19937& rng) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.6)(rng));
    Digraph g;
    g.adj.assign(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        g.labels.push_back("v" + std::to_string(i));
        for (std::size_t k = 0; k < n; ++k) g.adj[i][k] = coin(rng);
    }
    return g;
}

bool rome_matches(const Digraph& g, std::string& why) {
    Rome r = find_rome(g);
    if (!is_rome(g, r)) {
        why = "not a rome";
        return false;
    }
    if (rome_full_char_poly(g, r) != direct_char_poly(g)) {
        why = "full polynomial";
        return false;
    }
    if (r.empty()) return true;
    if (rome_char_poly(g, r) != direct_relevant_factor(g)) {
        why = "relevant factor";
        return false;
    }
    double pi = power_iteration_radius(g);
    RootInterval rad = spectral_radius(g, 15, false);
    if (std::abs(rad.mid().to_double() - pi) >= 1e-9) {
        why = "power iteration";
        return false;
    }
    return true;
}

Outcome criterion7() {
    Outcome o;
    std::size_t count = 0;
    for (unsigned n = 0; n < 3; ++n)
        for (LevelKind k : {LevelKind::S, LevelKind::T, LevelKind::U, LevelKind::V}) {
            LevelClass lc{n, k};
            BigRational b = class_sample(lc);
            PlanarGraph g = build_gamma(Regime::Band48, b);
            bool bounds = k == LevelKind::S || k == LevelKind::U;
            for (CoverMode m : bounds ? std::vector<CoverMode>{CoverMode::Lower, CoverMode::Upper}
                                      : std::vector<CoverMode>{CoverMode::Markov}) {
                CoverDigraph cd = build_cover_digraph(g, band48_partition(b, n), Params::with_b(b), m);
                std::string why;
                o.require(rome_matches(cd.graph, why), to_string(lc) + " " + cover_mode_name(m) + ": " + why);
                ++count;
            }
        }
    Digraph seven;
    seven.adj.assign(7, std::vector<std::uint8_t>(7, 0));
    for (std::size_t i = 0; i < 7; ++i) {
        seven.labels.push_back(std::string(1, "ABCDEGH"[i]));
        seven.adj[i][(i + 1) % 7] = 1;
    }
    std::string why;
    o.require(rome_matches(seven, why), "seven-cycle: " + why);
    o.require(rome_char_poly(seven, find_rome(seven)) == IntPolynomial::from_terms({{7, 1}, {0, -1}}),
              "seven-cycle polynomial");
    std::mt19937 rng(20240601);
    for (int t = 0; t < 100; ++t) {
        Digraph g = random_digraph(rng);
        o.require(rome_matches(g, why), "random digraph " + std::to_string(t) + ": " + why);
    }
    o.notes.push_back(std::to_string(count) + " class digraphs, the seven-cycle, 100 random digraphs");
    return o;
}

// ---- 8 ---------------------------------------------------------------------

Outcome criterion8() {
    Outcome o;
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> den(2, 997);
    auto inside = [&](const BigRational& lo, const BigRational& hi, bool hi_closed) {
        long m = den(rng);
        long k = std::uniform_int_distribution<long>(1, hi_closed ? m : m - 1)(rng);
        return lo + (hi - lo) * q(k, m);
    };
    for (Regime r : {Regime::NegB, Regime::AlphaWindow, Regime::BetaWindow, Regime::Band48}) {
        for (int i = 0; i < 25; ++i) {
            BigRational b = r == Regime::NegB          ? q(-2) - q(std::uniform_int_distribution<long>(0, 4000)(rng), den(rng))
                            : r == Regime::AlphaWindow ? inside(q(-1), q(-3, 4), true)
                            : r == Regime::BetaWindow  ? inside(q(2, 3), q(5, 7), true)
                                                       : inside(q(4), q(8), false);
            PlanarGraph g = build_gamma(r, b);
            o.require(verify_invariance(g, Params::with_b(b)).ok, regime_name(r) + " b=" + b.short_str());
            if (r == Regime::NegB) o.require(detect_plateaus(g).size() == 1, "one plateau at b=" + b.short_str());
        }
    }
    auto ps = detect_plateaus(build_gamma(Regime::NegB, q(-3)));
    o.require(ps.size() == 1 && ps[0] == Segment({q(2), q(0)}, {q(10), q(8)}), "plateau S R2 at b=-3");
    o.notes.push_back("25 random b per regime invariant; NegB has exactly one plateau");
    return o;
}

// ---- 9 ---------------------------------------------------------------------

bool same_formulas(const PiecewiseAffine1D& a, const PiecewiseAffine1D& b) {
    if (a.lo() != b.lo() || a.hi() != b.hi() || a.breaks() != b.breaks() || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.pieces()[i].slope != b.pieces()[i].slope || a.pieces()[i].offset != b.pieces()[i].offset) return false;
    return true;
}

Outcome criterion9() {
    Outcome o;
    for (const BigRational& b : {q(5), q(9, 2), q(31, 4)}) {
        // F3, F1, F2 in turn for -b/2 <= x <= -1/2.
        InducedMap m = restrict_iterate_to_segment(Params::with_b(b), Segment({-b / 2, q(-1)}, {q(-1, 2), q(-1)}), 3);
        o.require(m.map.size() == 1 && m.map.pieces()[0].slope == 4 && m.map.pieces()[0].offset == b - 2,
                  "F^3 on y=-1 at b=" + b.short_str());
    }
    InducedMap f = restrict_iterate_to_segment(Params::with_b(q(-3)), Segment({q(1), q(-3)}, {q(1), q(-1)}), 7);
    PiecewiseAffine1D expect(q(-3), q(-1), {q(-5, 4), q(-9, 8)},
                             {{q(0), q(-3), 'C'}, {q(16), q(17), 'I'}, {q(0), q(-1), 'C'}}, true);
    o.require(same_formulas(f.map, expect), "f(y) on edge A");
    for (const BigRational& b : {q(68994, 100000), q(603, 874), q(563, 816)})
        o.require(same_formulas(build_k1_from_F(b).map, build_k1(b)), "k1 at b=" + b.short_str());
    o.notes.push_back("x -> 4x+b-2, the three-piece f(y), and k1 reproduced exactly");
    return o;
}

// ---- 10 --------------------------------------------------------------------

Outcome criterion10() {
    Outcome o;
    CaptureProfile a = edge_capture_profile(Regime::NegB, q(-3), "A", 10);
    for (std::size_t n = 0; n <= 10; ++n)
        o.require(a.by_depth[n].uncaptured == BigRational(2).pow(1 - 4 * static_cast<long>(n)),
                  "edge A depth " + std::to_string(n));
    MeasureReport rep = full_measure_report(Regime::NegB, q(-3), 10);
    for (std::size_t k = 1; k < rep.uncaptured.size(); ++k)
        o.require(rep.uncaptured[k] < rep.uncaptured[k - 1], "total decreases at depth " + std::to_string(k));
    o.require(rep.uncaptured.back() == 15 * BigRational(2).pow(-40), "total 15*2^-40 at depth 10");
    o.notes.push_back("edge A 2^(1-4n) for n <= 10; total uncaptured " + rep.uncaptured.back().short_str() + " of " +
                      rep.total_length.short_str());
    return o;
}

// ---- 11 --------------------------------------------------------------------

Outcome criterion11() {
    Outcome o;
    o.require(verify_root_ordering(50), "1 < alpha_n < phi_n < delta_n < gamma_n < beta_n, n <= 50");
    o.require(verify_root_monotonicity(50), "all five sequences decrease, n <= 50");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> known_red;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--known-red" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            for (std::string tok; std::getline(ss, tok, ',');) known_red.insert(std::stoi(tok));
        } else {
            std::cerr << "usage: acceptance [--known-red N[,M...]]\n";
            return 2;
        }
    }
    const std::map<int, std::string> documented{{1, kKnownTableDiff}};

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"table of entropies for levels 0-2", criterion1},
        {"first-level roots", criterion2},
        {"alpha bracket (24, 32)", criterion3},
        {"beta bracket (24, 32)", criterion4},
        {"intermediate alpha certificates", criterion5},
        {"continuity as b -> 8", criterion6},
        {"rome polynomials", criterion7},
        {"graph invariance", criterion8},
        {"induced maps", criterion9},
        {"full-measure decay", criterion10},
        {"root orderings", criterion11},
    };

    int passed = 0;
    bool unexpected = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i + 1);
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
            o.signature = "exception";
        }
        char head[160];
        std::snprintf(head, sizeof head, "%s %2d  %s  (%.0f ms)", o.pass ? "PASS" : "FAIL", id, criteria[i].first,
                      ms_since(t0));
        std::cout << head << "\n";
        for (const auto& n : o.notes) std::cout << "        " << n << "\n";
        if (o.pass) {
            ++passed;
            continue;
        }
        auto doc = documented.find(id);
        bool expected = known_red.count(id) && doc != documented.end() && doc->second == o.signature;
        if (known_red.count(id))
            std::cout << "        known red: " << (expected ? "mismatch set as recorded" : "DIFFERENT from the record")
                      << "\n";
        if (!expected) unexpected = true;
    }
    std::cout << passed << "/" << criteria.size() << " criteria pass\n";
    return unexpected ? 1 : 0;
}
