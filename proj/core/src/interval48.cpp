#include "pwlent/interval48.hpp"

#include <cmath>

#include "pwlent/graphs.hpp"

namespace pwlent {

namespace {

BigRational four_pow(unsigned k) { return BigRational(4).pow(static_cast<long>(k)); }

char kind_char(LevelKind k) { return "STUV"[static_cast<int>(k)]; }

IntPolynomial positive_leading(IntPolynomial p) { return p.leading() < 0 ? -p : p; }

}  // namespace

std::string to_string(const LevelClass& lc) { return std::string(1, kind_char(lc.kind)) + std::to_string(lc.n); }

Breakpoints breakpoints(unsigned n) {
    BigRational Q = four_pow(n + 1);
    return {
        4 * (4 * Q - 1) / (2 * Q + 1),
        (8 * Q + 1) / (Q + 2),
        (16 * Q - 1) / (2 * Q + 4),
        2 * (16 * Q - 1) / (4 * Q + 11),
    };
}

BigRational level_left_end(unsigned n) { return n == 0 ? BigRational(4) : breakpoints(n - 1).p; }

LevelClass classify(const BigRational& b) {
    if (b <= 4 || b >= 8) throw Error("classification needs 4 < b < 8, got " + b.short_str());
    for (unsigned n = 0;; ++n) {
        Breakpoints bp = breakpoints(n);
        if (b > bp.p) continue;
        if (b < bp.s) return {n, LevelKind::S};
        if (b <= bp.r) return {n, LevelKind::T};
        if (b < bp.q) return {n, LevelKind::U};
        return {n, LevelKind::V};
    }
}

ClassRange class_range(const LevelClass& lc) {
    Breakpoints bp = breakpoints(lc.n);
    switch (lc.kind) {
        case LevelKind::S: return {level_left_end(lc.n), bp.s, false, false};
        case LevelKind::T: return {bp.s, bp.r, true, true};
        case LevelKind::U: return {bp.r, bp.q, false, false};
        case LevelKind::V: return {bp.q, bp.p, true, true};
    }
    throw Error("unknown level kind");
}

BigRational class_sample(const LevelClass& lc) {
    ClassRange r = class_range(lc);
    return (r.lo + r.hi) / 2;
}

std::string family_name(RootFamily f) {
    switch (f) {
        case RootFamily::Alpha: return "alpha";
        case RootFamily::Beta: return "beta";
        case RootFamily::Delta: return "delta";
        case RootFamily::Gamma: return "gamma";
        case RootFamily::Phi: return "phi";
    }
    throw Error("unknown root family");
}

IntPolynomial family_polynomial(RootFamily f, unsigned n) {
    const unsigned k = 3 * n;
    switch (f) {
        case RootFamily::Alpha: return IntPolynomial::from_terms({{7 + k, 1}, {4 + k, -1}, {0, -1}});
        case RootFamily::Beta: return IntPolynomial::from_terms({{7 + k, 1}, {4 + k, -1}, {3, -1}, {0, -2}});
        case RootFamily::Delta: return IntPolynomial::from_terms({{7 + k, 1}, {4 + k, -1}, {0, -2}});
        case RootFamily::Gamma: return IntPolynomial::from_terms({{10 + k, 1}, {7 + k, -1}, {3, -2}, {0, -1}});
        case RootFamily::Phi: return IntPolynomial::from_terms({{10 + k, 1}, {7 + k, -1}, {3, -1}, {0, -1}});
    }
    throw Error("unknown root family");
}

std::vector<RootFamily> level_families(const LevelClass& lc) {
    switch (lc.kind) {
        case LevelKind::S: return {RootFamily::Alpha, RootFamily::Beta};
        case LevelKind::T: return {RootFamily::Delta};
        case LevelKind::U: return {RootFamily::Alpha, RootFamily::Gamma};
        case LevelKind::V: return {RootFamily::Phi};
    }
    throw Error("unknown level kind");
}

std::vector<IntPolynomial> level_polynomials(const LevelClass& lc) {
    std::vector<IntPolynomial> out;
    for (RootFamily f : level_families(lc)) out.push_back(family_polynomial(f, lc.n));
    return out;
}

EntropyResult entropy_for_class(const LevelClass& lc, unsigned digits) {
    auto fams = level_families(lc);
    RootFamily lo_f = fams.front(), hi_f = fams.back();
    RootInterval lo_root = isolate_unique_positive_root(family_polynomial(lo_f, lc.n), digits + 4);
    RootInterval hi_root = fams.size() == 1 ? lo_root : isolate_unique_positive_root(family_polynomial(hi_f, lc.n), digits + 4);
    unsigned bits = static_cast<unsigned>(3.33 * digits) + 96;
    EntropyResult res{lc, fams.size() == 1, lo_f, hi_f, lo_root, hi_root,
                      log_enclosure(lo_root, bits), log_enclosure(hi_root, bits),
                      certified_log_decimal(lo_root, digits), ""};
    res.hi_text = res.exact ? res.lo_text : certified_log_decimal(hi_root, digits);
    return res;
}

EntropyResult entropy_or_bounds(const BigRational& b, unsigned digits) { return entropy_for_class(classify(b), digits); }

CrossCheck cross_validate(const BigRational& b) {
    LevelClass lc = classify(b);
    Params params = Params::with_b(b);
    PlanarGraph g = build_gamma(Regime::Band48, b);
    auto partition = band48_partition(b, lc.n);

    CrossCheck cc{lc, {}, level_polynomials(lc), {}, true};
    auto relevant = [](const CoverDigraph& cd) {
        return positive_leading(rome_char_poly(cd.graph, find_rome(cd.graph)));
    };
    auto lower = build_cover_digraph(g, partition, params, CoverMode::Lower);
    auto upper = build_cover_digraph(g, partition, params, CoverMode::Upper);
    if (lc.kind == LevelKind::T || lc.kind == LevelKind::V) {
        auto markov = build_cover_digraph(g, partition, params, CoverMode::Markov);
        cc.from_graph.push_back(relevant(markov));
        cc.node_counts.push_back(markov.nodes.size());
        if (lower.graph.adj != upper.graph.adj || markov.graph.adj != lower.graph.adj) cc.agree = false;
    } else {
        cc.from_graph.push_back(relevant(lower));
        cc.from_graph.push_back(relevant(upper));
        cc.node_counts.push_back(lower.nodes.size());
        cc.node_counts.push_back(upper.nodes.size());
    }
    if (cc.from_graph != cc.closed_form) cc.agree = false;
    return cc;
}

BigRational x_orbit_point(const BigRational& b, unsigned n) {
    return ((b - 8) * four_pow(n + 1) + 2 - b) / 3;
}

bool verify_root_ordering(unsigned n_max) {
    const RootFamily order[] = {RootFamily::Alpha, RootFamily::Phi, RootFamily::Delta, RootFamily::Gamma,
                                RootFamily::Beta};
    for (unsigned n = 0; n <= n_max; ++n) {
        bool separated = false;
        for (unsigned digits = 8; digits <= 64 && !separated; digits *= 2) {
            std::vector<RootInterval> roots;
            for (RootFamily f : order) roots.push_back(isolate_unique_positive_root(family_polynomial(f, n), digits));
            separated = roots.front().lo > 1;
            for (std::size_t i = 0; i + 1 < roots.size(); ++i) separated = separated && roots[i].hi < roots[i + 1].lo;
        }
        if (!separated) return false;
    }
    return true;
}

bool verify_root_monotonicity(unsigned n_max) {
    for (RootFamily f : {RootFamily::Alpha, RootFamily::Beta, RootFamily::Delta, RootFamily::Gamma, RootFamily::Phi}) {
        for (unsigned n = 0; n < n_max; ++n) {
            // P_{f,n+1} is negative below its root and positive above it.
            RootInterval r = isolate_unique_positive_root(family_polynomial(f, n), 12);
            if (family_polynomial(f, n + 1).sign_at(r.lo) <= 0) return false;
        }
    }
    return true;
}

BigRational g_function(RootFamily f, const BigRational& lambda) {
    if (lambda <= 1) throw Error("g functions are defined for λ > 1");
    BigRational l3 = lambda.pow(3), l4 = lambda.pow(4), l7 = lambda.pow(7);
    switch (f) {
        case RootFamily::Alpha: return BigRational(1) / (l4 * (l3 - 1));
        case RootFamily::Beta: return (l3 + 2) / (l4 * (l3 - 1));
        case RootFamily::Delta: return BigRational(2) / (l4 * (l3 - 1));
        case RootFamily::Gamma: return (2 * l3 + 1) / (l7 * (l3 - 1));
        case RootFamily::Phi: return (l3 + 1) / (l7 * (l3 - 1));
    }
    throw Error("unknown root family");
}

unsigned continuity_level_bound(const BigRational& eps) {
    if (eps.sign() <= 0) throw Error("epsilon must be positive");
    BigRational lambda = 1 + eps;
    BigRational g = g_function(RootFamily::Beta, lambda);
    BigRational l3 = lambda.pow(3);
    // Floating-point guess, then exact correction in both directions.
    double guess = std::log(g.to_double()) / (3.0 * std::log(lambda.to_double()));
    long n = std::isfinite(guess) ? std::max(0L, static_cast<long>(std::floor(guess))) : 0L;
    BigRational lhs = l3.pow(n);
    while (lhs <= g) {
        lhs *= l3;
        ++n;
    }
    while (n > 0 && lhs / l3 > g) {
        lhs /= l3;
        --n;
    }
    return static_cast<unsigned>(n);
}

std::vector<Table1Row> table1(unsigned levels, unsigned digits) {
    std::vector<Table1Row> rows;
    for (unsigned n = 0; n < levels; ++n)
        for (LevelKind k : {LevelKind::S, LevelKind::T, LevelKind::U, LevelKind::V}) {
            LevelClass lc{n, k};
            rows.push_back({lc, class_range(lc), entropy_for_class(lc, digits)});
        }
    return rows;
}

}  // namespace pwlent
