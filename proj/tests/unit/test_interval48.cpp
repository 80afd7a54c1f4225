#include <doctest.h>

#include <cmath>
#include <random>

#include "pwlent/interval48.hpp"

using namespace pwlent;

namespace {

BigRational q(long n, long d = 1) { return {n, d}; }

IntPolynomial P(std::initializer_list<std::pair<unsigned, long>> t) { return IntPolynomial::from_terms(t); }

bool encloses(const RootInterval& r, const char* approx, unsigned places) {
    BigRational v = BigRational::parse(approx), half = BigRational(1, 2) * BigRational(10).pow(-static_cast<long>(places));
    return r.lo <= v + half && v - half <= r.hi;
}

}  // namespace

TEST_CASE("breakpoints of the first levels") {
    Breakpoints b0 = breakpoints(0);
    CHECK(b0.p == q(20, 3));
    CHECK(b0.q == q(11, 2));
    CHECK(b0.r == q(21, 4));
    CHECK(b0.s == q(14, 3));
    Breakpoints b1 = breakpoints(1);
    CHECK(b1.p == q(84, 11));
    CHECK(b1.s == q(34, 5));
    CHECK(b1.r == q(85, 12));
    CHECK(b1.q == q(43, 6));
    Breakpoints b2 = breakpoints(2);
    CHECK(b2.s == q(682, 89));
    CHECK(b2.r == q(31, 4));
    CHECK(b2.q == q(171, 22));
    CHECK(b2.p == q(340, 43));
    CHECK(level_left_end(0) == 4);
    CHECK(level_left_end(1) == q(20, 3));
}

TEST_CASE("breakpoints are ordered for n <= 50") {
    for (unsigned n = 0; n <= 50; ++n) {
        Breakpoints b = breakpoints(n);
        CHECK(level_left_end(n) < b.s);
        CHECK(b.s < b.r);
        CHECK(b.r < b.q);
        CHECK(b.q < b.p);
        CHECK(b.p < 8);
    }
}

TEST_CASE("classification respects open and closed ends") {
    CHECK(classify(q(5)) == LevelClass{0, LevelKind::T});
    CHECK(classify(q(6)) == LevelClass{0, LevelKind::V});
    CHECK(classify(q(9, 2)) == LevelClass{0, LevelKind::S});
    CHECK(classify(q(14, 3)) == LevelClass{0, LevelKind::T});
    CHECK(classify(q(21, 4)) == LevelClass{0, LevelKind::T});
    CHECK(classify(q(11, 2)) == LevelClass{0, LevelKind::V});
    CHECK(classify(q(20, 3)) == LevelClass{0, LevelKind::V});
    CHECK(classify(q(43, 6)) == LevelClass{1, LevelKind::V});
    CHECK(classify(q(31, 4)) == LevelClass{2, LevelKind::T});
    CHECK(to_string(LevelClass{12, LevelKind::S}) == "S12");
    CHECK_THROWS_AS(classify(q(4)), Error);
    CHECK_THROWS_AS(classify(q(8)), Error);
}

TEST_CASE("class polynomials") {
    CHECK(level_polynomials({0, LevelKind::T}) == std::vector<IntPolynomial>{P({{7, 1}, {4, -1}, {0, -2}})});
    CHECK(level_polynomials({0, LevelKind::V}) == std::vector<IntPolynomial>{P({{10, 1}, {7, -1}, {3, -1}, {0, -1}})});
    CHECK(level_polynomials({1, LevelKind::S}) ==
          std::vector<IntPolynomial>{P({{10, 1}, {7, -1}, {0, -1}}), P({{10, 1}, {7, -1}, {3, -1}, {0, -2}})});
    CHECK(level_polynomials({0, LevelKind::U}) ==
          std::vector<IntPolynomial>{P({{7, 1}, {4, -1}, {0, -1}}), P({{10, 1}, {7, -1}, {3, -2}, {0, -1}})});
}

TEST_CASE("first-level roots") {
    const std::pair<RootFamily, const char*> roots[] = {{RootFamily::Alpha, "1.15855"},
                                                        {RootFamily::Beta, "1.33493"},
                                                        {RootFamily::Delta, "1.23175"},
                                                        {RootFamily::Gamma, "1.25898"},
                                                        {RootFamily::Phi, "1.20443"}};
    for (auto [f, v] : roots) {
        CAPTURE(family_name(f));
        RootInterval r = isolate_unique_positive_root(family_polynomial(f, 0), 5);
        CHECK(r.width() < q(1, 100000));
        CHECK(encloses(r, v, 5));
    }
}

TEST_CASE("entropy values and bounds") {
    EntropyResult t0 = entropy_or_bounds(q(5), 5);
    CHECK(t0.exact);
    CHECK(t0.lo_text == "0.20844");
    CHECK(t0.hi_text == "0.20844");

    EntropyResult v1 = entropy_or_bounds(q(43, 6), 5);
    CHECK(v1.exact);
    CHECK(v1.lo_text == "0.15051");

    EntropyResult s0 = entropy_or_bounds(q(9, 2), 5);
    CHECK_FALSE(s0.exact);
    CHECK(s0.lo_text == "0.14717");
    CHECK(s0.hi_text == "0.28888");
    CHECK(s0.lo.hi < s0.hi.lo);
}

TEST_CASE("certified table, frozen") {
    struct Row {
        const char* cls;
        const char* lo;
        const char* hi;
    };
    // Certified roundings of the logarithms of the exact roots.
    const Row expect[] = {{"S0", "0.14717", "0.28888"}, {"T0", "0.20844", "0.20844"}, {"U0", "0.14717", "0.23030"},
                          {"V0", "0.18600", "0.18600"}, {"S1", "0.11978", "0.21132"}, {"T1", "0.16389", "0.16389"},
                          {"U1", "0.11978", "0.18154"}, {"V1", "0.15051", "0.15051"}, {"S2", "0.10234", "0.17040"},
                          {"T2", "0.13699", "0.13699"}, {"U2", "0.10234", "0.15184"}, {"V2", "0.12792", "0.12792"}};
    auto rows = table1();
    REQUIRE(rows.size() == 12);
    for (std::size_t i = 0; i < 12; ++i) {
        CAPTURE(expect[i].cls);
        CHECK(to_string(rows[i].cls) == expect[i].cls);
        CHECK(rows[i].entropy.lo_text == expect[i].lo);
        CHECK(rows[i].entropy.hi_text == expect[i].hi);
    }
    CHECK(rows[0].range.lo == 4);
    CHECK_FALSE(rows[0].range.lo_closed);
    CHECK(rows[11].range.hi == q(340, 43));
    CHECK(rows[11].range.hi_closed);
}

TEST_CASE("x orbit closed form") {
    BigRational b(57, 10);
    CHECK(x_orbit_point(b, 0) == b - 10);
    BigRational x = b - 10;
    for (unsigned n = 0; n < 12; ++n) {
        CHECK(x_orbit_point(b, n) == x);
        x = 4 * x + b - 2;
    }
    for (unsigned n = 0; n < 6; ++n) CHECK(x_orbit_point(q(8), n) == -2);
    CHECK(x_orbit_point(q(20, 3), 0) == q(-10, 3));
}

TEST_CASE("class changes land on the marked abscissae") {
    for (unsigned n = 0; n <= 3; ++n) {
        Breakpoints bp = breakpoints(n);
        CHECK(x_orbit_point(bp.p, n) == -bp.p / 2);
        CHECK(x_orbit_point(bp.q, n) == 1 - bp.q);
        CHECK(x_orbit_point(bp.r, n) == (1 - 2 * bp.r) / 2);
        CHECK(x_orbit_point(bp.s, n) == (2 - 5 * bp.s) / 4);
    }
}

TEST_CASE("root orderings") {
    CHECK(verify_root_ordering(0));
    CHECK(verify_root_ordering(2));
    CHECK(verify_root_ordering(50));
    CHECK(verify_root_monotonicity(50));
}

TEST_CASE("g-function ordering") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> den(2, 500);
    for (int i = 0; i < 100; ++i) {
        long d = den(rng);
        BigRational lambda = 1 + q(std::uniform_int_distribution<long>(1, 3 * d)(rng), d);
        CAPTURE(lambda.short_str());
        BigRational a = g_function(RootFamily::Alpha, lambda), f = g_function(RootFamily::Phi, lambda),
                    de = g_function(RootFamily::Delta, lambda), ga = g_function(RootFamily::Gamma, lambda),
                    be = g_function(RootFamily::Beta, lambda);
        CHECK(a < f);
        CHECK(f < de);
        CHECK(de < ga);
        CHECK(ga < be);
    }
}

TEST_CASE("continuity bound near b=8") {
    CHECK(g_function(RootFamily::Beta, q(2)) == q(5, 56));
    CHECK(continuity_level_bound(q(1)) == 0);
    CHECK_THROWS_AS(continuity_level_bound(q(0)), Error);

    double g = (std::pow(1.1, 3) + 2) / (std::pow(1.1, 4) * (std::pow(1.1, 3) - 1));
    unsigned guess = static_cast<unsigned>(std::floor(std::log(g) / (3 * std::log(1.1)))) + 1;
    CHECK(continuity_level_bound(q(1, 10)) == guess);

    // One positive root and a positive leading coefficient: P(1+eps) > 0 puts the root below 1+eps.
    for (const BigRational& eps : {q(1, 10), q(1, 100), q(1, 1000)}) {
        unsigned n = continuity_level_bound(eps);
        for (unsigned m : {n, n + 5})
            for (RootFamily f : {RootFamily::Alpha, RootFamily::Beta, RootFamily::Delta, RootFamily::Gamma, RootFamily::Phi})
                CHECK(family_polynomial(f, m).sign_at(1 + eps) > 0);
        if (n > 0) CHECK(family_polynomial(RootFamily::Beta, n - 1).sign_at(1 + eps) <= 0);
    }
    RootInterval r = isolate_unique_positive_root(family_polynomial(RootFamily::Beta, continuity_level_bound(q(1, 10))), 12);
    CHECK(r.hi < q(11, 10));
}

TEST_CASE("digraphs from the graph agree with the closed forms") {
    for (unsigned n = 0; n < 3; ++n)
        for (LevelKind k : {LevelKind::S, LevelKind::T, LevelKind::U, LevelKind::V}) {
            LevelClass lc{n, k};
            CAPTURE(to_string(lc));
            CrossCheck cc = cross_validate(class_sample(lc));
            CHECK(cc.agree);
            CHECK(cc.node_counts.front() == 10 + 3 * n);
        }
}
