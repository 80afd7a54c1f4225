#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pwlent/piecewise1d.hpp"
#include "pwlent/transition.hpp"

using namespace pwlent;

namespace {

BigRational q(long n, long d = 1) { return {n, d}; }

PiecewiseAffine1D phi(const BigRational& d) { return trapezoid_family(Transition::Alpha).at(d); }

// F^7 on edge A at b=-3 in the y chart.
PiecewiseAffine1D edge_a_map() {
    return PiecewiseAffine1D(q(-3), q(-1), {q(-5, 4), q(-9, 8)},
                             {{q(0), q(-3), 'C'}, {q(16), q(17), 'I'}, {q(0), q(-1), 'C'}}, true);
}

BigRational measure(const std::vector<Interval>& ivs) {
    BigRational s = 0;
    for (const auto& iv : ivs) s += iv.length();
    return s;
}

}  // namespace

TEST_CASE("construction checks") {
    CHECK_THROWS_AS(PiecewiseAffine1D(q(1), q(0), {}, {{q(1), q(0)}}, true), Error);
    CHECK_THROWS_AS(PiecewiseAffine1D(q(0), q(1), {q(1, 2)}, {{q(1), q(0)}}, true), Error);
    CHECK_THROWS_AS(PiecewiseAffine1D(q(0), q(1), {q(1, 2)}, {{q(1), q(0)}, {q(1), q(1)}}, true), Error);
    CHECK_NOTHROW(PiecewiseAffine1D(q(0), q(1), {q(1, 2)}, {{q(1), q(0)}, {q(1), q(1)}}, false));
    CHECK_THROWS_AS(edge_a_map()(q(0)), Error);
}

TEST_CASE("phi orbit of period six") {
    auto orbit = iterate_point(phi(q(7295, 8191)), q(1), 6);
    std::vector<BigRational> expect{q(1), q(0), q(7295, 8191), q(7168, 8191), q(8184, 8191), q(56, 8191), q(1)};
    CHECK(orbit == expect);
    CHECK(itinerary_of(phi(q(7295, 8191)), q(1), 5) == "RLRRRC");
}

TEST_CASE("identity and constant maps") {
    auto id = PiecewiseAffine1D::identity(q(0), q(1));
    CHECK(iterate_point(id, q(1, 3), 4) == std::vector<BigRational>(5, q(1, 3)));
    PiecewiseAffine1D c(q(0), q(1), {}, {{q(0), q(1, 2), 'C'}}, true);
    CHECK(itinerary_of(c, q(1, 5), 3) == "CCCC");
    CHECK(plateau_preimage_measure(c, 1) == 1);
    CHECK(uncaptured_intervals(c, 1).empty());
}

TEST_CASE("edge-A map") {
    auto f = edge_a_map();
    CHECK(f(q(-6, 5)) == q(-11, 5));
    CHECK(measure(uncaptured_intervals(f, 0)) == 2);
    CHECK(plateau_preimage_measure(f, 1) == q(15, 8));
    CHECK(measure(uncaptured_intervals(f, 1)) == q(1, 8));
    CHECK(measure(uncaptured_intervals(f, 2)) == q(1, 128));
    BigRational prev = 3;
    for (std::size_t n = 0; n <= 10; ++n) {
        BigRational u = measure(uncaptured_intervals(f, n));
        CHECK(u == BigRational(2) * BigRational(2).pow(-4 * static_cast<long>(n)));
        CHECK(u < prev);
        prev = u;
    }
}

TEST_CASE("compose matches iteration at random points") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> den(1, 100000);
    for (const BigRational& d : {q(7295, 8191), q(57, 64), q(1, 17)}) {
        auto m = phi(d);
        auto mm = compose(m, m);
        for (int i = 0; i < 1000; ++i) {
            long dn = den(rng);
            BigRational x = q(std::uniform_int_distribution<long>(0, dn)(rng), dn);
            CHECK(mm(x) == iterate_point(m, x, 2).back());
        }
    }
}

TEST_CASE("closing windows") {
    AffineFamily1D fam = trapezoid_family(Transition::Alpha);
    auto w3 = closing_window(fam, "RLC", q(1));
    REQUIRE(w3);
    CHECK(w3->lo == q(1, 17));
    CHECK(w3->hi == q(7, 8));
    auto w4 = closing_window(fam, "RLRC", q(1));
    REQUIRE(w4);
    CHECK(w4->lo == q(57, 64));
    CHECK(w4->hi == 1);
    auto w8 = closing_window(fam, "RLRRRLRC", q(1));
    REQUIRE(w8);
    CHECK(w8->lo == q(933761, 1048449));
    CHECK_FALSE(closing_window(fam, "LLLC", q(1)));
    CHECK(itinerary_of(phi(q(57, 64)), q(1), 3) == "RLRC");
}

TEST_CASE("closing windows re-checked by iteration") {
    AffineFamily1D fam = trapezoid_family(Transition::Alpha);
    for (const Itinerary& pat : {Itinerary("RLC"), Itinerary("RLRC"), Itinerary("RLRRRLRC"), Itinerary("RLRRRLRLRLRRRLRC")}) {
        auto w = closing_window(fam, pat, q(1));
        REQUIRE(w);
        // Inside the window the itinerary is exact. At its ends some orbit point sits on a
        // breakpoint, so only membership in the closed piece is required there.
        BigRational mid = (w->lo + w->hi) / 2;
        std::vector<BigRational> ds{w->lo, mid};
        // d = 1 empties the increasing branch.
        if (w->hi < 1) ds.push_back(w->hi);
        for (const BigRational& d : ds) {
            CAPTURE(pat);
            CAPTURE(d.short_str());
            auto m = fam.at(d);
            auto orbit = iterate_point(m, q(1), pat.size());
            CHECK(orbit.back() == 1);
            if (d == mid) CHECK(itinerary_of(m, q(1), pat.size() - 1) == pat);
            for (std::size_t i = 0; i < pat.size(); ++i) {
                bool in_piece = false;
                for (std::size_t k = 0; k < m.size(); ++k)
                    in_piece |= m.pieces()[k].name == pat[i] && m.piece_lo(k) <= orbit[i] && orbit[i] <= m.piece_hi(k);
                CHECK(in_piece);
            }
        }
    }
}

TEST_CASE("closing value is affine in d") {
    AffineFamily1D fam = trapezoid_family(Transition::Alpha);
    Itinerary pat = "RLRRRL";
    ParamAffine end = pattern_endpoint(fam, pat, q(1));
    for (const BigRational& d : {q(7295, 8191), q(8, 9), q(9, 10)}) {
        auto m = fam.at(d);
        if (itinerary_of(m, q(1), pat.size() - 1) != pat) continue;
        CHECK(iterate_point(m, q(1), pat.size()).back() == end.at(d));
    }
}

TEST_CASE("markov radius from periodic orbits") {
    auto m8 = phi(q(933761, 1048449));
    auto o8 = iterate_point(m8, q(1), 8);
    o8.pop_back();
    RootInterval r8 = markov_radius_from_orbit(m8, o8, 20);
    CHECK(r8.exact());
    CHECK(r8.lo == 1);

    auto m6 = phi(q(7295, 8191));
    auto o6 = iterate_point(m6, q(1), 6);
    o6.pop_back();
    RootInterval r6 = markov_radius_from_orbit(m6, o6, 20);
    CHECK(r6.lo.pow(6) > 2);
}

TEST_CASE("markov radius for a three-cycle through the plateau value") {
    // 0 -> 1/2 -> 1 -> 0; [0,1/2] covers [1/2,1] and [1/2,1] covers both.
    PiecewiseAffine1D m(q(0), q(1), {q(1, 2), q(3, 4)}, {{q(1), q(1, 2), 'L'}, {q(0), q(1), 'C'}, {q(-4), q(4), 'R'}},
                        true);
    auto orbit = iterate_point(m, q(0), 3);
    REQUIRE(orbit == std::vector<BigRational>{q(0), q(1, 2), q(1), q(0)});
    orbit.pop_back();
    RootInterval r = markov_radius_from_orbit(m, orbit, 20);

    const double t[2][2] = {{0, 1}, {1, 1}};
    double v[2] = {1, 1}, rho = 0;
    for (int it = 0; it < 2000; ++it) {
        double w[2] = {t[0][0] * v[0] + t[0][1] * v[1], t[1][0] * v[0] + t[1][1] * v[1]};
        rho = std::max(w[0], w[1]);
        v[0] = w[0] / rho;
        v[1] = w[1] / rho;
    }
    CHECK(std::abs(r.mid().to_double() - rho) < 1e-9);
    CHECK(std::abs(rho - (1 + std::sqrt(5.0)) / 2) < 1e-12);
}
