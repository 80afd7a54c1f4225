#include <doctest.h>

#include "pwlent/family.hpp"
#include "pwlent/graphs.hpp"

using namespace pwlent;

namespace {

BigRational q(long n, long d = 1) { return {n, d}; }
Point pt(BigRational x, BigRational y) { return {std::move(x), std::move(y)}; }

}  // namespace

TEST_CASE("apply_F values") {
    CHECK(apply_F(Params::with_b(q(7)), pt(0, 0)) == pt(-1, 7));
    CHECK(apply_F(Params::with_b(q(-3)), pt(3, -1)) == pt(3, -1));
    CHECK(apply_F(Params::with_b(q(-4, 5)), pt(0, q(1, 5))) == pt(q(-6, 5), -1));
    CHECK(iterate_F(Params::with_b(q(-3)), pt(3, -1), 100) == pt(3, -1));
}

TEST_CASE("quadrant maps agree with F off the axes") {
    Params p = Params::with_b(q(5, 3));
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            Point z = pt(q(2 * x + 1, 2), q(2 * y - 1, 3));
            CHECK(quadrant_map(p, quadrant_of(z)).apply(z) == apply_F(p, z));
        }
    CHECK_THROWS_AS(quadrant_map(p, 5), Error);
}

TEST_CASE("quadrant tie-break") {
    CHECK(quadrant_of(pt(1, 1)) == 1);
    CHECK(quadrant_of(pt(0, 0)) == 1);
    CHECK(quadrant_of(pt(-3, -1)) == 3);
    CHECK(quadrant_of(pt(0, -1)) == 3);
    CHECK(quadrant_of(pt(-1, 0)) == 2);
    CHECK(quadrant_of(pt(2, -1)) == 4);
}

TEST_CASE("scale conjugacy") {
    CHECK(scale_conjugate_check(Params::with_b(q(3)), q(1), pt(q(2, 7), -5)));
    CHECK(scale_conjugate_check({-1, 5}, q(2), pt(3, -7)));
    CHECK(scale_conjugate_check({-1, q(-13, 16)}, q(137), pt(1, 1)));
    CHECK_THROWS_AS(scale_conjugate_check({-1, 5}, q(-2), pt(1, 1)), Error);
}

TEST_CASE("charts") {
    Segment steep(pt(1, -3), pt(1, -1)), flat(pt(-5, -1), pt(2, -1)), diag(pt(0, 0), pt(2, 2));
    CHECK(chart_of(steep) == Chart::Y);
    CHECK(chart_of(flat) == Chart::X);
    CHECK(chart_of(diag) == Chart::X);
    CHECK(chart_point(diag, Chart::X, q(1, 2)) == pt(q(1, 2), q(1, 2)));
    CHECK_THROWS_AS(chart_point(steep, Chart::X, q(1)), Error);
}

TEST_CASE("F^3 on y=-1 is x -> 4x+b-2") {
    InducedMap m = restrict_iterate_to_segment(Params::with_b(q(5)), Segment(pt(q(-5, 2), -1), pt(-2, -1)), 3);
    REQUIRE(m.map.size() == 1);
    CHECK(m.map.pieces()[0].slope == 4);
    CHECK(m.map.pieces()[0].offset == 3);
}

TEST_CASE("k = 0 is the identity") {
    InducedMap m = restrict_iterate_to_segment(Params::with_b(q(5)), Segment(pt(-3, -1), pt(-2, -1)), 0);
    REQUIRE(m.map.size() == 1);
    CHECK(m.map.pieces()[0].slope == 1);
    CHECK(m.map.pieces()[0].offset == 0);
}

TEST_CASE("F^7 on edge A at b=-3") {
    InducedMap m = restrict_iterate_to_segment(Params::with_b(q(-3)), Segment(pt(1, -3), pt(1, -1)), 7);
    CHECK(m.chart == Chart::Y);
    const auto& f = m.map;
    REQUIRE(f.size() == 3);
    CHECK(f.breaks() == std::vector<BigRational>{q(-5, 4), q(-9, 8)});
    CHECK(f.pieces()[0] == AffinePiece{q(0), q(-3), 'C'});
    CHECK(f.pieces()[1] == AffinePiece{q(16), q(17), 'I'});
    CHECK(f.pieces()[2] == AffinePiece{q(0), q(-1), 'C'});
    CHECK(f(q(-6, 5)) == q(-11, 5));
}

TEST_CASE("leaving the line is an error unless the piece lands in a sink") {
    Params p = Params::with_b(q(-3));
    Segment g(pt(11, 7), pt(10, 8));
    CHECK_THROWS_AS(restrict_iterate_to_segment(p, g, 7), Error);
    Segment plateau(pt(2, 0), pt(10, 8));
    InducedMap m = restrict_iterate_to_segment(p, g, 7, std::nullopt, {plateau});
    CHECK_FALSE(m.map.continuous());
    bool has_constant = false;
    for (const auto& piece : m.map.pieces()) has_constant = has_constant || piece.constant();
    CHECK(has_constant);
}

TEST_CASE("split at axes") {
    auto parts = split_at_axes(Segment(pt(-2, -1), pt(2, 3)));
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].q == pt(-1, 0));
    CHECK(parts[1].q == pt(0, 1));
}

TEST_CASE("plateau detection") {
    auto negb = detect_plateaus(build_gamma(Regime::NegB, q(-3)));
    REQUIRE(negb.size() == 1);
    CHECK(negb[0] == Segment(pt(2, 0), pt(10, 8)));

    PlanarGraph square;
    square.vertices = {{"a", pt(-3, 1)}, {"b", pt(-1, 1)}, {"c", pt(-1, 3)}, {"d", pt(-3, 3)}};
    square.edges = {{0, 1, "ab"}, {1, 2, "bc"}, {2, 3, "cd"}, {3, 0, "da"}};
    CHECK(detect_plateaus(square).empty());
}

TEST_CASE("plateaus at b=5 match a brute-force collapse search") {
    BigRational b(5);
    Params p = Params::with_b(b);
    PlanarGraph g = build_gamma(Regime::Band48, b);
    auto found = detect_plateaus(g);
    BigRational brute_len = 0, found_len = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        for (const auto& piece : split_at_axes(g.segment(e)))
            if (apply_F(p, piece.p) == apply_F(p, piece.q)) {
                Point d = piece.direction();
                brute_len += d.x.abs() + d.y.abs();
                bool inside = false;
                for (const auto& s : found) inside = inside || (s.contains(piece.p) && s.contains(piece.q));
                CHECK(inside);
            }
    for (const auto& s : found) {
        Point d = s.direction();
        found_len += d.x.abs() + d.y.abs();
        CHECK(apply_F(p, s.p) == apply_F(p, s.q));
    }
    CHECK(brute_len == found_len);
    CHECK_FALSE(found.empty());
}
