#include "doctest.h"

#include "stairkvol/surface.hpp"

using namespace stairkvol;

namespace {

Polygon rect(const RingSpec& ring, std::int64_t x0, std::int64_t y0, std::int64_t x1,
             std::int64_t y1) {
    auto c = [&](std::int64_t v) { return RingElement(ring, v); };
    Polygon p;
    p.vertices = {{c(x0), c(y0)}, {c(x1), c(y0)}, {c(x1), c(y1)}, {c(x0), c(y1)}};
    return p;
}

Surface unit_torus() {
    RingSpec ring(2, 1);
    std::vector<Polygon> polys{rect(ring, 0, 0, 1, 1)};
    std::vector<Gluing> gluings{{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}};
    return Surface::build(ring, std::move(polys), std::move(gluings));
}

}  // namespace

TEST_CASE("flat torus") {
    Surface t = unit_torus();
    CHECK(t.genus() == 1);
    CHECK(t.vertex_count() == 1);
    CHECK(t.cone_data().empty());
    CHECK(t.area() == RingElement(t.ring(), 1));
    // A vertex of angle exactly 2*pi is tolerated with a warning.
    REQUIRE(t.warnings().size() == 1);
    CHECK(t.warnings()[0].code == Diagnostic::Code::MarkedPoint);
}

TEST_CASE("validation diagnostics") {
    RingSpec ring(2, 1);

    SUBCASE("mismatched edge lengths") {
        std::vector<Polygon> polys{rect(ring, 0, 0, 1, 1), rect(ring, 1, 0, 3, 1)};
        std::vector<Gluing> gluings{{{0, 0}, {1, 2}},   // length 1 against length 2
                                    {{0, 2}, {1, 0}},
                                    {{0, 1}, {0, 3}},
                                    {{1, 1}, {1, 3}}};
        auto diags = Surface::validate(ring, polys, gluings);
        REQUIRE(!diags.empty());
        CHECK(diags[0].code == Diagnostic::Code::EdgeVectorMismatch);
    }

    SUBCASE("dangling edge") {
        std::vector<Polygon> polys{rect(ring, 0, 0, 1, 1)};
        std::vector<Gluing> gluings{{{0, 0}, {0, 2}}};
        auto diags = Surface::validate(ring, polys, gluings);
        REQUIRE(!diags.empty());
        CHECK(diags[0].code == Diagnostic::Code::UnpairedEdge);
        CHECK_THROWS_AS(Surface::build(ring, polys, gluings), ValidationError);
    }

    SUBCASE("clockwise cell") {
        Polygon p = rect(ring, 0, 0, 1, 1);
        std::reverse(p.vertices.begin(), p.vertices.end());
        auto diags = Surface::validate(ring, {p}, {});
        REQUIRE(!diags.empty());
        CHECK(diags[0].code == Diagnostic::Code::BadOrientation);
    }

    SUBCASE("disconnected complex") {
        std::vector<Polygon> polys{rect(ring, 0, 0, 1, 1), rect(ring, 5, 5, 6, 6)};
        std::vector<Gluing> gluings{{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}},
                                    {{1, 0}, {1, 2}}, {{1, 1}, {1, 3}}};
        auto diags = Surface::validate(ring, polys, gluings);
        REQUIRE(!diags.empty());
        CHECK(diags[0].code == Diagnostic::Code::NotConnected);
    }

    SUBCASE("non-convex cell") {
        Polygon p;
        auto c = [&](std::int64_t v) { return RingElement(ring, v); };
        p.vertices = {{c(0), c(0)}, {c(2), c(0)}, {c(1), c(1)}, {c(2), c(2)}, {c(0), c(2)}};
        auto diags = Surface::validate(ring, {p}, {});
        REQUIRE(!diags.empty());
        CHECK(diags[0].code == Diagnostic::Code::NonConvexCell);
    }
}

TEST_CASE("five-square staircase has genus 2 and cone angle 6 pi") {
    // L-shaped union of a 1x(n+1) column and an (n+1)x1 row, n = 2, split
    // into three rectangles.
    RingSpec ring(2, 1);
    std::vector<Polygon> polys{
        rect(ring, 0, 0, 1, 1),    // corner square
        rect(ring, 0, 1, 1, 3),    // vertical long rectangle
        rect(ring, 1, 0, 3, 1),    // horizontal long rectangle
    };
    std::vector<Gluing> gluings{
        {{0, 2}, {1, 0}}, {{0, 1}, {2, 3}},   // interior contacts
        {{0, 0}, {1, 2}},                     // column closure
        {{2, 0}, {2, 2}},                     // horizontal rectangle is a cylinder
        {{1, 3}, {1, 1}},                     // vertical rectangle is a cylinder
        {{0, 3}, {2, 1}},                     // row closure
    };
    Surface s = Surface::build(ring, std::move(polys), std::move(gluings));
    CHECK(s.genus() == 2);
    CHECK(s.area() == RingElement(ring, 5));
    auto cones = s.cone_data();
    REQUIRE(cones.size() == 1);
    CHECK(cones[0].second == 6);   // angle 6*pi
    CHECK(s.vertex_count() == 1);
}

TEST_CASE("area is invariant under re-triangulation") {
    RingSpec ring(2, 1);
    // Torus glued from two triangles (unit square cut along the diagonal).
    auto c = [&](std::int64_t v) { return RingElement(ring, v); };
    Polygon lower, upper;
    lower.vertices = {{c(0), c(0)}, {c(1), c(0)}, {c(1), c(1)}};
    upper.vertices = {{c(0), c(0)}, {c(1), c(1)}, {c(0), c(1)}};
    std::vector<Gluing> gluings{
        {{0, 2}, {1, 0}},   // diagonal
        {{0, 0}, {1, 1}},   // bottom to top
        {{0, 1}, {1, 2}},   // right to left
    };
    Surface s = Surface::build(ring, {lower, upper}, std::move(gluings));
    CHECK(s.genus() == 1);
    CHECK(s.area() == unit_torus().area());
    CHECK(s.area_twice() == RingElement(ring, 2));
}
