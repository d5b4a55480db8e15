#include "doctest.h"

#include "stairkvol/families.hpp"

using namespace stairkvol;

namespace {

RingElement mark_length2(const MarkedSurface& ms, const std::string& label) {
    const auto& path = ms.mark(label);
    REQUIRE(path.size() == 1);
    return ms.surface.edges()[static_cast<std::size_t>(path[0].first)].vec.norm2();
}

void check_stratum(const MarkedSurface& ms) {
    CHECK(ms.surface.genus() == ms.g);
    CHECK(ms.surface.vertex_count() == 1);
    auto cones = ms.surface.cone_data();
    REQUIRE(cones.size() == 1);
    CHECK(cones[0].second == 2 * (2 * ms.g - 1));   // angle 2*pi*(2g-1)
    CHECK(ms.surface.warnings().empty());
}

}  // namespace

TEST_CASE("L family: areas, stratum, marks") {
    for (int g = 2; g <= 6; ++g) {
        for (std::int64_t n = 2; n <= 4; ++n) {
            auto ms = build_L(g, n);
            check_stratum(ms);
            CHECK(ms.surface.area() == RingElement(ms.surface.ring(), g * (n + 1) - 1));
            CHECK(static_cast<int>(ms.surface.polygons().size()) == 2 * g - 1);
            // Every long rectangle contributes the pair (e_i, f_i) with
            // l(e_i) * l(f_i) = n.
            for (int i = 1; i <= g; ++i) {
                auto le2 = mark_length2(ms, "e" + std::to_string(i));
                auto lf2 = mark_length2(ms, "f" + std::to_string(i));
                CHECK(le2 * lf2 == RingElement(ms.surface.ring(), n * n));
                if (i % 2 == 1) CHECK(le2 == RingElement(ms.surface.ring(), 1));
                else CHECK(lf2 == RingElement(ms.surface.ring(), 1));
            }
        }
    }
    CHECK_THROWS_AS(build_L(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_L(2, 1), std::invalid_argument);
}

TEST_CASE("figure examples for L") {
    auto l34 = build_L(3, 4);
    CHECK(l34.surface.area() == RingElement(l34.surface.ring(), 14));
    CHECK(l34.surface.genus() == 3);

    auto l43 = build_L(4, 3);
    CHECK(l43.surface.area() == RingElement(l43.surface.ring(), 15));

    auto l22 = build_L(2, 2);
    CHECK(l22.surface.area() == RingElement(l22.surface.ring(), 5));
    CHECK(l22.surface.genus() == 2);
}

TEST_CASE("L family cylinder decomposition: g horizontal and g vertical") {
    for (int g = 2; g <= 6; ++g) {
        auto ms = build_L(g, 3);
        auto hcyl = cylinders(ms.surface, true);
        auto vcyl = cylinders(ms.surface, false);
        CHECK(static_cast<int>(hcyl.size()) == g);
        CHECK(static_cast<int>(vcyl.size()) == g);
    }
}

TEST_CASE("H family: areas, stratum, rectangle areas") {
    for (int g = 3; g <= 6; ++g) {
        for (std::int64_t n : {2, 4}) {
            auto ms = build_H(g, n);
            check_stratum(ms);
            const auto& ring = ms.surface.ring();
            // Area gn + (g-1) n^{(g-2)/(g-1)}: the core cells contribute
            // x^{g-2} each with x = n^{1/(g-1)}.
            auto expected = RingElement(ring, g * n) +
                            RingElement::monomial(ring, g - 2, g - 1);
            CHECK(ms.surface.area() == expected);
            for (int i = 1; i <= g; ++i) {
                auto le2 = mark_length2(ms, "e" + std::to_string(i));
                auto lf2 = mark_length2(ms, "f" + std::to_string(i));
                CHECK(le2 * lf2 == RingElement(ring, n * n));
            }
        }
    }

    auto h3 = build_H(3, 4);
    CHECK(h3.surface.area() == RingElement(h3.surface.ring(), 16));   // 3n + 2 sqrt(n), n = 4

    // Degenerate g = 2 model: two long rectangles of area n and a unit core.
    auto h2 = build_H(2, 5);
    CHECK(h2.surface.genus() == 2);
    CHECK(h2.surface.area() == RingElement(h2.surface.ring(), 11));
    int long_rects = 0;
    for (auto k : h2.cell_kinds)
        if (k == CellKind::LongRect) ++long_rects;
    CHECK(long_rects == 2);
}

TEST_CASE("M family: areas, stratum") {
    for (int g = 4; g <= 6; ++g) {
        for (std::int64_t n : {2, 9}) {
            auto ms = build_M(g, n);
            check_stratum(ms);
            const auto& ring = ms.surface.ring();
            auto expected = RingElement(ring, g * n + (g - 3)) +
                            RingElement::monomial(ring, 1, 2);   // + 2 sqrt(n)
            CHECK(ms.surface.area() == expected);
            for (int i = 1; i <= g; ++i) {
                auto le2 = mark_length2(ms, "e" + std::to_string(i));
                auto lf2 = mark_length2(ms, "f" + std::to_string(i));
                CHECK(le2 * lf2 == RingElement(ring, n * n));
            }
        }
    }
    // area(M_4^9) = 4*9 + 2*3 + 1 = 43 exactly (sqrt(9) collapses to 3).
    auto m49 = build_M(4, 9);
    CHECK(m49.surface.area() == RingElement(m49.surface.ring(), 43));

    auto m59 = build_M(5, 9);
    CHECK(m59.surface.genus() == 5);

    CHECK_THROWS_AS(build_M(3, 4), std::invalid_argument);
}

TEST_CASE("family dispatch") {
    CHECK(build_family("L", 2, 3).family == "L");
    CHECK(build_family("H", 3, 3).family == "H");
    CHECK(build_family("M", 4, 3).family == "M");
    CHECK_THROWS_AS(build_family("Q", 2, 2), std::invalid_argument);
}
