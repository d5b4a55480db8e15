#include "stairkvol/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stairkvol {

namespace {

// Rectangle edges in counterclockwise order from the bottom-left vertex.
constexpr int kBottom = 0;
constexpr int kRight = 1;
constexpr int kTop = 2;
constexpr int kLeft = 3;

struct Builder {
    RingSpec ring;
    std::vector<Polygon> polys;
    std::vector<CellKind> kinds;
    std::vector<Gluing> gluings;

    int add_rect(const Vec2& anchor, const RingElement& w, const RingElement& h,
                 CellKind kind) {
        Polygon p;
        p.vertices = {anchor,
                      {anchor.x + w, anchor.y},
                      {anchor.x + w, anchor.y + h},
                      {anchor.x, anchor.y + h}};
        polys.push_back(std::move(p));
        kinds.push_back(kind);
        return static_cast<int>(polys.size()) - 1;
    }

    void glue(int pa, int ea, int pb, int eb) { gluings.push_back({{pa, ea}, {pb, eb}}); }

    RingElement width(int p) const { return polys[static_cast<std::size_t>(p)].edge_vec(kBottom).x; }
    RingElement height(int p) const { return polys[static_cast<std::size_t>(p)].edge_vec(kRight).y; }
};

// Resolve one cell edge to its identified edge with a +x / +y orientation sign.
EdgePath oriented_mark(const Surface& s, int poly, int cell_edge, bool want_x) {
    EdgeRef ref{poly, cell_edge};
    int id = s.edge_id(ref);
    const Vec2& v = s.edges()[static_cast<std::size_t>(id)].vec;
    int sgn = want_x ? v.x.sign() : v.y.sign();
    if (sgn == 0) throw std::logic_error("mark edge not aligned with requested axis");
    return {{id, sgn}};
}

MarkedSurface finish(Builder&& b, const std::string& family, int g, std::int64_t n,
                     std::vector<std::tuple<std::string, int, int, bool>> marks) {
    MarkedSurface ms;
    ms.surface = Surface::build(b.ring, std::move(b.polys), std::move(b.gluings));
    ms.family = family;
    ms.g = g;
    ms.n = n;
    ms.cell_kinds = std::move(b.kinds);
    for (auto& [label, poly, edge, want_x] : marks) {
        ms.mark_labels.push_back(label);
        ms.mark_paths.push_back(oriented_mark(ms.surface, poly, edge, want_x));
    }
    return ms;
}

}  // namespace

const EdgePath& MarkedSurface::mark(const std::string& label) const {
    return mark_paths[static_cast<std::size_t>(mark_index(label))];
}

int MarkedSurface::mark_index(const std::string& label) const {
    auto it = std::find(mark_labels.begin(), mark_labels.end(), label);
    if (it == mark_labels.end())
        throw std::invalid_argument("MarkedSurface: unknown mark " + label);
    return static_cast<int>(it - mark_labels.begin());
}

MarkedSurface build_L(int g, std::int64_t n) {
    if (g < 2 || n < 2) throw std::invalid_argument("build_L: need g >= 2 and n >= 2");
    Builder b;
    b.ring = RingSpec(n, 1);
    auto cn = [&](std::int64_t v) { return RingElement(b.ring, v); };
    const RingElement one = cn(1), en = cn(n);

    // Staircase of long rectangles R_1..R_g (vertical for odd i, horizontal
    // for even i) joined by unit corner cells C_1..C_{g-1}. R_1 sits above
    // C_1; even R_i extend right of C_{i-1}, odd R_i (i >= 3) extend below.
    std::vector<int> R(static_cast<std::size_t>(g + 1), -1),
        C(static_cast<std::size_t>(g), -1);
    Vec2 c_anchor{cn(0), cn(0)};
    C[1] = b.add_rect(c_anchor, one, one, CellKind::Core);
    R[1] = b.add_rect({c_anchor.x, c_anchor.y + one}, one, en, CellKind::LongRect);
    for (int i = 2; i <= g; ++i) {
        if (i % 2 == 0) {
            Vec2 ra{c_anchor.x + one, c_anchor.y};
            R[static_cast<std::size_t>(i)] = b.add_rect(ra, en, one, CellKind::LongRect);
            if (i < g) {
                c_anchor = {ra.x + en, ra.y};
                C[static_cast<std::size_t>(i)] = b.add_rect(c_anchor, one, one, CellKind::Core);
            }
        } else {
            Vec2 ra{c_anchor.x, c_anchor.y - en};
            R[static_cast<std::size_t>(i)] = b.add_rect(ra, one, en, CellKind::LongRect);
            if (i < g) {
                c_anchor = {ra.x, ra.y - one};
                C[static_cast<std::size_t>(i)] = b.add_rect(c_anchor, one, one, CellKind::Core);
            }
        }
    }

    // Cell-to-cell contacts.
    b.glue(C[1], kTop, R[1], kBottom);
    for (int i = 2; i <= g; ++i) {
        int r = R[static_cast<std::size_t>(i)];
        int cprev = C[static_cast<std::size_t>(i - 1)];
        int cnext = i < g ? C[static_cast<std::size_t>(i)] : -1;
        if (i % 2 == 0) {
            b.glue(cprev, kRight, r, kLeft);
            if (cnext >= 0) b.glue(r, kRight, cnext, kLeft);
        } else {
            b.glue(cprev, kBottom, r, kTop);
            if (cnext >= 0) b.glue(r, kBottom, cnext, kTop);
        }
    }
    // Column and row closures; every maximal column and row becomes a cylinder.
    b.glue(C[1], kBottom, R[1], kTop);
    for (int i = 3; i <= g; i += 2) {
        if (i < g) b.glue(C[static_cast<std::size_t>(i)], kBottom, C[static_cast<std::size_t>(i - 1)], kTop);
        else b.glue(R[static_cast<std::size_t>(g)], kBottom, C[static_cast<std::size_t>(g - 1)], kTop);
    }
    for (int i = 2; i <= g; i += 2)
        b.glue(R[static_cast<std::size_t>(i)], kTop, R[static_cast<std::size_t>(i)], kBottom);
    for (int i = 1; i <= g; i += 2)
        b.glue(R[static_cast<std::size_t>(i)], kLeft, R[static_cast<std::size_t>(i)], kRight);
    for (int i = 2; i <= g; i += 2) {
        if (i < g) b.glue(C[static_cast<std::size_t>(i - 1)], kLeft, C[static_cast<std::size_t>(i)], kRight);
        else b.glue(C[static_cast<std::size_t>(g - 1)], kLeft, R[static_cast<std::size_t>(g)], kRight);
    }

    // Marks: e_i closes R_i's column, f_i closes R_i's row.
    std::vector<std::tuple<std::string, int, int, bool>> marks;
    for (int i = 1; i <= g; ++i) {
        if (i % 2 == 1) {
            int ce = (i == 1) ? C[1]
                              : (i < g ? C[static_cast<std::size_t>(i)]
                                       : R[static_cast<std::size_t>(g)]);
            marks.emplace_back("e" + std::to_string(i), ce, kBottom, true);
        } else {
            marks.emplace_back("e" + std::to_string(i), R[static_cast<std::size_t>(i)],
                               kBottom, true);
        }
    }
    for (int i = 1; i <= g; ++i) {
        if (i % 2 == 1) {
            marks.emplace_back("f" + std::to_string(i), R[static_cast<std::size_t>(i)],
                               kLeft, false);
        } else {
            int cl = (i < g) ? C[static_cast<std::size_t>(i - 1)]
                             : C[static_cast<std::size_t>(g - 1)];
            marks.emplace_back("f" + std::to_string(i), cl, kLeft, false);
        }
    }
    return finish(std::move(b), "L", g, n, std::move(marks));
}

MarkedSurface build_H(int g, std::int64_t n) {
    if (g < 2 || n < 2) throw std::invalid_argument("build_H: need g >= 2 and n >= 2");
    Builder b;
    b.ring = RingSpec(n, g - 1);
    auto pw = [&](int k) { return RingElement::monomial(b.ring, k); };   // n^{k/(g-1)}

    // Descending staircase: row k holds R_k (w_k x h_k) and C_k (w_{k+1} x
    // h_k), with w_i = n^{(g-i)/(g-1)} and h_j = n^{(j-1)/(g-1)}; every long
    // rectangle has area w_k * h_k = n.
    std::vector<RingElement> w(static_cast<std::size_t>(g + 1), RingElement(b.ring)),
        h(static_cast<std::size_t>(g + 1), RingElement(b.ring));
    for (int i = 1; i <= g; ++i) w[static_cast<std::size_t>(i)] = pw(g - i);
    for (int j = 1; j <= g; ++j) h[static_cast<std::size_t>(j)] = pw(j - 1);

    std::vector<int> R(static_cast<std::size_t>(g + 1), -1), C(static_cast<std::size_t>(g), -1);
    RingElement x = RingElement(b.ring), y = RingElement(b.ring);
    for (int k = 1; k <= g; ++k) {
        y = y - h[static_cast<std::size_t>(k)];
        R[static_cast<std::size_t>(k)] =
            b.add_rect({x, y}, w[static_cast<std::size_t>(k)], h[static_cast<std::size_t>(k)],
                       CellKind::LongRect);
        if (k < g) {
            C[static_cast<std::size_t>(k)] =
                b.add_rect({x + w[static_cast<std::size_t>(k)], y},
                           w[static_cast<std::size_t>(k + 1)], h[static_cast<std::size_t>(k)],
                           CellKind::Core);
        }
        x = x + w[static_cast<std::size_t>(k)];
    }

    for (int k = 1; k < g; ++k) {
        b.glue(R[static_cast<std::size_t>(k)], kRight, C[static_cast<std::size_t>(k)], kLeft);
        b.glue(C[static_cast<std::size_t>(k)], kBottom, R[static_cast<std::size_t>(k + 1)], kTop);
        b.glue(R[static_cast<std::size_t>(k)], kLeft, C[static_cast<std::size_t>(k)], kRight);
        b.glue(C[static_cast<std::size_t>(k)], kTop, R[static_cast<std::size_t>(k + 1)], kBottom);
    }
    b.glue(R[1], kTop, R[1], kBottom);
    b.glue(R[static_cast<std::size_t>(g)], kLeft, R[static_cast<std::size_t>(g)], kRight);

    std::vector<std::tuple<std::string, int, int, bool>> marks;
    for (int i = 1; i <= g; ++i) {
        int cell = (i == 1) ? R[1] : R[static_cast<std::size_t>(i)];
        marks.emplace_back("e" + std::to_string(i), cell, kBottom, true);
    }
    for (int j = 1; j <= g; ++j) {
        marks.emplace_back("f" + std::to_string(j), R[static_cast<std::size_t>(j)], kLeft, false);
    }
    return finish(std::move(b), "H", g, n, std::move(marks));
}

MarkedSurface build_M(int g, std::int64_t n) {
    if (g < 4 || n < 2) throw std::invalid_argument("build_M: need g >= 4 and n >= 2");
    Builder b;
    b.ring = RingSpec(n, 2);
    auto cn = [&](std::int64_t v) { return RingElement(b.ring, v); };
    const RingElement one = cn(1), en = cn(n);
    const RingElement rt = RingElement::monomial(b.ring, 1);   // sqrt(n)

    std::vector<int> R(static_cast<std::size_t>(g + 1), -1), C(static_cast<std::size_t>(g), -1);

    // The last five cells reproduce the genus-3 staircase (R_{g-2}..R_g with
    // cores C_{g-2}, C_{g-1}); the remaining steps grow up-left from it the
    // way the unit steps of the L staircase do.
    R[static_cast<std::size_t>(g - 2)] = b.add_rect({cn(0), cn(0)}, en, one, CellKind::LongRect);
    C[static_cast<std::size_t>(g - 2)] = b.add_rect({en, cn(0)}, rt, one, CellKind::Core);
    R[static_cast<std::size_t>(g - 1)] = b.add_rect({en, -rt}, rt, rt, CellKind::LongRect);
    C[static_cast<std::size_t>(g - 1)] = b.add_rect({en + rt, -rt}, one, rt, CellKind::Core);
    R[static_cast<std::size_t>(g)] = b.add_rect({en + rt, -rt - en}, one, en, CellKind::LongRect);

    // Added steps i = g-3 .. 1 travelling up-left; R_i is vertical when
    // i == g-3 (mod 2), horizontal otherwise.
    Vec2 cursor{cn(0), cn(0)};   // lower-left corner of the row/column being extended
    for (int i = g - 3; i >= 1; --i) {
        bool vertical = ((g - 3 - i) % 2 == 0);
        if (vertical) {
            // C_i to the left of the current row start, R_i above C_i.
            Vec2 ca{cursor.x - one, cursor.y};
            C[static_cast<std::size_t>(i)] = b.add_rect(ca, one, one, CellKind::Core);
            R[static_cast<std::size_t>(i)] =
                b.add_rect({ca.x, ca.y + one}, one, en, CellKind::LongRect);
            cursor = {ca.x, ca.y + one + en};
        } else {
            // C_i on top of the current column, R_i to its left.
            Vec2 ca{cursor.x, cursor.y};
            C[static_cast<std::size_t>(i)] = b.add_rect(ca, one, one, CellKind::Core);
            R[static_cast<std::size_t>(i)] =
                b.add_rect({ca.x - en, ca.y}, en, one, CellKind::LongRect);
            cursor = {ca.x - en, ca.y};
        }
    }

    // Contacts inside the genus-3 block and to the first added core.
    b.glue(R[static_cast<std::size_t>(g - 2)], kRight, C[static_cast<std::size_t>(g - 2)], kLeft);
    b.glue(C[static_cast<std::size_t>(g - 2)], kBottom, R[static_cast<std::size_t>(g - 1)], kTop);
    b.glue(R[static_cast<std::size_t>(g - 1)], kRight, C[static_cast<std::size_t>(g - 1)], kLeft);
    b.glue(C[static_cast<std::size_t>(g - 1)], kBottom, R[static_cast<std::size_t>(g)], kTop);
    b.glue(C[static_cast<std::size_t>(g - 3)], kRight, R[static_cast<std::size_t>(g - 2)], kLeft);
    for (int i = g - 3; i >= 1; --i) {
        bool vertical = ((g - 3 - i) % 2 == 0);
        int r = R[static_cast<std::size_t>(i)], c = C[static_cast<std::size_t>(i)];
        if (vertical) {
            b.glue(r, kBottom, c, kTop);
            if (i >= 2) b.glue(C[static_cast<std::size_t>(i - 1)], kBottom, r, kTop);
        } else {
            b.glue(r, kRight, c, kLeft);
            if (i >= 2) b.glue(C[static_cast<std::size_t>(i - 1)], kRight, r, kLeft);
        }
    }

    // Column closures.
    b.glue(R[static_cast<std::size_t>(g - 2)], kTop, R[static_cast<std::size_t>(g - 2)], kBottom);
    b.glue(C[static_cast<std::size_t>(g - 2)], kTop, R[static_cast<std::size_t>(g - 1)], kBottom);
    b.glue(C[static_cast<std::size_t>(g - 1)], kTop, R[static_cast<std::size_t>(g)], kBottom);
    for (int i = g - 3; i >= 1; --i) {
        bool vertical = ((g - 3 - i) % 2 == 0);
        if (vertical) {
            if (i >= 2)
                b.glue(C[static_cast<std::size_t>(i)], kBottom, C[static_cast<std::size_t>(i - 1)], kTop);
            else
                b.glue(C[1], kBottom, R[1], kTop);
        } else {
            b.glue(R[static_cast<std::size_t>(i)], kTop, R[static_cast<std::size_t>(i)], kBottom);
        }
    }
    // Row closures.
    b.glue(C[static_cast<std::size_t>(g - 3)], kLeft, C[static_cast<std::size_t>(g - 2)], kRight);
    b.glue(R[static_cast<std::size_t>(g - 1)], kLeft, C[static_cast<std::size_t>(g - 1)], kRight);
    b.glue(R[static_cast<std::size_t>(g)], kLeft, R[static_cast<std::size_t>(g)], kRight);
    for (int i = g - 3; i >= 1; --i) {
        bool vertical = ((g - 3 - i) % 2 == 0);
        if (vertical) {
            b.glue(R[static_cast<std::size_t>(i)], kLeft, R[static_cast<std::size_t>(i)], kRight);
        } else {
            if (i >= 2)
                b.glue(C[static_cast<std::size_t>(i - 1)], kLeft, C[static_cast<std::size_t>(i)], kRight);
            else
                b.glue(R[1], kLeft, C[1], kRight);
        }
    }

    // Marks: e_i closes R_i's column, f_i closes R_i's row.
    std::vector<std::tuple<std::string, int, int, bool>> marks;
    for (int i = 1; i <= g; ++i) {
        std::string label = "e" + std::to_string(i);
        if (i >= g - 2) {
            int cell = (i == g - 2) ? R[static_cast<std::size_t>(i)]
                                    : C[static_cast<std::size_t>(i - 1)];
            marks.emplace_back(label, cell, (i == g - 2) ? kBottom : kTop, true);
        } else if ((g - 3 - i) % 2 == 0) {
            int cell = (i >= 2) ? C[static_cast<std::size_t>(i)] : C[1];
            marks.emplace_back(label, cell, kBottom, true);
        } else {
            marks.emplace_back(label, R[static_cast<std::size_t>(i)], kBottom, true);
        }
    }
    for (int j = 1; j <= g; ++j) {
        std::string label = "f" + std::to_string(j);
        if (j == g) {
            marks.emplace_back(label, R[static_cast<std::size_t>(g)], kLeft, false);
        } else if (j == g - 1) {
            marks.emplace_back(label, R[static_cast<std::size_t>(g - 1)], kLeft, false);
        } else if (j == g - 2) {
            marks.emplace_back(label, C[static_cast<std::size_t>(g - 3)], kLeft, false);
        } else if ((g - 3 - j) % 2 == 0) {
            marks.emplace_back(label, R[static_cast<std::size_t>(j)], kLeft, false);
        } else {
            int cell = (j >= 2) ? C[static_cast<std::size_t>(j - 1)] : R[1];
            marks.emplace_back(label, cell, kLeft, false);
        }
    }
    return finish(std::move(b), "M", g, n, std::move(marks));
}

MarkedSurface build_family(const std::string& family, int g, std::int64_t n) {
    if (family == "L") return build_L(g, n);
    if (family == "H") return build_H(g, n);
    if (family == "M") return build_M(g, n);
    throw std::invalid_argument("build_family: family must be L, H or M");
}

std::vector<Cylinder> cylinders(const Surface& s, bool horizontal) {
    const int P = static_cast<int>(s.polygons().size());
    for (int p = 0; p < P; ++p) {
        const auto& poly = s.polygons()[static_cast<std::size_t>(p)];
        if (poly.size() != 4 || poly.edge_vec(kBottom).y.sign() != 0 ||
            poly.edge_vec(kBottom).x.sign() <= 0 || poly.edge_vec(kRight).x.sign() != 0 ||
            poly.edge_vec(kRight).y.sign() <= 0)
            throw std::invalid_argument("cylinders: cells must be standard rectangles");
    }
    std::vector<Cylinder> out;
    std::vector<bool> used(static_cast<std::size_t>(P), false);
    const int exit_edge = horizontal ? kRight : kTop;
    const int floor_edge = horizontal ? kBottom : kLeft;
    for (int p0 = 0; p0 < P; ++p0) {
        if (used[static_cast<std::size_t>(p0)]) continue;
        Cylinder cyl;
        cyl.horizontal = horizontal;
        cyl.circumference = RingElement(s.ring());
        cyl.core_chain.assign(s.edges().size(), Integer(0));
        int p = p0;
        do {
            used[static_cast<std::size_t>(p)] = true;
            cyl.cells.push_back(p);
            const auto& poly = s.polygons()[static_cast<std::size_t>(p)];
            cyl.circumference =
                cyl.circumference + (horizontal ? poly.edge_vec(kBottom).x : poly.edge_vec(kRight).y);
            EdgeRef fl{p, floor_edge};
            // Floor oriented along the core direction: +x for horizontal
            // cylinders; the left edge runs -y in boundary order, so vertical
            // cores take the opposite sign.
            int sgn = s.edge_side_sign(fl) * (horizontal ? 1 : -1);
            cyl.core_chain[static_cast<std::size_t>(s.edge_id(fl))] += sgn;
            p = s.partner(EdgeRef{p, exit_edge}).poly;
        } while (p != p0);
        const auto& poly0 = s.polygons()[static_cast<std::size_t>(p0)];
        cyl.height = horizontal ? poly0.edge_vec(kRight).y : poly0.edge_vec(kBottom).x;
        out.push_back(std::move(cyl));
    }
    return out;
}

}  // namespace stairkvol
