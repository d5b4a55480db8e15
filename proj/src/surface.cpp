#include "stairkvol/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace stairkvol {

namespace {

const char* code_name(Diagnostic::Code c) {
    switch (c) {
        case Diagnostic::Code::EdgeVectorMismatch: return "EdgeVectorMismatch";
        case Diagnostic::Code::UnpairedEdge: return "UnpairedEdge";
        case Diagnostic::Code::NotConnected: return "NotConnected";
        case Diagnostic::Code::NonConvexCell: return "NonConvexCell";
        case Diagnostic::Code::BadOrientation: return "BadOrientation";
        case Diagnostic::Code::DegenerateCell: return "DegenerateCell";
        case Diagnostic::Code::RingMismatch: return "RingMismatch";
        case Diagnostic::Code::MarkedPoint: return "MarkedPoint";
    }
    return "Unknown";
}

}  // namespace

std::string Diagnostic::str() const {
    std::ostringstream os;
    os << code_name(code) << " at (" << a.poly << "," << a.edge << ")";
    if (b.poly >= 0) os << "/(" << b.poly << "," << b.edge << ")";
    if (warning) os << " [warning]";
    return os.str();
}

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "surface validation failed:";
          for (const auto& d : diags) os << " " << d.str() << ";";
          return os.str();
      }()),
      diags_(std::move(diags)) {}

std::vector<Diagnostic> Surface::validate(const RingSpec& ring,
                                          const std::vector<Polygon>& polygons,
                                          const std::vector<Gluing>& gluings) {
    std::vector<Diagnostic> out;
    auto bad = [&](Diagnostic::Code c, EdgeRef a, EdgeRef b = {}, bool warn = false) {
        out.push_back(Diagnostic{c, a, b, warn});
    };

    // Cell geometry: ring consistency, >= 3 distinct vertices, strict convexity,
    // counterclockwise orientation.
    for (int p = 0; p < static_cast<int>(polygons.size()); ++p) {
        const auto& poly = polygons[static_cast<std::size_t>(p)];
        if (poly.size() < 3) {
            bad(Diagnostic::Code::DegenerateCell, {p, 0});
            continue;
        }
        bool ring_ok = true;
        for (const auto& v : poly.vertices) {
            if (v.x.spec() != ring || v.y.spec() != ring) {
                bad(Diagnostic::Code::RingMismatch, {p, 0});
                ring_ok = false;
                break;
            }
        }
        if (!ring_ok) continue;
        bool degenerate = false;
        for (int e = 0; e < poly.size(); ++e) {
            if (poly.edge_vec(e).is_zero()) {
                bad(Diagnostic::Code::DegenerateCell, {p, e});
                degenerate = true;
            }
        }
        if (degenerate) continue;
        int pos = 0, neg = 0;
        for (int e = 0; e < poly.size(); ++e) {
            int s = cross_sign(poly.edge_vec(e), poly.edge_vec(e + 1));
            if (s > 0) ++pos;
            else ++neg;  // zero cross counts against strict convexity
        }
        if (neg > 0 && pos == 0) {
            bad(Diagnostic::Code::BadOrientation, {p, 0});
        } else if (neg > 0) {
            bad(Diagnostic::Code::NonConvexCell, {p, 0});
        }
    }
    if (!out.empty()) return out;

    // Every edge appears in exactly one gluing, and glued vectors negate.
    std::map<std::pair<int, int>, int> seen;
    for (const auto& g : gluings) {
        for (const auto& side : {g.a, g.b}) {
            if (side.poly < 0 || side.poly >= static_cast<int>(polygons.size()) ||
                side.edge < 0 ||
                side.edge >= polygons[static_cast<std::size_t>(side.poly)].size()) {
                bad(Diagnostic::Code::UnpairedEdge, side);
                return out;
            }
            ++seen[{side.poly, side.edge}];
        }
    }
    for (int p = 0; p < static_cast<int>(polygons.size()); ++p) {
        for (int e = 0; e < polygons[static_cast<std::size_t>(p)].size(); ++e) {
            auto it = seen.find({p, e});
            if (it == seen.end() || it->second != 1) bad(Diagnostic::Code::UnpairedEdge, {p, e});
        }
    }
    if (!out.empty()) return out;

    for (const auto& g : gluings) {
        Vec2 va = polygons[static_cast<std::size_t>(g.a.poly)].edge_vec(g.a.edge);
        Vec2 vb = polygons[static_cast<std::size_t>(g.b.poly)].edge_vec(g.b.edge);
        if (!(va + vb).is_zero()) bad(Diagnostic::Code::EdgeVectorMismatch, g.a, g.b);
    }
    if (!out.empty()) return out;

    // Connectivity of the cell adjacency graph.
    std::vector<int> comp(polygons.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (comp[static_cast<std::size_t>(x)] != x) {
            comp[static_cast<std::size_t>(x)] =
                comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
            x = comp[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& g : gluings) comp[static_cast<std::size_t>(find(g.a.poly))] = find(g.b.poly);
    for (int p = 1; p < static_cast<int>(polygons.size()); ++p) {
        if (find(p) != find(0)) {
            bad(Diagnostic::Code::NotConnected, {p, 0});
            break;
        }
    }
    return out;
}

Surface Surface::build(RingSpec ring, std::vector<Polygon> polygons,
                       std::vector<Gluing> gluings) {
    auto diags = validate(ring, polygons, gluings);
    std::vector<Diagnostic> errors;
    for (auto& d : diags)
        if (!d.warning) errors.push_back(d);
    if (!errors.empty()) throw ValidationError(std::move(errors));

    Surface s;
    s.ring_ = ring;
    s.polygons_ = std::move(polygons);
    s.gluings_ = std::move(gluings);
    s.derive();
    return s;
}

std::size_t Surface::index(const EdgeRef& e) const {
    return poly_offset_[static_cast<std::size_t>(e.poly)] + static_cast<std::size_t>(e.edge);
}

std::size_t Surface::cindex(const CornerRef& c) const {
    return poly_offset_[static_cast<std::size_t>(c.poly)] + static_cast<std::size_t>(c.corner);
}

const EdgeRef& Surface::partner(const EdgeRef& e) const {
    const auto& ce = edges_[static_cast<std::size_t>(edge_id(e))];
    return (ce.side_a == e) ? ce.side_b : ce.side_a;
}

Vec2 Surface::gluing_translation(const EdgeRef& e) const {
    // point + T maps e's chart to the partner's chart: the tail of e lands on
    // the head of the partner edge.
    const EdgeRef& q = partner(e);
    const auto& pe = polygons_[static_cast<std::size_t>(e.poly)];
    const auto& pq = polygons_[static_cast<std::size_t>(q.poly)];
    return pq.vertex(q.edge + 1) - pe.vertex(e.edge);
}

void Surface::derive() {
    poly_offset_.assign(polygons_.size() + 1, 0);
    for (std::size_t p = 0; p < polygons_.size(); ++p)
        poly_offset_[p + 1] = poly_offset_[p] + static_cast<std::size_t>(polygons_[p].size());
    const std::size_t total = poly_offset_.back();

    edge_id_.assign(total, -1);
    edge_sign_.assign(total, 0);
    edges_.clear();
    for (const auto& g : gluings_) {
        int id = static_cast<int>(edges_.size());
        ComplexEdge ce;
        ce.side_a = g.a;
        ce.side_b = g.b;
        ce.vec = polygons_[static_cast<std::size_t>(g.a.poly)].edge_vec(g.a.edge);
        edges_.push_back(std::move(ce));
        edge_id_[index(g.a)] = id;
        edge_sign_[index(g.a)] = 1;
        edge_id_[index(g.b)] = id;
        edge_sign_[index(g.b)] = -1;
    }

    // Corner cycles: leaving corner (p, v) counterclockwise crosses edge
    // (p, v-1); the next corner is the partner edge's tail corner.
    corner_vertex_.assign(total, -1);
    corner_pos_.assign(total, -1);
    vertices_.clear();
    for (int p = 0; p < static_cast<int>(polygons_.size()); ++p) {
        for (int v = 0; v < polygons_[static_cast<std::size_t>(p)].size(); ++v) {
            CornerRef start{p, v};
            if (corner_vertex_[cindex(start)] >= 0) continue;
            Vertex vert;
            CornerRef cur = start;
            do {
                corner_vertex_[cindex(cur)] = static_cast<int>(vertices_.size());
                corner_pos_[cindex(cur)] = static_cast<int>(vert.corners.size());
                vert.corners.push_back(cur);
                const auto& poly = polygons_[static_cast<std::size_t>(cur.poly)];
                EdgeRef crossing{cur.poly, poly.mod(cur.corner - 1)};
                vert.rays.push_back(RayRef{edge_id(crossing), edge_side_sign(crossing) > 0});
                cur = [&] {
                    const EdgeRef& q = partner(crossing);
                    return CornerRef{q.poly, q.edge};
                }();
            } while (!(cur == start));

            // Cone angle 2*pi*w: count crossings of the reference direction
            // (1,0) by the sweep through the corner sectors. Each interior
            // angle is in (0,pi); the arc is taken half-open at its start.
            Vec2 ref{RingElement(ring_, 1), RingElement(ring_)};
            int w = 0;
            for (const auto& c : vert.corners) {
                const auto& poly = polygons_[static_cast<std::size_t>(c.poly)];
                Vec2 a = poly.edge_vec(c.corner);               // sector start
                Vec2 b = -poly.edge_vec(c.corner - 1);          // sector end
                bool crosses = same_direction(ref, b) ||
                               (cross_sign(a, ref) > 0 && cross_sign(ref, b) > 0);
                if (crosses) ++w;
            }
            vert.angle_2pi = w;
            vertices_.push_back(std::move(vert));
        }
    }

    for (const auto& v : vertices_) {
        if (v.angle_2pi == 1)
            warnings_.push_back(Diagnostic{Diagnostic::Code::MarkedPoint,
                                           {v.corners[0].poly, v.corners[0].corner},
                                           {},
                                           true});
    }

    area2_ = RingElement(ring_);
    for (const auto& poly : polygons_) {
        for (int e = 0; e < poly.size(); ++e)
            area2_ = area2_ + cross(poly.vertex(e), poly.vertex(e + 1));
    }

    // Genus from the Euler characteristic of the identified complex; the
    // Gauss-Bonnet count must agree.
    int V = static_cast<int>(vertices_.size());
    int E = static_cast<int>(edges_.size());
    int F = static_cast<int>(polygons_.size());
    int chi = V - E + F;
    if (chi > 2 || (2 - chi) % 2 != 0)
        throw std::logic_error("Surface: non-orientable or inconsistent complex");
    genus_ = (2 - chi) / 2;
    int gb = 0;
    for (const auto& v : vertices_) gb += v.angle_2pi - 1;   // excess in units of 2*pi
    if (gb != 2 * genus_ - 2)
        throw std::logic_error("Surface: Gauss-Bonnet mismatch with Euler characteristic");
}

std::vector<std::pair<int, int>> Surface::cone_data() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        int w = vertices_[static_cast<std::size_t>(i)].angle_2pi;
        if (w != 1) out.emplace_back(i, 2 * w);
    }
    return out;
}

}  // namespace stairkvol
