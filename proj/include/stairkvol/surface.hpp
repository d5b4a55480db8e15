#pragma once

#include "stairkvol/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stairkvol {

/// Convex polygon, counterclockwise vertex order, ring coordinates.
struct Polygon {
    std::vector<Vec2> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    const Vec2& vertex(int i) const { return vertices[static_cast<std::size_t>(mod(i))]; }
    Vec2 edge_vec(int e) const { return vertex(e + 1) - vertex(e); }
    int mod(int i) const {
        int m = size();
        return ((i % m) + m) % m;
    }
};

struct EdgeRef {
    int poly = -1;
    int edge = -1;
    bool operator==(const EdgeRef& o) const { return poly == o.poly && edge == o.edge; }
    bool operator<(const EdgeRef& o) const {
        return poly != o.poly ? poly < o.poly : edge < o.edge;
    }
};

/// Identification of two polygon edges by translation (side_a vector is the
/// negation of side_b vector).
struct Gluing {
    EdgeRef a, b;
};

struct Diagnostic {
    enum class Code {
        EdgeVectorMismatch,
        UnpairedEdge,
        NotConnected,
        NonConvexCell,
        BadOrientation,
        DegenerateCell,
        RingMismatch,
        MarkedPoint,   // warning: vertex of angle exactly 2*pi
    };
    Code code;
    EdgeRef a{}, b{};
    bool warning = false;

    std::string str() const;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Diagnostic> diags);
    const std::vector<Diagnostic>& diagnostics() const { return diags_; }

private:
    std::vector<Diagnostic> diags_;
};

struct CornerRef {
    int poly = -1;
    int corner = -1;
    bool operator==(const CornerRef& o) const {
        return poly == o.poly && corner == o.corner;
    }
};

/// One end of a complex edge as a ray at the identified vertex.
struct RayRef {
    int edge = -1;       // complex edge id
    bool at_head = false;  // true: ray points backwards along the edge
};

/// A closed translation surface: polygons with edge identifications, plus
/// derived combinatorial data (identified edges, vertex corner cycles, cone
/// angles, genus, area). Immutable after build.
class Surface {
public:
    struct ComplexEdge {
        EdgeRef side_a, side_b;   // canonical orientation follows side_a
        Vec2 vec;                 // edge vector of side_a
    };

    struct Vertex {
        std::vector<CornerRef> corners;   // counterclockwise cycle
        std::vector<RayRef> rays;         // rays[i] crossed when leaving corners[i]
        int angle_2pi = 0;                // cone angle as a multiple of 2*pi
    };

    static Surface build(RingSpec ring, std::vector<Polygon> polygons,
                         std::vector<Gluing> gluings);
    static std::vector<Diagnostic> validate(const RingSpec& ring,
                                            const std::vector<Polygon>& polygons,
                                            const std::vector<Gluing>& gluings);

    const RingSpec& ring() const { return ring_; }
    const std::vector<Polygon>& polygons() const { return polygons_; }
    const std::vector<Gluing>& gluings() const { return gluings_; }
    const std::vector<ComplexEdge>& edges() const { return edges_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Diagnostic>& warnings() const { return warnings_; }

    int edge_id(const EdgeRef& e) const { return edge_id_[index(e)]; }
    /// +1 when the cell edge is the canonical side of its complex edge.
    int edge_side_sign(const EdgeRef& e) const { return edge_sign_[index(e)]; }
    const EdgeRef& partner(const EdgeRef& e) const;
    /// Translation carried across a gluing: local point in e's polygon plus
    /// this translation is the identified local point in partner's polygon.
    Vec2 gluing_translation(const EdgeRef& e) const;

    /// Vertex id and cycle position of a polygon corner.
    int corner_vertex(const CornerRef& c) const { return corner_vertex_[cindex(c)]; }
    int corner_position(const CornerRef& c) const { return corner_pos_[cindex(c)]; }

    RingElement area_twice() const { return area2_; }
    RingElement area() const { return area2_.div_exact(2); }
    int genus() const { return genus_; }
    /// Cone points only: (vertex id, angle as a multiple of pi), excess angle.
    std::vector<std::pair<int, int>> cone_data() const;

    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    Surface() = default;   // empty placeholder; use build() for real surfaces

private:
    std::size_t index(const EdgeRef& e) const;
    std::size_t cindex(const CornerRef& c) const;
    void derive();

    RingSpec ring_;
    std::vector<Polygon> polygons_;
    std::vector<Gluing> gluings_;
    std::vector<Diagnostic> warnings_;

    std::vector<std::size_t> poly_offset_;
    std::vector<int> edge_id_;
    std::vector<int> edge_sign_;
    std::vector<ComplexEdge> edges_;
    std::vector<Vertex> vertices_;
    std::vector<int> corner_vertex_;
    std::vector<int> corner_pos_;
    RingElement area2_;
    int genus_ = 0;
};

}  // namespace stairkvol
