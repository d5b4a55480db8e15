#pragma once

#include "stairkvol/homology.hpp"
#include "stairkvol/surface.hpp"

#include <string>
#include <vector>

namespace stairkvol {

enum class CellKind { Core, LongRect };

/// A family surface with its labeled saddle connections e_1..e_g, f_1..f_g.
/// Each mark is a single identified edge, oriented +x (e marks) or +y (f
/// marks); l(e_i) * l(f_i) equals the area n of the long rectangle R_i.
struct MarkedSurface {
    Surface surface;
    std::string family;   // "L", "H", "M"
    int g = 0;
    std::int64_t n = 0;
    std::vector<CellKind> cell_kinds;           // per polygon
    std::vector<std::string> mark_labels;       // e1..eg, f1..fg
    std::vector<EdgePath> mark_paths;           // one oriented edge each

    const EdgePath& mark(const std::string& label) const;
    int mark_index(const std::string& label) const;
};

MarkedSurface build_L(int g, std::int64_t n);
MarkedSurface build_H(int g, std::int64_t n);
MarkedSurface build_M(int g, std::int64_t n);

MarkedSurface build_family(const std::string& family, int g, std::int64_t n);

/// Cylinder in a fixed direction on a rectangle-celled surface.
struct Cylinder {
    bool horizontal = true;
    std::vector<int> cells;        // orbit order
    RingElement circumference;
    RingElement height;
    EdgeChain core_chain;          // boundary 1-cycle homologous to the core
};

/// Cylinder decomposition in the horizontal or vertical direction. Requires
/// every cell to be an axis-aligned rectangle with counterclockwise vertices
/// starting at the bottom-left corner.
std::vector<Cylinder> cylinders(const Surface& s, bool horizontal);

}  // namespace stairkvol
