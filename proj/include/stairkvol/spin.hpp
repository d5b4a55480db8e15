#pragma once

#include "stairkvol/families.hpp"
#include "stairkvol/homology.hpp"

#include <string>
#include <vector>

namespace stairkvol {

/// Directed straight segment inside one cell, exact rational endpoints.
struct PolySeg {
    int poly = -1;
    QVec2 a, b;
};

/// Closed rectilinear loop on the surface avoiding the cone point.
using Polyline = std::vector<PolySeg>;

/// Quarter-turn index of a closed axis-parallel loop: (left turns - right
/// turns) / 4. Throws if the loop is not closed, not rectilinear, touches a
/// vertex, or has a turn count not divisible by four.
int turning_index(const Surface& s, const Polyline& loop);

struct SpinWitness {
    std::vector<std::string> a_labels, b_labels;
    std::vector<HomologyClass> a_classes, b_classes;
    std::vector<int> a_omega, b_omega;   // values in Z/2
    int parity = 0;                      // 0 even, 1 odd
    bool used_printed_basis = false;     // the e/f recipe vs symplectic reduction
};

/// Value of the spin quadratic form on a homology class, computed by
/// decomposing the class over cylinder-core loops (which are embedded,
/// non-singular, straight, hence of index 0) and expanding with
/// Omega(a+b) = Omega(a) + Omega(b) + Int(a,b) mod 2.
int omega(const MarkedSurface& ms, const HomologyBasis& basis, const HomologyClass& c);

/// Parity of the spin structure with a full audit witness.
SpinWitness spin_parity(const MarkedSurface& ms);
SpinWitness spin_parity(const MarkedSurface& ms, const HomologyBasis& basis);

/// Symplectic basis (a_i, b_i) extracted from a list of classes whose Gram
/// matrix is unimodular, by integer symplectic reduction.
std::pair<std::vector<HomologyClass>, std::vector<HomologyClass>> symplectic_reduce(
    const HomologyBasis& basis, std::vector<HomologyClass> vecs);

}  // namespace stairkvol
