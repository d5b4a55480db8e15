#pragma once

#include "stairkvol/surface.hpp"

#include <vector>

namespace stairkvol {

/// Integer chain over the complex edges.
using EdgeChain = std::vector<Integer>;

/// Coordinates of a homology class in a HomologyBasis.
using HomologyClass = std::vector<long long>;

/// Oriented edge path: (complex edge id, +1/-1).
using EdgePath = std::vector<std::pair<int, int>>;

/// One cell crossed by a transverse path: entry/exit edge indices in the
/// cell's boundary (corner entries use the preceding edge, corner exits the
/// following one), with exact cell-local points.
struct TraceStep {
    int poly = -1;
    int entry_edge = -1;
    int exit_edge = -1;
    QVec2 entry, exit;
};

/// Basis of H_1(X, Z) for a one-vertex complex, with the symplectic
/// intersection pairing restricted to it.
class HomologyBasis {
public:
    static HomologyBasis compute(const Surface& s);

    int rank() const { return rank_; }                       // 2g
    const std::vector<std::vector<long long>>& gram() const { return gram_; }

    /// Quotient coordinates of an integer edge chain (every chain is a cycle
    /// on a one-vertex complex).
    HomologyClass reduce(const EdgeChain& chain) const;
    HomologyClass class_of(const EdgePath& path) const;
    HomologyClass class_of(const Surface& s, const std::vector<TraceStep>& trace) const;

    long long pair(const HomologyClass& u, const HomologyClass& v) const;

    /// Generators as edge chains (columns), for tests and witnesses.
    const std::vector<EdgeChain>& generators() const { return gens_; }

    /// Pairing of single-edge loops, ι(e, f); antisymmetric.
    long long edge_pairing(int e, int f) const { return iota_[static_cast<std::size_t>(e)]
                                                             [static_cast<std::size_t>(f)]; }

    int edge_count() const { return num_edges_; }

private:
    int num_edges_ = 0;
    int rank_ = 0;
    int torsion_rank_ = 0;
    std::vector<std::vector<Integer>> reduce_rows_;   // rank_ x E, rows of U below the torsion block
    std::vector<EdgeChain> gens_;
    std::vector<std::vector<long long>> iota_;
    std::vector<std::vector<long long>> gram_;
};

/// Solve A x = c over the integers; returns a solution if one exists.
std::optional<std::vector<Integer>> solve_integer(
    const std::vector<std::vector<Integer>>& columns, const std::vector<Integer>& target);

}  // namespace stairkvol
