#include "stairkvol/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace stairkvol {

namespace {

using Mat = std::vector<std::vector<Integer>>;

Mat identity(int n) {
    Mat m(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

// Smith reduction of d (rows x cols): U*d_in*V = diag(diag..., 0). U and Uinv
// track row operations, V tracks column operations.
struct Smith {
    Mat U, Uinv, V;
    int rank = 0;
    std::vector<Integer> diag;
};

Smith smith(Mat d) {
    const int rows = static_cast<int>(d.size());
    const int cols = rows ? static_cast<int>(d[0].size()) : 0;
    Smith out;
    out.U = identity(rows);
    out.Uinv = identity(rows);
    out.V = identity(cols);

    auto at = [&](Mat& m, int i, int j) -> Integer& {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };

    auto row_add = [&](int dst, int src, const Integer& k) {
        for (int j = 0; j < cols; ++j) at(d, dst, j) += k * at(d, src, j);
        for (int j = 0; j < rows; ++j) at(out.U, dst, j) += k * at(out.U, src, j);
        for (int i = 0; i < rows; ++i) at(out.Uinv, i, src) -= k * at(out.Uinv, i, dst);
    };
    auto row_swap = [&](int a, int b) {
        std::swap(d[static_cast<std::size_t>(a)], d[static_cast<std::size_t>(b)]);
        std::swap(out.U[static_cast<std::size_t>(a)], out.U[static_cast<std::size_t>(b)]);
        for (int i = 0; i < rows; ++i) std::swap(at(out.Uinv, i, a), at(out.Uinv, i, b));
    };
    auto row_negate = [&](int a) {
        for (int j = 0; j < cols; ++j) at(d, a, j) *= -1;
        for (int j = 0; j < rows; ++j) at(out.U, a, j) *= -1;
        for (int i = 0; i < rows; ++i) at(out.Uinv, i, a) *= -1;
    };
    auto col_add = [&](int dst, int src, const Integer& k) {
        for (int i = 0; i < rows; ++i) at(d, i, dst) += k * at(d, i, src);
        for (int i = 0; i < cols; ++i) at(out.V, i, dst) += k * at(out.V, i, src);
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(at(d, i, a), at(d, i, b));
        for (int i = 0; i < cols; ++i) std::swap(at(out.V, i, a), at(out.V, i, b));
    };

    int t = 0;
    while (t < rows && t < cols) {
        int pi = -1, pj = -1;
        Integer best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const Integer& v = at(d, i, j);
                if (v == 0) continue;
                Integer a = boost::multiprecision::abs(v);
                if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
            }
        if (pi < 0) break;
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);
        if (at(d, t, t) < 0) row_negate(t);

        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            if (at(d, i, t) == 0) continue;
            Integer q = at(d, i, t) / at(d, t, t);
            row_add(i, t, -q);
            if (at(d, i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < cols; ++j) {
            if (at(d, t, j) == 0) continue;
            Integer q = at(d, t, j) / at(d, t, t);
            col_add(j, t, -q);
            if (at(d, t, j) != 0) clean = false;
        }
        if (!clean) continue;
        out.diag.push_back(at(d, t, t));
        ++t;
    }
    out.rank = static_cast<int>(out.diag.size());
    return out;
}

}  // namespace

std::optional<std::vector<Integer>> solve_integer(
    const std::vector<std::vector<Integer>>& columns, const std::vector<Integer>& target) {
    const int cols = static_cast<int>(columns.size());
    const int rows = static_cast<int>(target.size());
    if (cols == 0) {
        for (const auto& v : target)
            if (v != 0) return std::nullopt;
        return std::vector<Integer>{};
    }
    Mat a(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols)));
    for (int j = 0; j < cols; ++j) {
        if (static_cast<int>(columns[static_cast<std::size_t>(j)].size()) != rows)
            throw std::invalid_argument("solve_integer: ragged columns");
        for (int i = 0; i < rows; ++i)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    auto s = smith(std::move(a));
    // a x = t  <=>  S y = U t with x = V y.
    std::vector<Integer> ut(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        Integer acc = 0;
        for (int j = 0; j < rows; ++j)
            acc += s.U[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   target[static_cast<std::size_t>(j)];
        ut[static_cast<std::size_t>(i)] = acc;
    }
    std::vector<Integer> y(static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i) {
        if (i < s.rank) {
            if (ut[static_cast<std::size_t>(i)] % s.diag[static_cast<std::size_t>(i)] != 0)
                return std::nullopt;
            y[static_cast<std::size_t>(i)] = ut[static_cast<std::size_t>(i)] / s.diag[static_cast<std::size_t>(i)];
        } else if (ut[static_cast<std::size_t>(i)] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(static_cast<std::size_t>(cols));
    for (int i = 0; i < cols; ++i) {
        Integer acc = 0;
        for (int j = 0; j < cols; ++j)
            acc += s.V[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   y[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = acc;
    }
    return x;
}

HomologyBasis HomologyBasis::compute(const Surface& s) {
    if (s.vertex_count() != 1)
        throw std::invalid_argument("HomologyBasis: complex must have a single vertex");

    const int E = static_cast<int>(s.edges().size());
    const int F = static_cast<int>(s.polygons().size());
    HomologyBasis out;
    out.num_edges_ = E;

    // Face boundary matrix, E x F.
    Mat d(static_cast<std::size_t>(E), std::vector<Integer>(static_cast<std::size_t>(F)));
    for (int p = 0; p < F; ++p) {
        const auto& poly = s.polygons()[static_cast<std::size_t>(p)];
        for (int e = 0; e < poly.size(); ++e) {
            EdgeRef ref{p, e};
            d[static_cast<std::size_t>(s.edge_id(ref))][static_cast<std::size_t>(p)] +=
                s.edge_side_sign(ref);
        }
    }

    auto snf = smith(std::move(d));
    for (const auto& v : snf.diag)
        if (boost::multiprecision::abs(v) != 1)
            throw std::logic_error("HomologyBasis: torsion in H_1 of oriented surface");
    out.torsion_rank_ = snf.rank;
    out.rank_ = E - snf.rank;

    out.reduce_rows_.assign(static_cast<std::size_t>(out.rank_), {});
    for (int i = 0; i < out.rank_; ++i)
        out.reduce_rows_[static_cast<std::size_t>(i)] =
            snf.U[static_cast<std::size_t>(snf.rank + i)];
    out.gens_.assign(static_cast<std::size_t>(out.rank_),
                     EdgeChain(static_cast<std::size_t>(E)));
    for (int j = 0; j < out.rank_; ++j)
        for (int i = 0; i < E; ++i)
            out.gens_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                snf.Uinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(snf.rank + j)];

    // Pairing of single-edge loops from the interleaving of edge ends around
    // the vertex: the loop of edge e runs through the vertex from its head
    // ray to its tail ray.
    const auto& vert = s.vertices()[0];
    const int m = static_cast<int>(vert.rays.size());
    std::vector<int> pos_tail(static_cast<std::size_t>(E), -1),
        pos_head(static_cast<std::size_t>(E), -1);
    for (int i = 0; i < m; ++i) {
        const auto& r = vert.rays[static_cast<std::size_t>(i)];
        (r.at_head ? pos_head : pos_tail)[static_cast<std::size_t>(r.edge)] = i;
    }
    auto in_arc = [m](int x, int u, int v) {
        // x strictly inside the counterclockwise arc from u to v
        int du = ((x - u) % m + m) % m;
        int dv = ((v - u) % m + m) % m;
        return du > 0 && du < dv;
    };
    out.iota_.assign(static_cast<std::size_t>(E),
                     std::vector<long long>(static_cast<std::size_t>(E)));
    for (int e = 0; e < E; ++e) {
        for (int f = e + 1; f < E; ++f) {
            int ain = pos_head[static_cast<std::size_t>(e)], aout = pos_tail[static_cast<std::size_t>(e)];
            int bin = pos_head[static_cast<std::size_t>(f)], bout = pos_tail[static_cast<std::size_t>(f)];
            long long sgn = 0;
            if (in_arc(bin, ain, aout) && in_arc(bout, aout, ain)) sgn = 1;
            else if (in_arc(bout, ain, aout) && in_arc(bin, aout, ain)) sgn = -1;
            out.iota_[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] = sgn;
            out.iota_[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)] = -sgn;
        }
    }

    // Face boundaries must pair to zero with every edge loop.
    for (int p = 0; p < F; ++p) {
        const auto& poly = s.polygons()[static_cast<std::size_t>(p)];
        std::vector<long long> chain(static_cast<std::size_t>(E));
        for (int e = 0; e < poly.size(); ++e) {
            EdgeRef ref{p, e};
            chain[static_cast<std::size_t>(s.edge_id(ref))] += s.edge_side_sign(ref);
        }
        for (int e = 0; e < E; ++e) {
            long long acc = 0;
            for (int f = 0; f < E; ++f)
                acc += chain[static_cast<std::size_t>(f)] *
                       out.iota_[static_cast<std::size_t>(f)][static_cast<std::size_t>(e)];
            if (acc != 0)
                throw std::logic_error("HomologyBasis: face boundary has non-zero pairing");
        }
    }

    out.gram_.assign(static_cast<std::size_t>(out.rank_),
                     std::vector<long long>(static_cast<std::size_t>(out.rank_)));
    for (int i = 0; i < out.rank_; ++i) {
        for (int j = 0; j < out.rank_; ++j) {
            Integer acc = 0;
            for (int e = 0; e < E; ++e) {
                const Integer& gi = out.gens_[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
                if (gi == 0) continue;
                for (int f = 0; f < E; ++f)
                    acc += gi * out.gens_[static_cast<std::size_t>(j)][static_cast<std::size_t>(f)] *
                           out.iota_[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
            }
            out.gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                acc.convert_to<long long>();
        }
    }

    // The pairing must descend to the quotient (zero against the reduced
    // class of every face boundary) and be unimodular on it.
    {
        Mat a(static_cast<std::size_t>(out.rank_),
              std::vector<Integer>(static_cast<std::size_t>(out.rank_)));
        for (int i = 0; i < out.rank_; ++i)
            for (int j = 0; j < out.rank_; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    out.gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        auto sd = smith(std::move(a));
        Integer det = sd.rank == out.rank_ ? 1 : 0;
        for (const auto& v : sd.diag) det *= v;
        if (boost::multiprecision::abs(det) != 1)
            throw std::logic_error("HomologyBasis: intersection pairing is not unimodular");
    }
    return out;
}

HomologyClass HomologyBasis::reduce(const EdgeChain& chain) const {
    if (static_cast<int>(chain.size()) != num_edges_)
        throw std::invalid_argument("HomologyBasis::reduce: chain length mismatch");
    HomologyClass out(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
        Integer acc = 0;
        for (int e = 0; e < num_edges_; ++e)
            acc += reduce_rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] *
                   chain[static_cast<std::size_t>(e)];
        out[static_cast<std::size_t>(i)] = acc.convert_to<long long>();
    }
    return out;
}

HomologyClass HomologyBasis::class_of(const EdgePath& path) const {
    EdgeChain chain(static_cast<std::size_t>(num_edges_));
    for (const auto& [edge, sign] : path) chain[static_cast<std::size_t>(edge)] += sign;
    return reduce(chain);
}

HomologyClass HomologyBasis::class_of(const Surface& s,
                                      const std::vector<TraceStep>& trace) const {
    // Replace each cell crossing by the counterclockwise boundary walk from
    // the entry edge to the exit edge; partial edges cancel in pairs, full
    // edges accumulate with their boundary orientation.
    EdgeChain chain(static_cast<std::size_t>(num_edges_));
    for (const auto& step : trace) {
        const auto& poly = s.polygons()[static_cast<std::size_t>(step.poly)];
        int a = step.entry_edge;
        int b = step.exit_edge;
        for (int j = poly.mod(a + 1); j != b; j = poly.mod(j + 1)) {
            EdgeRef ref{step.poly, j};
            chain[static_cast<std::size_t>(s.edge_id(ref))] += s.edge_side_sign(ref);
        }
    }
    return reduce(chain);
}

long long HomologyBasis::pair(const HomologyClass& u, const HomologyClass& v) const {
    if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
        throw std::invalid_argument("HomologyBasis::pair: basis mismatch");
    Integer acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (u[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            acc += Integer(u[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(j)] *
                   gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return acc.convert_to<long long>();
}

}  // namespace stairkvol
