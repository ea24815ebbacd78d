#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mpqw/graph.hpp"
#include "mpqw/linalg.hpp"
#include "mpqw/subspace.hpp"

namespace mpqw {

/// Dense state over ordered adjacent pairs |uv>. The canonical arc order is
/// lexicographic on (u.set, u.vertex, v.set, v.vertex) with same-set pairs
/// skipped; this ordering is part of the public contract (CSV dumps and the
/// circuit encoding tests rely on it).
struct EdgeState {
    GraphConfig config;
    CVec amp;
};

/// Dense full-space simulation stays practical up to roughly this dimension;
/// the CLI refuses --engine full above it. Acceptance-level checks stay near 1e5.
inline constexpr long long kFullEngineDimensionLimit = 2'000'000;

inline long long arc_index(const GraphConfig& g, VertexId u, VertexId v) {
    if (!g.contains(u) || !g.contains(v)) throw std::out_of_range("arc_index: vertex out of range");
    if (u.set == v.set) throw std::invalid_argument("arc_index: same-set pair is not an edge");
    const long long skip = v.set < u.set ? v.set : v.set - 1;
    return ((static_cast<long long>(u.set) * g.N + u.vertex) * (g.M - 1) + skip) * g.N + v.vertex;
}

struct Arc {
    VertexId u;
    VertexId v;
};

inline Arc arc_at(const GraphConfig& g, long long index) {
    if (index < 0 || index >= g.edge_space_dimension())
        throw std::out_of_range("arc_at: index out of range");
    const long long vv = index % g.N;
    index /= g.N;
    const long long skip = index % (g.M - 1);
    index /= (g.M - 1);
    const long long uv = index % g.N;
    const int us = static_cast<int>(index / g.N);
    const int vs = static_cast<int>(skip < us ? skip : skip + 1);
    return {{us, uv}, {vs, vv}};
}

inline EdgeState uniform_initial(const GraphConfig& g) {
    const long long dim = g.edge_space_dimension();
    return {g, CVec(static_cast<std::size_t>(dim),
                    Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0))};
}

inline EdgeState basis_arc_state(const GraphConfig& g, VertexId u, VertexId v) {
    EdgeState s{g, CVec(static_cast<std::size_t>(g.edge_space_dimension()))};
    s.amp[static_cast<std::size_t>(arc_index(g, u, v))] = 1.0;
    return s;
}

/// S|uv> = |vu>.
inline EdgeState apply_shift(const EdgeState& s) {
    const GraphConfig& g = s.config;
    EdgeState out{g, CVec(s.amp.size())};
    for (int us = 0; us < g.M; ++us)
        for (long long uv = 0; uv < g.N; ++uv)
            for (int vs = 0; vs < g.M; ++vs) {
                if (vs == us) continue;
                for (long long vv = 0; vv < g.N; ++vv)
                    out.amp[static_cast<std::size_t>(arc_index(g, {vs, vv}, {us, uv}))] =
                        s.amp[static_cast<std::size_t>(arc_index(g, {us, uv}, {vs, vv}))];
            }
    return out;
}

/// Per-vertex coin block (1-e^{-ia})|s_u><s_u| - I, applied as a rank-1
/// update over each contiguous coin block.
inline EdgeState apply_coin(const EdgeState& s, double alpha) {
    const GraphConfig& g = s.config;
    const Complex f = 1.0 - std::exp(Complex(0.0, -alpha));
    const long long d = g.degree();
    EdgeState out{g, CVec(s.amp.size())};
    const long long vertices = static_cast<long long>(g.M) * g.N;
    for (long long u = 0; u < vertices; ++u) {
        const std::size_t base = static_cast<std::size_t>(u * d);
        Complex sum{};
        for (long long k = 0; k < d; ++k) sum += s.amp[base + static_cast<std::size_t>(k)];
        const Complex shared = f * sum / static_cast<double>(d);
        for (long long k = 0; k < d; ++k)
            out.amp[base + static_cast<std::size_t>(k)] =
                shared - s.amp[base + static_cast<std::size_t>(k)];
    }
    return out;
}

/// Q(beta)|uv> = e^{ib}|uv> when the position vertex u is marked.
inline EdgeState apply_query(const EdgeState& s, double beta) {
    const GraphConfig& g = s.config;
    const Complex ph = std::exp(Complex(0.0, beta));
    const long long d = g.degree();
    EdgeState out = s;
    for (int us = 0; us < g.M; ++us)
        for (long long uv = 0; uv < g.N; ++uv) {
            if (!g.is_marked({us, uv})) continue;
            const std::size_t base =
                static_cast<std::size_t>((static_cast<long long>(us) * g.N + uv) * d);
            for (long long k = 0; k < d; ++k) out.amp[base + static_cast<std::size_t>(k)] *= ph;
        }
    return out;
}

/// One step of U(alpha, beta) = S C(alpha) Q(beta).
inline EdgeState walk_step(const EdgeState& s, double alpha, double beta) {
    return apply_shift(apply_coin(apply_query(s, beta), alpha));
}

/// Total probability on arcs with at least one marked endpoint.
inline double success_probability(const EdgeState& s) {
    const GraphConfig& g = s.config;
    double p = 0.0;
    for (int us = 0; us < g.M; ++us)
        for (long long uv = 0; uv < g.N; ++uv) {
            const bool um = g.is_marked({us, uv});
            for (int vs = 0; vs < g.M; ++vs) {
                if (vs == us) continue;
                for (long long vv = 0; vv < g.N; ++vv)
                    if (um || g.is_marked({vs, vv}))
                        p += std::norm(
                            s.amp[static_cast<std::size_t>(arc_index(g, {us, uv}, {vs, vv}))]);
            }
        }
    return p;
}

/// Class of an arc within the invariant-subspace basis, in the fixed basis
/// order (0-based).
inline int arc_class(const GraphConfig& g, VertexId u, VertexId v) {
    if (g.kind == GraphCase::EverySet)
        return (g.is_marked(u) ? 0 : 2) + (g.is_marked(v) ? 0 : 1);  // aa, ab, ba, bb
    auto type = [&](VertexId x) {
        if (x.set != 0) return 2;          // c
        return x.vertex < g.n ? 0 : 1;     // a : b
    };
    const int tu = type(u), tv = type(v);
    if (tu == 2 && tv == 0) return 0;  // ca
    if (tu == 0 && tv == 2) return 1;  // ac
    if (tu == 1 && tv == 2) return 2;  // bc
    if (tu == 2 && tv == 1) return 3;  // cb
    return 4;                          // cc
}

inline long long arc_class_count(const GraphConfig& g, int cls) {
    const long long M = g.M, n = g.n, w = g.w(), N = g.N;
    if (g.kind == GraphCase::EverySet) {
        switch (cls) {
            case 0: return M * (M - 1) * n * n;
            case 1: return M * (M - 1) * n * w;
            case 2: return M * (M - 1) * n * w;
            case 3: return M * (M - 1) * w * w;
        }
    } else {
        switch (cls) {
            case 0: return (M - 1) * N * n;
            case 1: return n * (M - 1) * N;
            case 2: return w * (M - 1) * N;
            case 3: return (M - 1) * N * w;
            case 4: return (M - 1) * (M - 2) * N * N;
        }
    }
    throw std::invalid_argument("arc_class_count: bad class");
}

struct Projection {
    SubspaceState state;
    double residual = 0.0;  // norm of the component outside the subspace
};

/// Coordinates of the state in the invariant basis plus the leftover norm.
/// The residual is evaluated directly on the remainder vector; forming
/// sqrt(|psi|^2 - |coords|^2) instead would drown trajectories in rounding
/// noise around 1e-8.
inline Projection project(const EdgeState& s, GraphCase basis) {
    const GraphConfig& g = s.config;
    if (g.kind != basis) throw std::invalid_argument("project: config does not match basis case");
    const int k = subspace_dimension(basis);
    CVec sums(static_cast<std::size_t>(k));
    const long long dim = g.edge_space_dimension();
    for (long long idx = 0; idx < dim; ++idx) {
        const Arc a = arc_at(g, idx);
        const int cls = arc_class(g, a.u, a.v);
        sums[static_cast<std::size_t>(cls)] += s.amp[static_cast<std::size_t>(idx)];
    }
    CVec coords(static_cast<std::size_t>(k));
    std::vector<double> inv_root(static_cast<std::size_t>(k), 0.0);
    for (int c = 0; c < k; ++c) {
        const long long count = arc_class_count(g, c);
        if (count > 0) {
            inv_root[static_cast<std::size_t>(c)] = 1.0 / std::sqrt(static_cast<double>(count));
            coords[static_cast<std::size_t>(c)] =
                sums[static_cast<std::size_t>(c)] * inv_root[static_cast<std::size_t>(c)];
        }
    }
    double res2 = 0.0;
    for (long long idx = 0; idx < dim; ++idx) {
        const Arc a = arc_at(g, idx);
        const int cls = arc_class(g, a.u, a.v);
        const Complex expected =
            coords[static_cast<std::size_t>(cls)] * inv_root[static_cast<std::size_t>(cls)];
        res2 += std::norm(s.amp[static_cast<std::size_t>(idx)] - expected);
    }
    return {{basis, coords}, std::sqrt(res2)};
}

/// Unit edge state spread uniformly over one basis class.
inline EdgeState subspace_basis_vector(const GraphConfig& g, GraphCase basis, int cls) {
    if (g.kind != basis)
        throw std::invalid_argument("subspace_basis_vector: config/basis mismatch");
    if (cls < 0 || cls >= subspace_dimension(basis))
        throw std::invalid_argument("subspace_basis_vector: bad class");
    const long long count = arc_class_count(g, cls);
    if (count == 0) throw std::domain_error("subspace_basis_vector: empty class for this config");
    EdgeState s{g, CVec(static_cast<std::size_t>(g.edge_space_dimension()))};
    const double a = 1.0 / std::sqrt(static_cast<double>(count));
    const long long dim = g.edge_space_dimension();
    for (long long idx = 0; idx < dim; ++idx) {
        const Arc arc = arc_at(g, idx);
        if (arc_class(g, arc.u, arc.v) == cls) s.amp[static_cast<std::size_t>(idx)] = a;
    }
    return s;
}

/// B' U_full B over the basis embedding: the reduced operator computed from
/// the full-space step, used to cross-check the printed matrices.
inline SubspaceOperator reduced_operator(const GraphConfig& g, GraphCase basis, double alpha,
                                         double beta) {
    if (g.edge_space_dimension() > 100'000)
        throw std::domain_error("reduced_operator: edge dimension beyond the documented guard");
    const int k = subspace_dimension(basis);
    CMat m(k);
    for (int col = 0; col < k; ++col) {
        const EdgeState stepped = walk_step(subspace_basis_vector(g, basis, col), alpha, beta);
        const Projection p = project(stepped, basis);
        for (int row = 0; row < k; ++row)
            m(row, col) = p.state.amp[static_cast<std::size_t>(row)];
    }
    return {basis, m};
}

}  // namespace mpqw
