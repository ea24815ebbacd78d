#pragma once

#include <stdexcept>
#include <string>

namespace mpqw {

/// Which of the two marking layouts the instance uses: marked vertices in
/// every set, or confined to set 0.
enum class GraphCase { EverySet, OneSet };

struct VertexId {
    int set = 0;
    long long vertex = 0;

    friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// A complete M-partite graph instance: M disjoint sets of N vertices each,
/// n marked vertices per marked set (the first n by index). All indices are
/// 0-based.
struct GraphConfig {
    int M = 2;
    long long N = 1;
    long long n = 0;
    GraphCase kind = GraphCase::EverySet;

    GraphConfig(int sets, long long per_set, long long marked, GraphCase c)
        : M(sets), N(per_set), n(marked), kind(c) {
        if (M < 2) throw std::domain_error("GraphConfig: M must be >= 2");
        if (kind == GraphCase::OneSet && M < 3)
            throw std::domain_error("GraphConfig: one-set marking requires M >= 3");
        if (N < 1) throw std::domain_error("GraphConfig: N must be >= 1");
        if (n < 0 || n > N) throw std::domain_error("GraphConfig: n must satisfy 0 <= n <= N");
    }

    long long w() const { return N - n; }

    /// Every vertex sees all vertices of the other M-1 sets.
    long long degree() const { return static_cast<long long>(M - 1) * N; }

    /// Number of ordered adjacent pairs |uv>, i.e. the walker Hilbert-space
    /// dimension M(M-1)N^2.
    long long edge_space_dimension() const {
        return static_cast<long long>(M) * (M - 1) * N * N;
    }

    long long marked_count() const {
        return kind == GraphCase::EverySet ? static_cast<long long>(M) * n : n;
    }

    bool contains(VertexId v) const {
        return v.set >= 0 && v.set < M && v.vertex >= 0 && v.vertex < N;
    }

    bool is_marked(VertexId v) const {
        if (!contains(v))
            throw std::out_of_range("is_marked: vertex (" + std::to_string(v.set) + "," +
                                    std::to_string(v.vertex) + ") outside graph");
        if (kind == GraphCase::EverySet) return v.vertex < n;
        return v.set == 0 && v.vertex < n;
    }

    friend bool operator==(const GraphConfig&, const GraphConfig&) = default;
};

}  // namespace mpqw
