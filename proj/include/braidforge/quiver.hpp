#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "braidforge/cyclotomic.hpp"
#include "braidforge/errors.hpp"

namespace braidforge {

struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver: loops and parallel arrows allowed.
struct Quiver {
    std::size_t vertex_count = 0;
    std::vector<Arrow> arrows;

    void check() const {
        for (const Arrow& a : arrows)
            if (a.source >= vertex_count || a.target >= vertex_count)
                throw DimensionMismatchError("arrow endpoint out of range");
    }
    friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// One non-negative coordinate per vertex.
using DimVec = std::vector<std::int64_t>;

/// Euler form chi(alpha, beta) = sum_v a_v b_v - sum_{arrows i->j} a_i b_j.
inline std::int64_t euler_form(const Quiver& q, const DimVec& alpha, const DimVec& beta) {
    if (alpha.size() != q.vertex_count || beta.size() != q.vertex_count)
        throw DimensionMismatchError("dimension vector length mismatch");
    std::int64_t chi = 0;
    for (std::size_t v = 0; v < q.vertex_count; ++v) chi += alpha[v] * beta[v];
    for (const Arrow& a : q.arrows) chi -= alpha[a.source] * beta[a.target];
    return chi;
}

namespace detail {

// Vertices of `scope` reachable from scope[start] inside the induced subquiver,
// with arrows optionally reversed.
inline std::size_t reachable_count(const Quiver& q, const std::vector<std::size_t>& scope,
                                   bool reversed) {
    std::vector<std::int32_t> in_scope(q.vertex_count, -1);
    for (std::size_t i = 0; i < scope.size(); ++i) in_scope[scope[i]] = static_cast<std::int32_t>(i);
    std::vector<std::vector<std::size_t>> adj(scope.size());
    for (const Arrow& a : q.arrows) {
        const std::size_t s = reversed ? a.target : a.source;
        const std::size_t t = reversed ? a.source : a.target;
        if (in_scope[s] >= 0 && in_scope[t] >= 0)
            adj[static_cast<std::size_t>(in_scope[s])].push_back(static_cast<std::size_t>(in_scope[t]));
    }
    std::vector<bool> seen(scope.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            ++count;
            stack.push_back(w);
        }
    }
    return count;
}

}  // namespace detail

/// True iff every ordered pair of scope vertices is joined by a directed
/// path in the induced subquiver. A single vertex (or empty scope) counts
/// as strongly connected.
inline bool is_strongly_connected(const Quiver& q, const std::vector<std::size_t>& scope) {
    for (std::size_t v : scope)
        if (v >= q.vertex_count) throw DimensionMismatchError("scope vertex out of range");
    if (scope.size() <= 1) return true;
    return detail::reachable_count(q, scope, false) == scope.size() &&
           detail::reachable_count(q, scope, true) == scope.size();
}

inline bool is_strongly_connected(const Quiver& q) {
    std::vector<std::size_t> all(q.vertex_count);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return is_strongly_connected(q, all);
}

/// Local quiver of a summand collection: vertex v_i per dimension vector,
/// 1 - chi(a_i, a_i) loops at v_i and -chi(a_i, a_j) arrows v_i -> v_j.
/// Vertex order follows input order; arrows are emitted in row-major
/// (source, target) order so serialization is deterministic.
inline Quiver local_quiver(const Quiver& base, const std::vector<DimVec>& dims) {
    const std::size_t k = dims.size();
    Quiver out{k, {}};
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const std::int64_t count =
                i == j ? 1 - euler_form(base, dims[i], dims[i]) : -euler_form(base, dims[i], dims[j]);
            if (count < 0)
                throw NegativeCountError("summand collection yields a negative loop/arrow count");
            for (std::int64_t c = 0; c < count; ++c) out.arrows.push_back({i, j});
        }
    }
    return out;
}

/// Family quiver Sigma_n with its designated parameter arrows.
///
/// Even n: floor(n/2) vertices, a loop at the first vertex, and a pair of
/// opposite arrows between consecutive vertices. Parameters are the loop
/// followed by the forward arrows. Odd n: one extra leading vertex, no
/// loop, parameters are the forward arrows. Backward arrows always carry
/// the label 1.
struct SigmaQuiver {
    Quiver quiver;
    std::vector<std::size_t> parameter_arrows;
    std::vector<std::size_t> backward_arrows;
};

inline SigmaQuiver sigma_quiver(std::size_t n) {
    if (n < 2) throw InvalidSpecError("sigma quiver needs n >= 2");
    const std::size_t params = n / 2;
    const bool even = n % 2 == 0;
    const std::size_t vertices = even ? params : params + 1;
    SigmaQuiver sq;
    sq.quiver.vertex_count = vertices;
    if (even) {
        sq.quiver.arrows.push_back({0, 0});
        sq.parameter_arrows.push_back(0);
    }
    for (std::size_t v = 0; v + 1 < vertices; ++v) {
        sq.quiver.arrows.push_back({v, v + 1});
        sq.parameter_arrows.push_back(sq.quiver.arrows.size() - 1);
        sq.quiver.arrows.push_back({v + 1, v});
        sq.backward_arrows.push_back(sq.quiver.arrows.size() - 1);
    }
    return sq;
}

/// 1 - chi_q(1,...,1) = 1 - (#vertices - #arrows).
inline std::int64_t family_dimension(const Quiver& q) {
    return 1 - (static_cast<std::int64_t>(q.vertex_count) - static_cast<std::int64_t>(q.arrows.size()));
}

/// Quiver with one scalar label per arrow (a representation with every
/// vertex space one-dimensional).
struct LabeledQuiver {
    Quiver quiver;
    std::vector<Cyclotomic> labels;

    void check() const {
        quiver.check();
        if (labels.size() != quiver.arrows.size())
            throw DimensionMismatchError("label count differs from arrow count");
    }
};

/// Simplicity test for dimension vector (1,...,1): the representation is
/// simple iff the subquiver of arrows with nonzero labels is strongly
/// connected. Loops never contribute to connectivity.
inline bool onedim_is_simple(const LabeledQuiver& lq) {
    lq.check();
    Quiver support{lq.quiver.vertex_count, {}};
    for (std::size_t a = 0; a < lq.quiver.arrows.size(); ++a) {
        const Arrow& ar = lq.quiver.arrows[a];
        if (ar.source != ar.target && !lq.labels[a].is_zero()) support.arrows.push_back(ar);
    }
    return is_strongly_connected(support);
}

}  // namespace braidforge
