#pragma once

#include <array>
#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "braidforge/matrix.hpp"
#include "braidforge/quiver.hpp"

namespace braidforge {

// The bipartite quiver behind every construction here: two source
// vertices a1, a2 (order-2 eigenspaces, eigenvalues +1 and -1) and three
// sink vertices b1, b2, b3 (order-3 eigenspaces, eigenvalues 1, w, w^2),
// with one arrow a_i -> b_j for every pair. Vertices are indexed
// (a1, a2, b1, b2, b3) = (0, 1, 2, 3, 4) and the six arrows are kept in
// lexicographic order a1b1, a1b2, a1b3, a2b1, a2b2, a2b3.
inline constexpr std::size_t kQArrows = 6;

inline constexpr std::size_t arrow_source(std::size_t k) { return k / 3; }
inline constexpr std::size_t arrow_target(std::size_t k) { return 2 + k % 3; }

inline const Quiver& westbury_quiver() {
    static const Quiver q = [] {
        Quiver w{5, {}};
        for (std::size_t k = 0; k < kQArrows; ++k) w.arrows.push_back({arrow_source(k), arrow_target(k)});
        return w;
    }();
    return q;
}

/// Representation of the bipartite quiver: a dimension vector
/// (a1, a2, b1, b2, b3) and one b_j x a_i matrix per arrow.
struct QRep {
    DimVec dim;                      // 5 coordinates
    std::array<Matrix, kQArrows> maps;

    std::size_t a_total() const { return static_cast<std::size_t>(dim[0] + dim[1]); }
    std::size_t b_total() const { return static_cast<std::size_t>(dim[2] + dim[3] + dim[4]); }

    void check() const {
        if (dim.size() != 5) throw DimensionMismatchError("dimension vector must have 5 entries");
        for (std::int64_t d : dim)
            if (d < 0) throw DimensionMismatchError("negative dimension");
        for (std::size_t k = 0; k < kQArrows; ++k) {
            if (maps[k].rows() != static_cast<std::size_t>(dim[arrow_target(k)]) ||
                maps[k].cols() != static_cast<std::size_t>(dim[arrow_source(k)]))
                throw DimensionMismatchError("arrow map shape differs from dimension vector");
        }
    }
};

/// A pair (U, V) with U^2 = V^3 = I: the order-2 and order-3 generator
/// of the free product C2 * C3 in the eigenbasis of U.
struct Gamma0Rep {
    std::size_t n = 0;
    Matrix U;
    Matrix V;
};

inline bool satisfies_group_relations(const Gamma0Rep& g) {
    return (g.U * g.U).is_identity() && (g.V * g.V * g.V).is_identity();
}

/// One-dimensional simple with U acting by +/-1 (slot i) and V by the
/// j-th cube root of unity. i in {1,2}, j in {1,2,3}.
inline QRep make_S(int i, int j) {
    if (i < 1 || i > 2 || j < 1 || j > 3)
        throw InvalidSpecError("S constructor index out of range");
    QRep r;
    r.dim = {i == 1, i == 2, j == 1, j == 2, j == 3};
    for (std::size_t k = 0; k < kQArrows; ++k)
        r.maps[k] = Matrix(static_cast<std::size_t>(r.dim[arrow_target(k)]),
                           static_cast<std::size_t>(r.dim[arrow_source(k)]));
    const std::size_t k = static_cast<std::size_t>(i - 1) * 3 + static_cast<std::size_t>(j - 1);
    r.maps[k](0, 0) = Cyclotomic(1);
    return r;
}

/// Two-dimensional representation T_i(lambda) with b-part supported away
/// from slot i. The base-change block on the two active b-rows (taken in
/// increasing slot order) is [[lambda, 1], [1, 1]].
inline QRep make_T_unchecked(int i, const Rational& lambda) {
    if (i < 1 || i > 3) throw InvalidSpecError("T constructor index out of range");
    QRep r;
    r.dim = {1, 1, i != 1, i != 2, i != 3};
    for (std::size_t k = 0; k < kQArrows; ++k)
        r.maps[k] = Matrix(static_cast<std::size_t>(r.dim[arrow_target(k)]),
                           static_cast<std::size_t>(r.dim[arrow_source(k)]));
    std::array<std::size_t, 2> active{};  // b-slot indices 0..2
    std::size_t pos = 0;
    for (std::size_t b = 0; b < 3; ++b)
        if (b != static_cast<std::size_t>(i - 1)) active[pos++] = b;
    r.maps[0 * 3 + active[0]](0, 0) = Cyclotomic(lambda);  // a1 -> b_first
    r.maps[0 * 3 + active[1]](0, 0) = Cyclotomic(1);       // a1 -> b_last
    r.maps[1 * 3 + active[0]](0, 0) = Cyclotomic(1);       // a2 -> b_first
    r.maps[1 * 3 + active[1]](0, 0) = Cyclotomic(1);       // a2 -> b_last
    return r;
}

inline QRep make_T(int i, const Rational& lambda) {
    if (lambda == 1)
        throw DegenerateBaseChangeError("T(lambda=1) has a singular base change");
    if (lambda == 0)
        throw ReducibleParameterError("T(lambda=0) is reducible");
    return make_T_unchecked(i, lambda);
}

/// Stacks the six arrow maps into the full base-change matrix, rows
/// grouped by b-slots and columns by a-slots. Throws when the dimension
/// vector is unbalanced or the result is singular.
inline Matrix assemble_base_change(const QRep& r) {
    r.check();
    if (r.a_total() != r.b_total())
        throw DimensionMismatchError("unbalanced dimension vector: base change is not square");
    const std::size_t n = r.a_total();
    std::array<std::size_t, 2> a_off{0, static_cast<std::size_t>(r.dim[0])};
    std::array<std::size_t, 3> b_off{0, static_cast<std::size_t>(r.dim[2]),
                                     static_cast<std::size_t>(r.dim[2] + r.dim[3])};
    Matrix b(n, n);
    for (std::size_t k = 0; k < kQArrows; ++k) {
        const Matrix& m = r.maps[k];
        const std::size_t r0 = b_off[arrow_target(k) - 2];
        const std::size_t c0 = a_off[arrow_source(k)];
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) b(r0 + i, c0 + j) = m(i, j);
    }
    if (!is_invertible(b)) throw DegenerateBaseChangeError("assembled base change is singular");
    return b;
}

/// Reads the pair (U, V) off a representation of the bipartite quiver:
/// in the a-basis U = diag(+1 x a1, -1 x a2) and V = B^-1 D B with
/// D = diag(1 x b1, w x b2, w^2 x b3).
inline Gamma0Rep to_gamma0(const QRep& r) {
    const Matrix b = assemble_base_change(r);
    const std::size_t n = b.rows();
    Matrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        u(i, i) = Cyclotomic(i < static_cast<std::size_t>(r.dim[0]) ? 1 : -1);
    Matrix d(n, n);
    const std::array<Cyclotomic, 3> eigen{Cyclotomic(1), Cyclotomic::omega(), Cyclotomic::omega_sq()};
    std::size_t row = 0;
    for (std::size_t slot = 0; slot < 3; ++slot)
        for (std::int64_t c = 0; c < r.dim[2 + slot]; ++c) d(row, row) = eigen[slot], ++row;
    Gamma0Rep g{n, std::move(u), inverse(b) * d * b};
    if (!satisfies_group_relations(g))
        throw Error("internal error: generator orders violated");  // unreachable
    return g;
}

namespace detail {

inline std::vector<Cyclotomic> flatten(const Matrix& m) {
    return m.entries();
}

inline Matrix unflatten(const std::vector<Cyclotomic>& v, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

}  // namespace detail

/// Dimension of the unital algebra generated by two n x n matrices,
/// computed by closing span{I} under left multiplication by either
/// generator.
inline std::size_t generated_algebra_dimension(const Matrix& x, const Matrix& y) {
    const std::size_t n = x.rows();
    if (x.cols() != n || y.rows() != n || y.cols() != n)
        throw DimensionMismatchError("algebra generators must be square of equal size");
    const std::size_t full = n * n;
    EchelonSpan span(full);
    // Worklist of products already known to lie in the span. Every queued
    // matrix gets multiplied by both generators exactly once, so on
    // termination the span is closed under left multiplication.
    std::deque<Matrix> work;
    span.insert(detail::flatten(Matrix::identity(n)));
    work.push_back(Matrix::identity(n));
    while (!work.empty() && span.dimension() < full) {
        const Matrix m = std::move(work.front());
        work.pop_front();
        for (const Matrix* gen : {&x, &y}) {
            Matrix candidate = *gen * m;
            if (span.insert(detail::flatten(candidate))) work.push_back(std::move(candidate));
            if (span.dimension() == full) break;
        }
    }
    return span.dimension();
}

namespace detail {

// Reduction of the algebra-span computation modulo a fixed prime
// p = 1 (mod 3), so Q(w) maps into F_p by sending w to a cube root of
// unity. Rank over F_p never exceeds rank over Q, hence a full mod-p
// span certifies a full rational span exactly; anything smaller is
// inconclusive and the caller re-runs the exact computation. With
// p < 2^31 all products fit in unsigned 64-bit words.
inline constexpr std::uint64_t kModPrime = 2013265921;  // 15 * 2^27 + 1

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    base %= kModPrime;
    while (exp) {
        if (exp & 1) acc = acc * base % kModPrime;
        base = base * base % kModPrime;
        exp >>= 1;
    }
    return acc;
}

inline std::uint64_t mod_omega() {
    static const std::uint64_t w = [] {
        for (std::uint64_t g = 2;; ++g) {
            const std::uint64_t r = mod_pow(g, (kModPrime - 1) / 3);
            if (r != 1 && (r * r % kModPrime + r + 1) % kModPrime == 0) return r;
        }
    }();
    return w;
}

inline std::uint64_t mod_of(const Int& v) {
    Int r = v % Int(kModPrime);
    if (r < 0) r += Int(kModPrime);
    return r.convert_to<std::uint64_t>();
}

/// Entrywise image of a matrix in F_p; empty when a denominator
/// vanishes mod p.
inline std::optional<std::vector<std::uint64_t>> mod_image(const Matrix& m) {
    std::vector<std::uint64_t> out;
    out.reserve(m.rows() * m.cols());
    const std::uint64_t w = mod_omega();
    for (const Cyclotomic& x : m.entries()) {
        const std::uint64_t dre = mod_of(den(x.re));
        const std::uint64_t dom = mod_of(den(x.om));
        if (dre == 0 || dom == 0) return std::nullopt;
        const std::uint64_t re = mod_of(num(x.re)) * mod_pow(dre, kModPrime - 2) % kModPrime;
        const std::uint64_t om = mod_of(num(x.om)) * mod_pow(dom, kModPrime - 2) % kModPrime;
        out.push_back((re + om * w) % kModPrime);
    }
    return out;
}

/// Worklist span closure over F_p, mirroring the exact version below.
/// Returns true when span{words in x, y} is the full matrix algebra.
inline std::optional<bool> modp_algebra_is_full(const Matrix& x, const Matrix& y) {
    const std::size_t n = x.rows();
    const std::size_t full = n * n;
    const auto xm = mod_image(x);
    const auto ym = mod_image(y);
    if (!xm || !ym) return std::nullopt;
    const std::uint64_t p = kModPrime;
    auto mat_mul = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        std::vector<std::uint64_t> c(full, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const std::uint64_t aik = a[i * n + k];
                if (!aik) continue;
                for (std::size_t j = 0; j < n; ++j)
                    c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % p;
            }
        return c;
    };
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::size_t> pivots;
    auto insert = [&](std::vector<std::uint64_t> v) -> bool {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::uint64_t f = v[pivots[r]];
            if (!f) continue;
            const std::uint64_t neg = p - f;
            const auto& row = rows[r];
            for (std::size_t j = pivots[r]; j < full; ++j)
                v[j] = (v[j] + neg * row[j]) % p;
        }
        std::size_t lead = 0;
        while (lead < full && v[lead] == 0) ++lead;
        if (lead == full) return false;
        const std::uint64_t scale = mod_pow(v[lead], p - 2);
        for (std::size_t j = lead; j < full; ++j) v[j] = v[j] * scale % p;
        auto pos = pivots.begin();
        while (pos != pivots.end() && *pos < lead) ++pos;
        const auto idx = static_cast<std::size_t>(pos - pivots.begin());
        pivots.insert(pos, lead);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    };
    std::vector<std::uint64_t> id(full, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    std::deque<std::vector<std::uint64_t>> work;
    insert(id);
    work.push_back(std::move(id));
    while (!work.empty() && rows.size() < full) {
        const std::vector<std::uint64_t> m = std::move(work.front());
        work.pop_front();
        for (const auto* gen : {&*xm, &*ym}) {
            std::vector<std::uint64_t> cand = mat_mul(*gen, m);
            if (insert(cand)) work.push_back(std::move(cand));
            if (rows.size() == full) break;
        }
    }
    return rows.size() == full;
}

}  // namespace detail

/// Burnside criterion: irreducible iff U and V generate the full matrix
/// algebra. A full span modulo a prime already certifies a full rational
/// span, so the exact computation only runs when the modular one comes
/// up short (in particular for every reducible verdict).
inline bool is_irreducible(const Gamma0Rep& g) {
    const auto fast = detail::modp_algebra_is_full(g.U, g.V);
    if (fast && *fast) return true;
    return generated_algebra_dimension(g.U, g.V) == g.n * g.n;
}

/// Hom and Ext data of a pair of representations, from the two-term
/// complex  f : (+)_v Hom(V_v, W_v) -> (+)_a Hom(V_s(a), W_t(a)),
/// f(phi) = (phi_t V_a - W_a phi_s). hom_dim = dim ker f and
/// ext_dim = codim im f, so hom_dim - ext_dim is the Euler form.
/// Cocycles lift a cokernel basis: codomain coordinates are ordered by
/// arrow, then row-major inside each block, and the standard coordinate
/// vectors at the non-pivot coordinates of the row-reduced image are the
/// chosen lifts.
struct HomExt {
    std::size_t hom_dim = 0;
    std::size_t ext_dim = 0;
    std::vector<std::array<Matrix, kQArrows>> cocycles;
};

inline HomExt hom_ext(const QRep& vrep, const QRep& wrep) {
    vrep.check();
    wrep.check();
    const DimVec& a = vrep.dim;
    const DimVec& b = wrep.dim;
    std::array<std::size_t, kQArrows> block_off{};
    std::size_t codomain = 0;
    for (std::size_t k = 0; k < kQArrows; ++k) {
        block_off[k] = codomain;
        codomain += static_cast<std::size_t>(a[arrow_source(k)] * b[arrow_target(k)]);
    }
    std::size_t domain = 0;
    EchelonSpan image(codomain);
    for (std::size_t v = 0; v < 5; ++v) {
        const std::size_t dv = static_cast<std::size_t>(a[v]);
        const std::size_t dw = static_cast<std::size_t>(b[v]);
        for (std::size_t p = 0; p < dw; ++p) {
            for (std::size_t q = 0; q < dv; ++q) {
                ++domain;
                std::vector<Cyclotomic> col(codomain);
                for (std::size_t k = 0; k < kQArrows; ++k) {
                    const std::size_t s = arrow_source(k);
                    const std::size_t t = arrow_target(k);
                    const std::size_t cols = static_cast<std::size_t>(a[s]);
                    if (v == t) {
                        // (E_pq * V_k) has row p equal to row q of V_k
                        for (std::size_t c = 0; c < cols; ++c)
                            col[block_off[k] + p * cols + c] += vrep.maps[k](q, c);
                    }
                    if (v == s) {
                        // (W_k * E_pq) has column q equal to column p of W_k
                        for (std::size_t rr = 0; rr < static_cast<std::size_t>(b[t]); ++rr)
                            col[block_off[k] + rr * cols + q] -= wrep.maps[k](rr, p);
                    }
                }
                image.insert(std::move(col));
            }
        }
    }
    HomExt result;
    result.hom_dim = domain - image.dimension();
    result.ext_dim = codomain - image.dimension();
    std::vector<bool> is_pivot(codomain, false);
    for (std::size_t p : image.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < codomain && result.cocycles.size() < result.ext_dim; ++c) {
        if (is_pivot[c]) continue;
        std::array<Matrix, kQArrows> tuple;
        for (std::size_t k = 0; k < kQArrows; ++k)
            tuple[k] = Matrix(static_cast<std::size_t>(b[arrow_target(k)]),
                              static_cast<std::size_t>(a[arrow_source(k)]));
        std::size_t k = 0;
        while (k + 1 < kQArrows && block_off[k + 1] <= c) ++k;
        const std::size_t cols = static_cast<std::size_t>(a[arrow_source(k)]);
        const std::size_t local = c - block_off[k];
        tuple[k](local / cols, local % cols) = Cyclotomic(1);
        result.cocycles.push_back(std::move(tuple));
    }
    return result;
}

/// Trace fingerprint machinery. Words are strings over {'U','V'}; traces
/// are taken of the corresponding products. The first two default words
/// are the bare generators.
using WordList = std::vector<std::string>;

inline const WordList& default_word_list() {
    static const WordList words{"U", "V", "UV", "UVV", "UVUVV", "UVUV"};
    return words;
}

struct Fingerprint {
    std::vector<Cyclotomic> traces;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint_of(const Matrix& gen_u, const Matrix& gen_v,
                                  const WordList& words = default_word_list()) {
    Fingerprint fp;
    fp.traces.reserve(words.size());
    for (const std::string& word : words) {
        if (word.empty()) throw InvalidSpecError("empty fingerprint word");
        Matrix prod = Matrix::identity(gen_u.rows());
        for (char ch : word) {
            if (ch == 'U')
                prod = prod * gen_u;
            else if (ch == 'V')
                prod = prod * gen_v;
            else
                throw InvalidSpecError("fingerprint words use letters U and V only");
        }
        fp.traces.push_back(prod.trace());
    }
    return fp;
}

inline Fingerprint fingerprint(const Gamma0Rep& g, const WordList& words = default_word_list()) {
    return fingerprint_of(g.U, g.V, words);
}

}  // namespace braidforge
