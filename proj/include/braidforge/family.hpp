#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/gamma0.hpp"
#include "braidforge/quiver.hpp"

namespace braidforge {

/// Everything needed to build one n-dimensional family member: the
/// floor(n/2) summand parameters, the scalars placed on the parameter
/// arrows of Sigma_n (the loop when n is even, forward arrows otherwise),
/// and the central parameter mu.
struct FamilySpec {
    std::size_t n = 0;
    std::vector<Rational> lambdas;
    std::vector<Cyclotomic> arrow_scalars;
    Rational mu{1};
};

inline void validate(const FamilySpec& spec) {
    if (spec.n < 1) throw InvalidSpecError("dimension must be at least 1");
    const std::size_t params = spec.n / 2;
    if (spec.lambdas.size() != params)
        throw InvalidSpecError("expected " + std::to_string(params) + " lambda value(s), got " +
                               std::to_string(spec.lambdas.size()));
    if (spec.arrow_scalars.size() != params)
        throw InvalidSpecError("expected " + std::to_string(params) + " arrow scalar(s), got " +
                               std::to_string(spec.arrow_scalars.size()));
    for (std::size_t i = 0; i < spec.lambdas.size(); ++i) {
        if (spec.lambdas[i] == 0 || spec.lambdas[i] == 1)
            throw InvalidSpecError("lambda values 0 and 1 are excluded");
        for (std::size_t j = i + 1; j < spec.lambdas.size(); ++j)
            if (spec.lambdas[i] == spec.lambdas[j])
                throw InvalidSpecError("lambda values must be pairwise distinct");
    }
    // Forward arrows must carry nonzero scalars or the glued representation
    // has an invariant subspace; the even-case loop (index 0) may be zero.
    const std::size_t first_forward = spec.n % 2 == 0 ? 1 : 0;
    for (std::size_t i = first_forward; i < spec.arrow_scalars.size(); ++i)
        if (spec.arrow_scalars[i].is_zero())
            throw InvalidSpecError("forward arrow scalars must be nonzero");
    if (spec.mu == 0) throw InvalidSpecError("central parameter mu must be nonzero");
}

namespace detail {

inline std::vector<QRep> alternating_summands(std::size_t n, const std::vector<Rational>& lambdas) {
    std::vector<QRep> out;
    if (n % 2 == 1) out.push_back(make_S(1, 1));
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        out.push_back(make_T(i % 2 == 0 ? 1 : 2, lambdas[i]));
    return out;
}

}  // namespace detail

/// The alternating summand collection: T_1(l_1), T_2(l_2), T_1(l_3), ...
/// for even n, with S_11 prepended for odd n. Total dimension is n.
inline std::vector<QRep> summand_list(std::size_t n, const std::vector<Rational>& lambdas) {
    if (n < 2) throw InvalidSpecError("summand list needs n >= 2");
    if (lambdas.size() != n / 2)
        throw InvalidSpecError("expected " + std::to_string(n / 2) + " lambda value(s)");
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j]) throw InvalidSpecError("duplicate lambda value");
    return detail::alternating_summands(n, lambdas);
}

/// Sigma_n with the spec's scalars on the parameter arrows and 1 on every
/// backward arrow.
inline LabeledQuiver member_sigma(const FamilySpec& spec) {
    const SigmaQuiver sq = sigma_quiver(spec.n);
    LabeledQuiver lq{sq.quiver, std::vector<Cyclotomic>(sq.quiver.arrows.size())};
    for (std::size_t i = 0; i < sq.parameter_arrows.size(); ++i)
        lq.labels[sq.parameter_arrows[i]] = spec.arrow_scalars[i];
    for (std::size_t a : sq.backward_arrows) lq.labels[a] = Cyclotomic(1);
    return lq;
}

/// Glues the summands along a labeled quiver on the summand indices: the
/// result is blockdiag(summands) plus, for each arrow i -> j with nonzero
/// label, label times the first self/cross extension cocycle of
/// (V_i, V_j) placed in block row j, block column i.
inline QRep glue_member(const std::vector<QRep>& summands, const LabeledQuiver& sigma) {
    sigma.check();
    if (sigma.quiver.vertex_count != summands.size())
        throw DimensionMismatchError("one quiver vertex per summand required");
    const std::size_t count = summands.size();
    QRep out;
    out.dim.assign(5, 0);
    // offsets[m][v]: first coordinate of summand m inside vertex space v
    std::vector<std::array<std::size_t, 5>> offsets(count);
    for (std::size_t m = 0; m < count; ++m) {
        summands[m].check();
        for (std::size_t v = 0; v < 5; ++v) {
            offsets[m][v] = static_cast<std::size_t>(out.dim[v]);
            out.dim[v] += summands[m].dim[v];
        }
    }
    for (std::size_t k = 0; k < kQArrows; ++k) {
        out.maps[k] = Matrix(static_cast<std::size_t>(out.dim[arrow_target(k)]),
                             static_cast<std::size_t>(out.dim[arrow_source(k)]));
        for (std::size_t m = 0; m < count; ++m) {
            const Matrix& blk = summands[m].maps[k];
            const std::size_t r0 = offsets[m][arrow_target(k)];
            const std::size_t c0 = offsets[m][arrow_source(k)];
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j) out.maps[k](r0 + i, c0 + j) = blk(i, j);
        }
    }
    for (std::size_t a = 0; a < sigma.quiver.arrows.size(); ++a) {
        const Cyclotomic& label = sigma.labels[a];
        if (label.is_zero()) continue;
        const std::size_t i = sigma.quiver.arrows[a].source;
        const std::size_t j = sigma.quiver.arrows[a].target;
        const HomExt he = hom_ext(summands[i], summands[j]);
        if (he.ext_dim == 0)
            throw InvalidSpecError("no extension between summands " + std::to_string(i) + " and " +
                                   std::to_string(j));
        const auto& cocycle = he.cocycles.front();
        for (std::size_t k = 0; k < kQArrows; ++k) {
            const Matrix& blk = cocycle[k];
            const std::size_t r0 = offsets[j][arrow_target(k)];
            const std::size_t c0 = offsets[i][arrow_source(k)];
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    if (!blk(r, c).is_zero()) out.maps[k](r0 + r, c0 + c) += label * blk(r, c);
        }
    }
    return out;
}

namespace detail {

inline bool base_change_invertible(const QRep& r) {
    try {
        assemble_base_change(r);
        return true;
    } catch (const DegenerateBaseChangeError&) {
        return false;
    }
}

}  // namespace detail

namespace detail {

// Glue coefficients for the member assembly. Parameter arrows carry the
// spec's scalars. Backward arrows carry -1: conjugating the chain by an
// alternating sign change of vertex bases identifies (forward a, backward
// -1) with (forward -a, backward +1), so this is the same family in a
// chart whose base change stays invertible on positive integer
// parameters (backward +1 degenerates at e.g. n=4, lambdas (2,3), unit
// scalars).
inline LabeledQuiver glue_labels(const FamilySpec& spec) {
    const SigmaQuiver sq = sigma_quiver(spec.n);
    LabeledQuiver lq{sq.quiver, std::vector<Cyclotomic>(sq.quiver.arrows.size())};
    for (std::size_t i = 0; i < sq.parameter_arrows.size(); ++i)
        lq.labels[sq.parameter_arrows[i]] = spec.arrow_scalars[i];
    for (std::size_t a : sq.backward_arrows) lq.labels[a] = Cyclotomic(-1);
    return lq;
}

}  // namespace detail

/// Builds the n-dimensional family member for a validated spec.
///
/// n = 1 is the one-dimensional representation S_11 (no quiver involved).
/// Otherwise the summands are glued along Sigma_n after checking that the
/// labeled Sigma_n is simple. The loop scalar is realized by the
/// self-extension cocycle of the first summand; when that assembly
/// happens to produce a singular base change (isolated parameter choices
/// can), a rational loop scalar s is absorbed into the first summand
/// parameter as lambda_1 (1 + s) instead, which moves along the same
/// one-parameter family.
inline QRep build_family_member(const FamilySpec& spec) {
    validate(spec);
    if (spec.n == 1) return make_S(1, 1);
    if (!onedim_is_simple(member_sigma(spec)))
        throw SimplicityError("labeled Sigma quiver is not strongly connected on its nonzero support");
    QRep member = glue_member(summand_list(spec.n, spec.lambdas), detail::glue_labels(spec));
    if (detail::base_change_invertible(member)) return member;
    if (spec.n % 2 == 1)
        throw DegenerateBaseChangeError("glued member has a singular base change");
    const Cyclotomic& loop = spec.arrow_scalars[0];
    if (loop.is_zero() || !loop.is_rational())
        throw DegenerateBaseChangeError("glued member has a singular base change");
    FamilySpec shifted = spec;
    shifted.lambdas[0] *= Rational(1) + loop.re;
    shifted.arrow_scalars[0] = Cyclotomic(0);
    if (shifted.lambdas[0] == 0 || shifted.lambdas[0] == 1)
        throw DegenerateBaseChangeError("glued member has a singular base change");
    // The shift may make lambda_1 collide with a later lambda of the other
    // T-type; those summands are still non-isomorphic, so skip the
    // user-facing distinctness check and let certification decide.
    member = glue_member(detail::alternating_summands(shifted.n, shifted.lambdas),
                         detail::glue_labels(shifted));
    if (!detail::base_change_invertible(member))
        throw DegenerateBaseChangeError("glued member has a singular base change");
    return member;
}

/// Machine-checkable record of the claims made for one family member.
/// A member is accepted only when all three booleans hold.
struct Certificate {
    bool braid_ok = false;
    bool irreducible = false;
    bool central_ok = false;
    Fingerprint fingerprint;
    std::size_t parameter_count = 0;

    bool accepted() const { return braid_ok && irreducible && central_ok; }
};

/// Runs the full certification pipeline on a member: conversion to a
/// (U, V) pair, Burnside irreducibility, braid lift, braid relation and
/// central character. A singular base change is reported as a failing
/// certificate rather than an error.
inline Certificate certify_member(const QRep& r, const Rational& mu,
                                  const WordList& words = default_word_list()) {
    Certificate cert;
    cert.parameter_count = static_cast<std::size_t>(k_default(static_cast<std::int64_t>(r.a_total())));
    Gamma0Rep g;
    try {
        g = to_gamma0(r);
    } catch (const DegenerateBaseChangeError&) {
        return cert;
    } catch (const DimensionMismatchError&) {
        return cert;
    }
    cert.irreducible = is_irreducible(g);
    const B3Rep b3 = lift_to_b3(g, mu);
    cert.braid_ok = check_braid(b3);
    try {
        Rational mu6 = mu * mu * mu;
        mu6 *= mu6;
        cert.central_ok = central_character(b3) == Cyclotomic(mu6);
    } catch (const NonScalarCentralError&) {
        cert.central_ok = false;
    }
    cert.fingerprint = fingerprint(g, words);
    return cert;
}

/// True iff the fingerprints of the members are pairwise distinct.
inline bool pairwise_distinct(const std::vector<Gamma0Rep>& members,
                              const WordList& words = default_word_list()) {
    std::vector<Fingerprint> fps;
    fps.reserve(members.size());
    for (const Gamma0Rep& g : members) fps.push_back(fingerprint(g, words));
    for (std::size_t i = 0; i < fps.size(); ++i)
        for (std::size_t j = i + 1; j < fps.size(); ++j)
            if (fps[i] == fps[j]) return false;
    return true;
}

}  // namespace braidforge
