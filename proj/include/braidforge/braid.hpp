#pragma once

#include <cstdint>

#include "braidforge/gamma0.hpp"

namespace braidforge {

/// Matrices for the two braid generators plus the central parameter mu.
/// The center (sigma1 sigma2)^3 acts as mu^6.
struct B3Rep {
    std::size_t n = 0;
    Matrix sigma1;
    Matrix sigma2;
    Rational mu{1};
};

/// Lifts (U, V) to the braid group: sigma1 = mu V^2 U, sigma2 = mu U V^2.
/// Then sigma1 sigma2 = mu^2 V and sigma1 sigma2 sigma1 = mu^3 U, so the
/// braid relation holds identically and the center acts by mu^6.
inline B3Rep lift_to_b3(const Gamma0Rep& g, const Rational& mu) {
    if (mu == 0) throw InvalidSpecError("central parameter mu must be nonzero");
    const Matrix v2 = g.V * g.V;
    const Cyclotomic c{mu};
    return {g.n, c * (v2 * g.U), c * (g.U * v2), mu};
}

inline bool check_braid(const B3Rep& r) {
    return r.sigma1 * r.sigma2 * r.sigma1 == r.sigma2 * r.sigma1 * r.sigma2;
}

/// The scalar by which (sigma1 sigma2)^3 acts; mu^6 for lifted
/// representations. Throws when the action is not scalar.
inline Cyclotomic central_character(const B3Rep& r) {
    const Matrix p = r.sigma1 * r.sigma2;
    const auto scalar = (p * p * p).as_scalar();
    if (!scalar) throw NonScalarCentralError("(sigma1 sigma2)^3 does not act as a scalar");
    return *scalar;
}

/// Recovers (U, V) from a lift: V = mu^-2 sigma1 sigma2 and
/// U = mu^-3 sigma1 sigma2 sigma1.
inline Gamma0Rep recover_gamma0(const B3Rep& r) {
    if (r.mu == 0) throw InvalidSpecError("central parameter mu must be nonzero");
    const Cyclotomic mu_inv = inv(Cyclotomic(r.mu));
    const Cyclotomic m2 = mu_inv * mu_inv;
    const Matrix p = r.sigma1 * r.sigma2;
    return {r.n, (m2 * mu_inv) * (p * r.sigma1), m2 * p};
}

inline bool b3_irreducible(const B3Rep& r) {
    const Gamma0Rep g = recover_gamma0(r);
    return is_irreducible(g);
}

inline Fingerprint fingerprint(const B3Rep& r, const WordList& words = default_word_list()) {
    return fingerprint_of(r.sigma1, r.sigma2, words);
}

/// Upper bound 2 - chi(alpha, alpha) on the number of free parameters a
/// family with this dimension vector can carry.
inline std::int64_t admissible_bound(const DimVec& alpha) {
    return 2 - euler_form(westbury_quiver(), alpha, alpha);
}

/// The parameter count this library realizes for dimension n: the
/// floor(n/2) summand parameters plus mu.
inline constexpr std::int64_t k_default(std::int64_t n) { return n / 2 + 1; }

}  // namespace braidforge
