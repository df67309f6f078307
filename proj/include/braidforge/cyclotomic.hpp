#pragma once

#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>

#include "braidforge/rational.hpp"

namespace braidforge {

/// An element re + om*w of Q(w), where w is a primitive cube root of
/// unity with minimal polynomial w^2 + w + 1. Products are reduced with
/// w^2 = -1 - w, so the identities w^3 = 1 and 1 + w + w^2 = 0 hold by
/// construction.
struct Cyclotomic {
    Rational re{0};
    Rational om{0};

    Cyclotomic() = default;
    Cyclotomic(int n) : re(n) {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(Rational r, Rational o) : re(std::move(r)), om(std::move(o)) {}

    static Cyclotomic omega() { return {Rational(0), Rational(1)}; }
    static Cyclotomic omega_sq() { return {Rational(-1), Rational(-1)}; }

    bool is_zero() const { return re == 0 && om == 0; }
    bool is_rational() const { return om == 0; }

    friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

    Cyclotomic operator-() const { return {-re, -om}; }

    Cyclotomic& operator+=(const Cyclotomic& y) {
        re += y.re;
        om += y.om;
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& y) {
        re -= y.re;
        om -= y.om;
        return *this;
    }
    Cyclotomic& operator*=(const Cyclotomic& y) {
        // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2
        //                    = (ac - bd) + (ad + bc - bd) w
        const Rational ac = re * y.re;
        const Rational bd = om * y.om;
        const Rational mixed = re * y.om + om * y.re;
        re = ac - bd;
        om = mixed - bd;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic x, const Cyclotomic& y) { return x += y; }
    friend Cyclotomic operator-(Cyclotomic x, const Cyclotomic& y) { return x -= y; }
    friend Cyclotomic operator*(Cyclotomic x, const Cyclotomic& y) { return x *= y; }

    /// Galois conjugate w -> w^2, i.e. a + b w^2 = (a - b) - b w.
    Cyclotomic conj() const { return {re - om, -om}; }

    /// Field norm x * conj(x) = a^2 - ab + b^2; zero only at x = 0.
    Rational norm() const { return re * re - re * om + om * om; }
};

inline Cyclotomic inv(const Cyclotomic& x) {
    if (x.is_zero()) throw DivisionByZeroError("inverse of zero in Q(w)");
    const Rational n = x.norm();
    Cyclotomic c = x.conj();
    c.re /= n;
    c.om /= n;
    return c;
}

inline Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * inv(y); }

inline std::string to_string(const Cyclotomic& x) {
    if (x.om == 0) return to_string(x.re);
    std::string s;
    if (x.re != 0) s += to_string(x.re) + (x.om > 0 ? "+" : "");
    if (x.om == 1) {
        s += "w";
    } else if (x.om == -1) {
        s += "-w";
    } else {
        s += to_string(x.om) + "w";
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
    return os << to_string(x);
}

}  // namespace braidforge
