#pragma once

#include <string>

#include "qms/rational.hpp"

namespace qms {

/// Quaternion over the rationals: a0 + a1*i + a2*j + a3*k with
/// i^2 = j^2 = k^2 = ijk = -1. Multiplication is associative but not
/// commutative; every nonzero element has a two-sided inverse, so these
/// scalars form a division ring.
struct Quaternion {
    Rational a0, a1, a2, a3;

    Quaternion() : a0(0), a1(0), a2(0), a3(0) {}
    Quaternion(Rational r0, Rational r1, Rational r2, Rational r3)
        : a0(std::move(r0)), a1(std::move(r1)), a2(std::move(r2)), a3(std::move(r3)) {}
    explicit Quaternion(long scalar) : a0(scalar), a1(0), a2(0), a3(0) {}
    explicit Quaternion(const Rational& scalar) : a0(scalar), a1(0), a2(0), a3(0) {}

    static Quaternion zero() { return Quaternion(); }
    static Quaternion one() { return Quaternion(1); }
    static Quaternion i() { return Quaternion(rat(0), rat(1), rat(0), rat(0)); }
    static Quaternion j() { return Quaternion(rat(0), rat(0), rat(1), rat(0)); }
    static Quaternion k() { return Quaternion(rat(0), rat(0), rat(0), rat(1)); }

    bool is_zero() const {
        return qms::is_zero(a0) && qms::is_zero(a1) && qms::is_zero(a2) && qms::is_zero(a3);
    }

    bool operator==(const Quaternion& o) const {
        return a0 == o.a0 && a1 == o.a1 && a2 == o.a2 && a3 == o.a3;
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    Quaternion operator-() const { return {-a0, -a1, -a2, -a3}; }

    Quaternion& operator+=(const Quaternion& o) {
        a0 += o.a0;
        a1 += o.a1;
        a2 += o.a2;
        a3 += o.a3;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        a0 -= o.a0;
        a1 -= o.a1;
        a2 -= o.a2;
        a3 -= o.a3;
        return *this;
    }

    friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
    friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }

    /// Hamilton product; order matters.
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
        return {x.a0 * y.a0 - x.a1 * y.a1 - x.a2 * y.a2 - x.a3 * y.a3,
                x.a0 * y.a1 + x.a1 * y.a0 + x.a2 * y.a3 - x.a3 * y.a2,
                x.a0 * y.a2 - x.a1 * y.a3 + x.a2 * y.a0 + x.a3 * y.a1,
                x.a0 * y.a3 + x.a1 * y.a2 - x.a2 * y.a1 + x.a3 * y.a0};
    }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
};

inline Quaternion q_conj(const Quaternion& x) { return {x.a0, -x.a1, -x.a2, -x.a3}; }

/// a0^2 + a1^2 + a2^2 + a3^2; zero iff x = 0. Multiplicative.
inline Rational q_norm2(const Quaternion& x) {
    return x.a0 * x.a0 + x.a1 * x.a1 + x.a2 * x.a2 + x.a3 * x.a3;
}

inline Quaternion q_mul(const Quaternion& x, const Quaternion& y) { return x * y; }

/// Two-sided inverse conj(x)/norm2(x).
inline Quaternion q_inv(const Quaternion& x) {
    if (x.is_zero()) throw DivisionByZero("inverse of zero quaternion");
    const Rational n2 = q_norm2(x);
    const Quaternion c = q_conj(x);
    return {c.a0 / n2, c.a1 / n2, c.a2 / n2, c.a3 / n2};
}

inline std::string to_string(const Quaternion& q) {
    return "[" + to_string(q.a0) + "," + to_string(q.a1) + "," + to_string(q.a2) + "," +
           to_string(q.a3) + "]";
}

}  // namespace qms
