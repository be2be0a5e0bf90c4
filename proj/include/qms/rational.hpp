#pragma once

#include <gmpxx.h>

#include <string>

#include "qms/error.hpp"

namespace qms {

/// Exact rational scalar. mpq_class keeps values in canonical form
/// (positive denominator, reduced) through arithmetic; the helpers below
/// enforce the same invariant at construction boundaries.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Parses "p" or "p/q" with q > 0 after sign normalization.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw FormatError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(s);
            return Rational(n);
        }
        mpz_class n(s.substr(0, slash));
        mpz_class d(s.substr(slash + 1));
        if (d == 0) throw FormatError("zero denominator in \"" + s + "\"");
        Rational q(n, d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw FormatError("malformed rational \"" + s + "\"");
    }
}

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace qms
