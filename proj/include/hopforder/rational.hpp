#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hopf {

/// Error type for all precondition and arithmetic failures in the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0 as
/// long as inputs are canonical, so every constructor here canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hopf
