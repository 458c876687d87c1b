#pragma once
/// @file rational.hpp
/// Exact arbitrary-precision scalars.  Integers and rationals are GMP-backed
/// (mpz_class / mpq_class); mpq arithmetic keeps values canonical (reduced,
/// denominator > 0, zero is 0/1), which is the invariant the rest of the
/// library relies on.  No floating point is used anywhere.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "core/error.hpp"

namespace latpoly {

using Int = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

/// num/den in canonical form.  Throws ErrorCode::Precondition on den == 0.
Rational make_rational(const Int& num, const Int& den);

inline Rational make_rational(const Int& num) { return Rational(num); }

bool is_integral(const Rational& q);

/// Exact integer value of an integral rational; throws ErrorCode::Precondition
/// if q has a nontrivial denominator.
Int to_integer(const Rational& q);

/// Decimal rendering: "p" when integral, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

/// Binomial coefficient C(n, k) with the convention that out-of-range k
/// (k < 0 or k > n) yields 0.  Negative n also yields 0; every consumer in
/// this library sums over n >= 0.
Int binomial(const Int& n, const Int& k);

/// floor(a/b), exact, b != 0.
Int floor_div(const Int& a, const Int& b);
/// ceil(a/b), exact, b != 0.
Int ceil_div(const Int& a, const Int& b);

Int dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const RatVec& b);

/// n! as an exact integer, n >= 0.
Int factorial(long n);

IntVec to_int_vec(const std::vector<long>& v);

} // namespace latpoly
