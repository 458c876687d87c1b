#include "core/rational.hpp"

namespace latpoly {

Rational make_rational(const Int& num, const Int& den)
{
    if (den == 0)
        fail(ErrorCode::Precondition, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& q)
{
    return q.get_den() == 1;
}

Int to_integer(const Rational& q)
{
    if (!is_integral(q))
        fail(ErrorCode::Precondition, "expected integral value, got " + to_string(q));
    return q.get_num();
}

std::string to_string(const Rational& q)
{
    if (is_integral(q))
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& n)
{
    return n.get_str();
}

Int binomial(const Int& n, const Int& k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    // All callers stay far below ulong range; guard anyway.
    if (!k.fits_ulong_p() || !n.fits_ulong_p())
        fail(ErrorCode::Scale, "binomial argument out of supported range");
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), k.get_ui());
    return r;
}

Int floor_div(const Int& a, const Int& b)
{
    if (b == 0)
        fail(ErrorCode::Precondition, "division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b)
{
    if (b == 0)
        fail(ErrorCode::Precondition, "division by zero");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int dot(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        fail(ErrorCode::Arity, "dot product of vectors with different lengths");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(const IntVec& a, const RatVec& b)
{
    if (a.size() != b.size())
        fail(ErrorCode::Arity, "dot product of vectors with different lengths");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += Rational(a[i]) * b[i];
    return s;
}

Int factorial(long n)
{
    if (n < 0)
        fail(ErrorCode::Precondition, "factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

IntVec to_int_vec(const std::vector<long>& v)
{
    IntVec r;
    r.reserve(v.size());
    for (long x : v)
        r.emplace_back(x);
    return r;
}

} // namespace latpoly
