#ifndef HOMTROP_RAT_HPP
#define HOMTROP_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace homtrop {

// Exact arithmetic substrate. mpq_class keeps fractions reduced with a
// positive denominator, which is exactly the canonical form we need.
using BigInt = mpz_class;
using Rat = mpq_class;
using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;

inline Rat make_rat(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const BigInt & num, const BigInt & den)
{
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "num/den" or a decimal like "8.5" into an exact rational.
Rat rat_from_string(const std::string & text);

// "num/den" when den != 1, plain integer string otherwise.
std::string rat_to_string(const Rat & value);

BigInt big_pow(const BigInt & base, unsigned long exponent);

RatVector rat_vector(std::initializer_list<long> entries);

Rat dot(const RatVector & a, const RatVector & b);

RatVector add(const RatVector & a, const RatVector & b);

RatVector scale(const Rat & factor, const RatVector & v);

bool is_zero(const RatVector & v);

// Scales a nonzero rational vector to integer entries with gcd 1. The sign is
// preserved: for a ray, flipping the sign would describe a different cone.
RatVector primitive(const RatVector & v);

// Same scaling, but the first nonzero coordinate is made positive. Only
// meaningful for lineality directions where v and -v span the same line.
RatVector primitive_signless(const RatVector & v);

// Rank of a set of rational row vectors, by Gaussian elimination.
int rank(const RatMatrix & rows);

// Floor of log2 of a positive integer plus `frac_bits` binary fractional
// digits, i.e. the dyadic rational floor(2^frac_bits * log2(x)) / 2^frac_bits.
Rat log2_dyadic(const BigInt & x, unsigned frac_bits);

// Nearest integer to base^(num/den) for base >= 1, num >= 0, den >= 1.
// Ties round up.
BigInt nearest_integer_power(const BigInt & base, const BigInt & num, const BigInt & den);

}

#endif
