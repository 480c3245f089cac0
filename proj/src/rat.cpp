#include <homtrop/rat.hpp>

#include <algorithm>

namespace homtrop {

Rat rat_from_string(const std::string & text)
{
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s.empty())
        throw std::invalid_argument("rat_from_string: empty string");

    auto dot_pos = s.find('.');
    if (dot_pos != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw std::invalid_argument("rat_from_string: mixed decimal and fraction: " + text);
        std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
        std::size_t frac_len = s.size() - dot_pos - 1;
        if (frac_len == 0 || digits.empty())
            throw std::invalid_argument("rat_from_string: bad decimal: " + text);
        BigInt num(digits);
        BigInt den = big_pow(10, frac_len);
        return make_rat(num, den);
    }

    auto slash_pos = s.find('/');
    try {
        if (slash_pos == std::string::npos)
            return Rat(BigInt(s));
        BigInt num(s.substr(0, slash_pos));
        BigInt den(s.substr(slash_pos + 1));
        return make_rat(num, den);
    }
    catch (const std::invalid_argument &) {
        throw std::invalid_argument("rat_from_string: cannot parse: " + text);
    }
}

std::string rat_to_string(const Rat & value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt big_pow(const BigInt & base, unsigned long exponent)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

RatVector rat_vector(std::initializer_list<long> entries)
{
    RatVector out;
    out.reserve(entries.size());
    for (long e : entries)
        out.emplace_back(e);
    return out;
}

Rat dot(const RatVector & a, const RatVector & b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rat out = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        out += a[i] * b[i];
    return out;
}

RatVector add(const RatVector & a, const RatVector & b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("add: length mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

RatVector scale(const Rat & factor, const RatVector & v)
{
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = factor * v[i];
    return out;
}

bool is_zero(const RatVector & v)
{
    for (const auto & x : v)
        if (x != 0)
            return false;
    return true;
}

RatVector primitive(const RatVector & v)
{
    BigInt den_lcm = 1;
    for (const auto & x : v)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    BigInt g = 0;
    std::vector<BigInt> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (den_lcm / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0)
        return RatVector(v.size(), Rat(0));
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rat(ints[i] / g);
    return out;
}

RatVector primitive_signless(const RatVector & v)
{
    RatVector out = primitive(v);
    for (const auto & x : out) {
        if (x > 0)
            return out;
        if (x < 0)
            return scale(-1, out);
    }
    return out;
}

int rank(const RatMatrix & rows)
{
    RatMatrix m = rows;
    std::size_t cols = 0;
    for (const auto & r : m)
        cols = std::max(cols, r.size());
    int rk = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && (col >= m[pivot].size() || m[pivot][col] == 0))
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || col >= m[i].size() || m[i][col] == 0)
                continue;
            Rat factor = m[i][col] / m[row][col];
            for (std::size_t j = col; j < m[i].size() && j < m[row].size(); ++j)
                m[i][j] -= factor * m[row][j];
        }
        ++row;
        ++rk;
    }
    return rk;
}

Rat log2_dyadic(const BigInt & x, unsigned frac_bits)
{
    if (x <= 0)
        throw std::invalid_argument("log2_dyadic: argument must be positive");
    long int_part = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1;
    // y in [1,2); repeatedly square to extract binary digits of log2(y).
    Rat y = make_rat(x, big_pow(2, int_part));
    BigInt frac = 0;
    for (unsigned bit = 0; bit < frac_bits; ++bit) {
        y = y * y;
        frac <<= 1;
        if (y >= 2) {
            frac += 1;
            y /= 2;
        }
    }
    return make_rat(BigInt(int_part) * big_pow(2, frac_bits) + frac, big_pow(2, frac_bits));
}

BigInt nearest_integer_power(const BigInt & base, const BigInt & num, const BigInt & den)
{
    if (base < 1 || num < 0 || den < 1)
        throw std::invalid_argument("nearest_integer_power: bad arguments");
    if (num % den == 0)
        return big_pow(base, mpz_get_ui(BigInt(num / den).get_mpz_t()));
    BigInt pow_num = big_pow(base, mpz_get_ui(num.get_mpz_t()));
    unsigned long d = mpz_get_ui(den.get_mpz_t());
    BigInt root;
    mpz_root(root.get_mpz_t(), pow_num.get_mpz_t(), d); // floor root
    // round: compare (root + 1/2)^d with pow_num, scaled by 2^d
    BigInt lhs = big_pow(2 * root + 1, d);
    BigInt rhs = big_pow(2, d) * pow_num;
    if (lhs <= rhs)
        root += 1;
    return root;
}

}
