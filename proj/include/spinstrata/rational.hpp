#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <string>

#include "spinstrata/errors.hpp"

namespace spinstrata {

// All arithmetic in the library is exact. Rationals are kept small (numerators
// and denominators stay bounded by products of automorphism orders), so a
// 64-bit backing type has plenty of headroom.
using Rational = boost::rational<std::int64_t>;

// Reduce into [0, 1).
Rational mod1(const Rational& r);

// "p/q" with q > 0 and gcd(p,q) = 1; a bare integer "p" is accepted on input.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// A root of unity, stored as its exponent: the value exp(2*pi*i * exponent)
// with exponent a reduced fraction in [0, 1).  Multiplication of roots is
// addition of exponents mod 1; the multiplicative order is the denominator.
class RootOfUnity {
public:
    RootOfUnity() : exp_(0) {}
    static RootOfUnity from_exponent(const Rational& e) { return RootOfUnity(mod1(e)); }
    static RootOfUnity one() { return RootOfUnity(); }
    static RootOfUnity minus_one() { return RootOfUnity(Rational(1, 2)); }

    const Rational& exponent() const { return exp_; }
    std::int64_t order() const { return exp_.denominator(); }
    bool is_one() const { return exp_.numerator() == 0; }

    RootOfUnity operator*(const RootOfUnity& o) const { return RootOfUnity(mod1(exp_ + o.exp_)); }
    RootOfUnity pow(std::int64_t k) const { return RootOfUnity(mod1(exp_ * k)); }
    RootOfUnity inverse() const { return RootOfUnity(mod1(-exp_)); }

    bool operator==(const RootOfUnity& o) const = default;
    bool operator<(const RootOfUnity& o) const { return exp_ < o.exp_; }

private:
    explicit RootOfUnity(const Rational& e) : exp_(e) {}
    Rational exp_;
};

// Modular inverse of k mod n for gcd(k, n) = 1.
std::int64_t mod_inverse(std::int64_t k, std::int64_t n);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

} // namespace spinstrata
