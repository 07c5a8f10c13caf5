#include "spinstrata/rst.hpp"

#include <numeric>
#include <string>

namespace spinstrata {

Rational rst_sum(const std::vector<Rational>& exponents, std::int64_t n, std::int64_t k) {
    if (n <= 0 || k <= 0 || std::gcd(k, n) != 1)
        throw SpinError(ErrorCode::BadPrimitiveIndex,
                        "k = " + std::to_string(k) + " is not a primitive index mod " + std::to_string(n));
    std::int64_t kinv = mod_inverse(k % n == 0 ? n : k % n, n);
    std::int64_t total = 0;
    for (const Rational& e : exponents) {
        Rational ne = mod1(e) * n;
        if (ne.denominator() != 1)
            throw SpinError(ErrorCode::BadPrimitiveIndex,
                            "exponent " + format_rational(e) + " is not an n-th root for n = " +
                                std::to_string(n));
        total += kinv * ne.numerator() % n;
    }
    return Rational(total, n);
}

namespace {

RstReport report_for(const std::vector<Rational>& eigen, std::int64_t n, bool qr) {
    RstReport r;
    r.n = n;
    r.eigen = eigen;
    r.quasireflection = qr;
    bool first = true;
    for (std::int64_t k = 1; k < n || (n == 1 && k == 1); ++k) {
        if (std::gcd(k, n) != 1) continue;
        Rational s = rst_sum(eigen, n, k);
        r.sums_by_k.emplace_back(k, s);
        if (first || s < r.min_sum) {
            r.min_sum = s;
            r.witness_k = k;
            first = false;
        }
        if (n == 1) break;
    }
    return r;
}

} // namespace

RstReport rst_min(const MonomialAction& a) {
    if (a.is_identity()) throw SpinError(ErrorCode::TrivialElement, "rst_min of the identity");
    return report_for(eigen_exponents(a), a.order(), is_quasireflection(a));
}

Rational min_rst_of_exponents(const std::vector<Rational>& exponents) {
    std::int64_t n = 1;
    for (const Rational& e : exponents) n = lcm64(n, mod1(e).denominator());
    if (n == 1) return Rational(0);
    return report_for(exponents, n, false).min_sum;
}

std::pair<bool, std::optional<RstReport>> canonical_oracle(const std::vector<MonomialAction>& group) {
    for (const MonomialAction& g : group)
        if (is_quasireflection(g))
            throw SpinError(ErrorCode::QuasireflectionPresent,
                            "the group contains a quasireflection; apply the Prill quotient first");
    for (const MonomialAction& g : group) {
        if (g.is_identity()) continue;
        RstReport r = rst_min(g);
        if (r.min_sum < Rational(1)) return {false, std::move(r)};
    }
    return {true, std::nullopt};
}

} // namespace spinstrata
