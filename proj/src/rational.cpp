#include "spinstrata/rational.hpp"

#include <charconv>

namespace spinstrata {

Rational mod1(const Rational& r) {
    // boost::rational already keeps fractions reduced with positive denominator
    std::int64_t num = r.numerator() % r.denominator();
    if (num < 0) num += r.denominator();
    return Rational(num, r.denominator());
}

Rational parse_rational(const std::string& text) {
    auto bad = [&]() -> SpinError {
        return SpinError(ErrorCode::Syntax, "malformed rational '" + text + "' (expected \"p/q\")");
    };
    const char* first = text.data();
    const char* last = text.data() + text.size();
    std::int64_t num = 0;
    auto res = std::from_chars(first, last, num);
    if (res.ec != std::errc()) throw bad();
    if (res.ptr == last) return Rational(num);
    if (*res.ptr != '/') throw bad();
    std::int64_t den = 0;
    auto res2 = std::from_chars(res.ptr + 1, last, den);
    if (res2.ec != std::errc() || res2.ptr != last) throw bad();
    if (den <= 0) throw bad();
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t mod_inverse(std::int64_t k, std::int64_t n) {
    // extended Euclid; callers guarantee gcd(k, n) == 1 and n >= 1
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = n, new_r = ((k % n) + n) % n;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw SpinError(ErrorCode::BadPrimitiveIndex, "index not coprime to order");
    return ((t % n) + n) % n;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    return std::lcm(a, b);
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::UnstableVertex: return "UnstableVertex";
        case ErrorCode::GenusTooSmall: return "GenusTooSmall";
        case ErrorCode::BadDecoration: return "BadDecoration";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::DeltaNotEven: return "DeltaNotEven";
        case ErrorCode::BadGluingClass: return "BadGluingClass";
        case ErrorCode::IncompatibleDatum: return "IncompatibleDatum";
        case ErrorCode::InconsistentSquareRoot: return "InconsistentSquareRoot";
        case ErrorCode::MissingBlockExponents: return "MissingBlockExponents";
        case ErrorCode::MissingFlag: return "MissingFlag";
        case ErrorCode::BadFlag: return "BadFlag";
        case ErrorCode::WrongLevel: return "WrongLevel";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotFromSpinDatum: return "NotFromSpinDatum";
        case ErrorCode::BadPrimitiveIndex: return "BadPrimitiveIndex";
        case ErrorCode::TrivialElement: return "TrivialElement";
        case ErrorCode::QuasireflectionPresent: return "QuasireflectionPresent";
        case ErrorCode::MissingThetaFlag: return "MissingThetaFlag";
        case ErrorCode::NotInTable: return "NotInTable";
        case ErrorCode::Syntax: return "Syntax";
        case ErrorCode::UnknownId: return "UnknownId";
    }
    return "Unknown";
}

} // namespace spinstrata
