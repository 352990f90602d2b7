#include "pushcalc/rational.hpp"

namespace pushcalc {

namespace {

// Replace U+2212 (minus sign) by ASCII '-' so serialized values from
// mathematical sources parse cleanly.
std::string normalize_minus(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else {
            out.push_back(s[i]);
        }
    }
    return out;
}

Integer parse_integer(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
    Integer v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
    return v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    const std::string s = normalize_minus(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(num, den);
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer generalized_binomial(long long n, long long k) {
    if (k < 0) return Integer(0);
    Integer acc(1);
    for (long long t = 0; t < k; ++t) acc *= Integer(n) - Integer(t);
    Integer kf = factorial(static_cast<unsigned long>(k));
    Integer out;
    mpz_divexact(out.get_mpz_t(), acc.get_mpz_t(), kf.get_mpz_t());
    return out;
}

}  // namespace pushcalc
