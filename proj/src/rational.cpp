#include "nplay/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace nplay {

namespace {

// Decimal digits of the nonnegative integer n, zero-padded to `width`.
std::string digits_padded(const mpz_class& n, int width) {
    std::string s = n.get_str();
    if ((int)s.size() < width) s.insert(0, width - s.size(), '0');
    return s;
}

// Round n_num/n_den (n_den > 0) to the nearest integer, half to even.
mpz_class round_half_even(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // q = floor, 0 <= r < den.  Round up when 2r > den, or 2r == den and q is odd.
    mpz_class twice = 2 * r;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
    return q;
}

std::string format_scaled(const mpz_class& scaled, int places) {
    // scaled = value * 10^places rounded to integer; insert the point.
    bool neg = sgn(scaled) < 0;
    mpz_class mag = abs(scaled);
    std::string d = digits_padded(mag, places + 1);
    std::string out;
    if (neg) out = "-";
    out += d.substr(0, d.size() - places);
    if (places > 0) {
        out += '.';
        out += d.substr(d.size() - places);
    }
    return out;
}

}  // namespace

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

namespace {

mpz_class parse_integer(const std::string& s, const std::string& whole) {
    mpz_class n;
    if (s.empty() || n.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + whole + "'");
    return n;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    std::string str(s);
    auto slash = str.find('/');
    if (slash == std::string::npos)
        return Rational(mpq_class(parse_integer(str, str)));
    mpz_class n = parse_integer(str.substr(0, slash), str);
    mpz_class d = parse_integer(str.substr(slash + 1), str);
    if (sgn(d) == 0) throw std::domain_error("rational: zero denominator");
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::fraction_str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::compact_str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return fraction_str();
}

std::string Rational::to_decimal(int places) const {
    if (places < 0) throw std::invalid_argument("rational: negative places");
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, places);
    mpz_class num = v_.get_num() * pow10;
    mpz_class scaled = round_half_even(num, v_.get_den());
    return format_scaled(scaled, places);
}

std::string Rational::sqrt_decimal(int places) const {
    if (places < 0) throw std::invalid_argument("rational: negative places");
    if (sign() < 0) throw std::domain_error("rational: sqrt of negative value");
    // Target integer m minimizes |m - sqrt(p/q) * 10^places|, half to even.
    // Start from d0 = floor(sqrt(p * 10^(2*places) / q)); the answer is d0
    // or d0 + 1, decided by comparing the value against the midpoint:
    //   sqrt(p/q)*10^k >= d0 + 1/2   <=>   4 * p * 10^(2k) >= (2*d0+1)^2 * q.
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, places);
    mpz_class num = v_.get_num() * pow10 * pow10;
    mpz_class floor_ratio = num / v_.get_den();
    mpz_class d0 = sqrt(floor_ratio);
    mpz_class lhs = 4 * num;
    mpz_class mid = 2 * d0 + 1;
    mpz_class rhs = mid * mid * v_.get_den();
    int c = cmp(lhs, rhs);
    mpz_class m = d0;
    if (c > 0 || (c == 0 && mpz_odd_p(d0.get_mpz_t()))) ++m;
    return format_scaled(m, places);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.compact_str();
}

}  // namespace nplay
