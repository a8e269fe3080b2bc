#pragma once

// Exact arbitrary-precision rational arithmetic, backed by GMP.
//
// Every probability, mean, and variance in this project is a Rational.
// Values are always stored canonically: lowest terms, denominator > 0.
// Arithmetic never rounds; decimals exist only as renderings of exact
// values, produced by to_decimal() and sqrt_decimal() below.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nplay {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q);

    // Accepts "p", "-p", or "p/q" with q > 0 after sign normalization.
    static Rational parse(std::string_view s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Always "p/q", lowest terms ("0/1", "-3/2", "800/1").
    std::string fraction_str() const;

    /// "p" when the value is integral, else "p/q". Used by config files.
    std::string compact_str() const;

    /// Fixed-point decimal rendering, round half to even at the last place.
    std::string to_decimal(int places = 6) const;

    /// Decimal rendering of the square root (value must be >= 0).
    /// Round half to even; exact-half cases are resolved by exact
    /// rational comparison, not by guard digits.
    std::string sqrt_decimal(int places = 6) const;

    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

}  // namespace nplay
