#pragma once

// Exact integer, rational and Gaussian-rational arithmetic.
//
// Integer and Rational are GMP's C++ classes. GMP keeps every mpq_class
// result in lowest terms with a positive denominator, so structural equality
// of rationals is value equality.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weylord {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an enumeration would exceed its configured cap.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Integer factorial(unsigned n);

/// (2n-1)!! = 1*3*5*...*(2n-1); 1 at n = 0.
Integer double_factorial_odd(unsigned n);

Integer binomial(unsigned n, unsigned k);

/// a(a-1)...(a-k+1)
Rational falling_factorial(const Rational& a, unsigned k);

/// a(a+1)...(a+k-1)
Rational rising_factorial(const Rational& a, unsigned k);

/// C(a, k) for rational a. Throws std::invalid_argument for k < 0.
Rational binomial_general(const Rational& a, std::int64_t k);

/// Parses "p/q" or "p" with an optional leading minus. Throws
/// std::invalid_argument on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re), im_(0) {}

    static GaussianRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    /// Throws std::domain_error on division by zero.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// i^n for any integer n.
GaussianRational i_pow(long n);

GaussianRational pow(const GaussianRational& z, unsigned n);

/// Accepts "a+b*i", "a-b*i", "a", "b*i", "i", "-i" with a, b in rational syntax.
GaussianRational parse_gaussian(std::string_view text);

/// "a+b*i", "a" or "b*i"; zero is "0".
std::string to_string(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace weylord
