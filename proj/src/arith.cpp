#include "weylord/arith.hpp"

#include <stdexcept>

namespace weylord {

Integer factorial(unsigned n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer double_factorial_odd(unsigned n) {
    Integer result = 1;
    for (unsigned j = 1; j <= n; ++j) result *= 2 * j - 1;
    return result;
}

Integer binomial(unsigned n, unsigned k) {
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

Rational falling_factorial(const Rational& a, unsigned k) {
    Rational result = 1;
    for (unsigned j = 0; j < k; ++j) result *= a - j;
    return result;
}

Rational rising_factorial(const Rational& a, unsigned k) {
    Rational result = 1;
    for (unsigned j = 0; j < k; ++j) result *= a + j;
    return result;
}

Rational binomial_general(const Rational& a, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("binomial_general: negative lower index");
    const auto uk = static_cast<unsigned>(k);
    Rational result = falling_factorial(a, uk) / Rational(factorial(uk));
    return result;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    const Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("GaussianRational: division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

GaussianRational i_pow(long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

GaussianRational pow(const GaussianRational& z, unsigned n) {
    GaussianRational result = 1;
    GaussianRational base = z;
    while (n) {
        if (n & 1u) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

GaussianRational parse_gaussian(std::string_view text) {
    const auto bad = [&] { return std::invalid_argument("not a Gaussian rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    if (text.back() != 'i') return parse_rational(text);

    std::string_view head = text.substr(0, text.size() - 1);
    // Split real and imaginary parts at the last sign that is not leading.
    std::size_t split = std::string_view::npos;
    for (std::size_t p = head.size(); p-- > 1;) {
        if (head[p] == '+' || head[p] == '-') {
            split = p;
            break;
        }
    }
    Rational re = 0;
    std::string_view imag = head;
    if (split != std::string_view::npos) {
        re = parse_rational(head.substr(0, split));
        imag = head.substr(split);
        if (imag.front() == '+') imag.remove_prefix(1);
    }
    Rational im;
    if (imag.empty()) {
        im = 1;
    } else if (imag == "-") {
        im = -1;
    } else {
        if (imag.back() != '*') throw bad();
        imag.remove_suffix(1);
        im = parse_rational(imag);
    }
    return {re, im};
}

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re());
    std::string imag = to_string(z.im()) + "*i";
    if (sgn(z.re()) == 0) return imag;
    std::string out = to_string(z.re());
    if (sgn(z.im()) > 0) out += '+';
    return out + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

}  // namespace weylord
