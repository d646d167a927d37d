#pragma once

// Exact univariate polynomials over the Gaussian rationals and the special
// families built on them: the Meixner-Pollaczek specialisation S_n, the
// continuous Hahn family P_n(x; l), Stirling numbers of the first kind,
// secant numbers and the odd-cycle permutation statistic.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weylord/arith.hpp"

namespace weylord {

/// Dense coefficients by ascending degree with trailing zeros trimmed; the
/// zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coeffs);

    static Polynomial constant(GaussianRational c) { return Polynomial({std::move(c)}); }
    /// c x^k
    static Polynomial monomial(unsigned k, GaussianRational c = 1);
    static Polynomial x() { return monomial(1); }

    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    GaussianRational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : GaussianRational{}; }
    GaussianRational leading() const { return coeffs_.empty() ? GaussianRational{} : coeffs_.back(); }

    bool is_real() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const GaussianRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const GaussianRational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<GaussianRational> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// Horner evaluation.
GaussianRational poly_eval(const Polynomial& p, const GaussianRational& c);
/// p(c x)
Polynomial poly_rescale(const Polynomial& p, const GaussianRational& c);

/// Descending powers, e.g. "x^4 - 14*x^2 + 9"; the zero polynomial is "0".
std::string to_string(const Polynomial& p, char var = 'x');

/// Bijection of {1..n} in one-line notation.
class Permutation {
public:
    /// Throws std::invalid_argument unless images is a permutation of 1..n.
    explicit Permutation(std::vector<unsigned> images);
    static Permutation identity(unsigned n);

    const std::vector<unsigned>& images() const { return images_; }
    unsigned size() const { return static_cast<unsigned>(images_.size()); }

private:
    std::vector<unsigned> images_;
};

/// Number of odd-length cycles.
unsigned cyco(const Permutation& sigma);

/// S_{n+1} = x S_n - n^2 S_{n-1}, S_0 = 1.
Polynomial meixner_S_recurrence(unsigned n);

/// S_n(x) = i^n n! sum_k ((-1)^k / k!) C(n,k) prod_{j<k} (ix + 1 + 2j)
Polynomial meixner_S_explicit(unsigned n);

inline constexpr std::uint64_t default_max_perms = 3'628'800;  // 10!

/// (-i)^n sum over permutations of (ix)^cyco. Throws ResourceLimit when
/// n! exceeds max_perms.
Polynomial cyco_polynomial(unsigned n, std::uint64_t max_perms = default_max_perms);

/// Signed Stirling number of the first kind, by the triangle
/// s(n+1,k) = s(n,k-1) - n s(n,k). Throws std::invalid_argument for k > n.
Integer stirling_first(unsigned n, unsigned k);

/// E_0, E_2, ..., E_{2N} from the reciprocal of the cosine series.
std::vector<Integer> secant_numbers(unsigned N);

/// mu_0, mu_2, ..., mu_{2N}: weighted Dyck paths with down-step weight k^2
/// from level k.
std::vector<Integer> moments_from_recurrence(unsigned N);

/// P_n(x; l) from the terminating 3F2 sum. Throws std::domain_error when l
/// makes a denominator vanish.
Polynomial continuous_hahn_P(unsigned n, const Rational& l);

struct OrderingWeights {
    std::vector<Rational> a;  // a_0 .. a_n
    Rational total;           // sum of a
};

/// a_k = C(n+l,k) C(n+l,n-k) / C(n+l,n). Throws std::domain_error when
/// C(n+l,n) = 0.
OrderingWeights bd_coefficients(unsigned n, const Rational& l);

/// C(n+l,n)^-1 C(2n+2l,n). Throws std::domain_error when C(n+l,n) = 0.
Rational bd_normalizer_closed(unsigned n, const Rational& l);

}  // namespace weylord
