#pragma once

// The Weyl algebra generated by D and U with DU - UD = 1.
//
// Elements are kept in normally ordered form: a sparse sum of monomials
// U^u D^d with exact Gaussian-rational coefficients. The q,p presentation
// with [q,p] = i is reached through q = iD, p = U.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weylord/arith.hpp"

namespace weylord {

class Polynomial;
struct FerrersBoard;
struct RookVector;

/// A raw operator product over {D, U}; the empty word is the identity.
class Word {
public:
    Word() = default;
    /// Throws std::invalid_argument on characters other than 'D' and 'U'.
    explicit Word(std::string letters);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    unsigned count_u() const;
    unsigned count_d() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::string letters_;
};

/// U^u D^d. Ordered so that std::greater gives descending (u, d).
struct Monomial {
    unsigned u = 0;
    unsigned d = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Canonical element: no stored coefficient is zero.
class NormalForm {
public:
    using Terms = std::map<Monomial, GaussianRational, std::greater<>>;

    NormalForm() = default;

    static NormalForm one() { return monomial(0, 0); }
    static NormalForm monomial(unsigned u, unsigned d, GaussianRational c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Zero for absent keys.
    GaussianRational coefficient(unsigned u, unsigned d) const;

    /// Adds c to the coefficient of U^u D^d, dropping the key if it cancels.
    void accumulate(Monomial m, const GaussianRational& c);

    NormalForm& operator+=(const NormalForm& o);
    NormalForm& operator-=(const NormalForm& o);
    NormalForm& operator*=(const GaussianRational& c);

    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
    friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
    friend NormalForm operator*(const GaussianRational& c, NormalForm a) { return a *= c; }
    friend NormalForm operator*(const NormalForm& a, const NormalForm& b);
    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    Terms terms_;
};

using CanonicalElement = NormalForm;

/// (U^a.u D^a.d)(U^b.u D^b.d) via D^k U^n = sum_j C(k,j) n^(j) U^(n-j) D^(k-j).
NormalForm monomial_product(Monomial a, Monomial b);

NormalForm multiply(const NormalForm& x, const NormalForm& y);
NormalForm add(const NormalForm& x, const NormalForm& y);
NormalForm scale(const GaussianRational& c, const NormalForm& x);

/// The generators and the element x = DU + UD = 2UD + 1.
inline NormalForm d_element() { return NormalForm::monomial(0, 1); }
inline NormalForm u_element() { return NormalForm::monomial(1, 0); }
NormalForm x_element();

/// Normal form of a word by exhaustive rewriting DU -> UD + 1.
NormalForm normal_order_rewrite(const Word& w);

using RookFunction = std::function<RookVector(const FerrersBoard&)>;

/// sum_k r[k] U^(n-k) D^(m-k)
NormalForm from_rook_vector(unsigned n_u, unsigned m_d, const RookVector& r);

/// Normal form of a word from the rook numbers of its Ferrers board.
NormalForm normal_order_rook(const Word& w);
NormalForm normal_order_rook(const Word& w, const RookFunction& rook);

/// Signed Stirling row s(n, 0..n): U^n D^n = sum_k s(n,k) (UD)^k.
std::vector<Integer> undn_expand(unsigned n);

/// Default cap on brute-force word enumerations.
inline constexpr std::uint64_t default_max_words = 1'000'000;

/// All C(2n, n) words with n letters of each kind, in lexicographic order.
std::vector<Word> balanced_words(unsigned n, std::uint64_t max_words = default_max_words);

/// T_n(D,U) by summing the normal forms of all C(2n,n) words.
NormalForm symmetric_T_brute(unsigned n, std::uint64_t max_words = default_max_words);
NormalForm symmetric_T_brute(unsigned n, std::uint64_t max_words, const RookFunction& rook);

/// T_n(D,U) = sum_k (2n)! / (2^k k! (n-k)!^2) U^(n-k) D^(n-k)
NormalForm symmetric_T_closed(unsigned n);

/// sum_k p_k e^k
NormalForm substitute_polynomial(const Polynomial& p, const NormalForm& e);

/// sum_k coeffs[k] D^k U^n D^(n-k). Throws std::invalid_argument unless
/// coeffs.size() == n + 1.
NormalForm bd_ordering_sum(unsigned n, const std::vector<Rational>& coeffs);

}  // namespace weylord
