#include "weylord/weyl.hpp"

#include <algorithm>

#include "weylord/boards.hpp"
#include "weylord/polys.hpp"

namespace weylord {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 'D' && c != 'U')
            throw std::invalid_argument("word may only contain 'D' and 'U': '" + letters_ + "'");
}

unsigned Word::count_u() const { return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), 'U')); }
unsigned Word::count_d() const { return static_cast<unsigned>(std::count(letters_.begin(), letters_.end(), 'D')); }

NormalForm NormalForm::monomial(unsigned u, unsigned d, GaussianRational c) {
    NormalForm f;
    f.accumulate({u, d}, c);
    return f;
}

GaussianRational NormalForm::coefficient(unsigned u, unsigned d) const {
    const auto it = terms_.find(Monomial{u, d});
    return it == terms_.end() ? GaussianRational{} : it->second;
}

void NormalForm::accumulate(Monomial m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NormalForm& NormalForm::operator+=(const NormalForm& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& o) {
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    return *this;
}

NormalForm& NormalForm::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

NormalForm monomial_product(Monomial a, Monomial b) {
    NormalForm result;
    const unsigned jmax = std::min(a.d, b.u);
    Integer falling = 1;  // b.u (b.u - 1) ... (b.u - j + 1)
    for (unsigned j = 0; j <= jmax; ++j) {
        if (j > 0) falling *= b.u - j + 1;
        const Integer c = binomial(a.d, j) * falling;
        result.accumulate({a.u + b.u - j, a.d + b.d - j}, Rational(c));
    }
    return result;
}

NormalForm operator*(const NormalForm& x, const NormalForm& y) {
    NormalForm result;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            const GaussianRational c = cx * cy;
            const NormalForm product = monomial_product(mx, my);
            for (const auto& [m, k] : product.terms()) result.accumulate(m, c * k);
        }
    return result;
}

NormalForm multiply(const NormalForm& x, const NormalForm& y) { return x * y; }
NormalForm add(const NormalForm& x, const NormalForm& y) { return x + y; }
NormalForm scale(const GaussianRational& c, const NormalForm& x) { return c * x; }

NormalForm x_element() { return NormalForm::monomial(1, 1, 2) + NormalForm::one(); }

NormalForm normal_order_rewrite(const Word& w) {
    // Weighted multiset of words, merged by word after every pass. Each pass
    // rewrites the leftmost DU of every word that still has one.
    std::map<std::string, Integer> pending{{w.letters(), 1}};
    NormalForm result;
    while (!pending.empty()) {
        std::map<std::string, Integer> next;
        for (const auto& [word, c] : pending) {
            const auto pos = word.find("DU");
            if (pos == std::string::npos) {
                const auto u = static_cast<unsigned>(std::count(word.begin(), word.end(), 'U'));
                result.accumulate({u, static_cast<unsigned>(word.size()) - u}, Rational(c));
                continue;
            }
            std::string swapped = word;
            swapped[pos] = 'U';
            swapped[pos + 1] = 'D';
            next[std::move(swapped)] += c;
            std::string dropped = word;
            dropped.erase(pos, 2);
            next[std::move(dropped)] += c;
        }
        pending = std::move(next);
    }
    return result;
}

NormalForm from_rook_vector(unsigned n_u, unsigned m_d, const RookVector& r) {
    NormalForm result;
    const unsigned kmax = std::min(n_u, m_d);
    for (unsigned k = 0; k <= kmax && k < r.r.size(); ++k) result.accumulate({n_u - k, m_d - k}, Rational(r.r[k]));
    return result;
}

NormalForm normal_order_rook(const Word& w) { return normal_order_rook(w, rook_numbers); }

NormalForm normal_order_rook(const Word& w, const RookFunction& rook) {
    return from_rook_vector(w.count_u(), w.count_d(), rook(word_to_board(w)));
}

std::vector<Integer> undn_expand(unsigned n) {
    // prod_{j=1}^{n} (t - j + 1), ascending in t
    std::vector<Integer> row{1};
    for (unsigned j = 1; j <= n; ++j) {
        const unsigned shift = j - 1;
        std::vector<Integer> next(row.size() + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k + 1] += row[k];
            next[k] -= row[k] * shift;
        }
        row = std::move(next);
    }
    return row;
}

std::vector<Word> balanced_words(unsigned n, std::uint64_t max_words) {
    const Integer count = binomial(2 * n, n);
    if (count > Integer(std::to_string(max_words)))
        throw ResourceLimit("C(" + std::to_string(2 * n) + "," + std::to_string(n) + ") = " + count.get_str() +
                            " words exceeds the cap of " + std::to_string(max_words));
    std::string letters = std::string(n, 'D') + std::string(n, 'U');
    std::vector<Word> words;
    words.reserve(count.get_ui());
    do {
        words.emplace_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return words;
}

NormalForm symmetric_T_brute(unsigned n, std::uint64_t max_words) {
    return symmetric_T_brute(n, max_words, rook_numbers);
}

NormalForm symmetric_T_brute(unsigned n, std::uint64_t max_words, const RookFunction& rook) {
    NormalForm total;
    for (const Word& w : balanced_words(n, max_words)) total += normal_order_rook(w, rook);
    return total;
}

NormalForm symmetric_T_closed(unsigned n) {
    NormalForm result;
    const Integer top = factorial(2 * n);
    for (unsigned k = 0; k <= n; ++k) {
        const Integer nk = factorial(n - k);
        const Integer den = (Integer(1) << k) * factorial(k) * nk * nk;
        Rational c(top, den);
        c.canonicalize();
        result.accumulate({n - k, n - k}, c);
    }
    return result;
}

NormalForm substitute_polynomial(const Polynomial& p, const NormalForm& e) {
    NormalForm result;
    NormalForm power = NormalForm::one();
    const auto& coeffs = p.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) power = power * e;
        result += coeffs[k] * power;
    }
    return result;
}

NormalForm bd_ordering_sum(unsigned n, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != n + 1)
        throw std::invalid_argument("bd_ordering_sum: expected " + std::to_string(n + 1) + " weights, got " +
                                    std::to_string(coeffs.size()));
    NormalForm result;
    for (unsigned k = 0; k <= n; ++k) result += GaussianRational(coeffs[k]) * monomial_product({0, k}, {n, n - k});
    return result;
}

}  // namespace weylord
