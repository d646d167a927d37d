#include "weylord/polys.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylord {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(unsigned k, GaussianRational c) {
    std::vector<GaussianRational> coeffs(k + 1);
    coeffs[k] = std::move(c);
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const GaussianRational& c) { return c.is_real(); });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

GaussianRational poly_eval(const Polynomial& p, const GaussianRational& c) {
    GaussianRational acc;
    const auto& coeffs = p.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= c;
        acc += *it;
    }
    return acc;
}

Polynomial poly_rescale(const Polynomial& p, const GaussianRational& c) {
    std::vector<GaussianRational> out = p.coeffs();
    GaussianRational factor = 1;
    for (auto& a : out) {
        a *= factor;
        factor *= c;
    }
    return Polynomial(std::move(out));
}

std::string to_string(const Polynomial& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& coeffs = p.coeffs();
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const GaussianRational& c = coeffs[k];
        if (c.is_zero()) continue;
        std::string magnitude;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            magnitude = to_string(Rational(abs(c.re())));
        } else {
            magnitude = "(" + to_string(c) + ")";
        }
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        std::string power;
        if (k == 1) {
            power = std::string(1, var);
        } else if (k > 1) {
            power = std::string(1, var) + "^" + std::to_string(k);
        }
        if (power.empty()) {
            out += magnitude;
        } else if (magnitude == "1") {
            out += power;
        } else {
            out += magnitude + "*" + power;
        }
    }
    return out;
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (unsigned v : images_) {
        if (v < 1 || v > images_.size() || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(unsigned n) {
    std::vector<unsigned> images(n);
    for (unsigned i = 0; i < n; ++i) images[i] = i + 1;
    return Permutation(std::move(images));
}

unsigned cyco(const Permutation& sigma) {
    const auto& img = sigma.images();
    std::vector<bool> visited(img.size(), false);
    unsigned odd = 0;
    for (std::size_t start = 0; start < img.size(); ++start) {
        if (visited[start]) continue;
        unsigned length = 0;
        for (std::size_t j = start; !visited[j]; j = img[j] - 1) {
            visited[j] = true;
            ++length;
        }
        if (length % 2 == 1) ++odd;
    }
    return odd;
}

Polynomial meixner_S_recurrence(unsigned n) {
    Polynomial prev;  // S_{-1}, never read with a nonzero weight
    Polynomial cur = Polynomial::constant(1);
    for (unsigned k = 0; k < n; ++k) {
        Polynomial next = Polynomial::x() * cur - GaussianRational(Rational(k * k)) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Polynomial meixner_S_explicit(unsigned n) {
    const GaussianRational i = GaussianRational::i();
    Polynomial sum;
    Polynomial product = Polynomial::constant(1);  // prod_{j<k} (ix + 1 + 2j)
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) product = product * Polynomial({GaussianRational(2 * k - 1), i});
        Rational weight(binomial(n, k), factorial(k));
        weight.canonicalize();
        if (k % 2 == 1) weight = -weight;
        sum += GaussianRational(weight) * product;
    }
    return (i_pow(n) * GaussianRational(Rational(factorial(n)))) * sum;
}

Polynomial cyco_polynomial(unsigned n, std::uint64_t max_perms) {
    if (factorial(n) > Integer(std::to_string(max_perms)))
        throw ResourceLimit(std::to_string(n) + "! permutations exceeds the cap of " + std::to_string(max_perms));
    std::vector<unsigned> images(n);
    for (unsigned j = 0; j < n; ++j) images[j] = j + 1;
    std::vector<std::uint64_t> by_cyco(n + 1, 0);
    do {
        ++by_cyco[cyco(Permutation(images))];
    } while (std::next_permutation(images.begin(), images.end()));

    std::vector<GaussianRational> coeffs(n + 1);
    for (unsigned j = 0; j <= n; ++j)
        coeffs[j] = i_pow(j) * GaussianRational(Rational(Integer(std::to_string(by_cyco[j]))));
    return i_pow(-static_cast<long>(n)) * Polynomial(std::move(coeffs));
}

Integer stirling_first(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("stirling_first: k must not exceed n");
    std::vector<Integer> row{1};  // s(0, .)
    for (unsigned m = 0; m < n; ++m) {
        std::vector<Integer> next(m + 2, 0);
        for (unsigned j = 0; j <= m + 1; ++j) {
            if (j >= 1) next[j] += row[j - 1];
            if (j <= m) next[j] -= row[j] * m;
        }
        row = std::move(next);
    }
    return row[k];
}

std::vector<Integer> secant_numbers(unsigned N) {
    // cos x = sum_j c_j y^j with y = x^2; invert the series in y.
    std::vector<Rational> cos_series(N + 1);
    for (unsigned j = 0; j <= N; ++j) {
        Rational c(1, factorial(2 * j));
        c.canonicalize();
        cos_series[j] = j % 2 ? Rational(-c) : c;
    }
    std::vector<Rational> inverse(N + 1);
    inverse[0] = 1;
    for (unsigned m = 1; m <= N; ++m) {
        Rational acc = 0;
        for (unsigned j = 1; j <= m; ++j) acc += cos_series[j] * inverse[m - j];
        inverse[m] = -acc;
    }
    std::vector<Integer> out;
    out.reserve(N + 1);
    for (unsigned m = 0; m <= N; ++m) {
        const Rational scaled = inverse[m] * Rational(factorial(2 * m));
        if (scaled.get_den() != 1) throw std::logic_error("secant_numbers: non-integral coefficient");
        out.push_back(scaled.get_num());
    }
    return out;
}

std::vector<Integer> moments_from_recurrence(unsigned N) {
    // paths[h] = total weight of paths from level 0 to level h so far
    std::vector<Integer> paths(N + 2, 0);
    paths[0] = 1;
    std::vector<Integer> out{1};
    for (unsigned step = 1; step <= 2 * N; ++step) {
        std::vector<Integer> next(N + 2, 0);
        for (unsigned h = 0; h <= N; ++h) {
            if (paths[h] == 0) continue;
            next[h + 1] += paths[h];
            if (h > 0) next[h - 1] += paths[h] * (h * h);
        }
        paths = std::move(next);
        if (step % 2 == 0) out.push_back(paths[0]);
    }
    return out;
}

Polynomial continuous_hahn_P(unsigned n, const Rational& l) {
    const GaussianRational i = GaussianRational::i();
    const Rational half(1, 2);
    Polynomial sum;
    Polynomial poch = Polynomial::constant(1);  // (1/2 + ix)_k
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) poch = poch * Polynomial({GaussianRational(half + (k - 1)), i});
        const Rational den = rising_factorial(l + 1, k) * Rational(factorial(k) * factorial(k));
        if (sgn(den) == 0) throw std::domain_error("continuous_hahn_P: pole in (l+1)_k at l = " + to_string(l));
        const Rational num = rising_factorial(Rational(-static_cast<long>(n)), k) * rising_factorial(l * 2 + n + 1, k);
        sum += GaussianRational(Rational(num / den)) * poch;
    }
    const Rational norm = binomial_general(l * 2 + 2 * n, n);
    if (sgn(norm) == 0) throw std::domain_error("continuous_hahn_P: C(2n+2l, n) vanishes at l = " + to_string(l));
    const Rational prefactor = rising_factorial(l + 1, n) / norm;
    return (i_pow(n) * GaussianRational(prefactor)) * sum;
}

namespace {

Rational checked_normalizer(unsigned n, const Rational& l) {
    Rational c = binomial_general(l + n, n);
    if (sgn(c) == 0) throw std::domain_error("C(n+l, n) vanishes at l = " + to_string(l));
    return c;
}

}  // namespace

OrderingWeights bd_coefficients(unsigned n, const Rational& l) {
    const Rational norm = checked_normalizer(n, l);
    OrderingWeights w;
    w.total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        // C(n+l, k+l) read as C(n+l, n-k)
        Rational a = binomial_general(l + n, k) * binomial_general(l + n, n - k) / norm;
        w.total += a;
        w.a.push_back(std::move(a));
    }
    return w;
}

Rational bd_normalizer_closed(unsigned n, const Rational& l) {
    return binomial_general(l * 2 + 2 * n, n) / checked_normalizer(n, l);
}

}  // namespace weylord
