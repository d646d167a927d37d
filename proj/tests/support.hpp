#pragma once

// Shared test helpers: literal builders, a seeded generator, and oracles that
// recompute values by routes independent of the library.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "weylord/boards.hpp"
#include "weylord/polys.hpp"
#include "weylord/weyl.hpp"

namespace weylord::test {

struct Term {
    unsigned u, d;
    long c;
};

inline NormalForm nf(std::initializer_list<Term> terms) {
    NormalForm f;
    for (const auto& t : terms) f.accumulate({t.u, t.d}, t.c);
    return f;
}

/// Integer coefficients, ascending degree.
inline Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<GaussianRational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

inline std::vector<Integer> ints(std::initializer_list<long> values) {
    std::vector<Integer> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed);
    return gen;
}

inline unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng()); }

inline Rational random_rational(long span = 9) {
    std::uniform_int_distribution<long> num(-span, span), den(1, span);
    Rational r(num(rng()), den(rng()));
    r.canonicalize();
    return r;
}

inline GaussianRational random_gaussian() { return {random_rational(), random_rational()}; }

inline Word random_word(unsigned length) {
    std::string s(length, 'D');
    for (auto& c : s) c = uniform(0, 1) ? 'U' : 'D';
    return Word(s);
}

/// Random canonical element with small exponents.
inline NormalForm random_element(unsigned terms = 3, unsigned max_exp = 3) {
    NormalForm f;
    for (unsigned t = 0; t < terms; ++t) f.accumulate({uniform(0, max_exp), uniform(0, max_exp)}, random_gaussian());
    return f;
}

/// Weakly decreasing heights inside a rows x cols box.
inline FerrersBoard random_board(unsigned rows, unsigned cols) {
    std::vector<unsigned> h(uniform(0, cols));
    for (auto& x : h) x = uniform(1, rows);
    std::sort(h.begin(), h.end(), std::greater<>{});
    return FerrersBoard(h);
}

/// Normal ordering by recursion on the rightmost DU, with machine integers.
inline std::map<std::pair<unsigned, unsigned>, std::int64_t> rewrite_oracle(const std::string& w) {
    const auto pos = w.rfind("DU");
    if (pos == std::string::npos) {
        const auto u = static_cast<unsigned>(std::count(w.begin(), w.end(), 'U'));
        return {{{u, static_cast<unsigned>(w.size()) - u}, 1}};
    }
    std::string swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    std::string dropped = w;
    dropped.erase(pos, 2);
    auto out = rewrite_oracle(swapped);
    for (const auto& [k, c] : rewrite_oracle(dropped)) out[k] += c;
    return out;
}

inline NormalForm to_normal_form(const std::map<std::pair<unsigned, unsigned>, std::int64_t>& m) {
    NormalForm f;
    for (const auto& [k, c] : m) f.accumulate({k.first, k.second}, Rational(static_cast<long>(c)));
    return f;
}

/// Rook numbers by scanning every subset of cells (bitmask), at most 20 cells.
inline std::vector<Integer> rook_subset_oracle(const FerrersBoard& b) {
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned x = 0; x < b.width(); ++x)
        for (unsigned y = 0; y < b.columns[x]; ++y) cells.emplace_back(x, y);
    std::vector<long> counts(cells.size() + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << cells.size()); ++mask) {
        std::uint32_t rows = 0, cols = 0;
        bool ok = true;
        for (unsigned i = 0; i < cells.size() && ok; ++i) {
            if (!(mask >> i & 1u)) continue;
            const auto [x, y] = cells[i];
            if ((cols >> x & 1u) || (rows >> y & 1u)) ok = false;
            cols |= 1u << x;
            rows |= 1u << y;
        }
        if (ok) ++counts[__builtin_popcount(mask)];
    }
    std::vector<Integer> out;
    for (long c : counts) out.emplace_back(c);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

/// Drops trailing zeros so vectors of different declared lengths compare.
inline std::vector<Integer> trimmed(std::vector<Integer> v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace weylord::test
