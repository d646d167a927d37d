// Acceptance suite: one line per criterion, exact equality throughout, wall
// time limits where stated. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "weylord/boards.hpp"
#include "weylord/polys.hpp"
#include "weylord/verify.hpp"
#include "weylord/weyl.hpp"

using namespace weylord;

namespace {

struct Criterion {
    std::string name;
    double seconds_limit;  // <= 0 for none
    std::function<std::string()> check;  // empty string on success, reason otherwise
};

std::string all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed())
            return r.identity + " n=" + std::to_string(r.n) + (r.l ? " l=" + to_string(*r.l) : "") + " failed" +
                   (r.witness->note.empty() ? "" : " (" + r.witness->note + ")");
    return {};
}

std::vector<Integer> trim(std::vector<Integer> v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    return v;
}

Polynomial integer_poly(std::initializer_list<long> coeffs) {
    std::vector<GaussianRational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

std::vector<Criterion> criteria() {
    const auto l_samples = default_l_samples();
    return {
        {"Koornwinder identity T_n = (2n-1)!!/n! S_n(T_1), n = 0..6", 5.0,
         [] {
             std::vector<VerificationReport> r;
             for (unsigned n = 0; n <= 6; ++n) r.push_back(verify_koornwinder(n));
             return all_pass(r);
         }},
        {"Binomial ordering sum_k C(n,k) q^k p^n q^(n-k) = S_n(T_1), n = 0..8", 5.0,
         [] {
             std::vector<VerificationReport> r;
             for (unsigned n = 0; n <= 8; ++n) r.push_back(verify_bd1(n));
             return all_pass(r);
         }},
        {"l-parameter ordering = P_n(T_1/2) and D_n closed form, n = 0..6, l in {0,1,2,1/2,5/2}", 20.0,
         [l_samples] {
             std::vector<VerificationReport> r;
             for (unsigned n = 0; n <= 6; ++n)
                 for (const auto& l : l_samples) {
                     if (bd_coefficients(n, l).total != bd_normalizer_closed(n, l))
                         return "D_n closed form fails at n=" + std::to_string(n) + " l=" + to_string(l);
                     r.push_back(verify_bd2(n, l));
                 }
             return all_pass(r);
         }},
        {"Rewrite and rook normal ordering agree: all words L <= 12, 1000 random words L <= 18", 30.0,
         [] {
             std::vector<VerificationReport> r;
             for (unsigned length = 0; length <= 12; ++length) r.push_back(verify_eq21_length(length));
             std::mt19937_64 gen(20261016);
             std::uniform_int_distribution<unsigned> len(0, 18), bit(0, 1);
             for (int t = 0; t < 1000; ++t) {
                 std::string s(len(gen), 'D');
                 for (auto& c : s) c = bit(gen) ? 'U' : 'D';
                 r.push_back(verify_eq21(Word(s)));
             }
             return all_pass(r);
         }},
        {"Aggregate rook identity over all boards in [n]x[n], 0 <= k <= n <= 7", 10.0,
         [] {
             std::vector<VerificationReport> r;
             for (unsigned n = 0; n <= 7; ++n) r.push_back(verify_eq22(n));
             if (enumerate_boards(7).size() != 3432) return std::string("expected 3432 boards at n=7");
             return all_pass(r);
         }},
        {"T_n(D,U) brute force = closed form, n <= 6; T_2 = 6 U^2D^2 + 12 UD + 3", 0,
         [] {
             std::vector<VerificationReport> r;
             for (unsigned n = 0; n <= 6; ++n) r.push_back(verify_T_closed(n));
             NormalForm t2;
             t2.accumulate({2, 2}, 6);
             t2.accumulate({1, 1}, 12);
             t2.accumulate({0, 0}, 3);
             if (symmetric_T_brute(2) != t2) return std::string("T_2 hand expansion mismatch");
             return all_pass(r);
         }},
        {"U^n D^n from Stirling sum and falling product, n <= 10", 0,
         [] {
             std::vector<VerificationReport> r;
             for (unsigned n = 0; n <= 10; ++n) r.push_back(verify_stirling(n));
             return all_pass(r);
         }},
        {"S_1..S_4 table; explicit and recurrence forms agree to n = 30", 0,
         []() -> std::string {
             const std::vector<Polynomial> table{integer_poly({0, 1}), integer_poly({-1, 0, 1}),
                                                 integer_poly({0, -5, 0, 1}), integer_poly({9, 0, -14, 0, 1})};
             for (unsigned n = 1; n <= 4; ++n) {
                 if (meixner_S_recurrence(n) != table[n - 1]) return "recurrence S_" + std::to_string(n);
                 if (meixner_S_explicit(n) != table[n - 1]) return "explicit S_" + std::to_string(n);
             }
             for (unsigned n = 0; n <= 30; ++n)
                 if (meixner_S_explicit(n) != meixner_S_recurrence(n)) return "routes differ at n=" + std::to_string(n);
             return {};
         }},
        {"Odd-cycle permutation sum equals S_n, n <= 9", 30.0,
         [] {
             std::vector<VerificationReport> r;
             for (unsigned n = 0; n <= 9; ++n) r.push_back(verify_cyco(n));
             return all_pass(r);
         }},
        {"Dyck-path moments equal secant numbers, indices 0..12", 0, [] { return all_pass({verify_moments(12)}); }},
        {"Single +-1 faults in rook numbers or Stirling coefficients are caught with a witness", 0,
         []() -> std::string {
             const Word w("DUDDUDU");
             const std::size_t rook_len = rook_numbers(word_to_board(w)).r.size();
             for (std::size_t k = 0; k < rook_len; ++k)
                 for (long delta : {-1L, 1L}) {
                     Oracles o;
                     o.rook = [k, delta](const FerrersBoard& b) {
                         RookVector r = rook_numbers(b);
                         if (k < r.r.size()) r.r[k] += delta;
                         return r;
                     };
                     const auto rep = verify_eq21(w, o);
                     if (rep.passed() || !rep.witness) return "rook fault at k=" + std::to_string(k) + " missed";
                     if (verify_eq22(4, o).passed()) return "eq22 missed rook fault at k=" + std::to_string(k);
                 }
             for (unsigned n = 1; n <= 10; ++n)
                 for (std::size_t k = 0; k <= n; ++k)
                     for (long delta : {-1L, 1L}) {
                         Oracles o;
                         o.stirling_row = [k, delta](unsigned m) {
                             auto row = undn_expand(m);
                             if (k < row.size()) row[k] += delta;
                             return row;
                         };
                         const auto rep = verify_stirling(n, o);
                         if (rep.passed() || !rep.witness)
                             return "Stirling fault s(" + std::to_string(n) + "," + std::to_string(k) + ") missed";
                     }
             return {};
         }},
        {"Rook DP equals exhaustive placement count on every board in a 5x5 box", 0,
         []() -> std::string {
             for (const auto& b : enumerate_boards(5, 5))
                 if (trim(rook_numbers(b).r) != trim(rook_numbers_naive(b).r)) return "board " + to_string(b);
             return {};
         }},
    };
}

}  // namespace

int main() {
    int failed = 0;
    for (const auto& c : criteria()) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = c.check();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && c.seconds_limit > 0 && seconds > c.seconds_limit)
            reason = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.seconds_limit) + " s";
        const bool ok = reason.empty();
        failed += ok ? 0 : 1;
        std::printf("[%s] %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.name.c_str(), seconds, ok ? "" : ": ",
                    reason.c_str());
    }
    std::printf("%d criteria failed\n", failed);
    return failed;
}
