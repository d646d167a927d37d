#include "weylord/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>

namespace weylord {

namespace {

template <class Check>
VerificationReport timed(std::string identity, unsigned n, std::optional<Rational> l, Check&& check) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report{std::move(identity), n, std::move(l), std::nullopt, {}};
    report.witness = check();
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

template <class T>
std::optional<Witness> compare(T lhs, T rhs, std::string note = {}) {
    if (lhs == rhs) return std::nullopt;
    return Witness{std::move(lhs), std::move(rhs), std::move(note)};
}

void require_at_most(const char* identity, unsigned n, unsigned cap) {
    if (n > cap)
        throw std::out_of_range(std::string(identity) + ": parameter " + std::to_string(n) + " exceeds the cap of " +
                                std::to_string(cap));
}

// i x, the image of T_1 = pq + qp
NormalForm t1_element() { return GaussianRational::i() * x_element(); }

std::vector<Rational> binomial_row(unsigned n) {
    std::vector<Rational> row;
    for (unsigned k = 0; k <= n; ++k) row.emplace_back(binomial(n, k));
    return row;
}

const std::map<std::string, IdentityRange>& ranges() {
    static const std::map<std::string, IdentityRange> table{
        {"bd1", {8, 8}},        {"bd2", {6, 6}},      {"cyco", {9, 9}},      {"eq21", {12, eq21_max_length}},
        {"eq22", {7, 8}},       {"koornwinder", {6, 7}}, {"moments", {12, 12}}, {"stirling", {10, 10}},
        {"t-closed", {6, 7}},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, range] : ranges()) out.push_back(name);
        return out;
    }();
    return names;
}

IdentityRange identity_range(const std::string& identity) {
    const auto it = ranges().find(identity);
    if (it == ranges().end()) throw std::invalid_argument("unknown identity '" + identity + "'");
    return it->second;
}

std::vector<Rational> default_l_samples() { return {0, 1, 2, Rational(1, 2), Rational(5, 2)}; }

VerificationReport verify_eq21(const Word& w, const Oracles& oracles) {
    require_at_most("eq21", static_cast<unsigned>(w.size()), eq21_max_length);
    return timed("eq21", static_cast<unsigned>(w.size()), std::nullopt, [&] {
        const NormalForm by_rooks = from_rook_vector(w.count_u(), w.count_d(), oracles.rook(word_to_board(w)));
        return compare(normal_order_rewrite(w), by_rooks, "word " + w.letters());
    });
}

VerificationReport verify_eq21_length(unsigned length, const Oracles& oracles) {
    require_at_most("eq21", length, eq21_max_length);
    return timed("eq21", length, std::nullopt, [&]() -> std::optional<Witness> {
        std::string letters(length, 'D');
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
            for (unsigned j = 0; j < length; ++j) letters[j] = (bits >> (length - 1 - j)) & 1u ? 'U' : 'D';
            const Word w(letters);
            const NormalForm by_rooks = from_rook_vector(w.count_u(), w.count_d(), oracles.rook(word_to_board(w)));
            if (auto witness = compare(normal_order_rewrite(w), by_rooks, "word " + letters)) return witness;
        }
        return std::nullopt;
    });
}

VerificationReport verify_eq22(unsigned n, const Oracles& oracles) {
    require_at_most("eq22", n, identity_range("eq22").hard_max);
    return timed("eq22", n, std::nullopt, [&] {
        std::vector<Integer> summed(n + 1, 0);
        for (const auto& b : enumerate_boards(n)) {
            const RookVector r = oracles.rook(b);
            for (unsigned k = 0; k <= n; ++k) summed[k] += r.at(k);
        }
        std::vector<Integer> closed;
        for (unsigned k = 0; k <= n; ++k) closed.push_back(aggregate_rook_closed(n, k));
        return compare(std::move(summed), std::move(closed));
    });
}

VerificationReport verify_T_closed(unsigned n, const Limits& limits, const Oracles& oracles) {
    require_at_most("t-closed", n, identity_range("t-closed").hard_max);
    return timed("t-closed", n, std::nullopt,
                 [&] { return compare(symmetric_T_brute(n, limits.max_words, oracles.rook), symmetric_T_closed(n)); });
}

VerificationReport verify_koornwinder(unsigned n, const Limits& limits, const Oracles& oracles) {
    require_at_most("koornwinder", n, identity_range("koornwinder").hard_max);
    return timed("koornwinder", n, std::nullopt, [&] {
        // T_n(D,U) = (-i)^n (2n-1)!!/n! S_n(i x)
        Rational prefactor(double_factorial_odd(n), factorial(n));
        prefactor.canonicalize();
        const NormalForm rhs =
            (i_pow(-static_cast<long>(n)) * GaussianRational(prefactor)) *
            substitute_polynomial(meixner_S_recurrence(n), t1_element());
        return compare(symmetric_T_brute(n, limits.max_words, oracles.rook), rhs);
    });
}

VerificationReport verify_bd1(unsigned n) {
    require_at_most("bd1", n, identity_range("bd1").hard_max);
    return timed("bd1", n, std::nullopt, [&] {
        const NormalForm lhs = i_pow(n) * bd_ordering_sum(n, binomial_row(n));
        return compare(lhs, substitute_polynomial(meixner_S_recurrence(n), t1_element()));
    });
}

VerificationReport verify_bd2(unsigned n, const Rational& l) {
    require_at_most("bd2", n, identity_range("bd2").hard_max);
    // Both throw std::domain_error for an inadmissible l.
    const OrderingWeights weights = bd_coefficients(n, l);
    const Polynomial hahn = continuous_hahn_P(n, l);
    return timed("bd2", n, l, [&]() -> std::optional<Witness> {
        if (n <= 1) {
            for (const Rational& a : weights.a)
                if (a != 1) return Witness{a, Rational(1), "normalisation a_k = 1 for n <= 1"};
        }
        if (auto w = compare(weights.total, bd_normalizer_closed(n, l), "D_n closed form")) return w;
        // sum_k a_k q^k p^n q^(n-k) = D_n P_n(T_1 / 2)
        const NormalForm lhs = i_pow(n) * bd_ordering_sum(n, weights.a);
        const NormalForm rhs =
            GaussianRational(weights.total) * substitute_polynomial(hahn, GaussianRational(Rational(1, 2)) * t1_element());
        return compare(lhs, rhs);
    });
}

VerificationReport verify_stirling(unsigned n, const Oracles& oracles) {
    require_at_most("stirling", n, identity_range("stirling").hard_max);
    return timed("stirling", n, std::nullopt, [&]() -> std::optional<Witness> {
        const NormalForm target = NormalForm::monomial(n, n);
        const NormalForm ud = NormalForm::monomial(1, 1);

        std::vector<GaussianRational> row;
        for (const Integer& s : oracles.stirling_row(n)) row.emplace_back(Rational(s));
        if (auto w = compare(substitute_polynomial(Polynomial(std::move(row)), ud), target, "Stirling sum"))
            return w;

        NormalForm product = NormalForm::one();
        for (unsigned j = 1; j <= n; ++j)
            product = product * (ud - GaussianRational(static_cast<long>(j) - 1) * NormalForm::one());
        return compare(std::move(product), target, "falling product");
    });
}

VerificationReport verify_cyco(unsigned n, const Limits& limits) {
    require_at_most("cyco", n, identity_range("cyco").hard_max);
    return timed("cyco", n, std::nullopt,
                 [&] { return compare(cyco_polynomial(n, limits.max_perms), meixner_S_recurrence(n)); });
}

VerificationReport verify_moments(unsigned N) {
    require_at_most("moments", N, identity_range("moments").hard_max);
    return timed("moments", N, std::nullopt, [&] { return compare(moments_from_recurrence(N), secant_numbers(N)); });
}

std::vector<VerificationReport> verify_identity(const std::string& identity, unsigned n_max,
                                                const std::vector<Rational>& l_samples, const Limits& limits) {
    const IdentityRange range = identity_range(identity);
    require_at_most(identity.c_str(), n_max, range.hard_max);
    std::vector<VerificationReport> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        if (identity == "bd1") {
            out.push_back(verify_bd1(n));
        } else if (identity == "bd2") {
            for (const Rational& l : l_samples) out.push_back(verify_bd2(n, l));
        } else if (identity == "cyco") {
            out.push_back(verify_cyco(n, limits));
        } else if (identity == "eq21") {
            out.push_back(verify_eq21_length(n));
        } else if (identity == "eq22") {
            out.push_back(verify_eq22(n));
        } else if (identity == "koornwinder") {
            out.push_back(verify_koornwinder(n, limits));
        } else if (identity == "moments") {
            out.push_back(verify_moments(n));
        } else if (identity == "stirling") {
            out.push_back(verify_stirling(n));
        } else if (identity == "t-closed") {
            out.push_back(verify_T_closed(n, limits));
        }
    }
    return out;
}

std::vector<VerificationReport> verify_all(unsigned n_max, const std::vector<Rational>& l_samples,
                                           const Limits& limits, unsigned workers) {
    const auto& names = identity_names();
    const auto run_one = [&](const std::string& name) {
        const unsigned cap = identity_range(name).default_max;
        const unsigned top = name == "eq21" ? std::min(2 * n_max, cap) : std::min(n_max, cap);
        return verify_identity(name, top, l_samples, limits);
    };

    std::vector<std::vector<VerificationReport>> groups(names.size());
    if (workers <= 1) {
        for (std::size_t g = 0; g < names.size(); ++g) groups[g] = run_one(names[g]);
    } else {
        // Identities are handed out in name order to at most `workers` tasks
        // at a time; results land in their fixed slot.
        for (std::size_t first = 0; first < names.size(); first += workers) {
            std::vector<std::future<std::vector<VerificationReport>>> batch;
            const std::size_t last = std::min(names.size(), first + workers);
            for (std::size_t g = first; g < last; ++g)
                batch.push_back(std::async(std::launch::async, run_one, std::cref(names[g])));
            for (std::size_t g = first; g < last; ++g) groups[g] = batch[g - first].get();
        }
    }

    std::vector<VerificationReport> out;
    for (auto& group : groups)
        for (auto& report : group) out.push_back(std::move(report));
    return out;
}

}  // namespace weylord
