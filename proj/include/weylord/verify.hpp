#pragma once

// Exact checks of the operator-ordering identities.
//
// Everything runs in the D,U presentation with q = iD and p = U, so that
// T_1 = pq + qp = i x with x = 2UD + 1, and q^k p^n q^(n-k) = i^n D^k U^n D^(n-k).
// A report passes only on exact equality of both sides.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weylord/arith.hpp"
#include "weylord/boards.hpp"
#include "weylord/polys.hpp"
#include "weylord/weyl.hpp"

namespace weylord {

using WitnessValue = std::variant<NormalForm, Polynomial, std::vector<Integer>, Rational>;

struct Witness {
    WitnessValue lhs;
    WitnessValue rhs;
    std::string note;  // which sub-case disagreed, empty if the whole value is the witness
};

struct VerificationReport {
    std::string identity;
    unsigned n = 0;
    std::optional<Rational> l;
    std::optional<Witness> witness;  // present iff the check failed
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return !witness.has_value(); }
};

/// Replaceable kernels, so tests can inject faults into one route of a check.
struct Oracles {
    RookFunction rook = [](const FerrersBoard& b) { return rook_numbers(b); };
    std::function<std::vector<Integer>(unsigned)> stirling_row = [](unsigned n) { return undn_expand(n); };
};

struct Limits {
    std::uint64_t max_words = default_max_words;
    std::uint64_t max_perms = default_max_perms;
};

/// Identity names accepted by the suite, in report order.
const std::vector<std::string>& identity_names();

struct IdentityRange {
    unsigned default_max;  // top of the routine range
    unsigned hard_max;     // largest admissible parameter
};

/// Throws std::invalid_argument for an unknown name.
IdentityRange identity_range(const std::string& identity);

/// Word length cap for the rewrite/rook comparison.
inline constexpr unsigned eq21_max_length = 18;

VerificationReport verify_eq21(const Word& w, const Oracles& oracles = {});
/// Every word of the given length.
VerificationReport verify_eq21_length(unsigned length, const Oracles& oracles = {});
VerificationReport verify_eq22(unsigned n, const Oracles& oracles = {});
VerificationReport verify_T_closed(unsigned n, const Limits& limits = {}, const Oracles& oracles = {});
VerificationReport verify_koornwinder(unsigned n, const Limits& limits = {}, const Oracles& oracles = {});
VerificationReport verify_bd1(unsigned n);
VerificationReport verify_bd2(unsigned n, const Rational& l);
VerificationReport verify_stirling(unsigned n, const Oracles& oracles = {});
VerificationReport verify_cyco(unsigned n, const Limits& limits = {});
VerificationReport verify_moments(unsigned N);

/// Runs one identity for parameters 0..n_max (bd2 for every l). For eq21
/// the parameter is the word length. Throws std::out_of_range if n_max
/// exceeds the identity's hard cap.
std::vector<VerificationReport> verify_identity(const std::string& identity, unsigned n_max,
                                                const std::vector<Rational>& l_samples, const Limits& limits = {});

/// Every identity over 0..min(n_max, default_max); eq21 runs word lengths
/// up to min(2 n_max, default_max). Reports are ordered by identity name then
/// parameters whatever the worker count.
std::vector<VerificationReport> verify_all(unsigned n_max, const std::vector<Rational>& l_samples,
                                           const Limits& limits = {}, unsigned workers = 1);

/// 0, 1, 2, 1/2, 5/2
std::vector<Rational> default_l_samples();

}  // namespace weylord
