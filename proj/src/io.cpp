#include "weylord/io.hpp"

#include <climits>

namespace weylord {

namespace {

std::string monomial_text(const Monomial& m) {
    const auto part = [](char letter, unsigned e) -> std::string {
        if (e == 0) return {};
        if (e == 1) return std::string(1, letter);
        return std::string(1, letter) + "^" + std::to_string(e);
    };
    std::string u = part('U', m.u);
    const std::string d = part('D', m.d);
    // A bare "U" is kept apart from what follows so "U D^2" does not read as one symbol.
    if (m.u == 1 && !d.empty()) u += ' ';
    return u + d;
}

}  // namespace

std::string to_string(const NormalForm& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        bool negative = false;
        std::string magnitude;
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
        const std::string mono = monomial_text(m);
        if (mono.empty()) {
            out += magnitude;
        } else if (magnitude == "1") {
            out += mono;
        } else {
            out += magnitude + " " + mono;
        }
    }
    return out;
}

std::string to_string(const std::vector<Integer>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].get_str();
    }
    return out;
}

nlohmann::json to_json(const Integer& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

nlohmann::json to_json(const std::vector<Integer>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : values) out.push_back(to_json(v));
    return out;
}

nlohmann::json to_json(const GaussianRational& z) { return {{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

nlohmann::json to_json(const NormalForm& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : f.terms())
        out.push_back({{"u", m.u}, {"d", m.d}, {"re", to_string(c.re())}, {"im", to_string(c.im())}});
    return out;
}

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
    return {{"coeffs", coeffs}};
}

nlohmann::json to_json(const FerrersBoard& b, const RookVector& r) {
    return {{"columns", b.columns}, {"rook", to_json(r.r)}};
}

namespace {

nlohmann::json witness_value_json(const WitnessValue& v) {
    return std::visit(
        [](const auto& x) -> nlohmann::json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return to_string(x);
            } else {
                return to_json(x);
            }
        },
        v);
}

std::string witness_value_text(const WitnessValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return to_string(x);
            } else if constexpr (std::is_same_v<T, std::vector<Integer>>) {
                return "[" + to_string(x) + "]";
            } else {
                return to_string(x);
            }
        },
        v);
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json witness = nullptr;
    if (report.witness) {
        witness = {{"lhs", witness_value_json(report.witness->lhs)},
                   {"rhs", witness_value_json(report.witness->rhs)},
                   {"note", report.witness->note}};
    }
    return {
        {"identity", report.identity},
        {"n", report.n},
        {"l", report.l ? nlohmann::json(to_string(*report.l)) : nlohmann::json(nullptr)},
        {"status", report.passed() ? "pass" : "fail"},
        {"witness", witness},
        {"ms", report.elapsed.count()},
    };
}

std::string to_text(const VerificationReport& report) {
    std::string out = report.identity + " n=" + std::to_string(report.n);
    if (report.l) out += " l=" + to_string(*report.l);
    out += report.passed() ? ": pass" : ": FAIL";
    if (report.witness) {
        if (!report.witness->note.empty()) out += " (" + report.witness->note + ")";
        out += "\n  lhs: " + witness_value_text(report.witness->lhs);
        out += "\n  rhs: " + witness_value_text(report.witness->rhs);
    }
    return out;
}

}  // namespace weylord
