#pragma once

// Text rendering and JSON encoding of engine values.

#include <string>

#include <json.hpp>

#include "weylord/boards.hpp"
#include "weylord/polys.hpp"
#include "weylord/verify.hpp"
#include "weylord/weyl.hpp"

namespace weylord {

/// Terms in descending (u, d), e.g. "U^3D^4 + 8 U^2D^3 + 14 U D^2 + 4 D".
/// The zero element renders as "0".
std::string to_string(const NormalForm& f);

/// "1,8,14,4"
std::string to_string(const std::vector<Integer>& values);

/// A JSON number when it fits in 64 bits, a decimal string otherwise.
nlohmann::json to_json(const Integer& z);
nlohmann::json to_json(const std::vector<Integer>& values);

/// {"re": "p/q", "im": "p/q"}
nlohmann::json to_json(const GaussianRational& z);

/// [{"u", "d", "re", "im"}, ...] sorted by descending (u, d).
nlohmann::json to_json(const NormalForm& f);

/// {"coeffs": [{"re", "im"}, ...]} ascending by degree.
nlohmann::json to_json(const Polynomial& p);

/// {"columns": [...], "rook": [...]}
nlohmann::json to_json(const FerrersBoard& b, const RookVector& r);

/// {"identity", "n", "l", "status", "witness", "ms"}
nlohmann::json to_json(const VerificationReport& report);

/// "koornwinder n=2: pass"; a failure adds indented lhs/rhs lines.
std::string to_text(const VerificationReport& report);

}  // namespace weylord
