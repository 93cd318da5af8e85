#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "convcode/polymatrix.hpp"
#include "convcode/wam.hpp"

namespace convcode {

/// Field element in text form: an integer (reduced into the prime field),
/// `a` for the generator, `a<k>` or `a^<k>` for its powers.
Elem parse_element(const Field& f, std::string_view text);

/// Polynomial in z, e.g. "1+z+z^2", "a*z", "(1+a)z^3", "a2 z". Products,
/// powers and parentheses are allowed; throws ParseError on bad input.
Poly parse_poly(const Field& f, std::string_view text);

/// Encoder file:
///   {"field": {"p": 2, "m": 1}, "rows": [[e00, e01, ...], ...]}
/// where each entry is either an ascending list of integer-coded
/// coefficients or a polynomial string. An optional "name" is ignored.
/// Throws ParseError on malformed or empty input.
PolyMatrix matrix_from_json(const nlohmann::json& j);
/// Entries written as ascending integer coefficient lists.
nlohmann::json matrix_to_json(const PolyMatrix& m);
PolyMatrix load_matrix(const std::filesystem::path& path);

nlohmann::json field_to_json(const Field& f);
nlohmann::json wam_to_json(const WAM& w);

}  // namespace convcode
