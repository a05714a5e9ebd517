#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "splitg2/liestruct.hpp"

namespace splitg2::io {

using json = nlohmann::ordered_json;

json to_json(const ZornMatrix& z);
json to_json(const Matrix& m);
json to_json(const DerivationParams& p);
json to_json(const DerivationSpace& s);
json to_json(const BracketTable& t);

ZornMatrix zorn_from_json(const FieldSpec& field, const json& j);
Matrix matrix_from_json(const FieldSpec& field, const json& j);
DerivationParams params_from_json(const FieldSpec& field, const json& j);
BracketTable table_from_json(const FieldSpec& field, const json& j);

/// Parses JSON text, raising ParseError with the byte offset on failure.
json parse_json(std::string_view text);

/// A basis-name literal or a ZornMatrix JSON object.
ZornMatrix parse_octonion(const FieldSpec& field, std::string_view text);

std::string zorn_text(const ZornMatrix& z);
std::string zorn_latex(const ZornMatrix& z);
std::string matrix_text(const Matrix& m);
std::string matrix_latex(const Matrix& m);
std::string params_text(const DerivationParams& p);
std::string params_latex(const DerivationParams& p);
std::string table_text(const BracketTable& t);
std::string table_latex(const BracketTable& t);

/// Golden tables are whitespace-separated "i j k c" lines (one-based indices,
/// c in the scalar text encoding); '#' starts a comment. Missing triples are 0.
BracketTable parse_golden(const FieldSpec& field, std::string_view text, std::size_t n = 14);
std::string golden_text(const BracketTable& t);

/// The reference structure-constant table (data/golden_table.txt).
std::string_view builtin_golden();

}  // namespace splitg2::io
