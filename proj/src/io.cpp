#include "splitg2/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace splitg2::io {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::ParseError, what); }

json scalar_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const FieldSpec& field, const json& j, const std::string& where) {
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::from_integer(field, mpz_class(j.dump(), 10));
  throw parse_error(where + ": expected a scalar string or integer, got " + j.dump());
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw parse_error(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(where + ": missing key \"" + key + "\"");
  return *it;
}

std::size_t count_from_json(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw parse_error(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

Vec3 vec_from_json(const FieldSpec& field, const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw parse_error(where + ": expected an array of 3 scalars");
  return {{scalar_from_json(field, j[0], where), scalar_from_json(field, j[1], where),
           scalar_from_json(field, j[2], where)}};
}

std::string term(const Scalar& c, const std::string& name, bool first) {
  std::string coeff = c.to_string();
  const bool negative = coeff.front() == '-';
  if (negative) coeff.erase(0, 1);
  std::string out = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  if (coeff != "1") out += coeff + " ";
  return out + name;
}

// Pads every cell of a grid to the widest entry of its column.
std::string grid_text(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out += line + "\n";
  }
  return out;
}

std::string latex_cell(const BracketTable& t, std::size_t i, std::size_t j) {
  std::string out;
  for (std::size_t k = 0; k < t.n(); ++k) {
    const Scalar& c = t(i, j, k);
    if (c.is_zero()) continue;
    std::string coeff = c.to_string();
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (negative) {
      out += out.empty() ? "-" : " - ";
    } else if (!out.empty()) {
      out += " + ";
    }
    if (coeff != "1") out += coeff;
    out += "x_{" + std::to_string(k + 1) + "}";
  }
  return "$" + (out.empty() ? std::string("0") : out) + "$";
}

}  // namespace

json to_json(const ZornMatrix& z) {
  json j;
  j["a"] = scalar_json(z.a);
  j["x"] = json::array({scalar_json(z.x[0]), scalar_json(z.x[1]), scalar_json(z.x[2])});
  j["y"] = json::array({scalar_json(z.y[0]), scalar_json(z.y[1]), scalar_json(z.y[2])});
  j["b"] = scalar_json(z.b);
  return j;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const Scalar& s : m.row(r)) row.push_back(scalar_json(s));
    rows.push_back(std::move(row));
  }
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(rows);
  return j;
}

json to_json(const DerivationParams& p) {
  json j = json::object();
  for (std::size_t k = 0; k < kDerivationDim; ++k) j[std::string(kParamNames[k])] = scalar_json(p[k]);
  return j;
}

json to_json(const DerivationSpace& s) {
  json j;
  j["field"] = s.field.to_string();
  j["dim"] = s.dim;
  j["pinned"] = s.pinned;
  json basis = json::array();
  for (const Map8& d : s.basis) basis.push_back(to_json(d.matrix()));
  j["basis"] = std::move(basis);
  return j;
}

json to_json(const BracketTable& t) {
  json brackets = json::array();
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = i + 1; j < t.n(); ++j) {
      json terms = json::array();
      for (std::size_t k = 0; k < t.n(); ++k) {
        if (t(i, j, k).is_zero()) continue;
        json term;
        term["k"] = k + 1;
        term["c"] = scalar_json(t(i, j, k));
        terms.push_back(std::move(term));
      }
      if (terms.empty()) continue;
      json entry;
      entry["i"] = i + 1;
      entry["j"] = j + 1;
      entry["terms"] = std::move(terms);
      brackets.push_back(std::move(entry));
    }
  }
  json out;
  out["n"] = t.n();
  out["brackets"] = std::move(brackets);
  return out;
}

ZornMatrix zorn_from_json(const FieldSpec& field, const json& j) {
  const std::string where = "octonion";
  return {scalar_from_json(field, member(j, "a", where), where + ".a"),
          vec_from_json(field, member(j, "x", where), where + ".x"),
          vec_from_json(field, member(j, "y", where), where + ".y"),
          scalar_from_json(field, member(j, "b", where), where + ".b")};
}

Matrix matrix_from_json(const FieldSpec& field, const json& j) {
  const std::size_t rows = count_from_json(member(j, "rows", "matrix"), "matrix.rows");
  const std::size_t cols = count_from_json(member(j, "cols", "matrix"), "matrix.cols");
  const json& entries = member(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows) {
    throw parse_error("matrix.entries: expected " + std::to_string(rows) + " rows");
  }
  std::vector<Scalar> flat;
  flat.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = entries[r];
    const std::string where = "matrix.entries[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols) {
      throw parse_error(where + ": expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) flat.push_back(scalar_from_json(field, row[c], where));
  }
  return Matrix(field, rows, cols, std::move(flat));
}

DerivationParams params_from_json(const FieldSpec& field, const json& j) {
  if (!j.is_object() || j.size() != kDerivationDim) {
    throw parse_error("derivation parameters: expected an object with exactly 14 keys");
  }
  DerivationParams p = DerivationParams::zero(field);
  for (std::size_t k = 0; k < kDerivationDim; ++k) {
    const std::string key(kParamNames[k]);
    p[k] = scalar_from_json(field, member(j, key.c_str(), "derivation parameters"), key);
  }
  return p;
}

BracketTable table_from_json(const FieldSpec& field, const json& j) {
  const std::size_t n = count_from_json(member(j, "n", "table"), "table.n");
  const json& brackets = member(j, "brackets", "table");
  if (!brackets.is_array()) throw parse_error("table.brackets: expected an array");
  BracketTable t(field, n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const json& entry : brackets) {
    const std::size_t i = count_from_json(member(entry, "i", "bracket"), "bracket.i");
    const std::size_t jj = count_from_json(member(entry, "j", "bracket"), "bracket.j");
    if (i < 1 || jj <= i || jj > n) {
      throw parse_error("bracket (" + std::to_string(i) + ", " + std::to_string(jj) +
                        "): need 1 <= i < j <= n");
    }
    if (!seen.emplace(i, jj).second) {
      throw parse_error("bracket (" + std::to_string(i) + ", " + std::to_string(jj) + ") repeated");
    }
    const json& terms = member(entry, "terms", "bracket");
    if (!terms.is_array()) throw parse_error("bracket.terms: expected an array");
    for (const json& term : terms) {
      const std::size_t k = count_from_json(member(term, "k", "term"), "term.k");
      if (k < 1 || k > n) throw parse_error("term.k out of range: " + std::to_string(k));
      const Scalar c = scalar_from_json(field, member(term, "c", "term"), "term.c");
      t(i - 1, jj - 1, k - 1) = c;
      t(jj - 1, i - 1, k - 1) = -c;
    }
  }
  return t;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw parse_error("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

ZornMatrix parse_octonion(const FieldSpec& field, std::string_view text) {
  if (is_basis_name(text)) return zorn_from_name(field, text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{') {
    throw parse_error("at position " + std::to_string(first == std::string_view::npos ? 0 : first) +
                      ": expected a basis name (A, B, C1..C3, D1..D3, Y, ZERO) or a JSON object, "
                      "got '" + std::string(text) + "'");
  }
  return zorn_from_json(field, parse_json(text));
}

std::string zorn_text(const ZornMatrix& z) {
  const Coord8 c = coords_of(z);
  std::string combo;
  std::size_t start = 0;
  if (!c[0].is_zero() && c[0] == c[1]) {
    combo += term(c[0], "Y", true);
    start = 2;
  }
  for (std::size_t i = start; i < 8; ++i) {
    if (c[i].is_zero()) continue;
    combo += term(c[i], basis_name(i), combo.empty());
  }
  if (combo.empty()) combo = "ZERO";
  return combo + " = (" + z.a.to_string() + ", [" + z.x[0].to_string() + ", " +
         z.x[1].to_string() + ", " + z.x[2].to_string() + "]; [" + z.y[0].to_string() + ", " +
         z.y[1].to_string() + ", " + z.y[2].to_string() + "], " + z.b.to_string() + ")\n";
}

std::string zorn_latex(const ZornMatrix& z) {
  auto vec = [](const Vec3& v) {
    return "(" + v[0].to_string() + ", " + v[1].to_string() + ", " + v[2].to_string() + ")";
  };
  return "\\begin{tabular}{cc}\n" + z.a.to_string() + " & " + vec(z.x) + " \\\\\n" + vec(z.y) +
         " & " + z.b.to_string() + "\n\\end{tabular}\n";
}

std::string matrix_text(const Matrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const Scalar& s : m.row(r)) cells[r].push_back(s.to_string());
  }
  return grid_text(cells);
}

std::string matrix_latex(const Matrix& m) {
  std::string out = "\\begin{tabular}{" + std::string(m.cols(), 'r') + "}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out += " & ";
      out += "$" + m(r, c).to_string() + "$";
    }
    out += r + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  return out + "\\end{tabular}\n";
}

std::string params_text(const DerivationParams& p) {
  std::string out;
  for (std::size_t k = 0; k < kDerivationDim; ++k) {
    out += std::string(kParamNames[k]) + " = " + p[k].to_string() + "\n";
  }
  return out;
}

std::string params_latex(const DerivationParams& p) {
  std::string out = "\\begin{tabular}{lr}\n";
  for (std::size_t k = 0; k < kDerivationDim; ++k) {
    const std::string name(kParamNames[k]);
    out += "$" + name.substr(0, 1) + "_{" + name.substr(1) + "}$ & $" + p[k].to_string() + "$";
    out += k + 1 < kDerivationDim ? " \\\\\n" : "\n";
  }
  return out + "\\end{tabular}\n";
}

std::string table_text(const BracketTable& t) {
  std::vector<std::vector<std::string>> cells(t.n());
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < t.n(); ++j) cells[i].push_back(format_cell(t, i, j));
  }
  return grid_text(cells);
}

std::string table_latex(const BracketTable& t) {
  std::string out = "\\begin{tabular}{c|" + std::string(t.n(), 'c') + "}\n";
  out += "$[\\cdot,\\cdot]$";
  for (std::size_t j = 0; j < t.n(); ++j) out += " & $x_{" + std::to_string(j + 1) + "}$";
  out += " \\\\\n\\hline\n";
  for (std::size_t i = 0; i < t.n(); ++i) {
    out += "$x_{" + std::to_string(i + 1) + "}$";
    for (std::size_t j = 0; j < t.n(); ++j) out += " & " + latex_cell(t, i, j);
    out += i + 1 < t.n() ? " \\\\\n" : "\n";
  }
  return out + "\\end{tabular}\n";
}

BracketTable parse_golden(const FieldSpec& field, std::string_view text, std::size_t n) {
  BracketTable t(field, n);
  std::set<std::tuple<long, long, long>> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string s; fields >> s;) tok.push_back(s);
    if (tok.empty()) continue;
    const std::string where = "golden line " + std::to_string(line_no);
    if (tok.size() != 4) throw parse_error(where + ": expected 'i j k c'");
    long idx[3];
    for (int q = 0; q < 3; ++q) {
      try {
        std::size_t used = 0;
        idx[q] = std::stol(tok[q], &used);
        if (used != tok[q].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw parse_error(where + ": bad index '" + tok[q] + "'");
      }
      if (idx[q] < 1 || idx[q] > static_cast<long>(n)) {
        throw parse_error(where + ": index out of range: " + tok[q]);
      }
    }
    if (!seen.emplace(idx[0], idx[1], idx[2]).second) {
      throw parse_error(where + ": repeated triple");
    }
    t(idx[0] - 1, idx[1] - 1, idx[2] - 1) = Scalar::parse(field, tok[3]);
  }
  return t;
}

std::string golden_text(const BracketTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      for (std::size_t k = 0; k < t.n(); ++k) {
        if (t(i, j, k).is_zero()) continue;
        out += std::to_string(i + 1) + " " + std::to_string(j + 1) + " " + std::to_string(k + 1) +
               " " + t(i, j, k).to_string() + "\n";
      }
    }
  }
  return out;
}

}  // namespace splitg2::io
