#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cliffrep/error.hpp"
#include "cliffrep/expr.hpp"

namespace cliffrep {
namespace {

std::string generator_plain(unsigned k) {
  return k <= 9 ? "e" + std::to_string(k) : "e[" + std::to_string(k) + "]";
}

std::string rational_latex(const Rational& x) {
  if (is_integer(x)) return x.get_str();
  const bool neg = sgn(x) < 0;
  return std::string(neg ? "-" : "") + "\\frac{" + mpz_class(abs(x.get_num())).get_str() + "}{" +
         x.get_den().get_str() + "}";
}

std::string blade_latex_mv(IndexSet s) {
  std::string body;
  for (unsigned k : s.indices()) {
    if (!body.empty()) body += ' ';
    body += "e_{" + std::to_string(k) + "}";
  }
  return s.grade() == 1 ? body : "\\left(" + body + "\\right)";
}

// Right-aligns a grid of tokens into whitespace-separated rows.
std::string aligned(const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 0;
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ' ';
      out.append(width - row[j].size(), ' ');
      out += row[j];
    }
    out += '\n';
  }
  return out;
}

std::string joined(const std::vector<std::vector<std::string>>& cells, std::string_view sep, std::string_view eol) {
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += sep;
      out += row[j];
    }
    out += eol;
  }
  return out;
}

std::string pmatrix(const std::vector<std::vector<std::string>>& cells) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j > 0) out += " & ";
      out += cells[i][j];
    }
    out += i + 1 < cells.size() ? "\\\\\n" : "\n";
  }
  return out + "\\end{pmatrix}\n";
}

std::string json_rows(const std::vector<std::vector<nlohmann::json>>& cells) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out += "  [";
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j > 0) out += ", ";
      out += cells[i][j].dump();
    }
    out += i + 1 < cells.size() ? "],\n" : "]\n";
  }
  return out + "]\n";
}

nlohmann::json rational_json(const Rational& x) {
  if (is_integer(x) && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

std::string signed_blade(int sign, IndexSet s, MvStyle style) {
  if (sign == 0) return "0";
  const std::string name = blade_name(s, style);
  return sign < 0 ? "-" + name : name;
}

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(mpz_class(v.dump(), 10));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or \"p/q\" strings");
}

}  // namespace

std::string blade_name(IndexSet s, MvStyle style) {
  if (s.empty()) return "1";
  std::string out;
  for (unsigned k : s.indices()) {
    if (style == MvStyle::plain) {
      if (!out.empty()) out += '*';
      out += generator_plain(k);
    } else {
      if (!out.empty()) out += ' ';
      out += k <= 9 ? "{e_" + std::to_string(k) + "}" : "{e_{" + std::to_string(k) + "}}";
    }
  }
  return out;
}

std::string format_multivector(const Multivector& u, MvStyle style) {
  const BasisOrder& order = basis_order(u.signature().n());
  std::string out;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const Rational& c = u.coeffs()[j];
    if (sgn(c) == 0) continue;
    const IndexSet s(order.masks()[j]);
    const Rational mag = abs(c);
    std::string token;
    if (style == MvStyle::plain) {
      if (s.empty()) {
        token = mag.get_str();
      } else {
        token = mag == 1 ? blade_name(s, style) : mag.get_str() + "*" + blade_name(s, style);
      }
    } else {
      if (s.empty()) {
        token = rational_latex(mag);
      } else {
        token = mag == 1 ? blade_latex_mv(s) : rational_latex(mag) + "\\," + blade_latex_mv(s);
      }
    }
    if (out.empty()) {
      out = sgn(c) < 0 ? "-" + token : token;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      out += token;
    }
  }
  return out.empty() ? "0" : out;
}

MatrixFormat parse_matrix_format(std::string_view name) {
  if (name == "text") return MatrixFormat::text;
  if (name == "csv") return MatrixFormat::csv;
  if (name == "latex") return MatrixFormat::latex;
  if (name == "json") return MatrixFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (text, csv, latex, json)");
}

std::string format_matrix(const RationalMatrix& m, MatrixFormat fmt) {
  const std::size_t dim = m.dim();
  if (fmt == MatrixFormat::json) {
    std::vector<std::vector<nlohmann::json>> cells(dim, std::vector<nlohmann::json>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) cells[i][j] = rational_json(m(i, j));
    }
    return json_rows(cells);
  }
  std::vector<std::vector<std::string>> cells(dim, std::vector<std::string>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      cells[i][j] = fmt == MatrixFormat::latex ? rational_latex(m(i, j)) : to_string(m(i, j));
    }
  }
  switch (fmt) {
    case MatrixFormat::csv:
      return joined(cells, ",", "\n");
    case MatrixFormat::latex:
      return pmatrix(cells);
    default:
      return aligned(cells);
  }
}

std::string format_matrix(const MultTable& m, MatrixFormat fmt) {
  const std::size_t dim = m.dim();
  const BasisOrder& order = basis_order(m.signature().n());
  const auto blade = [&](Ordinal mu, Ordinal nu) { return order.blade(m.ordinal(mu, nu)); };

  if (fmt == MatrixFormat::json) {
    std::string out = "[\n";
    for (Ordinal mu = 1; mu <= dim; ++mu) {
      out += "  [";
      for (Ordinal nu = 1; nu <= dim; ++nu) {
        if (nu > 1) out += ", ";
        out += "{\"sign\": " + std::to_string(m.sign(mu, nu)) + ", \"ordinal\": " + std::to_string(m.ordinal(mu, nu)) +
               "}";
      }
      out += mu < dim ? "],\n" : "]\n";
    }
    return out + "]\n";
  }

  std::vector<std::vector<std::string>> cells(dim, std::vector<std::string>(dim));
  for (Ordinal mu = 1; mu <= dim; ++mu) {
    for (Ordinal nu = 1; nu <= dim; ++nu) {
      const int sg = m.sign(mu, nu);
      std::string& c = cells[mu - 1][nu - 1];
      switch (fmt) {
        case MatrixFormat::csv:
          c = std::to_string(sg * static_cast<int>(m.ordinal(mu, nu)));
          break;
        case MatrixFormat::latex:
          c = signed_blade(sg, blade(mu, nu), MvStyle::latex);
          break;
        default:
          c = signed_blade(sg, blade(mu, nu), MvStyle::plain);
      }
    }
  }
  if (fmt == MatrixFormat::csv) return joined(cells, ",", "\n");
  if (fmt == MatrixFormat::text) return aligned(cells);

  // Row 1 doubles as the column header and column 1 as the row labels.
  std::string out = "\\left( \\begin{array}{c|" + std::string(dim, 'c') + "}\n";
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (j > 0) out += " & ";
      out += cells[i][j];
    }
    out += i + 1 < dim ? "\\\\\n" : "\n";
    if (i == 0) out += "\\hline\n";
  }
  return out + "\\end{array}\\right)\n";
}

std::string format_scalar_table(const ScalarTable& g, MatrixFormat fmt) {
  std::vector<std::string> row;
  for (auto v : g.diag()) row.push_back(std::to_string(static_cast<int>(v)));
  switch (fmt) {
    case MatrixFormat::csv:
      return joined({row}, ",", "\n");
    case MatrixFormat::json:
      return joined({row}, ", ", "").insert(0, "[") + "]\n";
    case MatrixFormat::latex:
      return "\\begin{pmatrix}" + joined({row}, " & ", "") + "\\end{pmatrix}\n";
    default:
      return joined({row}, " ", "\n");
  }
}

RationalMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Rational> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_rational(tok));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows);
}

RationalMatrix parse_matrix_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) throw std::invalid_argument("matrix JSON must be an array of arrays");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : doc) {
    if (!r.is_array()) throw std::invalid_argument("matrix JSON must be an array of arrays");
    std::vector<Rational> row;
    for (const auto& v : r) row.push_back(json_rational(v));
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows);
}

std::vector<std::vector<TableEntry>> parse_table_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) throw std::invalid_argument("table JSON must be an array of arrays");
  std::vector<std::vector<TableEntry>> rows;
  for (const auto& r : doc) {
    if (!r.is_array()) throw std::invalid_argument("table JSON must be an array of arrays");
    std::vector<TableEntry> row;
    for (const auto& v : r) {
      if (!v.is_object() || !v.contains("sign") || !v.contains("ordinal")) {
        throw std::invalid_argument("table cells must be {\"sign\", \"ordinal\"} objects");
      }
      row.push_back({v.at("sign").get<int>(), v.at("ordinal").get<Ordinal>()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cliffrep
