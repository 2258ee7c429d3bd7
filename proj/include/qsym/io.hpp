#pragma once

/**
 * @file io.hpp
 * @brief Text and JSON forms of elements, tensors, tableaux and matrices.
 *
 * Text form of an element: terms in canonical order joined by " + " / " - ",
 * e.g. "H[3,2] - H[4,1]" or "2*sh*[1,2]". The zero element prints as "0".
 */

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "composition.hpp"
#include "element.hpp"
#include "schur_like.hpp"
#include "tableau.hpp"

namespace qsym {

using json = nlohmann::json;

namespace detail {
template <class Map, class TermText>
std::string join_terms(const Map& terms, TermText text) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1) s += mag.str() + "*";
    s += text(key);
    first = false;
  }
  return s;
}
}  // namespace detail

inline std::string to_text(const Term& t) { return std::string(token(t.basis)) + to_string(t.index); }

inline std::string to_text(const Element& x) {
  return detail::join_terms(x.terms(), [](const Term& t) { return to_text(t); });
}

inline std::string to_text(const TensorElement& x) {
  return detail::join_terms(x.terms(), [](const TensorElement::Key& k) {
    return to_text(k.first) + " (x) " + to_text(k.second);
  });
}

inline std::string to_text(const SymElement& x) {
  return detail::join_terms(x.terms, [&](const Partition& p) { return std::string(to_string(x.basis)) + to_string(p.composition()); });
}

/// Rows separated by spaces; removed boxes print as '.'.
inline std::string to_text(const Tableau& t) {
  std::string s;
  for (int r = 0; r < t.shape.rows(); ++r) {
    if (r) s += ' ';
    s += '[';
    for (int c = 0; c < t.shape.row_length(r); ++c) {
      if (c) s += ',';
      s += c < t.shape.removed(r) ? std::string(".") : std::to_string(t.rows[r][c - t.shape.removed(r)]);
    }
    s += ']';
  }
  return s;
}

/**
 * @brief Parses a linear combination such as "H[3,2] - 2*H[4,1]" or "sh*[2,3]".
 *
 * Coefficients may be written "2*X[..]", "2X[..]" or "2 X[..]". The literal
 * "0" needs an algebra hint.
 * @throws parse_error on malformed input, unknown tokens or mixed algebras.
 */
inline Element parse_element(std::string_view text, std::optional<Algebra> hint = std::nullopt) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&](const std::string& why) -> parse_error {
    return parse_error("cannot parse element '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty input");
  if (s == "0") {
    if (!hint) throw fail("the zero element needs a known algebra");
    return Element(*hint);
  }
  std::optional<Element> out;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-' at position " + std::to_string(i));
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Integer coeff = 1;
    if (j > i) {
      coeff = Integer(s.substr(i, j - i));
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    j = s.find('[', i);
    if (j == std::string::npos) throw fail("missing '['");
    const std::string tok = s.substr(i, j - i);
    auto basis = try_parse_basis(tok);
    if (!basis) throw parse_error("unknown basis token: '" + tok + "'");
    const std::size_t close = s.find(']', j);
    if (close == std::string::npos) throw fail("missing ']'");
    Composition index;
    try {
      index = parse_composition(std::string_view(s).substr(j, close - j + 1));
    } catch (const domain_error& e) {
      throw fail(e.what());
    }
    if (!out) out = Element(algebra_of(*basis));
    if (out->algebra() != algebra_of(*basis)) throw fail("terms from both NSym and QSym");
    out->add(Term{*basis, index}, sign * coeff);
    i = close + 1;
    first = false;
  }
  if (hint && out->algebra() != *hint) throw fail("expected an element of " + std::string(to_string(*hint)));
  return *out;
}

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const Composition& c) { return json(c.vec()); }

inline json to_json(const Element& x) {
  json terms = json::array();
  for (const auto& [t, c] : x.terms())
    terms.push_back({{"basis", std::string(token(t.basis))}, {"index", to_json(t.index)}, {"coeff", c.str()}});
  return {{"algebra", std::string(to_string(x.algebra()))}, {"terms", terms}};
}

inline Element element_from_json(const json& j) {
  const std::string alg = j.at("algebra").get<std::string>();
  if (alg != "NSym" && alg != "QSym") throw parse_error("unknown algebra: " + alg);
  Element out(alg == "NSym" ? Algebra::NSym : Algebra::QSym);
  for (const auto& t : j.at("terms")) {
    const Basis b = parse_basis(t.at("basis").get<std::string>());
    out.add(Term{b, Composition(t.at("index").get<std::vector<int>>())}, Integer(t.at("coeff").get<std::string>()));
  }
  return out;
}

inline json to_json(const TensorElement& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms())
    terms.push_back({{"left", {{"basis", std::string(token(k.first.basis))}, {"index", to_json(k.first.index)}}},
                     {"right", {{"basis", std::string(token(k.second.basis))}, {"index", to_json(k.second.index)}}},
                     {"coeff", c.str()}});
  return {{"algebra", std::string(to_string(x.algebra()))}, {"terms", terms}};
}

inline json to_json(const SymElement& x) {
  json terms = json::array();
  for (const auto& [p, c] : x.terms)
    terms.push_back({{"basis", std::string(to_string(x.basis))}, {"index", to_json(p.composition())}, {"coeff", c.str()}});
  return {{"algebra", "Sym"}, {"terms", terms}};
}

inline json to_json(const Shape& s) {
  return {{"kind", std::string(to_string(s.kind()))}, {"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}};
}

inline Shape shape_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  Composition outer(j.at("outer").get<std::vector<int>>());
  Composition inner(j.value("inner", std::vector<int>{}));
  if (kind == "straight") return Shape::straight(outer);
  if (kind == "skew") return Shape::skew(outer, inner);
  if (kind == "skew2") return Shape::skew2(outer, inner);
  throw parse_error("unknown shape kind: " + kind);
}

inline json to_json(const Tableau& t) {
  return {{"shape", to_json(t.shape)}, {"family", std::string(to_string(t.family))}, {"rows", t.rows}};
}

inline Tableau tableau_from_json(const json& j) {
  return Tableau{shape_from_json(j.at("shape")), parse_family(j.at("family").get<std::string>()),
                 j.at("rows").get<Rows>()};
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qsym
