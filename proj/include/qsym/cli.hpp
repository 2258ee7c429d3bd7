#pragma once

/**
 * @file cli.hpp
 * @brief The qsym command line, as a function usable from tests.
 *
 * Exit status: 0 success, 1 domain error, 2 usage error.
 */

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "algebra.hpp"
#include "composition.hpp"
#include "element.hpp"
#include "io.hpp"
#include "schur_like.hpp"
#include "tableau.hpp"
#include "transition.hpp"
#include "verify.hpp"

namespace qsym::cli {

/// Malformed or inconsistent command-line input.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Composition comp_arg(const std::string& s) {
  try {
    return parse_composition(s);
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
}

inline int int_arg(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw usage_error(std::string("expected an integer for ") + what + ", got '" + s + "'");
}

inline Basis basis_arg(const std::string& s) {
  auto b = try_parse_basis(s);
  if (!b) throw usage_error("unknown basis token: " + s);
  return *b;
}

inline Family family_arg(const std::string& s) {
  try {
    return parse_family(s);
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
}

inline Element element_arg(const std::string& s, std::optional<Algebra> hint = std::nullopt) {
  try {
    return parse_element(s, hint);
  } catch (const parse_error& e) {
    throw usage_error(e.what());
  }
}

inline Basis target_basis(const std::string& token_text, const Element& x) {
  if (token_text.empty()) return output_basis(x);
  const Basis b = basis_arg(token_text);
  if (algebra_of(b) != x.algebra())
    throw usage_error("basis " + token_text + " is not a basis of " + std::string(to_string(x.algebra())));
  return b;
}

struct Options {
  bool json = false;
  std::string basis;
  std::string family = "sh";
  int max_degree = -1;
  std::string identity = "all";
  std::uint64_t seed = 1;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(const Element& x) { out_ << (opt.json ? to_json(x).dump() : to_text(x)) << '\n'; }
  void emit(const TensorElement& x) { out_ << (opt.json ? to_json(x).dump() : to_text(x)) << '\n'; }
  void emit(const SymElement& x) { out_ << (opt.json ? to_json(x).dump() : to_text(x)) << '\n'; }
  void emit(const json& j, const std::string& text) { out_ << (opt.json ? j.dump() : text) << '\n'; }

  Options opt;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

/**
 * @brief Runs one command.
 * @param args arguments without the program name.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  Runner R(out, err);
  Options& o = R.opt;

  CLI::App app{"Exact computations in QSym and NSym with the shin, row-strict, flipped and backward bases", "qsym"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_extras();
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--basis,--to", o.basis, "output basis token (H, E, R, sh, rsh, fsh, bsh, M, F, sh*, ...)");
  app.add_option("--family", o.family, "sh, rsh, fsh or bsh");
  app.add_option("--max-degree", o.max_degree, "degree bound for verify");
  app.add_option("--identity", o.identity, "identity name for verify, or 'all'");
  app.add_option("--seed", o.seed, "seed for randomized checks in verify");

  std::vector<std::string> pos;
  std::string side, gen, shape_kind = "straight", inner, type, variant, from, sym_basis = "s";
  bool count_only = false;
  // Positionals are collected as extras: a declared vector positional would
  // split bracketed literals such as [3,1] into separate values.
  auto sub = [&](const char* name, const char* help, const char* posdesc) {
    auto* s = app.add_subcommand(name, help);
    s->allow_extras();
    s->usage(std::string("qsym ") + name + " [OPTIONS] " + posdesc);
    return s;
  };
  auto* expand = sub("expand", "write an element in another basis (default canonical)", "ELEMENT");
  auto* convert_cmd = sub("convert", "write an element in --basis", "ELEMENT");
  auto* multiply_cmd = sub("multiply", "product of two elements", "ELEMENT ELEMENT");
  auto* pair_cmd = sub("pair", "pairing of an NSym and a QSym element", "NSYM QSYM");
  auto* involute = sub("involute", "apply psi, rho or omega", "psi|rho|omega ELEMENT");
  auto* antipode_cmd = sub("antipode", "apply the antipode", "ELEMENT");
  auto* pieri_cmd = sub("pieri", "Pieri rule for --family", "COMPOSITION R");
  pieri_cmd->add_option("--side", side, "left or right");
  pieri_cmd->add_option("--generator", gen, "H or E");
  auto* beth_cmd = sub("beth", "creation operator beth_m", "M ELEMENT");
  auto* jt = sub("jacobi-trudi", "determinantal expansion for --family", "COMPOSITION");
  auto* ribbon = sub("ribbon-mult", "ribbon multiplication for --family", "ALPHA BETA");
  auto* skew_cmd = sub("skew", "skew function X*_{alpha/beta} for --family", "ALPHA BETA");
  auto* skew2_cmd = sub("skew2", "skew-II function X*_{alpha//beta} for --family", "ALPHA BETA");
  auto* coproduct_cmd = sub("coproduct", "coproduct of an element, or a skew coproduct formula with --variant",
                            "ELEMENT | COMPOSITION");
  coproduct_cmd->add_option("--variant", variant, "skew or skew2: assemble Delta X*_alpha from skew functions");
  auto* sc = sub("struct-coeffs", "structure coefficients of X_beta X_gamma for --family", "BETA GAMMA");
  auto* chi_cmd = sub("chi", "forgetful map to symmetric functions", "ELEMENT");
  chi_cmd->add_option("--sym-basis", sym_basis, "h or s (default s)");
  auto* detect = sub("schur-detect", "Schur expansion of a symmetric QSym element", "ELEMENT");
  auto* tab = sub("tableaux", "enumerate or count tableaux of --family", "OUTER");
  tab->add_option("--shape", shape_kind, "straight, skew or skew2");
  tab->add_option("--inner", inner, "inner composition for skew shapes");
  tab->add_option("--type", type, "weak composition type (default: standard fillings)");
  tab->add_flag("--count", count_only, "print only the number of tableaux");
  auto* strips = sub("strips", "shin-horizontal strip extensions", "ALPHA R");
  auto* chains = sub("poset-chains", "maximal chains from INNER to OUTER in the shin poset", "INNER OUTER");
  chains->add_flag("--count", count_only, "print only the number of chains");
  auto* tm = sub("transition-matrix", "degree-n matrix from --from to --basis", "N");
  tm->add_option("--from", from, "source basis token");
  auto* ver = sub("verify", "run identity sweeps", "");

  try {
    std::vector<const char*> argv{"qsym"};
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  pos = app.remaining(true);
  for (const auto& a : pos)
    if (a.size() > 1 && a[0] == '-' && a[1] == '-') {
      err << "error: unknown option " << a << '\n';
      return 2;
    }

  auto need = [&](std::size_t n, const char* usage) {
    if (pos.size() != n) throw usage_error(std::string("usage: qsym ") + usage);
  };

  try {
    if (expand->parsed() || convert_cmd->parsed()) {
      need(1, expand->parsed() ? "expand ELEMENT [--basis B]" : "convert ELEMENT --basis B");
      if (convert_cmd->parsed() && o.basis.empty()) throw usage_error("convert needs --basis");
      const Element x = element_arg(pos[0]);
      const Basis b = o.basis.empty() ? canonical_basis(x.algebra()) : target_basis(o.basis, x);
      R.emit(convert(x, b));
    } else if (multiply_cmd->parsed()) {
      need(2, "multiply ELEMENT ELEMENT");
      const Element x = element_arg(pos[0]), y = element_arg(pos[1]);
      if (x.algebra() != y.algebra()) throw usage_error("cannot multiply NSym and QSym elements");
      R.emit(convert(multiply(x, y), target_basis(o.basis, x)));
    } else if (pair_cmd->parsed()) {
      need(2, "pair NSYM QSYM");
      const Element h = element_arg(pos[0]), f = element_arg(pos[1]);
      if (h.algebra() != Algebra::NSym || f.algebra() != Algebra::QSym)
        throw usage_error("pair takes an NSym element followed by a QSym element");
      const Integer v = pair(h, f);
      R.emit(json{{"value", v.str()}}, v.str());
    } else if (involute->parsed()) {
      need(2, "involute psi|rho|omega ELEMENT");
      Involution w;
      try {
        w = parse_involution(pos[0]);
      } catch (const parse_error& e) {
        throw usage_error(e.what());
      }
      const Element x = element_arg(pos[1]);
      const Element y = involution(w, x);
      R.emit(o.basis.empty() ? y : convert(y, target_basis(o.basis, x)));
    } else if (antipode_cmd->parsed()) {
      need(1, "antipode ELEMENT");
      const Element x = element_arg(pos[0]);
      R.emit(convert(antipode(x), target_basis(o.basis, x)));
    } else if (pieri_cmd->parsed()) {
      need(2, "pieri --family F COMPOSITION R [--side left|right] [--generator H|E]");
      const Family f = family_arg(o.family);
      auto [s, g] = pieri_convention(f);
      if (!side.empty()) {
        if (side != "left" && side != "right") throw usage_error("--side must be left or right");
        s = side == "left" ? Side::left : Side::right;
      }
      if (!gen.empty()) {
        if (gen != "H" && gen != "E") throw usage_error("--generator must be H or E");
        g = gen == "H" ? Generator::H : Generator::E;
      }
      const int r = int_arg(pos[1], "R");
      if (r < 1) throw usage_error("R must be positive");
      Element y = pieri(f, comp_arg(pos[0]), r, s, g);
      R.emit(o.basis.empty() ? y : convert(y, target_basis(o.basis, y)));
    } else if (beth_cmd->parsed()) {
      need(2, "beth M ELEMENT");
      const int m = int_arg(pos[0], "M");
      if (m < 1) throw usage_error("M must be positive");
      const Element x = element_arg(pos[1], Algebra::NSym);
      if (x.algebra() != Algebra::NSym) throw usage_error("beth acts on NSym elements");
      R.emit(convert(beth(m, x), target_basis(o.basis, x)));
    } else if (jt->parsed()) {
      need(1, "jacobi-trudi --family F COMPOSITION");
      Element y = jacobi_trudi(family_arg(o.family), comp_arg(pos[0]));
      R.emit(o.basis.empty() ? y : convert(y, target_basis(o.basis, y)));
    } else if (ribbon->parsed()) {
      need(2, "ribbon-mult --family F ALPHA BETA");
      Element y = ribbon_multiply(family_arg(o.family), comp_arg(pos[0]), comp_arg(pos[1]));
      R.emit(o.basis.empty() ? y : convert(y, target_basis(o.basis, y)));
    } else if (skew_cmd->parsed() || skew2_cmd->parsed()) {
      need(2, skew_cmd->parsed() ? "skew --family F ALPHA BETA" : "skew2 --family F ALPHA BETA");
      const Family f = family_arg(o.family);
      const Composition a = comp_arg(pos[0]), b = comp_arg(pos[1]);
      Element y(Algebra::QSym);
      if (skew_cmd->parsed()) {
        std::string warning;
        y = skew(f, a, b, &warning);
        if (!warning.empty()) err << "warning: " << warning << '\n';
      } else {
        y = skew_ii(f, a, b);
      }
      R.emit(o.basis.empty() ? y : convert(y, target_basis(o.basis, y)));
    } else if (coproduct_cmd->parsed()) {
      need(1, "coproduct ELEMENT | coproduct --variant skew|skew2 --family F COMPOSITION");
      if (!variant.empty()) {
        if (variant != "skew" && variant != "skew2") throw usage_error("--variant must be skew or skew2");
        const Family f = family_arg(o.family);
        auto cf = coproduct_formula(f, comp_arg(pos[0]), variant == "skew" ? CoproductVariant::skew : CoproductVariant::skew2);
        for (const auto& b : cf.outside_bound)
          err << "note: nonzero term for inner index " << to_string(b) << " outside the containment bound\n";
        if (!o.basis.empty() && algebra_of(basis_arg(o.basis)) != Algebra::QSym)
          throw usage_error("basis " + o.basis + " is not a basis of QSym");
        R.emit(o.basis.empty() ? cf.value : convert(cf.value, basis_arg(o.basis), basis_arg(o.basis)));
      } else {
        const Element x = element_arg(pos[0]);
        TensorElement t = coproduct(x);
        if (!o.basis.empty()) {
          const Basis b = target_basis(o.basis, x);
          t = convert(t, b, b);
        }
        R.emit(t);
      }
    } else if (sc->parsed()) {
      need(2, "struct-coeffs --family F BETA GAMMA");
      const Family f = family_arg(o.family);
      json arr = json::array();
      std::string text;
      for (const auto& c : structure_coeffs(f, comp_arg(pos[0]), comp_arg(pos[1]))) {
        arr.push_back({{"alpha", to_json(c.alpha)}, {"beta", to_json(c.beta)}, {"gamma", to_json(c.gamma)}, {"value", c.value.str()}});
        text += (text.empty() ? "" : "\n") + to_string(c.alpha) + " " + c.value.str();
      }
      R.emit(arr, text);
    } else if (chi_cmd->parsed()) {
      need(1, "chi ELEMENT [--sym-basis h|s]");
      if (sym_basis != "h" && sym_basis != "s") throw usage_error("--sym-basis must be h or s");
      const Element x = element_arg(pos[0], Algebra::NSym);
      if (x.algebra() != Algebra::NSym) throw usage_error("chi takes an NSym element");
      const SymElement y = chi(x);
      R.emit(sym_basis == "h" ? y : to_schur(y));
    } else if (detect->parsed()) {
      need(1, "schur-detect ELEMENT");
      const Element x = element_arg(pos[0], Algebra::QSym);
      if (x.algebra() != Algebra::QSym) throw usage_error("schur-detect takes a QSym element");
      auto y = schur_detect(x);
      if (y)
        R.emit(*y);
      else
        R.emit(json{{"symmetric", false}}, "not symmetric");
    } else if (tab->parsed()) {
      need(1, "tableaux --family F OUTER [--shape straight|skew|skew2 --inner INNER] [--type W] [--count]");
      const Family f = family_arg(o.family);
      const Composition outer = comp_arg(pos[0]);
      Shape shape;
      if (shape_kind == "straight") {
        shape = Shape::straight(outer);
      } else if (shape_kind == "skew" || shape_kind == "skew2") {
        const Composition in = comp_arg(inner);
        shape = shape_kind == "skew" ? Shape::skew(outer, in) : Shape::skew2(outer, in);
      } else {
        throw usage_error("--shape must be straight, skew or skew2");
      }
      WeakComposition w;
      if (!type.empty()) {
        try {
          w = parse_weak_composition(type);
        } catch (const domain_error& e) {
          throw usage_error(e.what());
        }
      }
      const auto ts = type.empty() ? enumerate_standard(shape, f) : enumerate_tableaux(shape, f, w);
      if (count_only) {
        R.emit(json{{"count", ts.size()}}, std::to_string(ts.size()));
      } else {
        json arr = json::array();
        std::string text;
        for (const auto& t : ts) {
          json j = to_json(t);
          std::string line = to_text(t);
          if (type.empty()) {
            j["descent_composition"] = to_json(descent_composition(t));
            line += "  descents " + to_string(descent_composition(t));
          }
          arr.push_back(j);
          text += (text.empty() ? "" : "\n") + line;
        }
        R.emit(arr, text);
      }
    } else if (strips->parsed()) {
      need(2, "strips ALPHA R");
      const int r = int_arg(pos[1], "R");
      if (r < 1) throw usage_error("R must be positive");
      json arr = json::array();
      std::string text;
      for (const auto& b : strip_extensions(comp_arg(pos[0]), r)) {
        arr.push_back(to_json(b));
        text += (text.empty() ? "" : "\n") + to_string(b);
      }
      R.emit(arr, text);
    } else if (chains->parsed()) {
      need(2, "poset-chains INNER OUTER [--count]");
      const auto cs = maximal_chains(comp_arg(pos[0]), comp_arg(pos[1]));
      if (count_only) {
        R.emit(json{{"count", cs.size()}}, std::to_string(cs.size()));
      } else {
        json arr = json::array();
        std::string text;
        for (const auto& c : cs) {
          json jc = json::array();
          std::string line;
          for (const auto& g : c) {
            jc.push_back(to_json(g));
            line += (line.empty() ? "" : " < ") + to_string(g);
          }
          const Tableau t = chain_to_tableau(c);
          arr.push_back({{"chain", jc}, {"tableau", to_json(t)}});
          text += (text.empty() ? "" : "\n") + line + "  ->  " + to_text(t);
        }
        R.emit(arr, text);
      }
    } else if (tm->parsed()) {
      need(1, "transition-matrix --from B --basis B N");
      if (from.empty() || o.basis.empty()) throw usage_error("transition-matrix needs --from and --basis");
      const Basis a = basis_arg(from), b = basis_arg(o.basis);
      if (algebra_of(a) != algebra_of(b)) throw usage_error("bases " + from + " and " + o.basis + " lie in different algebras");
      const int n = int_arg(pos[0], "N");
      if (n < 0) throw usage_error("N must be non-negative");
      const Matrix m = transition_matrix(a, b, n);
      const auto index = enumerate_compositions(n);
      json jidx = json::array();
      std::ostringstream text;
      text << "rows " << from << ", columns " << o.basis << ", degree " << n << '\n';
      for (const auto& c : index) jidx.push_back(to_json(c));
      for (std::size_t r = 0; r < m.rows(); ++r) {
        text << to_string(index[r]) << ':';
        for (std::size_t c = 0; c < m.cols(); ++c) text << ' ' << m(r, c);
        if (r + 1 < m.rows()) text << '\n';
      }
      R.emit(json{{"from", from}, {"to", o.basis}, {"degree", n}, {"index", jidx}, {"matrix", to_json(m)}}, text.str());
    } else if (ver->parsed()) {
      if (!pos.empty()) throw usage_error("usage: qsym verify [--identity NAME] [--max-degree N] [--seed S]");
      std::vector<std::string> names;
      if (o.identity == "all") {
        names = identity_names();
      } else {
        const auto all = identity_names();
        if (std::find(all.begin(), all.end(), o.identity) == all.end())
          throw usage_error("unknown identity '" + o.identity + "'; known: all" +
                            [&] {
                              std::string s;
                              for (const auto& n : all) s += ", " + n;
                              return s;
                            }());
        names = {o.identity};
      }
      bool all_ok = true;
      json reports = json::array();
      std::ostringstream text;
      for (const auto& name : names) {
        const VerifyReport r = verify(name, o.max_degree, o.seed);
        all_ok = all_ok && r.ok();
        json fails = json::array();
        for (const auto& f : r.failures) fails.push_back({{"reproducer", f.reproducer}, {"detail", f.detail}});
        reports.push_back({{"identity", r.name},
                           {"statement", r.statement},
                           {"degrees", {r.min_degree, r.max_degree}},
                           {"cases", r.cases},
                           {"failures", r.failure_count},
                           {"reproducers", fails},
                           {"notes", r.notes}});
        text << (r.ok() ? "PASS " : "FAIL ") << r.name << " degrees " << r.min_degree << ".." << r.max_degree << " cases "
             << r.cases << " failures " << r.failure_count << "  (" << r.statement << ")\n";
        for (const auto& f : r.failures) text << "  failure: " << f.reproducer << (f.detail.empty() ? "" : ": " + f.detail) << '\n';
        for (const auto& n : r.notes) text << "  note: " << n << '\n';
        err << std::fixed << std::setprecision(3) << "[verify] " << r.name << " " << r.seconds << " s\n";
      }
      std::string t = text.str();
      if (!t.empty()) t.pop_back();
      R.emit(reports, t);
      return all_ok ? 0 : 1;
    }
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qsym::cli
