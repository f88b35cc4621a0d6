#include "galg/textio.hpp"

#include <cctype>
#include <sstream>

#include "galg/error.hpp"

namespace galg {

namespace {

struct Token {
  enum class Kind { Ident, Int, Sym, Newline, End } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::Newline: return "newline";
    case Token::Kind::End: return "end of input";
    case Token::Kind::Sym: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    i += k;
    col += k;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (c == '\n' || c == ';') {
      out.push_back({Token::Kind::Newline, std::string(1, c), line, col});
      if (c == '\n') {
        ++i;
        ++line;
        col = 1;
      } else {
        advance(1);
      }
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Int, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view(":(),=+-*/^[]{}").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Sym, std::string(1, c), line, col});
      advance(1);
    } else {
      throw SyntaxError(line, col, {"identifier", "integer", "operator"}, "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

std::string located(const Token& t, const std::string& message) {
  return "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + message;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Presentation program() {
    Presentation p = block(FieldSpec::rationals(), false);
    expect_end();
    return p;
  }

  NcPoly polynomial(const GeneratorsPtr& gens, const FieldSpec& field) {
    skip_newlines();
    NcPoly f = poly(gens, field);
    skip_newlines();
    expect_end();
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at_sym(std::string_view s) const { return peek().kind == Token::Kind::Sym && peek().text == s; }
  bool at_kind(Token::Kind k) const { return peek().kind == k; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    throw SyntaxError(peek().line, peek().column, std::move(expected), describe(peek()));
  }
  const Token& expect_sym(const std::string& s) {
    if (!at_sym(s)) fail({"'" + s + "'"});
    return next();
  }
  const Token& expect_kind(Token::Kind k, const std::string& name) {
    if (!at_kind(k)) fail({name});
    return next();
  }
  void expect_end() {
    if (!at_kind(Token::Kind::End)) fail({"end of input"});
  }
  void skip_newlines() {
    while (at_kind(Token::Kind::Newline)) next();
  }
  bool at_statement_end() const {
    return at_kind(Token::Kind::Newline) || at_kind(Token::Kind::End) || at_sym("}");
  }
  void end_statement() {
    if (!at_statement_end()) fail({"newline"});
  }

  int small_int(const Token& t) {
    if (t.text.size() > 9) throw SyntaxError(t.line, t.column, {"integer below 10^9"}, describe(t));
    return std::stoi(t.text);
  }

  Scalar scalar_literal(const FieldSpec& field) {
    bool negative = false;
    if (at_sym("-")) {
      next();
      negative = true;
    }
    const Token& num = expect_kind(Token::Kind::Int, "integer");
    mpz_class n(num.text), d(1);
    if (at_sym("/")) {
      next();
      d = mpz_class(expect_kind(Token::Kind::Int, "integer").text);
    }
    if (negative) n = -n;
    try {
      return Scalar::from_fraction(field, n, d);
    } catch (const Error& e) {
      throw Error(e.kind(), located(num, e.what()));
    }
  }

  // Builds a presentation from statements until '}' (nested) or end of input.
  Presentation block(FieldSpec field, bool nested) {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> skew_entries;
    bool skew_set = false;
    bool started = false;
    std::optional<Presentation> current;

    auto materialize = [&]() -> Presentation& {
      if (!current) {
        if (skew_set) {
          current = skew_ring(SkewMatrix::from_upper(field, names.size(), skew_entries), names, degrees);
        } else {
          current = free_algebra(field, names, degrees);
        }
      }
      return *current;
    };
    auto find_gen = [&](const Token& t) {
      auto it = std::find(names.begin(), names.end(), t.text);
      if (it == names.end()) throw Error(ErrorKind::UnknownGenerator, located(t, "unknown generator '" + t.text + "'"));
      return static_cast<std::size_t>(it - names.begin());
    };
    std::set<std::string> statements = {"'adjoin'", "'gens'", "'rel'", "'skew'", "'tensor'"};
    if (!nested) statements.insert("'field'");

    for (;;) {
      skip_newlines();
      if (at_kind(Token::Kind::End) || (nested && at_sym("}"))) break;
      if (!at_kind(Token::Kind::Ident)) fail(statements);
      const Token kw = peek();
      if (kw.text == "field" && !nested) {
        if (started) fail({"'gens'", "'rel'", "'skew'", "'tensor'", "'adjoin'"});
        next();
        const Token& kind = expect_kind(Token::Kind::Ident, "'Q' or 'GF'");
        if (kind.text == "Q") {
          field = FieldSpec::rationals();
        } else if (kind.text == "GF") {
          const Token& p = expect_kind(Token::Kind::Int, "integer");
          try {
            if (p.text.size() > 18) throw Error(ErrorKind::NonPrimeModulus, "modulus too large");
            field = FieldSpec::prime(std::stoull(p.text));
          } catch (const Error& e) {
            throw Error(e.kind(), located(p, e.what()));
          }
        } else {
          throw SyntaxError(kind.line, kind.column, {"'GF'", "'Q'"}, describe(kind));
        }
      } else if (kw.text == "gens") {
        if (current || skew_set) fail({"'rel'", "'adjoin'"});
        next();
        while (!at_statement_end()) {
          const Token& name = expect_kind(Token::Kind::Ident, "identifier");
          expect_sym(":");
          const Token& deg = expect_kind(Token::Kind::Int, "integer");
          if (std::find(names.begin(), names.end(), name.text) != names.end()) {
            throw SyntaxError(name.line, name.column, {"new generator name"}, describe(name));
          }
          int d = small_int(deg);
          if (d < 1) throw SyntaxError(deg.line, deg.column, {"positive degree"}, describe(deg));
          names.push_back(name.text);
          degrees.push_back(d);
        }
      } else if (kw.text == "skew") {
        if (current) fail({"'rel'", "'adjoin'"});
        next();
        skew_set = true;
        while (!at_statement_end()) {
          const Token& q = expect_kind(Token::Kind::Ident, "'q'");
          if (q.text != "q") throw SyntaxError(q.line, q.column, {"'q'"}, describe(q));
          expect_sym("(");
          const Token& a = expect_kind(Token::Kind::Ident, "identifier");
          expect_sym(",");
          const Token& b = expect_kind(Token::Kind::Ident, "identifier");
          expect_sym(")");
          expect_sym("=");
          Scalar s = scalar_literal(field);
          std::size_t i = find_gen(a), j = find_gen(b);
          if (i == j) throw Error(ErrorKind::InvalidSkewMatrix, located(a, "diagonal parameters are fixed to 1"));
          if (s.is_zero()) throw Error(ErrorKind::InvalidSkewMatrix, located(a, "skew parameters must be nonzero"));
          if (i > j) {
            std::swap(i, j);
            s = s.inverse();
          }
          skew_entries.emplace_back(i, j, s);
        }
      } else if (kw.text == "rel") {
        next();
        Presentation& base = materialize();
        const Token& at = peek();
        NcPoly f = poly(base.generators(), field);
        try {
          current = quotient(base, {f});
        } catch (const Error& e) {
          throw Error(e.kind(), located(at, e.what()));
        }
      } else if (kw.text == "tensor") {
        if (current || skew_set || !names.empty()) fail({"'rel'", "'adjoin'"});
        next();
        Presentation left = nested_block(field);
        Presentation right = nested_block(field);
        current = tensor(left, right);
      } else if (kw.text == "adjoin") {
        next();
        const Token& prefix = expect_kind(Token::Kind::Ident, "identifier");
        expect_sym(":");
        const Token& count = expect_kind(Token::Kind::Int, "integer");
        current = adjoin_central(materialize(), static_cast<std::size_t>(small_int(count)), prefix.text);
      } else {
        fail(statements);
      }
      started = true;
      end_statement();
    }
    return materialize();
  }

  Presentation nested_block(const FieldSpec& field) {
    skip_newlines();
    expect_sym("{");
    Presentation p = block(field, true);
    expect_sym("}");
    return p;
  }

  NcPoly poly(const GeneratorsPtr& gens, const FieldSpec& field) {
    NcPoly total(gens, field);
    bool first = true;
    for (;;) {
      bool negative = false;
      if (at_sym("+") || at_sym("-")) {
        negative = next().text == "-";
      } else if (!first) {
        break;
      }
      NcPoly t = term(gens, field);
      if (negative) {
        total -= t;
      } else {
        total += t;
      }
      first = false;
    }
    return total;
  }

  NcPoly term(const GeneratorsPtr& gens, const FieldSpec& field) {
    NcPoly f = factor(gens, field);
    while (at_sym("*")) {
      next();
      f = f * factor(gens, field);
    }
    return f;
  }

  NcPoly factor(const GeneratorsPtr& gens, const FieldSpec& field) {
    NcPoly base = primary(gens, field);
    if (at_sym("^")) {
      next();
      const Token& e = expect_kind(Token::Kind::Int, "integer");
      base = power(base, static_cast<unsigned>(small_int(e)));
    }
    return base;
  }

  NcPoly primary(const GeneratorsPtr& gens, const FieldSpec& field) {
    if (at_kind(Token::Kind::Int)) {
      const Token& num = next();
      mpz_class n(num.text), d(1);
      if (at_sym("/")) {
        next();
        d = mpz_class(expect_kind(Token::Kind::Int, "integer").text);
      }
      try {
        return NcPoly::constant(gens, Scalar::from_fraction(field, n, d));
      } catch (const Error& e) {
        throw Error(e.kind(), located(num, e.what()));
      }
    }
    if (at_kind(Token::Kind::Ident)) {
      const Token& t = next();
      auto idx = gens->find(t.text);
      if (!idx) throw Error(ErrorKind::UnknownGenerator, located(t, "unknown generator '" + t.text + "'"));
      return NcPoly::generator(gens, field, *idx);
    }
    if (at_sym("(")) {
      next();
      NcPoly inner = poly(gens, field);
      expect_sym(")");
      return inner;
    }
    if (at_sym("[")) {
      next();
      NcPoly f = poly(gens, field);
      expect_sym(",");
      NcPoly g = poly(gens, field);
      expect_sym("]");
      return commutator(f, g);
    }
    fail({"'('", "'['", "identifier", "integer"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string field_line(const FieldSpec& field) {
  return field.is_prime_field() ? "field GF " + std::to_string(field.modulus()) : "field Q";
}

}  // namespace

Presentation parse_presentation(std::string_view source) { return Parser(tokenize(source)).program(); }

NcPoly parse_polynomial(std::string_view text, const GeneratorsPtr& gens, const FieldSpec& field) {
  return Parser(tokenize(text)).polynomial(gens, field);
}

std::string print_presentation(const Presentation& pres) {
  std::ostringstream out;
  out << field_line(pres.field()) << "\n";
  out << "gens";
  for (std::size_t i = 0; i < pres.num_generators(); ++i) {
    out << " " << pres.gens().name(i) << ":" << pres.gens().degree(i);
  }
  out << "\n";
  if (pres.skew()) {
    out << "skew";
    const auto& p = *pres.skew();
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        out << " q(" << pres.gens().name(i) << "," << pres.gens().name(j) << ")=" << p(i, j).to_string();
      }
    }
    out << "\n";
  }
  for (const auto& r : pres.extra_relations()) out << "rel " << to_string(r) << "\n";
  return out.str();
}

Json scalar_json(const Scalar& s) { return s.to_json_string(); }

Json vector_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_json(s));
  return out;
}

Json subspace_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& r : s.basis()) rows.push_back(vector_json(r));
  return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"rows", rows}};
}

Json filtered_json(const TruncatedAlgebra& alg, const FilteredSubspace& s) {
  Json graded = Json::array();
  for (int d = 0; d <= alg.truncation_degree(); ++d) graded.push_back(s.graded_dim(d));
  Json columns = Json::array();
  for (std::size_t c = 0; c < alg.dim(); ++c) columns.push_back(word_to_string(alg.gens(), alg.basis_word(c)));
  Json rows = Json::array();
  for (const auto& r : s.space().basis()) rows.push_back(vector_json(r));
  return Json{{"dim", s.dim()}, {"codim", s.codim()}, {"graded_dims", graded}, {"columns", columns}, {"rows", rows}};
}

Json presentation_json(const Presentation& pres) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < pres.num_generators(); ++i) {
    gens.push_back(Json{{"name", pres.gens().name(i)}, {"degree", pres.gens().degree(i)}});
  }
  Json rels = Json::array();
  for (const auto& r : pres.relations()) rels.push_back(to_string(r));
  Json out{{"field", pres.field().to_string()}, {"generators", gens}, {"relations", rels}};
  if (pres.skew()) {
    Json m = Json::array();
    for (std::size_t i = 0; i < pres.skew()->size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < pres.skew()->size(); ++j) row.push_back(scalar_json((*pres.skew())(i, j)));
      m.push_back(row);
    }
    out["skew"] = m;
  }
  return out;
}

Json hilbert_json(const std::vector<std::size_t>& h, int degree) { return Json{{"hilbert", h}, {"D", degree}}; }

Json rules_json(const ReductionSystem& rs) {
  Json rules = Json::array();
  for (const auto& rule : rs.rules()) {
    NcPoly tail(rs.presentation().generators(), rs.field());
    for (const auto& [w, c] : rule.tail) tail.add_term(w, c);
    rules.push_back(Json{{"lead", word_to_string(rs.gens(), rule.lead)}, {"tail", to_string(tail)}});
  }
  return Json{{"D", rs.truncation_degree()}, {"rules", rules}, {"hilbert", rs.hilbert()}};
}

Json character_json(const Character& chi, std::size_t cotangent) {
  return Json{{"point", vector_json(chi.point)}, {"cotangent", cotangent}};
}

Json tangent_json(const TangentProfile& profile) {
  return Json{{"point", vector_json(profile.character.point)},
              {"cotangent", profile.cotangent},
              {"power_dims", profile.power_dims}};
}

Json verdict_json(const IsoVerdict& verdict) {
  Json out{{"isomorphic", verdict.isomorphic}};
  if (verdict.witness) {
    std::vector<std::size_t> sigma;
    for (auto s : verdict.witness->sigma) sigma.push_back(s + 1);
    out["sigma"] = sigma;
    out["scalars"] = vector_json(verdict.witness->scalars);
  }
  if (verdict.linear_map) {
    Json m = Json::array();
    for (std::size_t i = 0; i < verdict.linear_map->rows(); ++i) m.push_back(vector_json(verdict.linear_map->row(i)));
    out["matrix"] = m;
  }
  if (!verdict.reason.empty()) out["reason"] = verdict.reason;
  out["checked_degree"] = verdict.checked_degree;
  return out;
}

Json fingerprint_json(const GradedFingerprint& fp) {
  Json out{{"D", fp.degree}, {"hilbert", fp.hilbert}, {"commutator_dims", fp.commutator_dims}};
  out["normal_lines"] = fp.normal_line_count ? Json(*fp.normal_line_count) : Json(nullptr);
  if (fp.cotangent_multiset) {
    Json m = Json::object();
    for (const auto& [s, count] : *fp.cotangent_multiset) m[std::to_string(s)] = count;
    out["cotangent_multiset"] = m;
  } else {
    out["cotangent_multiset"] = nullptr;
  }
  return out;
}

Json decomposition_json(const BracketDecomposition& dec) {
  Json parts = Json::array();
  for (const auto& [s, part] : dec.parts) {
    parts.push_back(Json{{"s", s}, {"degree", expanded_degree(part)}, {"r", to_string(dec, part)}});
  }
  return Json{{"distinguished", dec.gens->name(dec.distinguished)},
              {"degree", dec.degree},
              {"parts", parts},
              {"text", to_string(dec)}};
}

namespace {

bool is_flat(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string primitive_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_table(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive()) {
        out << pad << key << ": " << primitive_text(value) << "\n";
      } else if (value.is_array() && is_flat(value)) {
        out << pad << key << ":";
        for (const auto& e : value) out << " " << primitive_text(e);
        out << "\n";
      } else {
        out << pad << key << ":\n";
        render_table(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_primitive()) {
        out << pad << primitive_text(e) << "\n";
      } else if (e.is_array() && is_flat(e)) {
        out << pad << "[";
        bool first = true;
        for (const auto& x : e) {
          out << (first ? "" : " ") << primitive_text(x);
          first = false;
        }
        out << "]\n";
      } else {
        out << pad << "-\n";
        render_table(e, indent + 2, out);
      }
    }
  } else {
    out << pad << primitive_text(j) << "\n";
  }
}

}  // namespace

std::string emit(const Json& result, Format format) {
  if (format == Format::Json) return result.dump() + "\n";
  std::ostringstream out;
  render_table(result, 0, out);
  return out.str();
}

}  // namespace galg
