#include "galg/brackets.hpp"

#include <algorithm>

#include "galg/error.hpp"

namespace galg {

namespace {

// During rewriting a symbol is either x_d (order 0) or a bracket letter.
using Symbol = BracketLetter;
using SymbolWord = std::vector<Symbol>;

bool is_distinguished(const Symbol& s) { return s.order == 0; }

void require_weight_one(const GeneratorSet& gens) {
  if (!gens.all_degree_one()) {
    throw Error(ErrorKind::HypothesisViolated, "bracket decomposition needs every generator in degree 1");
  }
}

void accumulate(std::map<SymbolWord, Scalar>& into, const SymbolWord& w, const Scalar& c) {
  auto [it, inserted] = into.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

}  // namespace

NcPoly bracket_expand(const GeneratorsPtr& gens, const FieldSpec& field, const BracketLetter& letter, std::size_t d) {
  require_weight_one(*gens);
  if (letter.index == d) throw Error(ErrorKind::DistinguishedIndexClash, "bracket letter uses the distinguished generator");
  if (letter.index >= gens->size() || d >= gens->size()) {
    throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  }
  if (letter.order == 0) throw Error(ErrorKind::InvalidArgument, "bracket order starts at 1");
  NcPoly xd = NcPoly::generator(gens, field, d);
  NcPoly out = NcPoly::generator(gens, field, letter.index);
  for (unsigned j = 1; j < letter.order; ++j) out = commutator(xd, out);
  return out;
}

BracketDecomposition bracket_decompose(const NcPoly& r, std::size_t d) {
  const GeneratorSet& gens = *r.generators();
  require_weight_one(gens);
  if (d >= gens.size()) throw Error(ErrorKind::InvalidArgument, "distinguished generator out of range");
  BracketDecomposition dec{r.generators(), r.field(), d, 0, {}};
  if (r.is_zero()) return dec;
  auto m = r.homogeneous_degree();
  if (!m) throw Error(ErrorKind::InhomogeneousInput, "bracket decomposition needs a homogeneous polynomial");
  dec.degree = *m;

  std::map<SymbolWord, Scalar> pending;
  for (const auto& [w, c] : r.terms()) {
    SymbolWord sw;
    for (Letter l : w.letters) sw.push_back(l == d ? Symbol{d, 0} : Symbol{l, 1});
    accumulate(pending, sw, c);
  }

  std::map<SymbolWord, Scalar> done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const SymbolWord& w = node.key();
    std::size_t pos = w.size();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (!is_distinguished(w[k]) && is_distinguished(w[k + 1])) {
        pos = k;
        break;
      }
    }
    if (pos == w.size()) {
      accumulate(done, w, node.mapped());
      continue;
    }
    SymbolWord swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    accumulate(pending, swapped, node.mapped());
    SymbolWord raised = w;
    raised[pos].order += 1;
    raised.erase(raised.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
    accumulate(pending, raised, -node.mapped());
  }

  for (const auto& [w, c] : done) {
    auto first = std::find_if(w.begin(), w.end(), [](const Symbol& s) { return !is_distinguished(s); });
    auto s = static_cast<unsigned>(first - w.begin());
    dec.parts[s].emplace(BracketWord(first, w.end()), c);
  }
  return dec;
}

NcPoly expand(const BracketDecomposition& dec, const BracketPoly& part) {
  NcPoly total(dec.gens, dec.field);
  for (const auto& [w, c] : part) {
    NcPoly term = NcPoly::constant(dec.gens, c);
    for (const auto& letter : w) term = term * bracket_expand(dec.gens, dec.field, letter, dec.distinguished);
    total += term;
  }
  return total;
}

NcPoly expand(const BracketDecomposition& dec) {
  NcPoly total(dec.gens, dec.field);
  NcPoly xd = NcPoly::generator(dec.gens, dec.field, dec.distinguished);
  for (const auto& [s, part] : dec.parts) total += power(xd, s) * expand(dec, part);
  return total;
}

int expanded_degree(const BracketPoly& part) {
  int deg = -1;
  for (const auto& [w, c] : part) {
    int e = 0;
    for (const auto& letter : w) e += static_cast<int>(letter.order);
    deg = std::max(deg, e);
  }
  return deg;
}

unsigned leading_part_index(const BracketDecomposition& dec) {
  for (auto it = dec.parts.rbegin(); it != dec.parts.rend(); ++it) {
    if (!it->second.empty()) return it->first;
  }
  throw Error(ErrorKind::ZeroDecomposition, "the decomposition has no nonzero part");
}

std::string to_string(const BracketDecomposition& dec, const BracketPoly& part) {
  if (part.empty()) return "0";
  std::string out;
  // Highest words first, matching the polynomial printer.
  for (auto it = part.rbegin(); it != part.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string coeff = c.to_string();
    bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = coeff == "1";
    if (!unit || w.empty()) out += coeff;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k > 0 || !unit) out += "*";
      out += dec.gens->name(w[k].index) + "^[" + std::to_string(w[k].order) + "]";
    }
  }
  return out;
}

std::string to_string(const BracketDecomposition& dec) {
  if (dec.parts.empty()) return "0";
  const std::string& xd = dec.gens->name(dec.distinguished);
  std::string out;
  for (auto it = dec.parts.rbegin(); it != dec.parts.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string prefix;
    if (it->first == 1) prefix = xd + "*";
    if (it->first > 1) prefix = xd + "^" + std::to_string(it->first) + "*";
    out += prefix + "(" + to_string(dec, it->second) + ")";
  }
  return out;
}

}  // namespace galg
