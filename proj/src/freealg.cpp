#include "galg/freealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "galg/error.hpp"

namespace galg {

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word operator*(const Word& a, const Word& b) {
  Word w;
  w.letters.reserve(a.size() + b.size());
  w.letters.insert(w.letters.end(), a.letters.begin(), a.letters.end());
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : w.letters) {
    h ^= static_cast<std::size_t>(l) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

GeneratorSet::GeneratorSet(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) {
    throw Error(ErrorKind::InvalidArgument, "generator names and degrees differ in length");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!seen.insert(names_[i]).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate generator name '" + names_[i] + "'");
    }
    if (degrees_[i] < 1) {
      throw Error(ErrorKind::InvalidArgument, "generator '" + names_[i] + "' must have degree >= 1");
    }
  }
}

std::optional<std::size_t> GeneratorSet::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

int GeneratorSet::degree(const Word& w) const {
  int d = 0;
  for (Letter l : w.letters) d += degrees_[l];
  return d;
}

bool GeneratorSet::all_degree_one() const {
  return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 1; });
}

GeneratorsPtr make_generators(std::vector<std::string> names, std::vector<int> degrees) {
  return std::make_shared<const GeneratorSet>(std::move(names), std::move(degrees));
}

std::strong_ordering deglex_compare(const GeneratorSet& gens, const Word& u, const Word& v) {
  if (auto c = gens.degree(u) <=> gens.degree(v); c != 0) return c;
  return u.letters <=> v.letters;
}

namespace {

void extend_words(const GeneratorSet& gens, int remaining, Word& prefix, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens.degree(g) > remaining) continue;
    prefix.letters.push_back(static_cast<Letter>(g));
    extend_words(gens, remaining - gens.degree(g), prefix, out);
    prefix.letters.pop_back();
  }
}

}  // namespace

std::vector<Word> words_of_degree(const GeneratorSet& gens, int d) {
  std::vector<Word> out;
  if (d < 0) return out;
  Word prefix;
  extend_words(gens, d, prefix, out);
  return out;
}

NcPoly::NcPoly(GeneratorsPtr gens, FieldSpec field) : gens_(std::move(gens)), field_(field) {}

NcPoly NcPoly::constant(GeneratorsPtr gens, const Scalar& c) {
  return monomial(std::move(gens), Word{}, c);
}

NcPoly NcPoly::monomial(GeneratorsPtr gens, Word w, const Scalar& c) {
  NcPoly p(std::move(gens), c.field());
  p.add_term(w, c);
  return p;
}

NcPoly NcPoly::generator(GeneratorsPtr gens, const FieldSpec& field, std::size_t index) {
  if (index >= gens->size()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  return monomial(std::move(gens), Word{static_cast<Letter>(index)}, Scalar::one(field));
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "coefficient from another field");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

std::optional<int> NcPoly::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [w, c] : terms_) {
    int e = gens_->degree(w);
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

bool NcPoly::is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

int NcPoly::max_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, gens_->degree(w));
  return d;
}

int NcPoly::min_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) {
    int e = gens_->degree(w);
    d = d < 0 ? e : std::min(d, e);
  }
  return d;
}

const Word& NcPoly::leading_word() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading word of zero polynomial");
  const Word* best = &terms_.begin()->first;
  for (const auto& [w, c] : terms_) {
    if (deglex_compare(*gens_, w, *best) > 0) best = &w;
  }
  return *best;
}

const Scalar& NcPoly::leading_coefficient() const { return terms_.at(leading_word()); }

NcPoly NcPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coefficient().inverse();
}

NcPoly NcPoly::homogeneous_component(int d) const {
  NcPoly out(gens_, field_);
  for (const auto& [w, c] : terms_) {
    if (gens_->degree(w) == d) out.terms_.emplace(w, c);
  }
  return out;
}

void NcPoly::check_compatible(const NcPoly& other) const {
  if (gens_ != other.gens_ && !(*gens_ == *other.gens_)) {
    throw Error(ErrorKind::GeneratorSetMismatch, "polynomials over different generator sets");
  }
  if (!(field_ == other.field_)) {
    throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly out(*this);
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check_compatible(b);
  NcPoly out(a.gens_, a.field_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) out.add_term(u * v, cu * cv);
  }
  return out;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.gens_ != b.gens_ && !(*a.gens_ == *b.gens_)) return false;
  return a.terms_ == b.terms_;
}

NcPoly commutator(const NcPoly& f, const NcPoly& g) { return f * g - g * f; }

NcPoly power(const NcPoly& f, unsigned k) {
  NcPoly out = NcPoly::constant(f.generators(), Scalar::one(f.field()));
  for (unsigned i = 0; i < k; ++i) out = out * f;
  return out;
}

NcPoly substitute(const NcPoly& f, std::span<const NcPoly> images) {
  if (images.size() != f.generators()->size()) {
    throw Error(ErrorKind::GeneratorSetMismatch, "substitution needs one image per generator");
  }
  if (images.empty()) {
    return NcPoly::constant(f.generators(), f.coefficient(Word{}));
  }
  const auto& target = images.front().generators();
  NcPoly out(target, images.front().field());
  for (const auto& [w, c] : f.terms()) {
    NcPoly term = NcPoly::constant(target, c);
    for (Letter l : w.letters) {
      term = term * images[l];
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

std::vector<std::pair<Word, Scalar>> sorted_terms(const NcPoly& f) {
  std::vector<std::pair<Word, Scalar>> out(f.terms().begin(), f.terms().end());
  const GeneratorSet& gens = *f.generators();
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return deglex_compare(gens, a.first, b.first) > 0;
  });
  return out;
}

std::string word_to_string(const GeneratorSet& gens, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << '*';
    os << gens.name(w[i]);
    if (j - i > 1) os << '^' << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

std::string to_string(const NcPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool rational = !f.field().is_prime_field();
  for (const auto& [w, c] : sorted_terms(f)) {
    Scalar coeff = c;
    bool negative = rational && c.rational() < 0;
    if (negative) coeff = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (w.empty()) {
      os << coeff.to_string();
    } else {
      if (!coeff.is_one()) os << coeff.to_string() << '*';
      os << word_to_string(*f.generators(), w);
    }
    first = false;
  }
  return os.str();
}

}  // namespace galg
