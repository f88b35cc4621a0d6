#include "galg/presentation.hpp"

#include <algorithm>
#include <set>

#include "galg/error.hpp"

namespace galg {

SkewMatrix::SkewMatrix(FieldSpec field, std::vector<Vector> entries)
    : field_(field), entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) throw Error(ErrorKind::InvalidSkewMatrix, "matrix is not square");
    for (const auto& e : entries_[i]) {
      if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "entry from another field");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!entries_[i][i].is_one()) throw Error(ErrorKind::InvalidSkewMatrix, "diagonal entry differs from 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries_[i][j].is_zero()) throw Error(ErrorKind::InvalidSkewMatrix, "zero parameter");
      if (!(entries_[i][j] * entries_[j][i]).is_one()) {
        throw Error(ErrorKind::InvalidSkewMatrix, "p_ji is not the inverse of p_ij");
      }
    }
  }
}

SkewMatrix SkewMatrix::from_upper(FieldSpec field, std::size_t n,
                                  const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& upper) {
  std::vector<Vector> m(n, Vector(n, Scalar::one(field)));
  for (const auto& [i, j, q] : upper) {
    if (i >= n || j >= n || i == j) throw Error(ErrorKind::InvalidSkewMatrix, "parameter index out of range");
    if (q.is_zero()) throw Error(ErrorKind::InvalidSkewMatrix, "zero parameter");
    m[i][j] = q;
    m[j][i] = q.inverse();
  }
  return SkewMatrix(field, std::move(m));
}

SkewMatrix SkewMatrix::uniform(FieldSpec field, std::size_t n, const Scalar& q) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> upper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper.emplace_back(i, j, q);
  }
  return from_upper(field, n, upper);
}

bool SkewMatrix::all_off_diagonal_nontrivial() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && entries_[i][j].is_one()) return false;
    }
  }
  return true;
}

SkewMatrix SkewMatrix::permuted(std::span<const std::size_t> sigma) const {
  if (sigma.size() != size()) throw Error(ErrorKind::InvalidArgument, "permutation size mismatch");
  std::vector<Vector> m(size(), Vector(size(), Scalar::one(field_)));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) m[i][j] = entries_[sigma[i]][sigma[j]];
  }
  return SkewMatrix(field_, std::move(m));
}

SkewMatrix SkewMatrix::direct_sum(const SkewMatrix& a, const SkewMatrix& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "direct sum over different fields");
  const std::size_t n = a.size() + b.size();
  std::vector<Vector> m(n, Vector(n, Scalar::one(a.field_)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a(i, j);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m[a.size() + i][a.size() + j] = b(i, j);
  }
  return SkewMatrix(a.field_, std::move(m));
}

SkewMatrix SkewMatrix::restricted(std::span<const std::size_t> keep) const {
  std::vector<Vector> m(keep.size(), Vector(keep.size(), Scalar::one(field_)));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) m[i][j] = entries_.at(keep[i]).at(keep[j]);
  }
  return SkewMatrix(field_, std::move(m));
}

NcPoly rebind(const NcPoly& f, const GeneratorsPtr& gens) {
  if (f.generators() == gens) return f;
  if (!(*f.generators() == *gens)) {
    throw Error(ErrorKind::GeneratorSetMismatch, "polynomial over a different generator set");
  }
  NcPoly out(gens, f.field());
  for (const auto& [w, c] : f.terms()) out.add_term(w, c);
  return out;
}

NcPoly remap(const NcPoly& f, const GeneratorsPtr& target, std::span<const Letter> letter_map) {
  NcPoly out(target, f.field());
  for (const auto& [w, c] : f.terms()) {
    Word v;
    v.letters.reserve(w.size());
    for (Letter l : w.letters) v.letters.push_back(letter_map[l]);
    out.add_term(v, c);
  }
  return out;
}

Presentation::Presentation(FieldSpec field, GeneratorsPtr gens, std::vector<NcPoly> relations)
    : field_(field), gens_(std::move(gens)) {
  for (const auto& r : relations) {
    if (!(r.field() == field_)) throw Error(ErrorKind::FieldMismatch, "relation over another field");
    NcPoly rel = rebind(r, gens_);
    if (rel.is_zero()) continue;
    if (!rel.is_homogeneous()) {
      throw Error(ErrorKind::InhomogeneousRelation, "relation " + to_string(rel) + " is not homogeneous");
    }
    if (*rel.homogeneous_degree() < 1) {
      throw Error(ErrorKind::InhomogeneousRelation, "relation of degree 0 makes the algebra trivial");
    }
    relations_.push_back(rel.monic());
  }
}

std::span<const NcPoly> Presentation::extra_relations() const {
  std::size_t skip = 0;
  if (skew_ && skew_->size() > 1) skip = skew_->size() * (skew_->size() - 1) / 2;
  return std::span<const NcPoly>(relations_).subspan(skip);
}

std::optional<int> Presentation::min_relation_degree() const {
  std::optional<int> d;
  for (const auto& r : relations_) {
    int e = *r.homogeneous_degree();
    d = d ? std::min(*d, e) : e;
  }
  return d;
}

std::optional<int> Presentation::min_extra_degree() const {
  std::optional<int> d;
  for (const auto& r : extra_relations()) {
    int e = *r.homogeneous_degree();
    d = d ? std::min(*d, e) : e;
  }
  return d;
}

int Presentation::max_relation_degree() const {
  int d = 0;
  for (const auto& r : relations_) d = std::max(d, *r.homogeneous_degree());
  return d;
}

bool operator==(const Presentation& a, const Presentation& b) {
  return a.field_ == b.field_ && *a.gens_ == *b.gens_ && a.relations_ == b.relations_ && a.skew_ == b.skew_;
}

Presentation free_algebra(FieldSpec field, std::vector<std::string> names, std::vector<int> degrees) {
  return Presentation(field, make_generators(std::move(names), std::move(degrees)), {});
}

Presentation skew_ring(const SkewMatrix& p, std::vector<std::string> names, std::vector<int> degrees) {
  const std::size_t n = p.size();
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  if (degrees.empty()) degrees.assign(n, 1);
  if (names.size() != n || degrees.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "skew_ring needs one name and degree per generator");
  }
  FieldSpec field = p.field();
  auto gens = make_generators(std::move(names), std::move(degrees));
  std::vector<NcPoly> rels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      NcPoly r(gens, field);
      r.add_term(Word{static_cast<Letter>(j), static_cast<Letter>(i)}, Scalar::one(field));
      r.add_term(Word{static_cast<Letter>(i), static_cast<Letter>(j)}, -p(i, j));
      rels.push_back(std::move(r));
    }
  }
  Presentation out(field, gens, std::move(rels));
  out.skew_ = p;
  return out;
}

Presentation quotient(const Presentation& a, const std::vector<NcPoly>& extra) {
  std::vector<NcPoly> rels = a.relations_;
  for (const auto& r : extra) {
    NcPoly rel = rebind(r, a.gens_);
    if (!rel.is_homogeneous()) {
      throw Error(ErrorKind::InhomogeneousRelation, "relation " + to_string(rel) + " is not homogeneous");
    }
    rels.push_back(std::move(rel));
  }
  Presentation out(a.field_, a.gens_, std::move(rels));
  out.skew_ = a.skew_;
  return out;
}

namespace {

std::vector<Letter> shifted_letters(std::size_t count, std::size_t offset) {
  std::vector<Letter> m(count);
  for (std::size_t i = 0; i < count; ++i) m[i] = static_cast<Letter>(i + offset);
  return m;
}

}  // namespace

Presentation tensor(const Presentation& a, const Presentation& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "tensor over different fields");
  if (b.num_generators() == 0) return a;
  if (a.num_generators() == 0) return b;

  std::vector<std::string> names;
  std::vector<int> degrees;
  std::set<std::string> left(a.gens().names().begin(), a.gens().names().end());
  bool clash = std::any_of(b.gens().names().begin(), b.gens().names().end(),
                           [&](const std::string& n) { return left.count(n) > 0; });
  for (std::size_t i = 0; i < a.num_generators(); ++i) {
    names.push_back(clash ? "a_" + a.gens().name(i) : a.gens().name(i));
    degrees.push_back(a.gens().degree(i));
  }
  for (std::size_t i = 0; i < b.num_generators(); ++i) {
    names.push_back(clash ? "b_" + b.gens().name(i) : b.gens().name(i));
    degrees.push_back(b.gens().degree(i));
  }

  const std::size_t na = a.num_generators();
  const std::size_t nb = b.num_generators();
  const auto left_map = shifted_letters(na, 0);
  const auto right_map = shifted_letters(nb, na);

  if (a.skew() && b.skew()) {
    Presentation base = skew_ring(SkewMatrix::direct_sum(*a.skew(), *b.skew()), names, degrees);
    std::vector<NcPoly> extra;
    for (const auto& r : a.extra_relations()) extra.push_back(remap(r, base.generators(), left_map));
    for (const auto& r : b.extra_relations()) extra.push_back(remap(r, base.generators(), right_map));
    return quotient(base, extra);
  }

  auto gens = make_generators(std::move(names), std::move(degrees));
  std::vector<NcPoly> rels;
  for (const auto& r : a.relations()) rels.push_back(remap(r, gens, left_map));
  for (const auto& r : b.relations()) rels.push_back(remap(r, gens, right_map));
  const Scalar one = Scalar::one(a.field());
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      NcPoly r(gens, a.field());
      r.add_term(Word{static_cast<Letter>(na + j), static_cast<Letter>(i)}, one);
      r.add_term(Word{static_cast<Letter>(i), static_cast<Letter>(na + j)}, -one);
      rels.push_back(std::move(r));
    }
  }
  return Presentation(a.field(), gens, std::move(rels));
}

Presentation adjoin_central(const Presentation& a, std::size_t count, const std::string& prefix) {
  if (count == 0) return a;
  std::vector<std::string> names = a.gens().names();
  std::vector<int> degrees = a.gens().degrees();
  const std::size_t n = names.size();
  for (std::size_t i = 1; i <= count; ++i) {
    std::string name = prefix + std::to_string(i);
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    names.push_back(name);
    degrees.push_back(1);
  }
  const auto identity = shifted_letters(n, 0);

  if (a.skew()) {
    SkewMatrix ext = SkewMatrix::direct_sum(*a.skew(), SkewMatrix::uniform(a.field(), count, Scalar::one(a.field())));
    Presentation base = skew_ring(ext, names, degrees);
    std::vector<NcPoly> extra;
    for (const auto& r : a.extra_relations()) extra.push_back(remap(r, base.generators(), identity));
    return quotient(base, extra);
  }

  auto gens = make_generators(std::move(names), std::move(degrees));
  std::vector<NcPoly> rels;
  for (const auto& r : a.relations()) rels.push_back(remap(r, gens, identity));
  const Scalar one = Scalar::one(a.field());
  for (std::size_t t = n; t < n + count; ++t) {
    for (std::size_t g = 0; g < t; ++g) {
      NcPoly r(gens, a.field());
      r.add_term(Word{static_cast<Letter>(t), static_cast<Letter>(g)}, one);
      r.add_term(Word{static_cast<Letter>(g), static_cast<Letter>(t)}, -one);
      rels.push_back(std::move(r));
    }
  }
  return Presentation(a.field(), gens, std::move(rels));
}

Presentation eliminate_degree_one(const Presentation& a, const std::vector<NcPoly>& elems) {
  if (elems.empty()) return a;
  const FieldSpec field = a.field();
  std::vector<std::size_t> linear;  // degree-1 generators, reversed so later ones become pivots
  for (std::size_t g = a.num_generators(); g-- > 0;) {
    if (a.gens().degree(g) == 1) linear.push_back(g);
  }
  Matrix e(field, 0, linear.size());
  for (const auto& raw : elems) {
    NcPoly f = rebind(raw, a.generators());
    if (!f.is_zero() && f.homogeneous_degree() != 1) {
      throw Error(ErrorKind::InvalidArgument, "eliminate_degree_one needs degree-1 elements");
    }
    Vector row = zero_vector(field, linear.size());
    for (std::size_t c = 0; c < linear.size(); ++c) row[c] = f.coefficient(Word{static_cast<Letter>(linear[c])});
    e.append_row(row);
  }
  RrefResult r = rref(e);
  if (r.rank != elems.size()) throw Error(ErrorKind::DependentElements, "elements are linearly dependent");

  std::vector<bool> eliminated(a.num_generators(), false);
  for (auto p : r.pivots) eliminated[linear[p]] = true;
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<std::size_t> kept;
  std::vector<std::ptrdiff_t> new_index(a.num_generators(), -1);
  for (std::size_t g = 0; g < a.num_generators(); ++g) {
    if (eliminated[g]) continue;
    new_index[g] = static_cast<std::ptrdiff_t>(kept.size());
    kept.push_back(g);
    names.push_back(a.gens().name(g));
    degrees.push_back(a.gens().degree(g));
  }
  auto gens = make_generators(names, degrees);

  std::vector<NcPoly> images;
  bool pure_generators = true;
  for (std::size_t g = 0; g < a.num_generators(); ++g) {
    if (!eliminated[g]) {
      images.push_back(NcPoly::generator(gens, field, static_cast<std::size_t>(new_index[g])));
    } else {
      images.emplace_back(gens, field);
    }
  }
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t g = linear[r.pivots[i]];
    NcPoly img(gens, field);
    for (std::size_t c = 0; c < linear.size(); ++c) {
      if (c == r.pivots[i] || r.reduced(i, c).is_zero()) continue;
      img.add_term(Word{static_cast<Letter>(new_index[linear[c]])}, -r.reduced(i, c));
    }
    if (!img.is_zero()) pure_generators = false;
    images[g] = std::move(img);
  }

  if (a.skew() && pure_generators) {
    Presentation base = skew_ring(a.skew()->restricted(kept), names, degrees);
    std::vector<NcPoly> extra;
    for (const auto& rel : a.extra_relations()) extra.push_back(rebind(substitute(rel, images), base.generators()));
    return quotient(base, extra);
  }
  std::vector<NcPoly> rels;
  for (const auto& rel : a.relations()) rels.push_back(substitute(rel, images));
  return Presentation(field, gens, std::move(rels));
}

}  // namespace galg
