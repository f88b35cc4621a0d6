#include "galg/groebner.hpp"

#include <algorithm>
#include <set>

#include "galg/error.hpp"

namespace galg {

namespace {

struct DeglexGreater {
  const GeneratorSet* gens;
  bool operator()(const Word& a, const Word& b) const { return deglex_compare(*gens, a, b) > 0; }
};

using Queue = std::map<Word, Scalar, DeglexGreater>;

void accumulate(Queue& q, Word w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = q.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) q.erase(it);
  }
}

void accumulate(NcPoly::Terms& t, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& middle) {
  Word out;
  out.letters.reserve(w.size() - len + middle.size());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(pos));
  out.letters.insert(out.letters.end(), middle.letters.begin(), middle.letters.end());
  out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(pos + len), w.letters.end());
  return out;
}

}  // namespace

std::optional<ReductionSystem::Redex> ReductionSystem::find_redex(const Word& w,
                                                                  ReductionStrategy strategy) const {
  if (rules_.empty()) return std::nullopt;
  const std::size_t n = w.size();
  Word probe;
  auto probe_at = [&](std::size_t pos, std::size_t len) -> std::optional<std::size_t> {
    probe.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                         w.letters.begin() + static_cast<std::ptrdiff_t>(pos + len));
    auto it = rule_by_lead_.find(probe);
    if (it == rule_by_lead_.end()) return std::nullopt;
    return it->second;
  };
  if (strategy == ReductionStrategy::Leftmost) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      for (std::size_t len : lead_lengths_) {
        if (pos + len > n) break;
        if (auto r = probe_at(pos, len)) return Redex{*r, pos};
      }
    }
  } else {
    for (std::size_t end = n; end > 0; --end) {
      for (std::size_t len : lead_lengths_) {
        if (len > end) break;
        if (auto r = probe_at(end - len, len)) return Redex{*r, end - len};
      }
    }
  }
  return std::nullopt;
}

NcPoly::Terms ReductionSystem::reduce_terms(const NcPoly::Terms& f, ReductionStrategy strategy) const {
  Queue queue(DeglexGreater{&gens()});
  for (const auto& [w, c] : f) accumulate(queue, w, c);
  NcPoly::Terms result;
  while (!queue.empty()) {
    auto node = queue.extract(queue.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    auto redex = find_redex(w, strategy);
    if (!redex) {
      result.emplace(w, c);
      continue;
    }
    const RewriteRule& rule = rules_[redex->rule];
    for (const auto& [t, tc] : rule.tail) {
      accumulate(queue, splice(w, redex->position, rule.lead.size(), t), c * tc);
    }
  }
  return result;
}

void ReductionSystem::add_rule(RewriteRule rule) {
  std::size_t len = rule.lead.size();
  if (std::find(lead_lengths_.begin(), lead_lengths_.end(), len) == lead_lengths_.end()) {
    lead_lengths_.insert(std::upper_bound(lead_lengths_.begin(), lead_lengths_.end(), len), len);
  }
  rule_by_lead_.emplace(rule.lead, rules_.size());
  rules_.push_back(std::move(rule));
}

ReductionSystem ReductionSystem::build(const Presentation& pres, int degree) {
  if (degree < 1) throw Error(ErrorKind::TruncationTooSmall, "truncation degree must be at least 1");
  if (pres.max_relation_degree() > degree) {
    throw Error(ErrorKind::TruncationTooSmall, "relation of degree " + std::to_string(pres.max_relation_degree()) +
                                                   " exceeds truncation degree " + std::to_string(degree));
  }
  ReductionSystem rs(pres, degree);
  const GeneratorSet& gens = pres.gens();
  const FieldSpec field = pres.field();
  std::vector<std::vector<NcPoly::Terms>> pending(static_cast<std::size_t>(degree) + 1);
  for (const auto& r : pres.relations()) pending[static_cast<std::size_t>(*r.homogeneous_degree())].push_back(r.terms());

  auto rule_poly = [&](const RewriteRule& r) {
    NcPoly::Terms t;
    t.emplace(r.lead, Scalar::one(field));
    for (const auto& [w, c] : r.tail) accumulate(t, w, -c);
    return t;
  };
  // Overlaps where a proper suffix of u.lead equals a proper prefix of v.lead.
  auto push_overlaps = [&](const RewriteRule& u, const RewriteRule& v) {
    const std::size_t lu = u.lead.size();
    const std::size_t lv = v.lead.size();
    for (std::size_t k = 1; k < std::min(lu, lv); ++k) {
      if (!std::equal(u.lead.letters.end() - static_cast<std::ptrdiff_t>(k), u.lead.letters.end(),
                      v.lead.letters.begin())) {
        continue;
      }
      Word right = v.lead.subword(k, lv - k);
      Word left = u.lead.subword(0, lu - k);
      int d = gens.degree(left) + gens.degree(v.lead);
      if (d > degree) continue;
      NcPoly::Terms s;
      for (const auto& [w, c] : rule_poly(u)) accumulate(s, w * right, c);
      for (const auto& [w, c] : rule_poly(v)) accumulate(s, left * w, -c);
      if (!s.empty()) pending[static_cast<std::size_t>(d)].push_back(std::move(s));
    }
  };

  for (int d = 1; d <= degree; ++d) {
    std::vector<NcPoly::Terms> reduced;
    std::set<Word, DeglexGreater> columns(DeglexGreater{&gens});
    for (const auto& cand : pending[static_cast<std::size_t>(d)]) {
      NcPoly::Terms r = rs.reduce_terms(cand, ReductionStrategy::Leftmost);
      if (r.empty()) continue;
      for (const auto& [w, c] : r) columns.insert(w);
      reduced.push_back(std::move(r));
    }
    pending[static_cast<std::size_t>(d)].clear();
    if (reduced.empty()) continue;

    std::vector<Word> col_words(columns.begin(), columns.end());
    std::map<Word, std::size_t> col_index;
    for (std::size_t i = 0; i < col_words.size(); ++i) col_index.emplace(col_words[i], i);
    Matrix m(field, 0, col_words.size());
    for (const auto& r : reduced) {
      Vector row = zero_vector(field, col_words.size());
      for (const auto& [w, c] : r) row[col_index.at(w)] = c;
      m.append_row(row);
    }
    RrefResult e = rref(std::move(m));
    const std::size_t first_new = rs.rules_.size();
    for (std::size_t i = 0; i < e.rank; ++i) {
      RewriteRule rule;
      rule.lead = col_words[e.pivots[i]];
      for (std::size_t c = e.pivots[i] + 1; c < col_words.size(); ++c) {
        if (!e.reduced(i, c).is_zero()) rule.tail.emplace_back(col_words[c], -e.reduced(i, c));
      }
      rs.add_rule(std::move(rule));
    }
    for (std::size_t i = first_new; i < rs.rules_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        push_overlaps(rs.rules_[i], rs.rules_[j]);
        if (j != i) push_overlaps(rs.rules_[j], rs.rules_[i]);
      }
    }
  }
  rs.enumerate_normal_words();
  return rs;
}

void ReductionSystem::enumerate_normal_words() {
  normal_words_.assign(static_cast<std::size_t>(degree_) + 1, {});
  const GeneratorSet& g = gens();
  Word w;
  Word probe;
  auto suffix_reducible = [&]() {
    for (std::size_t len : lead_lengths_) {
      if (len > w.size()) break;
      probe.letters.assign(w.letters.end() - static_cast<std::ptrdiff_t>(len), w.letters.end());
      if (rule_by_lead_.count(probe) > 0) return true;
    }
    return false;
  };
  auto visit = [&](auto&& self, int deg) -> void {
    normal_words_[static_cast<std::size_t>(deg)].push_back(w);
    for (std::size_t l = 0; l < g.size(); ++l) {
      int nd = deg + g.degree(l);
      if (nd > degree_) continue;
      w.letters.push_back(static_cast<Letter>(l));
      if (!suffix_reducible()) self(self, nd);
      w.letters.pop_back();
    }
  };
  visit(visit, 0);
  for (auto& words : normal_words_) {
    std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return a.letters > b.letters; });
  }
}

NcPoly ReductionSystem::normal_form(const NcPoly& f, ReductionStrategy strategy) const {
  NcPoly g = rebind(f, pres_.generators());
  if (g.max_degree() > degree_) {
    throw Error(ErrorKind::DegreeExceedsTruncation, "degree " + std::to_string(g.max_degree()) +
                                                        " exceeds truncation " + std::to_string(degree_));
  }
  NcPoly out(pres_.generators(), field());
  for (const auto& [w, c] : reduce_terms(g.terms(), strategy)) out.add_term(w, c);
  return out;
}

bool ReductionSystem::is_normal(const Word& w) const { return !find_redex(w, ReductionStrategy::Leftmost); }

const std::vector<Word>& ReductionSystem::normal_words(int d) const {
  if (d < 0 || d > degree_) {
    throw Error(ErrorKind::DegreeExceedsTruncation, "degree " + std::to_string(d) + " outside 0.." +
                                                        std::to_string(degree_));
  }
  return normal_words_[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> ReductionSystem::hilbert() const {
  std::vector<std::size_t> h;
  for (const auto& words : normal_words_) h.push_back(words.size());
  return h;
}

std::vector<std::size_t> hilbert(const ReductionSystem& rs) { return rs.hilbert(); }

TruncatedAlgebra::TruncatedAlgebra(ReductionSystem rs) : rs_(std::move(rs)) {
  const int top = rs_.truncation_degree();
  auto degrees = std::make_shared<std::vector<int>>();
  offset_.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int d = top; d >= 0; --d) {
    offset_[static_cast<std::size_t>(d)] = basis_.size();
    for (const auto& w : rs_.normal_words(d)) {
      column_of_.emplace(w, basis_.size());
      basis_.push_back(w);
      degrees->push_back(d);
    }
  }
  column_degrees_ = degrees;

  const GeneratorSet& g = gens();
  left_.assign(g.size(), std::vector<Sparse>(basis_.size()));
  right_.assign(g.size(), std::vector<Sparse>(basis_.size()));
  for (std::size_t l = 0; l < g.size(); ++l) {
    const Word letter{static_cast<Letter>(l)};
    for (std::size_t c = 0; c < basis_.size(); ++c) {
      if ((*column_degrees_)[c] + g.degree(l) > top) continue;
      const Scalar one = Scalar::one(field());
      left_[l][c] = sparse_of(rs_.normal_form(NcPoly::monomial(presentation().generators(), letter * basis_[c], one)));
      right_[l][c] = sparse_of(rs_.normal_form(NcPoly::monomial(presentation().generators(), basis_[c] * letter, one)));
    }
  }
}

TruncatedAlgebra TruncatedAlgebra::build(const Presentation& pres, int degree) {
  return TruncatedAlgebra(ReductionSystem::build(pres, degree));
}

std::size_t TruncatedAlgebra::component_dim(int d) const {
  if (d < 0 || d > truncation_degree()) return 0;
  return rs_.normal_words(d).size();
}

std::size_t TruncatedAlgebra::component_offset(int d) const {
  if (d < 0 || d > truncation_degree()) {
    throw Error(ErrorKind::DegreeExceedsTruncation, "degree " + std::to_string(d) + " outside truncation");
  }
  return offset_[static_cast<std::size_t>(d)];
}

std::size_t TruncatedAlgebra::column_of(const Word& normal_word) const {
  auto it = column_of_.find(normal_word);
  if (it == column_of_.end()) throw Error(ErrorKind::InvalidArgument, "word is not a normal word of A^(D)");
  return it->second;
}

TruncatedAlgebra::Sparse TruncatedAlgebra::sparse_of(const NcPoly& f) const {
  Sparse out;
  for (const auto& [w, c] : f.terms()) out.emplace_back(column_of(w), c);
  return out;
}

Vector TruncatedAlgebra::to_vector(const NcPoly& f) const {
  Vector v = zero_vector(field(), dim());
  NcPoly nf = rs_.normal_form(f);
  for (const auto& [w, c] : nf.terms()) v[column_of(w)] = c;
  return v;
}

NcPoly TruncatedAlgebra::to_poly(std::span<const Scalar> v) const {
  NcPoly out(presentation().generators(), field());
  for (std::size_t c = 0; c < v.size(); ++c) out.add_term(basis_[c], v[c]);
  return out;
}

Vector TruncatedAlgebra::component_vector(const NcPoly& f, int d) const {
  const std::size_t off = component_offset(d);
  Vector v = zero_vector(field(), component_dim(d));
  NcPoly nf = rs_.normal_form(f.homogeneous_component(d));
  for (const auto& [w, c] : nf.terms()) v[column_of(w) - off] = c;
  return v;
}

NcPoly TruncatedAlgebra::component_poly(std::span<const Scalar> coords, int d) const {
  const std::size_t off = component_offset(d);
  NcPoly out(presentation().generators(), field());
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(basis_[off + i], coords[i]);
  return out;
}

int TruncatedAlgebra::top_degree(std::span<const Scalar> v) const {
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (!v[c].is_zero()) return (*column_degrees_)[c];
  }
  return -1;
}

Vector TruncatedAlgebra::apply_table(const std::vector<Sparse>& table, std::span<const Scalar> v) const {
  Vector out = zero_vector(field(), dim());
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [k, s] : table[c]) out[k] += v[c] * s;
  }
  return out;
}

Vector TruncatedAlgebra::left_multiply(std::size_t gen, std::span<const Scalar> v) const {
  return apply_table(left_.at(gen), v);
}

Vector TruncatedAlgebra::right_multiply(std::size_t gen, std::span<const Scalar> v) const {
  return apply_table(right_.at(gen), v);
}

NcPoly TruncatedAlgebra::multiply(const NcPoly& a, const NcPoly& b) const {
  NcPoly prod = a * b;
  NcPoly kept(prod.generators(), prod.field());
  for (const auto& [w, c] : prod.terms()) {
    if (gens().degree(w) <= truncation_degree()) kept.add_term(w, c);
  }
  return rs_.normal_form(kept);
}

FilteredSubspace::FilteredSubspace(Subspace space, std::shared_ptr<const std::vector<int>> column_degrees)
    : space_(std::move(space)), column_degrees_(std::move(column_degrees)) {}

int FilteredSubspace::max_degree() const {
  return column_degrees_->empty() ? 0 : column_degrees_->front();
}

Subspace FilteredSubspace::stratum(int d) const {
  return space_.filter_by_pivot([&](std::size_t p) { return (*column_degrees_)[p] <= d; });
}

std::size_t FilteredSubspace::stratum_dim(int d) const {
  std::size_t n = 0;
  for (auto p : space_.pivots()) n += (*column_degrees_)[p] <= d ? 1 : 0;
  return n;
}

std::size_t FilteredSubspace::graded_dim(int d) const {
  return stratum_dim(d) - (d > 0 ? stratum_dim(d - 1) : 0);
}

FilteredSubspace FilteredSubspace::intersection(const FilteredSubspace& other) const {
  return FilteredSubspace(space_.intersection(other.space_), column_degrees_);
}

bool FilteredSubspace::agrees_up_to(const FilteredSubspace& other, int d) const {
  for (int e = 0; e <= d; ++e) {
    if (!(stratum(e) == other.stratum(e))) return false;
  }
  return true;
}

FilteredSubspace whole_algebra(const TruncatedAlgebra& alg) {
  return FilteredSubspace(Subspace::full(alg.field(), alg.dim()), alg.column_degrees());
}

FilteredSubspace zero_subspace(const TruncatedAlgebra& alg) {
  return FilteredSubspace(Subspace::zero(alg.field(), alg.dim()), alg.column_degrees());
}

FilteredSubspace ideal_closure(const TruncatedAlgebra& alg, std::vector<Vector> gens) {
  EchelonBuilder builder(alg.field(), alg.dim());
  for (auto& v : gens) builder.insert(std::move(v));
  const GeneratorSet& g = alg.gens();
  const int top = alg.truncation_degree();
  for (std::size_t i = 0; i < builder.dim(); ++i) {
    Vector row = builder.rows()[i];
    int d = alg.top_degree(row);
    for (std::size_t l = 0; l < g.size(); ++l) {
      if (d + g.degree(l) > top) continue;
      builder.insert(alg.left_multiply(l, row));
      builder.insert(alg.right_multiply(l, row));
    }
  }
  return FilteredSubspace(builder.to_subspace(), alg.column_degrees());
}

FilteredSubspace ideal_closure(const TruncatedAlgebra& alg, const std::vector<NcPoly>& gens) {
  std::vector<Vector> vs;
  vs.reserve(gens.size());
  for (const auto& f : gens) {
    if (f.max_degree() > alg.truncation_degree()) {
      throw Error(ErrorKind::DegreeExceedsTruncation, "ideal generator above truncation degree");
    }
    vs.push_back(alg.to_vector(f));
  }
  return ideal_closure(alg, std::move(vs));
}

FilteredSubspace ideal_power(const TruncatedAlgebra& alg, const std::vector<NcPoly>& gens, unsigned k) {
  if (k == 0) return whole_algebra(alg);
  int top = 0;
  for (const auto& f : gens) top = std::max(top, f.max_degree());
  if (static_cast<long>(k) * top > alg.truncation_degree()) {
    throw Error(ErrorKind::TruncationTooSmall, "power " + std::to_string(k) + " of the ideal needs degree " +
                                                   std::to_string(static_cast<long>(k) * top));
  }
  std::vector<NcPoly> products;
  for (const auto& f : gens) products.push_back(rebind(f, alg.presentation().generators()));
  for (unsigned i = 1; i < k; ++i) {
    std::vector<NcPoly> next;
    for (const auto& p : products) {
      for (const auto& f : gens) {
        NcPoly q = alg.multiply(p, rebind(f, alg.presentation().generators()));
        if (!q.is_zero()) next.push_back(std::move(q));
      }
    }
    products = std::move(next);
  }
  return ideal_closure(alg, products);
}

FilteredSubspace augmentation_ideal(const TruncatedAlgebra& alg) {
  std::vector<NcPoly> gens;
  for (std::size_t i = 0; i < alg.gens().size(); ++i) {
    if (alg.gens().degree(i) <= alg.truncation_degree()) gens.push_back(alg.presentation().generator(i));
  }
  return ideal_closure(alg, gens);
}

bool is_generated_in_degree_one(const TruncatedAlgebra& alg) {
  const GeneratorSet& g = alg.gens();
  for (int d = 2; d <= alg.truncation_degree(); ++d) {
    EchelonBuilder span(alg.field(), alg.dim());
    const std::size_t off = alg.component_offset(d - 1);
    for (std::size_t c = off; c < off + alg.component_dim(d - 1); ++c) {
      Vector e = zero_vector(alg.field(), alg.dim());
      e[c] = Scalar::one(alg.field());
      for (std::size_t l = 0; l < g.size(); ++l) {
        if (g.degree(l) == 1) span.insert(alg.left_multiply(l, e));
      }
    }
    if (span.dim() != alg.component_dim(d)) return false;
  }
  return true;
}

}  // namespace galg
