#include "tensorbrick/algebra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <stdexcept>

#include "tensorbrick/errors.hpp"

namespace tensorbrick {
namespace {

bool degree_lex_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.source != b.source) return a.source < b.source;
  return a.arrows < b.arrows;
}

SparseVector sorted_merge(std::vector<std::pair<std::size_t, Scalar>> terms, const Field& f) {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector out;
  for (auto& [idx, val] : terms) {
    if (!out.empty() && out.back().first == idx) {
      out.back().second = f.add(out.back().second, val);
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!val.is_zero()) {
      out.emplace_back(idx, std::move(val));
    }
  }
  return out;
}

}  // namespace

std::vector<Path> paths_of_length(const Quiver& q, std::size_t length, const std::vector<std::size_t>* allowed) {
  std::vector<bool> ok(q.arrow_count(), allowed == nullptr);
  if (allowed) {
    for (auto a : *allowed) ok.at(a) = true;
  }
  std::vector<Path> current;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) current.push_back(trivial_path(v));
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<Path> next;
    for (const auto& p : current) {
      for (std::size_t a : q.outgoing(p.target)) {
        if (!ok[a]) continue;
        Path e = p;
        e.arrows.push_back(a);
        e.target = q.arrow(a).target;
        next.push_back(std::move(e));
      }
    }
    current = std::move(next);
  }
  return current;
}

std::shared_ptr<const BoundAlgebra> BoundAlgebra::build(Quiver quiver, std::vector<Relation> relations, Field field,
                                                        std::size_t bound) {
  if (bound < 1) throw std::invalid_argument("nilpotency bound must be at least 1");
  for (auto& rel : relations) {
    if (rel.terms.empty()) throw std::invalid_argument("relation without terms");
    bool nonzero = false;
    for (auto& t : rel.terms) {
      if (!is_valid_path(quiver, t.path)) throw std::invalid_argument("relation uses an invalid path");
      if (t.path.source != rel.terms.front().path.source || t.path.target != rel.terms.front().path.target)
        throw std::invalid_argument("relation terms are not parallel: " + path_to_string(quiver, t.path) + " vs " +
                                    path_to_string(quiver, rel.terms.front().path));
      t.coeff = field.from_rational(t.coeff);
      nonzero = nonzero || !t.coeff.is_zero();
    }
    if (!nonzero) throw std::invalid_argument("relation with all coefficients zero");
  }

  std::shared_ptr<BoundAlgebra> alg(new BoundAlgebra());
  alg->quiver_ = std::move(quiver);
  alg->relations_ = std::move(relations);
  alg->field_ = field;
  alg->bound_ = bound;
  const Quiver& q = alg->quiver_;
  const std::size_t n_vertices = q.vertex_count();

  // Columns: every path of length <= bound, longest first, then reverse lexicographic.
  std::vector<Path> columns;
  {
    std::vector<Path> layer;
    for (std::size_t v = 0; v < n_vertices; ++v) layer.push_back(trivial_path(v));
    for (std::size_t l = 0;; ++l) {
      columns.insert(columns.end(), layer.begin(), layer.end());
      if (l == bound) break;
      std::vector<Path> next;
      for (const auto& p : layer) {
        for (std::size_t a : q.outgoing(p.target)) {
          Path e = p;
          e.arrows.push_back(a);
          e.target = q.arrow(a).target;
          next.push_back(std::move(e));
        }
      }
      layer = std::move(next);
    }
  }
  std::sort(columns.begin(), columns.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return degree_lex_less(b, a);
  });
  std::map<Path, std::size_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

  auto to_sparse = [&](const std::vector<std::pair<Path, Scalar>>& terms) {
    std::vector<std::pair<std::size_t, Scalar>> raw;
    for (const auto& [p, c] : terms) {
      if (p.length() > bound) continue;
      raw.emplace_back(column_of.at(p), c);
    }
    return sorted_merge(std::move(raw), field);
  };
  auto multiply_arrow = [&](const SparseVector& v, std::size_t arrow, bool on_left) {
    std::vector<std::pair<std::size_t, Scalar>> raw;
    const Path a = arrow_path(q, arrow);
    for (const auto& [c, x] : v) {
      const Path& p = columns[c];
      if (p.length() + 1 > bound) continue;
      Path r = on_left ? concat(a, p) : concat(p, a);
      raw.emplace_back(column_of.at(r), x);
    }
    return sorted_merge(std::move(raw), field);
  };

  // Two-sided ideal span inside paths of length <= bound: close the generators
  // under left and right multiplication by arrows.
  SparseEchelon ideal(field, columns.size());
  std::deque<SparseVector> queue;
  for (const auto& rel : alg->relations_) {
    std::vector<std::pair<Path, Scalar>> terms;
    for (const auto& t : rel.terms) terms.emplace_back(t.path, t.coeff);
    queue.push_back(to_sparse(terms));
  }
  while (!queue.empty()) {
    SparseVector v = std::move(queue.front());
    queue.pop_front();
    v = ideal.reduce(std::move(v));
    if (v.empty()) continue;
    ideal.insert(v);
    const Path& lead = columns[v.front().first];
    for (std::size_t a : q.incoming(lead.source)) {
      auto w = multiply_arrow(v, a, true);
      if (!w.empty()) queue.push_back(std::move(w));
    }
    for (std::size_t a : q.outgoing(lead.target)) {
      auto w = multiply_arrow(v, a, false);
      if (!w.empty()) queue.push_back(std::move(w));
    }
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].length() != bound) continue;
    if (!ideal.reduce(SparseVector{{c, field.one()}}).empty())
      throw NotAdmissible("path " + path_to_string(q, columns[c]) + " of length " + std::to_string(bound) +
                          " is not in the ideal; raise the bound or add relations");
  }
  ideal.finalize();

  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].length() < bound && !ideal.is_pivot(c)) alg->basis_.push_back(columns[c]);
  }
  std::sort(alg->basis_.begin(), alg->basis_.end(), degree_lex_less);
  for (std::size_t i = 0; i < alg->basis_.size(); ++i) alg->basis_lookup_.emplace(alg->basis_[i], i);

  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].length() >= bound || !ideal.is_pivot(c)) continue;
    const SparseVector& row = *ideal.row_for_pivot(c);
    std::vector<std::pair<std::size_t, Scalar>> raw;
    for (std::size_t k = 1; k < row.size(); ++k) {
      raw.emplace_back(alg->basis_lookup_.at(columns[row[k].first]), field.neg(row[k].second));
    }
    alg->reductions_.emplace(columns[c], sorted_merge(std::move(raw), field));
  }

  alg->trivial_index_.resize(n_vertices);
  for (std::size_t v = 0; v < n_vertices; ++v) {
    auto it = alg->basis_lookup_.find(trivial_path(v));
    if (it == alg->basis_lookup_.end())
      throw NotAdmissible("the ideal meets the span of the trivial path at " + q.vertex_id(v));
    alg->trivial_index_[v] = it->second;
  }
  alg->blocks_.assign(n_vertices * n_vertices, {});
  alg->local_index_.resize(alg->basis_.size());
  for (std::size_t i = 0; i < alg->basis_.size(); ++i) {
    auto& block = alg->blocks_[alg->basis_[i].source * n_vertices + alg->basis_[i].target];
    alg->local_index_[i] = block.size();
    block.push_back(i);
  }

  const std::size_t d = alg->basis_.size();
  alg->products_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (alg->basis_[i].target != alg->basis_[j].source) continue;
      alg->products_[i * d + j] = alg->normal_form(concat(alg->basis_[i], alg->basis_[j]));
    }
  }
  return alg;
}

std::optional<std::size_t> BoundAlgebra::basis_index(const Path& p) const {
  auto it = basis_lookup_.find(p);
  if (it == basis_lookup_.end()) return std::nullopt;
  return it->second;
}

SparseVector BoundAlgebra::normal_form(const Path& p) const {
  if (!is_valid_path(quiver_, p)) throw std::invalid_argument("normal_form: invalid path");
  if (p.length() >= bound_) return {};
  if (auto idx = basis_index(p)) return SparseVector{{*idx, field_.one()}};
  return reductions_.at(p);
}

Element BoundAlgebra::multiply(const Element& a, const Element& b) const {
  const std::size_t d = dimension();
  if (a.size() != d || b.size() != d) throw std::invalid_argument("multiply: element length mismatch");
  Element out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar coeff = field_.mul(a[i], b[j]);
      for (const auto& [k, c] : product(i, j)) out[k] = field_.add(out[k], field_.mul(coeff, c));
    }
  }
  return out;
}

SparseVector BoundAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
  std::vector<std::pair<std::size_t, Scalar>> raw;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      const Scalar coeff = field_.mul(x, y);
      for (const auto& [k, c] : product(i, j)) raw.emplace_back(k, field_.mul(coeff, c));
    }
  }
  return sorted_merge(std::move(raw), field_);
}

Element BoundAlgebra::unit() const {
  Element e(dimension());
  for (std::size_t v = 0; v < vertex_count(); ++v) e[trivial_index_[v]] = field_.one();
  return e;
}

Element BoundAlgebra::basis_element(std::size_t i) const {
  Element e(dimension());
  e.at(i) = field_.one();
  return e;
}

AlgebraPtr opposite_algebra(const BoundAlgebra& a) {
  std::vector<Relation> rels;
  for (const auto& r : a.relations()) {
    Relation rr;
    for (const auto& t : r.terms) rr.terms.push_back({t.coeff, reversed(t.path)});
    rels.push_back(std::move(rr));
  }
  return BoundAlgebra::build(a.quiver().opposite(), std::move(rels), a.field(), a.bound());
}

SparseVector to_opposite(const BoundAlgebra& a, const BoundAlgebra& op, const SparseVector& x) {
  std::vector<std::pair<std::size_t, Scalar>> raw;
  const Field& f = a.field();
  for (const auto& [i, c] : x) {
    for (const auto& [j, y] : op.normal_form(reversed(a.basis()[i]))) raw.emplace_back(j, f.mul(c, y));
  }
  return sorted_merge(std::move(raw), f);
}

// ------------------------------------------------------------------ cycles

std::vector<Cycle> nonzero_cycles_of_length(const BoundAlgebra& alg, std::size_t length) {
  std::vector<Cycle> out;
  const Quiver& q = alg.quiver();
  if (length < 2 || length >= alg.bound()) return out;
  std::vector<bool> visited(q.vertex_count(), false);
  Cycle current;
  std::function<void(std::size_t)> dfs = [&](std::size_t at) {
    for (std::size_t a : q.outgoing(at)) {
      if (q.is_loop(a)) continue;
      const std::size_t t = q.arrow(a).target;
      current.arrows.push_back(a);
      if (current.arrows.size() == length) {
        if (t == current.vertices.front()) {
          Path p{t, t, current.arrows};
          if (!alg.is_zero_path(p)) out.push_back(current);
        }
      } else if (!visited[t]) {
        visited[t] = true;
        current.vertices.push_back(t);
        dfs(t);
        current.vertices.pop_back();
        visited[t] = false;
      }
      current.arrows.pop_back();
    }
  };
  for (std::size_t base = 0; base < q.vertex_count(); ++base) {
    current = Cycle{};
    current.vertices.push_back(base);
    visited.assign(q.vertex_count(), false);
    visited[base] = true;
    dfs(base);
  }
  return out;
}

std::optional<Cycle> find_minimal_nonzero_cycle(const BoundAlgebra& alg) {
  const std::size_t max_len = std::min(alg.bound(), alg.vertex_count() + 1);
  for (std::size_t len = 2; len < max_len; ++len) {
    auto cycles = nonzero_cycles_of_length(alg, len);
    if (!cycles.empty()) return cycles.front();
  }
  return std::nullopt;
}

// --------------------------------------------------------------- symmetry

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes:
      return "yes";
    case Decision::No:
      return "no";
    case Decision::Undecided:
      return "undecided";
  }
  return "undecided";
}

bool is_local(const BoundAlgebra& a) { return a.vertex_count() == 1; }

SymmetryResult is_symmetric(const BoundAlgebra& alg, std::uint64_t seed, std::size_t sample_budget,
                            std::size_t exhaustive_budget) {
  const Field& f = alg.field();
  const std::size_t d = alg.dimension();
  SymmetryResult result;
  result.seed = seed;

  Subspace commutators(f, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector c(d);
      for (const auto& [k, x] : alg.product(i, j)) c[k] = f.add(c[k], x);
      for (const auto& [k, x] : alg.product(j, i)) c[k] = f.sub(c[k], x);
      if (!is_zero_vector(c)) commutators.insert(c);
    }
  }
  std::vector<Vector> functionals;
  if (commutators.dimension() == 0) {
    for (std::size_t i = 0; i < d; ++i) {
      Vector e(d);
      e[i] = f.one();
      functionals.push_back(std::move(e));
    }
  } else {
    functionals = kernel_basis(Matrix::from_rows(f, commutators.basis(), d));
  }
  const std::size_t k = functionals.size();
  result.functional_dimension = k;
  if (k == 0) {
    result.decision = Decision::No;
    result.method = "no functional vanishes on all commutators";
    return result;
  }

  // gram[l](i, j) = functional_l(b_i b_j)
  std::vector<Matrix> gram(k, Matrix(f, d, d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        Scalar acc;
        for (const auto& [c, x] : alg.product(i, j)) acc = f.add(acc, f.mul(functionals[l][c], x));
        gram[l](i, j) = acc;
      }
    }
  }
  auto nondegenerate_at = [&](const std::vector<Scalar>& t) {
    Matrix g(f, d, d);
    for (std::size_t l = 0; l < k; ++l) {
      if (t[l].is_zero()) continue;
      g = g + scaled(gram[l], t[l]);
    }
    return !determinant(std::move(g)).is_zero();
  };

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < sample_budget; ++s) {
    std::vector<Scalar> t(k);
    for (auto& x : t) {
      if (f.is_rational()) {
        x = Scalar(static_cast<std::int64_t>(rng() % (1u << 20)) - (1 << 19));
      } else {
        x = Scalar(static_cast<std::int64_t>(rng() % f.characteristic()));
      }
    }
    ++result.samples;
    if (nondegenerate_at(t)) {
      result.decision = Decision::Yes;
      result.method = "randomized witness";
      return result;
    }
  }

  // Exhaustive: over Q a nonzero polynomial of degree <= d is nonzero somewhere
  // on {0..d}^k; over GF(p) enumerate the functional space itself.
  const std::uint64_t radix = f.is_rational() ? d + 1 : f.characteristic();
  std::uint64_t grid = 1;
  for (std::size_t l = 0; l < k && grid <= exhaustive_budget; ++l) grid *= radix;
  if (grid <= exhaustive_budget) {
    std::vector<std::uint64_t> digits(k, 0);
    for (std::uint64_t n = 0; n < grid; ++n) {
      std::uint64_t rest = n;
      std::vector<Scalar> t(k);
      for (std::size_t l = 0; l < k; ++l) {
        t[l] = Scalar(static_cast<std::int64_t>(rest % radix));
        rest /= radix;
      }
      ++result.samples;
      if (nondegenerate_at(t)) {
        result.decision = Decision::Yes;
        result.method = "exhaustive witness";
        return result;
      }
    }
    result.decision = Decision::No;
    result.method = "exhaustive search over a determining grid";
    return result;
  }
  result.decision = Decision::Undecided;
  result.method = "sample budget exhausted";
  return result;
}

}  // namespace tensorbrick
