#include "tensorbrick/sttilt.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "tensorbrick/endomorphism.hpp"
#include "tensorbrick/errors.hpp"
#include "tensorbrick/hom.hpp"
#include "tensorbrick/linalg.hpp"

namespace tensorbrick {
namespace {

AlgebraPtr cached_opposite(const AlgebraPtr& a) {
  static std::mutex lock;
  static std::map<const BoundAlgebra*, std::pair<std::weak_ptr<const BoundAlgebra>, AlgebraPtr>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(a.get());
  if (it != cache.end() && it->second.first.lock() == a) return it->second.second;
  for (auto i = cache.begin(); i != cache.end();) i = i->second.first.expired() ? cache.erase(i) : std::next(i);
  AlgebraPtr op = opposite_algebra(*a);
  cache[a.get()] = {a, op};
  return op;
}

Representation sum_or_zero(const AlgebraPtr& alg, const std::vector<Representation>& parts) {
  return parts.empty() ? Representation::zero(alg) : direct_sum(parts);
}

std::vector<std::size_t> vertices_outside_support(const AlgebraPtr& alg, const std::vector<Representation>& parts) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    bool used = false;
    for (const auto& p : parts) used = used || p.dim(v) > 0;
    if (!used) out.push_back(v);
  }
  return out;
}

// Maps X -> U_j that factor through a radical map inside add(U), as a subspace of Hom(X, U_j).
Subspace radical_maps(const Representation& x, const std::vector<Representation>& others,
                      const std::vector<HomSpace>& to_others, std::size_t j) {
  const HomSpace& target = to_others[j];
  Subspace span(x.field(), target.dimension());
  for (std::size_t k = 0; k < others.size(); ++k) {
    std::vector<Morphism> rad;
    if (k == j) {
      EndomorphismAlgebra end(others[j]);
      for (const auto& r : end.radical()) rad.push_back(end.space().combination(r));
    } else {
      rad = hom_basis(others[k], others[j]);
    }
    for (const auto& g : to_others[k].basis())
      for (const auto& h : rad) span.insert(target.coordinates(compose(h, g)));
  }
  return span;
}

// Cokernel of a minimal left add(U)-approximation of x; nothing when it vanishes.
std::optional<Representation> down_exchange(const Representation& x, const std::vector<Representation>& others) {
  const AlgebraPtr& alg = x.algebra();
  if (others.empty()) return std::nullopt;
  std::vector<HomSpace> to_others;
  for (const auto& u : others) to_others.emplace_back(x, u);
  std::vector<Representation> targets;
  std::vector<Morphism> maps;
  for (std::size_t j = 0; j < others.size(); ++j) {
    Subspace span = radical_maps(x, others, to_others, j);
    for (std::size_t i = 0; i < to_others[j].dimension(); ++i) {
      Vector e(to_others[j].dimension());
      e[i] = Scalar(1);
      if (!span.insert(e)) continue;
      targets.push_back(others[j]);
      maps.push_back(to_others[j].basis()[i]);
    }
  }
  if (targets.empty()) return std::nullopt;
  Representation u = direct_sum(targets);
  Morphism f;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    std::vector<Matrix> blocks;
    for (const auto& m : maps) blocks.push_back(m.components[v]);
    f.components.push_back(vstack(blocks, alg->field(), x.dim(v)));
  }
  Representation y = cokernel(x, u, f).module;
  if (y.is_zero()) return std::nullopt;
  auto parts = decompose(y);
  std::vector<Representation> fresh;
  for (const auto& p : parts.summands) {
    bool known = false;
    for (const auto& o : others) known = known || indecomposables_isomorphic(p, o);
    for (const auto& o : fresh) known = known || indecomposables_isomorphic(p, o);
    if (!known) fresh.push_back(p);
  }
  if (fresh.size() != 1) throw std::logic_error("mutation produced " + std::to_string(fresh.size()) + " new summands");
  return fresh.front();
}

}  // namespace

SummandPtr make_summand(const Representation& m) {
  auto s = std::make_shared<RigidSummand>();
  s->module = m;
  s->presentation = min_projective_presentation(m);
  s->g = g_vector(s->presentation, m.vertex_count());
  if (s->presentation.p1.empty() && s->presentation.p0.size() == 1) s->projective_vertex = s->presentation.p0.front();
  return s;
}

SttPair::SttPair(AlgebraPtr algebra, std::vector<SummandPtr> summands, std::vector<std::size_t> excluded)
    : algebra_(std::move(algebra)), summands_(std::move(summands)), excluded_(std::move(excluded)) {
  std::sort(summands_.begin(), summands_.end(), [](const SummandPtr& a, const SummandPtr& b) { return a->g < b->g; });
  std::sort(excluded_.begin(), excluded_.end());
}

SttPair SttPair::top(const AlgebraPtr& algebra) {
  std::vector<SummandPtr> s;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) s.push_back(make_summand(projective_rep(algebra, v)));
  return SttPair(algebra, std::move(s), {});
}

SttPair SttPair::bottom(const AlgebraPtr& algebra) {
  std::vector<std::size_t> all;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) all.push_back(v);
  return SttPair(algebra, {}, all);
}

std::vector<GVector> SttPair::g_matrix() const {
  std::vector<GVector> cols;
  for (const auto& s : summands_) cols.push_back(s->g);
  for (std::size_t v : excluded_) {
    GVector g(algebra_->vertex_count(), 0);
    g[v] = -1;
    cols.push_back(std::move(g));
  }
  return cols;
}

GKey SttPair::key() const {
  GKey k = g_matrix();
  std::sort(k.begin(), k.end());
  return k;
}

Representation SttPair::module() const {
  std::vector<Representation> parts;
  for (const auto& s : summands_) parts.push_back(s->module);
  return sum_or_zero(algebra_, parts);
}

std::vector<std::size_t> SttPair::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < algebra_->vertex_count(); ++v)
    if (!std::binary_search(excluded_.begin(), excluded_.end(), v)) out.push_back(v);
  return out;
}

bool is_stt_pair(const Representation& m, const std::vector<std::size_t>& support, std::uint64_t seed) {
  const std::size_t n = m.vertex_count();
  std::vector<bool> in_support(n, false);
  for (std::size_t v : support) in_support.at(v) = true;
  std::size_t excluded = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_support[v]) continue;
    ++excluded;
    if (m.dim(v) != 0) return false;
  }
  if (!is_tau_rigid(m)) return false;
  auto parts = decompose(m, seed).summands;
  std::vector<Representation> classes;
  for (const auto& p : parts) {
    bool seen = false;
    for (const auto& c : classes) seen = seen || indecomposables_isomorphic(p, c);
    if (!seen) classes.push_back(p);
  }
  return classes.size() + excluded == n;
}

bool is_stt_pair(const SttPair& pair) {
  if (!is_stt_pair(pair.module(), pair.support())) return false;
  return pair.summands().size() + pair.excluded().size() == pair.algebra()->vertex_count();
}

bool is_down_mutation(const SttPair& pair, std::size_t position) {
  if (position >= pair.summands().size()) return false;
  std::vector<Representation> others;
  for (std::size_t i = 0; i < pair.summands().size(); ++i)
    if (i != position) others.push_back(pair.summands()[i]->module);
  if (others.empty()) return true;
  return !in_fac(direct_sum(others), pair.summands()[position]->module);
}

SttPair mutate(const SttPair& pair, std::size_t position) {
  const AlgebraPtr& alg = pair.algebra();
  const std::size_t n = alg->vertex_count();
  if (pair.position_count() != n) throw PreconditionError("mutation needs a support tau-tilting pair");
  if (position >= n) throw std::out_of_range("mutation position out of range");

  std::vector<SummandPtr> rest;
  for (std::size_t i = 0; i < pair.summands().size(); ++i)
    if (i != position) rest.push_back(pair.summands()[i]);
  std::vector<std::size_t> excluded;
  for (std::size_t i = 0; i < pair.excluded().size(); ++i)
    if (pair.summands().size() + i != position) excluded.push_back(pair.excluded()[i]);
  std::vector<Representation> others;
  for (const auto& s : rest) others.push_back(s->module);

  if (is_down_mutation(pair, position)) {
    const Representation& x = pair.summands()[position]->module;
    if (auto y = down_exchange(x, others)) {
      rest.push_back(make_summand(*y));
      return SttPair(alg, std::move(rest), std::move(excluded));
    }
    return SttPair(alg, std::move(rest), vertices_outside_support(alg, others));
  }

  // Going up: pass to the dual pair over A^op, go down there, and come back.
  AlgebraPtr op = cached_opposite(alg);
  std::vector<Representation> dual_others;
  std::vector<std::size_t> dual_excluded;
  for (const auto& s : rest) {
    if (s->projective_vertex) {
      dual_excluded.push_back(*s->projective_vertex);
    } else {
      dual_others.push_back(transpose(s->module, s->presentation, op));
    }
  }
  for (std::size_t v : excluded) dual_others.push_back(projective_rep(op, v));
  Representation x_dual = position < pair.summands().size()
                              ? transpose(pair.summands()[position]->module, pair.summands()[position]->presentation, op)
                              : projective_rep(op, pair.excluded()[position - pair.summands().size()]);
  auto y_dual = down_exchange(x_dual, dual_others);
  if (y_dual) {
    auto p = min_projective_presentation(*y_dual);
    if (p.p1.empty()) {
      excluded.push_back(p.p0.front());
    } else {
      rest.push_back(make_summand(transpose(*y_dual, p, alg)));
    }
  } else {
    std::vector<std::size_t> fresh;
    for (std::size_t v : vertices_outside_support(op, dual_others))
      if (std::find(dual_excluded.begin(), dual_excluded.end(), v) == dual_excluded.end()) fresh.push_back(v);
    if (fresh.size() != 1) throw std::logic_error("dual mutation left " + std::to_string(fresh.size()) + " free vertices");
    rest.push_back(make_summand(projective_rep(alg, fresh.front())));
  }
  return SttPair(alg, std::move(rest), std::move(excluded));
}

std::string key_to_string(const GKey& key) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out << '|';
    for (std::size_t j = 0; j < key[i].size(); ++j) out << (j ? "," : "") << key[i][j];
  }
  out << ']';
  return out.str();
}

std::string ExchangeGraph::verdict() const {
  if (complete) return "complete: " + std::to_string(nodes.size()) + " support tau-tilting pairs";
  return "possibly tau-tilting infinite (cap exceeded)";
}

ExchangeGraph explore(const AlgebraPtr& algebra, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("explore: cap must be at least 1");
  ExchangeGraph g;
  g.cap = cap;
  const std::size_t n = algebra->vertex_count();
  SttPair start = SttPair::top(algebra);
  g.index.emplace(start.key(), 0);
  g.nodes.push_back(std::move(start));
  std::set<std::pair<std::size_t, std::size_t>> linked;
  bool overflow = false;
  for (std::size_t cur = 0; cur < g.nodes.size(); ++cur) {
    for (std::size_t pos = 0; pos < n; ++pos) {
      const SttPair& here = g.nodes[cur];
      const bool down = is_down_mutation(here, pos);
      const GVector removed = here.g_matrix()[pos];
      SttPair next = mutate(here, pos);
      GKey k = next.key();
      auto it = g.index.find(k);
      std::size_t other;
      if (it == g.index.end()) {
        if (g.nodes.size() >= cap) {
          overflow = true;
          continue;
        }
        other = g.nodes.size();
        g.index.emplace(std::move(k), other);
        g.nodes.push_back(std::move(next));
      } else {
        other = it->second;
      }
      if (!linked.insert({std::min(cur, other), std::max(cur, other)}).second) continue;
      ExchangeEdge e;
      if (down) {
        e = {cur, other, removed};
      } else {
        e = {other, cur, {}};
        // the column the larger pair gives up is the one absent from the smaller pair
        const GKey small = g.nodes[cur].key();
        for (const auto& col : g.nodes[other].key())
          if (!std::binary_search(small.begin(), small.end(), col)) e.exchanged = col;
      }
      g.edges.push_back(std::move(e));
    }
  }
  g.complete = !overflow;
  if (g.complete) {
    const std::size_t m = g.nodes.size();
    // orient by Fac inclusion and close transitively
    g.order.assign(m, std::vector<bool>(m, false));
    std::vector<Representation> modules;
    for (const auto& node : g.nodes) modules.push_back(node.module());
    for (auto& e : g.edges) {
      if (!in_fac(modules[e.from], modules[e.to])) throw std::logic_error("exchange edge is not a Fac inclusion");
      g.order[e.from][e.to] = true;
    }
    for (std::size_t i = 0; i < m; ++i) g.order[i][i] = true;
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i)
        if (g.order[i][k])
          for (std::size_t j = 0; j < m; ++j)
            if (g.order[k][j]) g.order[i][j] = true;
  }
  return g;
}

namespace {

struct HasseData {
  std::vector<std::vector<std::size_t>> up, down;
  std::vector<std::vector<bool>> cover;
  std::vector<std::array<std::size_t, 4>> invariant;
};

HasseData hasse(const ExchangeGraph& g) {
  const std::size_t m = g.nodes.size();
  HasseData h;
  h.up.resize(m);
  h.down.resize(m);
  h.cover.assign(m, std::vector<bool>(m, false));
  for (const auto& e : g.edges) {
    h.down[e.from].push_back(e.to);
    h.up[e.to].push_back(e.from);
    h.cover[e.from][e.to] = true;
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t above = 0, below = 0;
    for (std::size_t j = 0; j < m; ++j) {
      above += g.order[j][i];
      below += g.order[i][j];
    }
    h.invariant.push_back({h.up[i].size(), h.down[i].size(), above, below});
  }
  return h;
}

}  // namespace

std::optional<std::vector<std::size_t>> poset_isomorphism(const ExchangeGraph& g1, const ExchangeGraph& g2) {
  if (!g1.complete || !g2.complete) throw Incomplete("poset comparison needs completed explorations");
  const std::size_t m = g1.nodes.size();
  if (m != g2.nodes.size() || g1.edges.size() != g2.edges.size()) return std::nullopt;
  HasseData h1 = hasse(g1), h2 = hasse(g2);
  {
    auto a = h1.invariant, b = h2.invariant;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // breadth-first order from the top keeps assigned nodes adjacent
  std::vector<std::size_t> order;
  std::vector<bool> seen(m, false);
  for (std::size_t root = 0; root < m; ++root) {
    if (seen[root]) continue;
    std::deque<std::size_t> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (auto list : {&h1.down[u], &h1.up[u]})
        for (auto w : *list)
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
    }
  }
  std::vector<std::size_t> map(m, m);
  std::vector<bool> used(m, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == m) return true;
    const std::size_t u = order[depth];
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c] || h1.invariant[u] != h2.invariant[c]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t w = order[d];
        ok = h1.cover[u][w] == h2.cover[c][map[w]] && h1.cover[w][u] == h2.cover[map[w]][c];
      }
      if (!ok) continue;
      map[u] = c;
      used[c] = true;
      if (extend(depth + 1)) return true;
      used[c] = false;
      map[u] = m;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool poset_isomorphic(const ExchangeGraph& g1, const ExchangeGraph& g2) { return poset_isomorphism(g1, g2).has_value(); }

std::string to_dot(const ExchangeGraph& g, const std::string& name) {
  std::vector<std::size_t> sorted(g.nodes.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) sorted[i] = i;
  std::vector<GKey> keys;
  for (const auto& node : g.nodes) keys.push_back(node.key());
  std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> label(g.nodes.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) label[sorted[i]] = i;
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=TB;\n";
  for (std::size_t i = 0; i < sorted.size(); ++i)
    out << "  n" << i << " [label=\"" << key_to_string(keys[sorted[i]]) << "\"];\n";
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : g.edges) edges.emplace_back(label[e.from], label[e.to]);
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tensorbrick
