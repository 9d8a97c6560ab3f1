#include "tensorbrick/quiver.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace tensorbrick {

std::size_t Quiver::add_vertex(const std::string& id) {
  if (vertex_index_.count(id)) throw std::invalid_argument("duplicate vertex '" + id + "'");
  vertex_index_[id] = vertices_.size();
  vertices_.push_back(id);
  out_.emplace_back();
  in_.emplace_back();
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& id, std::size_t source, std::size_t target) {
  if (arrow_index_.count(id)) throw std::invalid_argument("duplicate arrow '" + id + "'");
  if (source >= vertices_.size() || target >= vertices_.size())
    throw std::invalid_argument("arrow '" + id + "' has an undeclared endpoint");
  const std::size_t a = arrows_.size();
  arrow_index_[id] = a;
  arrows_.push_back({id, source, target});
  out_[source].push_back(a);
  in_[target].push_back(a);
  return a;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

Quiver Quiver::opposite() const {
  Quiver q;
  for (const auto& v : vertices_) q.add_vertex(v);
  for (const auto& a : arrows_) q.add_arrow(a.id, a.target, a.source);
  return q;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow& x = a.arrows_[i];
    const Arrow& y = b.arrows_[i];
    if (x.id != y.id || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Path trivial_path(std::size_t vertex) { return Path{vertex, vertex, {}}; }

Path arrow_path(const Quiver& q, std::size_t arrow) {
  const Arrow& a = q.arrow(arrow);
  return Path{a.source, a.target, {arrow}};
}

Path concat(const Path& a, const Path& b) {
  if (a.target != b.source) throw std::invalid_argument("concat: paths do not compose");
  Path p{a.source, b.target, a.arrows};
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

bool is_valid_path(const Quiver& q, const Path& p) {
  if (p.source >= q.vertex_count() || p.target >= q.vertex_count()) return false;
  std::size_t at = p.source;
  for (std::size_t a : p.arrows) {
    if (a >= q.arrow_count() || q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return at == p.target;
}

Path reversed(const Path& p) {
  Path r{p.target, p.source, {p.arrows.rbegin(), p.arrows.rend()}};
  return r;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e:" + q.vertex_id(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrow(p.arrows[i]).id;
  }
  return s;
}

bool has_multiple_arrow(const Quiver& q) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) continue;
    if (!seen.insert({a.source, a.target}).second) return true;
  }
  return false;
}

bool is_connected(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& a : q.arrows()) {
    auto x = find(a.source), y = find(a.target);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components == 1;
}

}  // namespace tensorbrick
