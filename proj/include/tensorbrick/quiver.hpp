#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tensorbrick {

struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
 public:
  std::size_t add_vertex(const std::string& id);
  std::size_t add_arrow(const std::string& id, std::size_t source, std::size_t target);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_arrow(const std::string& id) const;

  const std::vector<std::size_t>& outgoing(std::size_t v) const { return out_.at(v); }
  const std::vector<std::size_t>& incoming(std::size_t v) const { return in_.at(v); }
  bool is_loop(std::size_t a) const { return arrows_.at(a).source == arrows_.at(a).target; }

  // Same vertices, every arrow reversed; ids and indices are preserved.
  Quiver opposite() const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// Arrows compose left to right: a.b means "first a, then b".
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }
  auto operator<=>(const Path&) const = default;
};

Path trivial_path(std::size_t vertex);
Path arrow_path(const Quiver& q, std::size_t arrow);
// Throws when the paths do not compose.
Path concat(const Path& a, const Path& b);
bool is_valid_path(const Quiver& q, const Path& p);
// Reversed arrow sequence; a path of q becomes a path of q.opposite().
Path reversed(const Path& p);
// "a.b.c"; trivial paths print as "e:<vertex>".
std::string path_to_string(const Quiver& q, const Path& p);

bool has_multiple_arrow(const Quiver& q);
bool is_connected(const Quiver& q);

}  // namespace tensorbrick
