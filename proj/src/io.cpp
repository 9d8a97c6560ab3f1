#include "tensorbrick/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tensorbrick/catalog.hpp"
#include "tensorbrick/errors.hpp"

namespace tensorbrick {

namespace {

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> logical_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) lines.push_back({number, std::move(t)});
  }
  return lines;
}

std::size_t parse_count(const std::string& text, std::size_t line, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a nonnegative integer for " + what + ", got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParseError(line, what + " out of range");
  }
}

void check_identifier(const std::string& id, std::size_t line) {
  if (id.empty()) throw ParseError(line, "empty identifier");
  if (id.find('.') != std::string::npos) throw ParseError(line, "identifier '" + id + "' contains '.'");
}

struct RawTerm {
  Scalar coeff;
  Path path;
};

struct RawRelation {
  std::size_t line;
  std::vector<RawTerm> terms;
};

struct ZeroPaths {
  std::size_t line;
  std::size_t length;
  std::vector<std::string> arrows;
};

Path parse_path(const Quiver& q, const std::string& text, std::size_t line) {
  Path p;
  std::size_t start = 0;
  while (true) {
    const auto dot = text.find('.', start);
    const std::string id = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto a = q.find_arrow(id);
    if (!a) throw ParseError(line, "unknown arrow '" + id + "'");
    if (p.arrows.empty()) {
      p.source = q.arrow(*a).source;
    } else if (q.arrow(*a).source != p.target) {
      throw ParseError(line, "path '" + text + "' does not compose at '" + id + "'");
    }
    p.arrows.push_back(*a);
    p.target = q.arrow(*a).target;
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return p;
}

RawRelation parse_relation(const Quiver& q, const std::vector<std::string>& tokens, std::size_t line) {
  RawRelation rel{line, {}};
  std::size_t i = 0;
  Scalar sign(1);
  bool expect_term = true;
  while (i < tokens.size()) {
    if (!expect_term) {
      if (tokens[i] != "+" && tokens[i] != "-") throw ParseError(line, "expected '+' or '-', got '" + tokens[i] + "'");
      sign = tokens[i] == "-" ? Scalar(-1) : Scalar(1);
      ++i;
      expect_term = true;
      continue;
    }
    if (rel.terms.empty() && (tokens[i] == "-" || tokens[i] == "+")) {
      if (tokens[i] == "-") sign = -sign;
      ++i;
      continue;
    }
    Scalar coeff(1);
    if (i + 1 < tokens.size() && tokens[i + 1] == "*") {
      try {
        coeff = Scalar::parse(tokens[i]);
      } catch (const std::exception&) {
        throw ParseError(line, "bad coefficient '" + tokens[i] + "'");
      }
      i += 2;
      if (i >= tokens.size()) throw ParseError(line, "missing path after '*'");
    }
    rel.terms.push_back({sign * coeff, parse_path(q, tokens[i], line)});
    ++i;
    expect_term = false;
  }
  if (rel.terms.empty()) throw ParseError(line, "empty relation");
  if (expect_term) throw ParseError(line, "relation ends with an operator");
  for (const auto& t : rel.terms)
    if (t.path.source != rel.terms.front().path.source || t.path.target != rel.terms.front().path.target)
      throw ParseError(line, "relation terms are not parallel");
  return rel;
}

}  // namespace

AlgebraPtr parse_algebra(std::istream& in, const std::optional<Field>& field_override) {
  std::vector<Line> lines = logical_lines(in);
  Quiver q;
  std::optional<Field> field;
  std::optional<std::size_t> bound;
  std::size_t bound_line = 0;
  std::vector<RawRelation> relations;
  std::vector<ZeroPaths> zero_paths;
  std::size_t last_line = 0;
  for (const auto& [number, text] : lines) {
    last_line = number;
    auto words = split_words(text);
    const std::string& directive = words.front();
    if (directive == "field") {
      if (words.size() != 2) throw ParseError(number, "expected 'field Q' or 'field GF(p)'");
      if (field) throw ParseError(number, "field declared twice");
      try {
        field = Field::parse(words[1]);
      } catch (const std::exception& e) {
        throw ParseError(number, e.what());
      }
    } else if (directive == "vertex") {
      if (words.size() != 2) throw ParseError(number, "expected 'vertex <id>'");
      check_identifier(words[1], number);
      try {
        q.add_vertex(words[1]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(number, e.what());
      }
    } else if (directive == "arrow") {
      const std::string rest = trim(text.substr(5));
      std::size_t colon = std::string::npos;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == ':' && (i + 1 == rest.size() || rest[i + 1] == ' ' || rest[i + 1] == '\t')) {
          colon = i;
          break;
        }
      }
      if (colon == std::string::npos) throw ParseError(number, "expected 'arrow <id>: <source> -> <target>'");
      const std::string id = trim(rest.substr(0, colon));
      auto ends = split_words(rest.substr(colon + 1));
      if (ends.size() != 3 || ends[1] != "->") throw ParseError(number, "expected 'arrow <id>: <source> -> <target>'");
      check_identifier(id, number);
      auto s = q.find_vertex(ends[0]);
      auto t = q.find_vertex(ends[2]);
      if (!s) throw ParseError(number, "unknown vertex '" + ends[0] + "'");
      if (!t) throw ParseError(number, "unknown vertex '" + ends[2] + "'");
      try {
        q.add_arrow(id, *s, *t);
      } catch (const std::invalid_argument& e) {
        throw ParseError(number, e.what());
      }
    } else if (directive == "relation") {
      relations.push_back(parse_relation(q, {words.begin() + 1, words.end()}, number));
    } else if (directive == "zero-paths-of-length") {
      if (words.size() < 2 || (words.size() > 2 && words[2] != "over") || words.size() == 3)
        throw ParseError(number, "expected 'zero-paths-of-length <N> [over <arrow> ...]'");
      ZeroPaths z{number, parse_count(words[1], number, "path length"), {}};
      if (z.length == 0) throw ParseError(number, "path length must be positive");
      if (words.size() > 3) z.arrows.assign(words.begin() + 3, words.end());
      zero_paths.push_back(std::move(z));
    } else if (directive == "bound") {
      if (words.size() != 2) throw ParseError(number, "expected 'bound <N>'");
      if (bound) throw ParseError(number, "bound declared twice");
      bound = parse_count(words[1], number, "bound");
      bound_line = number;
    } else {
      throw ParseError(number, "unknown directive '" + directive + "'");
    }
  }
  if (!bound) throw ParseError(last_line + 1, "missing 'bound <N>'");
  if (*bound == 0) throw ParseError(bound_line, "bound must be positive");
  if (q.vertex_count() == 0) throw ParseError(last_line + 1, "no vertices declared");
  const Field f = field_override ? *field_override : field.value_or(Field::rationals());

  std::vector<Relation> rels;
  for (const auto& raw : relations) {
    Relation r;
    for (const auto& t : raw.terms) {
      try {
        r.terms.push_back({f.from_rational(t.coeff), t.path});
      } catch (const std::exception&) {
        throw ParseError(raw.line, "coefficient " + t.coeff.to_string() + " is undefined over " + f.name());
      }
    }
    rels.push_back(std::move(r));
  }
  for (const auto& z : zero_paths) {
    std::vector<std::size_t> allowed;
    for (const auto& id : z.arrows) {
      auto a = q.find_arrow(id);
      if (!a) throw ParseError(z.line, "unknown arrow '" + id + "'");
      allowed.push_back(*a);
    }
    auto more = zero_paths_of_length(q, z.length, z.arrows.empty() ? nullptr : &allowed);
    rels.insert(rels.end(), more.begin(), more.end());
  }
  try {
    return BoundAlgebra::build(std::move(q), std::move(rels), f, *bound);
  } catch (const std::invalid_argument& e) {
    throw ParseError(bound_line, e.what());
  }
}

AlgebraPtr parse_algebra_text(const std::string& text, const std::optional<Field>& field_override) {
  std::istringstream in(text);
  return parse_algebra(in, field_override);
}

AlgebraPtr read_algebra_file(const std::string& path, const std::optional<Field>& field_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return parse_algebra(in, field_override);
  } catch (const ParseError& e) {
    throw ParseError(path, e.line(), e.detail());
  }
}

std::string serialize_algebra(const BoundAlgebra& a) {
  const Quiver& q = a.quiver();
  std::ostringstream out;
  out << "field " << a.field().name() << "\n";
  for (const auto& v : q.vertices()) out << "vertex " << v << "\n";
  for (const auto& arrow : q.arrows())
    out << "arrow " << arrow.id << ": " << q.vertex_id(arrow.source) << " -> " << q.vertex_id(arrow.target) << "\n";
  for (const auto& rel : a.relations()) {
    out << "relation";
    bool first = true;
    for (const auto& t : rel.terms) {
      Scalar c = t.coeff;
      const bool negative = c < Scalar(0);
      if (negative) c = -c;
      if (negative)
        out << " -";
      else if (!first)
        out << " +";
      if (c != Scalar(1)) out << " " << c.to_string() << " *";
      out << " " << path_to_string(q, t.path);
      first = false;
    }
    out << "\n";
  }
  out << "bound " << a.bound() << "\n";
  return out.str();
}

Representation parse_representation(std::istream& in, const AlgebraPtr& algebra) {
  const Quiver& q = algebra->quiver();
  const Field& f = algebra->field();
  std::vector<Line> lines = logical_lines(in);
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  std::vector<std::optional<Matrix>> maps(q.arrow_count());
  bool maps_started = false;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& [number, text] = lines[k];
    auto words = split_words(text);
    if (words.front() == "field") {
      if (words.size() != 2) throw ParseError(number, "expected 'field Q' or 'field GF(p)'");
      Field declared;
      try {
        declared = Field::parse(words[1]);
      } catch (const std::exception& e) {
        throw ParseError(number, e.what());
      }
      if (declared != f) throw FieldMismatch("representation over " + declared.name() + ", algebra over " + f.name());
    } else if (words.front() == "dim") {
      if (words.size() != 3) throw ParseError(number, "expected 'dim <vertex> <n>'");
      if (maps_started) throw ParseError(number, "dimensions must precede maps");
      auto v = q.find_vertex(words[1]);
      if (!v) throw ParseError(number, "unknown vertex '" + words[1] + "'");
      dims[*v] = parse_count(words[2], number, "dimension");
    } else if (words.front() == "map") {
      maps_started = true;
      if (words.size() != 4) throw ParseError(number, "expected 'map <arrow> <rows> <cols>'");
      auto a = q.find_arrow(words[1]);
      if (!a) throw ParseError(number, "unknown arrow '" + words[1] + "'");
      if (maps[*a]) throw ParseError(number, "map for '" + words[1] + "' given twice");
      const std::size_t rows = parse_count(words[2], number, "rows");
      const std::size_t cols = parse_count(words[3], number, "cols");
      if (rows != dims[q.arrow(*a).target] || cols != dims[q.arrow(*a).source])
        throw ParseError(number, "map '" + words[1] + "' must be " + std::to_string(dims[q.arrow(*a).target]) + " x " +
                                     std::to_string(dims[q.arrow(*a).source]));
      Matrix m(f, rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        if (++k >= lines.size()) throw ParseError(number, "missing matrix rows for '" + words[1] + "'");
        auto entries = split_words(lines[k].text);
        if (entries.size() != cols)
          throw ParseError(lines[k].number, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
          try {
            m.set(r, c, f.parse_element(entries[c]));
          } catch (const std::exception&) {
            throw ParseError(lines[k].number, "bad entry '" + entries[c] + "'");
          }
        }
      }
      maps[*a] = std::move(m);
    } else {
      throw ParseError(number, "unknown directive '" + words.front() + "'");
    }
  }
  std::vector<Matrix> out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    out.push_back(maps[a] ? *maps[a] : Matrix(f, dims[q.arrow(a).target], dims[q.arrow(a).source]));
  return Representation(algebra, dims, std::move(out));
}

Representation parse_representation_text(const std::string& text, const AlgebraPtr& algebra) {
  std::istringstream in(text);
  return parse_representation(in, algebra);
}

std::string serialize_representation(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::ostringstream out;
  out << "field " << m.field().name() << "\n";
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out << "dim " << q.vertex_id(v) << " " << m.dim(v) << "\n";
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Matrix& x = m.map(a);
    if (x.empty()) continue;
    out << "map " << q.arrow(a).id << " " << x.rows() << " " << x.cols() << "\n";
    for (std::size_t r = 0; r < x.rows(); ++r) {
      for (std::size_t c = 0; c < x.cols(); ++c) out << (c ? " " : "") << x(r, c).to_string();
      out << "\n";
    }
  }
  return out.str();
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << contents;
    if (!out.flush()) throw std::runtime_error("cannot write '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move '" + tmp + "' to '" + path + "'");
  }
}

}  // namespace tensorbrick
