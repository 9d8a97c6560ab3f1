#include "tensorbrick/brickfamily.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tensorbrick/endomorphism.hpp"
#include "tensorbrick/errors.hpp"
#include "tensorbrick/projective.hpp"

namespace tensorbrick {

namespace {

std::size_t wrap(long i, std::size_t n) {
  long r = (i - 1) % long(n);
  if (r < 0) r += long(n);
  return std::size_t(r);
}

SubspaceFamily zero_family(const Representation& m) {
  SubspaceFamily s;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) s.bases.emplace_back(m.field(), m.dim(v), 0);
  return s;
}

std::size_t family_dimension(const SubspaceFamily& s) {
  std::size_t d = 0;
  for (const auto& b : s.bases) d += b.cols();
  return d;
}

Vector lift(const SubspaceFamily& w, std::size_t v, const Vector& y) {
  return matvec(complement_columns(w.bases[v]), y);
}

// Nonzero y in rad(Q)_t with y * rad(e_t A e_t) = 0; its cyclic submodule meets Q_t in k y.
std::optional<Vector> radical_kernel_vector(const Representation& q, std::size_t t) {
  const BoundAlgebra& alg = *q.algebra();
  Matrix rad = radical_family(q).bases[t];
  if (rad.cols() == 0) return std::nullopt;
  std::vector<Matrix> blocks;
  for (std::size_t idx : alg.basis_between(t, t)) {
    if (alg.basis()[idx].is_trivial()) continue;
    blocks.push_back(q.evaluate(alg.basis()[idx]) * rad);
  }
  Matrix stacked = vstack(blocks, q.field(), rad.cols());
  auto ker = kernel_basis(stacked);
  if (ker.empty()) return std::nullopt;
  return matvec(rad, ker.front());
}

struct Search {
  const Representation& p;
  std::size_t target;

  std::size_t remaining(const SubspaceFamily& w) const { return p.dim(target) - w.bases[target].cols(); }
  SubspaceFamily add(const SubspaceFamily& w, std::size_t v, const Vector& x) const {
    return sum(p, w, generated_subfamily(p, {{v, x}}));
  }
};

}  // namespace

QuotientChoice minimal_quotient_U(const AlgebraPtr& b, const Cycle& cycle_b, std::size_t target_position,
                                  std::size_t exhaustive_limit) {
  const BoundAlgebra& alg = *b;
  const std::size_t m = cycle_b.length();
  const std::size_t head = cycle_b.vertices.front();
  const std::size_t t = cycle_b.vertices[wrap(long(target_position), m)];
  Representation p = projective_rep(b, head);
  if (p.dim(t) == 0)
    throw NotFound("no quotient of P(" + alg.quiver().vertex_id(head) + ") has " + alg.quiver().vertex_id(t) +
                   " as a composition factor");
  Search search{p, t};

  // Radical basis paths, longest first.
  std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (vertex, local index)
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    const auto& block = alg.basis_between(head, v);
    for (std::size_t k = 0; k < block.size(); ++k)
      if (!alg.basis()[block[k]].is_trivial()) candidates.emplace_back(v, k);
  }
  auto path_length = [&](const std::pair<std::size_t, std::size_t>& c) {
    return alg.basis()[alg.basis_between(head, c.first)[c.second]].length();
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const auto& x, const auto& y) { return path_length(x) > path_length(y); });
  auto unit = [&](const std::pair<std::size_t, std::size_t>& c) {
    Vector x(p.dim(c.first));
    x[c.second] = Scalar(1);
    return x;
  };
  std::vector<SubspaceFamily> cyclic;
  for (const auto& c : candidates) cyclic.push_back(generated_subfamily(p, {{c.first, unit(c)}}));

  QuotientChoice choice;
  choice.top_vertex = head;
  choice.socle_vertex = t;
  SubspaceFamily w = zero_family(p);

  if (p.total_dimension() <= exhaustive_limit) {
    const std::size_t k = candidates.size();
    std::optional<SubspaceFamily> best;
    std::size_t best_dim = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
      SubspaceFamily s = zero_family(p);
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) s = sum(p, s, cyclic[i]);
      if (search.remaining(s) != 1) continue;
      const std::size_t d = family_dimension(s);
      if (!best || d > best_dim) {
        best = s;
        best_dim = d;
      }
    }
    if (best) {
      w = *best;
      choice.minimality_certified = true;
      choice.minimality_note = "minimal among quotients by path-generated submodules (exhaustive over " +
                               std::to_string(k) + " radical paths)";
    }
  }
  if (!choice.minimality_certified) choice.minimality_note = "greedy, minimality uncertified";

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      SubspaceFamily next = sum(p, w, cyclic[i]);
      if (family_dimension(next) == family_dimension(w) || search.remaining(next) == 0) continue;
      w = std::move(next);
      changed = true;
    }
    Representation q = quotient(p, w).module;
    if (search.remaining(w) > 1) {
      auto y = radical_kernel_vector(q, t);
      if (!y) throw std::logic_error("minimal_quotient_U: nilpotent action without kernel");
      w = search.add(w, t, lift(w, t, *y));
      changed = true;
      continue;
    }
    SubspaceFamily soc = socle_family(q);
    for (std::size_t v = 0; v < q.vertex_count() && !changed; ++v) {
      if (v == t || soc.bases[v].cols() == 0) continue;
      w = search.add(w, v, lift(w, v, soc.bases[v].column(0)));
      changed = true;
    }
  }
  choice.module = quotient(p, w).module;
  const Representation& u = choice.module;
  std::vector<std::size_t> expected_soc(u.vertex_count()), expected_top(u.vertex_count());
  expected_soc[t] = 1;
  expected_top[head] = 1;
  if (u.dim(t) != 1 || socle_family(u).dims() != expected_soc || top(u).module.dims() != expected_top)
    throw std::logic_error("minimal_quotient_U: postcondition failed");
  return choice;
}

FamilySpec make_family_spec(const AlgebraPtr& a, const AlgebraPtr& b) {
  auto ca = find_minimal_nonzero_cycle(*a);
  if (!ca) throw NoCycle("left factor has no nonzero non-loop cycle");
  auto cb = find_minimal_nonzero_cycle(*b);
  if (!cb) throw NoCycle("right factor has no nonzero non-loop cycle");
  FamilySpec spec;
  AlgebraPtr left = a, right = b;
  if (ca->length() > cb->length()) {
    std::swap(left, right);
    std::swap(ca, cb);
    spec.swapped = true;
  }
  spec.tensor = std::make_shared<const TensorProduct>(tensor_product_algebra(left, right));
  spec.cycle_a = *ca;
  spec.cycle_b = *cb;
  spec.n = ca->length();
  spec.m = cb->length();
  spec.u = minimal_quotient_U(right, spec.cycle_b, spec.m - spec.n + 2);
  spec.l = spec.u.module.dim(spec.cycle_b.vertices.front());
  return spec;
}

std::size_t cycle_vertex(const FamilySpec& spec, long i, long j) {
  return spec.tensor->vertex(spec.cycle_a.vertices[wrap(i, spec.n)], spec.cycle_b.vertices[wrap(j, spec.m)]);
}

Representation build_family_member(const FamilySpec& spec, const Scalar& lambda) {
  const TensorProduct& tp = *spec.tensor;
  const AlgebraPtr& alg = tp.algebra();
  const Field& f = alg->field();
  const Quiver& q = alg->quiver();
  const Representation& u = spec.u.module;
  const std::size_t nb = tp.right()->vertex_count();
  const long n = long(spec.n), m = long(spec.m);
  const std::size_t row = spec.cycle_a.vertices.front();

  std::vector<std::size_t> dims(q.vertex_count());
  for (std::size_t b = 0; b < nb; ++b) dims[tp.vertex(row, b)] = u.dim(b);
  for (long i = 0; i <= n - 2; ++i) {
    dims[cycle_vertex(spec, n - i, m - n + 2 + i)] = 1;
    dims[cycle_vertex(spec, n - i, m - n + 3 + i)] = 1;
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    maps.emplace_back(f, dims[q.arrow(a).target], dims[q.arrow(a).source]);
  for (std::size_t beta = 0; beta < tp.right()->quiver().arrow_count(); ++beta)
    maps[tp.vertical_arrow(row, beta)] = u.map(beta);
  auto alpha = [&](long i) { return spec.cycle_a.arrows[wrap(i, spec.n)]; };
  auto beta = [&](long j) { return spec.cycle_b.arrows[wrap(j, spec.m)]; };
  auto a_vertex = [&](long i) { return spec.cycle_a.vertices[wrap(i, spec.n)]; };
  auto b_vertex = [&](long j) { return spec.cycle_b.vertices[wrap(j, spec.m)]; };
  for (long i = 0; i <= n - 2; ++i) {
    const std::size_t h = tp.horizontal_arrow(alpha(n - i), b_vertex(m - n + 2 + i));
    const std::size_t v = tp.vertical_arrow(a_vertex(n - i), beta(m - n + 2 + i));
    for (std::size_t arrow : {h, v}) {
      Matrix id(f, dims[q.arrow(arrow).target], dims[q.arrow(arrow).source]);
      id.set(0, 0, f.one());
      maps[arrow] = id;
    }
  }
  Matrix& first = maps[tp.horizontal_arrow(alpha(1), b_vertex(1))];
  first.set(0, 0, f.from_rational(lambda));
  Representation rep(alg, std::move(dims), std::move(maps));
  if (!check_relations(rep)) throw RelationViolation("family member violates a relation");
  return rep;
}

std::vector<std::size_t> expected_socle(const FamilySpec& spec) {
  std::vector<std::size_t> dims(spec.tensor->algebra()->vertex_count());
  const long n = long(spec.n), m = long(spec.m);
  for (long i = -1; i <= n - 2; ++i) ++dims[cycle_vertex(spec, n - i, m - n + 3 + i)];
  return dims;
}

std::vector<Scalar> default_lambdas(const Field& field) {
  std::size_t count = 3;
  if (!field.is_rational()) count = std::min<std::size_t>(3, field.characteristic() - 1);
  std::vector<Scalar> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(field.from_int(std::int64_t(i)));
  return out;
}

std::string to_string(Verdict v) {
  return v == Verdict::TauTiltingInfinite ? "tau-tilting infinite" : "inconclusive";
}

Certificate verify_family(const FamilySpec& spec, const std::vector<Scalar>& lambdas, std::uint64_t seed) {
  const Field& f = spec.tensor->algebra()->field();
  if (lambdas.size() < 2) throw PreconditionError("at least two lambda values are needed");
  std::set<Scalar> seen;
  for (const auto& raw : lambdas) {
    Scalar l = f.from_rational(raw);
    if (l.is_zero()) throw PreconditionError("lambda values must be nonzero");
    if (!seen.insert(l).second) throw PreconditionError("lambda values must be distinct");
  }

  Certificate cert;
  cert.evidence = "bricks";
  cert.spec = spec;
  auto fail = [&](const std::string& what) {
    if (!cert.failure) cert.failure = what;
  };
  std::vector<Representation> members;
  for (const auto& raw : lambdas) {
    BrickCheck check;
    check.lambda = f.from_rational(raw);
    const std::string tag = "lambda=" + check.lambda.to_string();
    Representation mem;
    try {
      mem = build_family_member(spec, check.lambda);
      check.relations = true;
    } catch (const RelationViolation&) {
      cert.log.push_back(tag + ": relations violated");
      fail("relations violated for " + tag);
      cert.bricks.push_back(check);
      members.emplace_back();
      continue;
    }
    check.dims = mem.dims();
    Indecomposability ind = analyze_indecomposability(mem, seed);
    check.indecomposable = ind.indecomposable;
    check.field_extension = ind.field_extension;
    check.end_dimension = ind.end_dimension;
    check.socle_criterion = check.indecomposable && brick_criterion_socle(mem);
    check.brick = is_brick(mem);
    check.socle_matches = socle_family(mem).dims() == expected_socle(spec);
    std::string line = tag + ": dim " + std::to_string(mem.total_dimension()) + ", relations ok";
    line += check.indecomposable ? ", indecomposable" : ", not indecomposable";
    line += check.socle_criterion ? ", socle criterion ok" : ", socle criterion failed";
    line += check.brick ? ", brick" : ", not a brick";
    line += " (dim End " + std::to_string(check.end_dimension) + ")";
    line += check.socle_matches ? ", socle as predicted" : ", socle differs from prediction";
    cert.log.push_back(line);
    if (!check.indecomposable) fail("indecomposability failed for " + tag);
    if (!check.socle_criterion) fail("socle criterion failed for " + tag);
    if (!check.brick) fail("brick test failed for " + tag);
    if (!check.socle_matches) fail("socle prediction failed for " + tag);
    cert.bricks.push_back(check);
    members.push_back(std::move(mem));
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!cert.bricks[i].relations || !cert.bricks[j].relations) continue;
      const std::string tag =
          "lambda=" + cert.bricks[i].lambda.to_string() + " vs lambda=" + cert.bricks[j].lambda.to_string();
      try {
        if (is_isomorphic(members[i], members[j], seed)) {
          cert.log.push_back(tag + ": isomorphic");
          fail("members isomorphic: " + tag);
        } else {
          cert.log.push_back(tag + ": non-isomorphic");
          cert.non_isomorphic_pairs.emplace_back(i, j);
        }
      } catch (const Undecided&) {
        cert.log.push_back(tag + ": isomorphism undecided");
        fail("isomorphism undecided: " + tag);
      }
    }
  }
  if (!cert.failure) cert.verdict = Verdict::TauTiltingInfinite;
  if (!f.is_rational()) {
    const std::uint32_t p = f.characteristic();
    cert.note = "infinite over any infinite field extension; " + std::to_string(p - 1) +
                " distinct bricks exist over " + f.name() + ", " + std::to_string(lambdas.size()) + " exhibited";
  }
  return cert;
}

namespace {

std::optional<std::string> multiple_arrow_witness(const Quiver& q, const std::string& side) {
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    if (q.is_loop(i)) continue;
    for (std::size_t j = i + 1; j < q.arrow_count(); ++j) {
      const Arrow& x = q.arrow(i);
      const Arrow& y = q.arrow(j);
      if (x.source == y.source && x.target == y.target)
        return side + " factor arrows " + x.id + ", " + y.id + ": " + q.vertex_id(x.source) + " -> " +
               q.vertex_id(x.target);
    }
  }
  return std::nullopt;
}

}  // namespace

Certificate certify_tensor(const AlgebraPtr& a, const AlgebraPtr& b, const std::vector<Scalar>& lambdas,
                           std::uint64_t seed) {
  if (a->field() != b->field())
    throw FieldMismatch("factors over " + a->field().name() + " and " + b->field().name());
  std::vector<std::string> warnings;
  const std::pair<const AlgebraPtr*, std::string> sides[] = {{&a, "left"}, {&b, "right"}};
  for (const auto& [alg, side] : sides) {
    const BoundAlgebra& x = **alg;
    if (!is_connected(x.quiver())) warnings.push_back("hypothesis violated: " + side + " factor is not connected");
    if (is_local(x)) warnings.push_back("hypothesis violated: local factor (" + side + ")");
    SymmetryResult sym = is_symmetric(x, seed);
    if (sym.decision == Decision::No)
      warnings.push_back("hypothesis violated: " + side + " factor is not symmetric");
    else if (sym.decision == Decision::Undecided)
      warnings.push_back("symmetry of " + side + " factor undecided");
  }
  auto finish = [&](Certificate cert) {
    cert.warnings = warnings;
    cert.algebra = "A (x) B with " + std::to_string(a->vertex_count() * b->vertex_count()) + " vertices, dimension " +
                   std::to_string(a->dimension() * b->dimension());
    return cert;
  };
  for (const auto& [alg, side] : sides) {
    if (auto w = multiple_arrow_witness((*alg)->quiver(), side)) {
      Certificate cert;
      cert.verdict = Verdict::TauTiltingInfinite;
      cert.evidence = "multiple-arrow";
      cert.multiple_arrow = *w;
      cert.log.push_back("multiple arrow: " + *w);
      return finish(std::move(cert));
    }
  }
  FamilySpec spec;
  try {
    spec = make_family_spec(a, b);
  } catch (const NoCycle& e) {
    Certificate cert;
    cert.evidence = "none";
    cert.failure = std::string("NoCycle: ") + e.what();
    cert.log.push_back(*cert.failure);
    return finish(std::move(cert));
  } catch (const NotFound& e) {
    Certificate cert;
    cert.evidence = "none";
    cert.failure = std::string("NotFound: ") + e.what();
    cert.log.push_back(*cert.failure);
    return finish(std::move(cert));
  }
  std::vector<std::string> prefix;
  prefix.push_back("cycle lengths n=" + std::to_string(spec.n) + ", m=" + std::to_string(spec.m) +
                   (spec.swapped ? " (factors swapped)" : ""));
  prefix.push_back("U: dim " + std::to_string(spec.u.module.total_dimension()) + ", l=" + std::to_string(spec.l) +
                   ", " + spec.u.minimality_note);
  Certificate cert;
  try {
    cert = verify_family(spec, lambdas.empty() ? default_lambdas(a->field()) : lambdas, seed);
  } catch (const PreconditionError& e) {
    cert.evidence = "none";
    cert.spec = spec;
    cert.failure = std::string("PreconditionError: ") + e.what();
    cert.log.push_back(*cert.failure);
  }
  cert.log.insert(cert.log.begin(), prefix.begin(), prefix.end());
  return finish(std::move(cert));
}

}  // namespace tensorbrick
