#include "tensorbrick/endomorphism.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "tensorbrick/errors.hpp"
#include "tensorbrick/linalg.hpp"

namespace tensorbrick {
namespace {

using Wide = __int128;

std::vector<std::vector<Wide>> lift_mod(const Matrix& m) {
  std::vector<std::vector<Wide>> out(m.rows(), std::vector<Wide>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).small_numerator();
  return out;
}

std::vector<std::vector<Wide>> mul_mod(const std::vector<std::vector<Wide>>& a, const std::vector<std::vector<Wide>>& b,
                                       Wide modulus) {
  const std::size_t n = a.size();
  std::vector<std::vector<Wide>> c(n, std::vector<Wide>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % modulus;
    }
  return c;
}

// Tr(lift(y)^(p^i)) / p^i mod p.
Scalar trace_functional(const Field& f, const Matrix& y, std::size_t level) {
  if (level == 0 || f.is_rational()) return trace(y);
  const Wide p = f.characteristic();
  Wide pi = 1;
  for (std::size_t k = 0; k < level; ++k) pi *= p;
  const Wide modulus = pi * p;
  auto base = lift_mod(y);
  const std::size_t n = base.size();
  std::vector<std::vector<Wide>> acc(n, std::vector<Wide>(n, 0));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = 1;
  for (Wide e = pi; e > 0; e >>= 1) {
    if (e & 1) acc = mul_mod(acc, base, modulus);
    if (e > 1) base = mul_mod(base, base, modulus);
  }
  Wide tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr = (tr + acc[i][i]) % modulus;
  if (tr % pi != 0) throw std::logic_error("trace functional is not divisible at this level");
  return Scalar(static_cast<std::int64_t>(tr / pi));
}

std::vector<Vector> jacobson_radical(const Field& f, std::size_t d, const std::vector<Matrix>& actions,
                                     std::size_t module_dim, const std::function<Matrix(const Vector&)>& action) {
  std::vector<Vector> current;
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(d);
    e[i] = Scalar(1);
    current.push_back(std::move(e));
  }
  std::size_t levels = 0;
  if (!f.is_rational()) {
    std::uint64_t pw = f.characteristic();
    while (pw <= module_dim) {
      ++levels;
      pw *= f.characteristic();
    }
  }
  for (std::size_t level = 0; level <= levels && !current.empty(); ++level) {
    Matrix g(f, d, current.size());
    for (std::size_t s = 0; s < current.size(); ++s) {
      Matrix u = action(current[s]);
      for (std::size_t j = 0; j < d; ++j) g(j, s) = trace_functional(f, u * actions[j], level);
    }
    std::vector<Vector> next;
    for (const auto& c : kernel_basis(g)) {
      Vector v(d);
      for (std::size_t s = 0; s < current.size(); ++s) {
        if (c[s].is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k) v[k] = f.add(v[k], f.mul(c[s], current[s][k]));
      }
      next.push_back(std::move(v));
    }
    current = std::move(next);
  }
  return current;
}

// Eigenvalues of m lying in the ground field (possibly incomplete for large p or huge entries).
std::vector<Scalar> field_eigenvalues(const Matrix& m) {
  const Field& f = m.field();
  std::vector<Scalar> roots;
  if (m.rows() == 0) return roots;
  if (!f.is_rational()) {
    if (f.characteristic() > 5000) return roots;
    auto poly = characteristic_polynomial(m);
    for (std::uint32_t c = 0; c < f.characteristic(); ++c)
      if (evaluate_polynomial(f, poly, Scalar(std::int64_t(c))).is_zero()) roots.push_back(Scalar(std::int64_t(c)));
    return roots;
  }
  mpz_class denom = 1;
  for (const auto& x : m.entries()) {
    mpz_class dd = x.to_mpq().get_den();
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), dd.get_mpz_t());
  }
  const Scalar d = Scalar::from_mpq(mpq_class(denom));
  Matrix scaled_m = scaled(m, d);
  auto poly = characteristic_polynomial(scaled_m);
  std::size_t low = 0;
  while (low < poly.size() && poly[low].is_zero()) ++low;
  if (low > 0) roots.push_back(Scalar(0));
  // integer roots divide the lowest nonzero coefficient
  mpz_class c0 = poly[low].to_mpq().get_num();
  mpz_class bound = 0;
  for (std::size_t i = 0; i < scaled_m.rows(); ++i) {
    mpz_class row = 0;
    for (std::size_t j = 0; j < scaled_m.cols(); ++j) row += abs(scaled_m(i, j).to_mpq().get_num());
    if (row > bound) bound = row;
  }
  const long limit = bound.fits_slong_p() ? std::min<long>(bound.get_si(), 4096) : 4096;
  for (long r = 1; r <= limit; ++r) {
    if (!mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(r))) continue;
    for (long s : {r, -r}) {
      if (evaluate_polynomial(f, poly, Scalar(std::int64_t(s))).is_zero()) roots.push_back(Scalar(std::int64_t(s)) / d);
    }
  }
  return roots;
}

struct Split {
  SubspaceFamily image;
  SubspaceFamily kernel;
};

std::optional<Split> fitting_split(const Representation& m, const Morphism& x) {
  const std::size_t n = m.total_dimension();
  Morphism y;
  std::size_t r = 0;
  for (const auto& c : x.components) {
    y.components.push_back(power(c, n));
    r += rank(y.components.back());
  }
  if (r == 0 || r == n) return std::nullopt;
  return Split{image(m, m, y), kernel(m, m, y)};
}

std::optional<Split> split_with(const Representation& m, const Morphism& x) {
  if (auto s = fitting_split(m, x)) return s;
  const Field& f = m.field();
  std::vector<Scalar> tried;
  for (const auto& c : x.components) {
    for (const auto& lambda : field_eigenvalues(c)) {
      if (std::find(tried.begin(), tried.end(), lambda) != tried.end()) continue;
      tried.push_back(lambda);
      Morphism shifted;
      for (const auto& comp : x.components)
        shifted.components.push_back(comp - scaled(Matrix::identity(f, comp.rows()), lambda));
      if (auto s = fitting_split(m, shifted)) return s;
    }
  }
  return std::nullopt;
}

std::optional<Split> find_split(const EndomorphismAlgebra& end, std::uint64_t seed) {
  const Representation& m = end.module();
  const HomSpace& space = end.space();
  const std::size_t d = space.dimension();
  const Field& f = m.field();
  for (std::size_t i = 0; i < d; ++i)
    if (auto s = split_with(m, space.basis()[i])) return s;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      if (auto s = split_with(m, add(space.basis()[i], space.basis()[j]))) return s;
      if (auto s = split_with(m, add(space.basis()[i], scale(space.basis()[j], f.neg(Scalar(1)))))) return s;
    }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 32; ++trial) {
    Vector c(d);
    for (auto& x : c) x = f.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
    if (auto s = split_with(m, space.combination(c))) return s;
  }
  return std::nullopt;
}

}  // namespace

EndomorphismAlgebra::EndomorphismAlgebra(const Representation& m) : module_(m), space_(m, m) {
  const Field& f = m.field();
  const std::size_t d = space_.dimension();
  for (const auto& b : space_.basis()) actions_.push_back(total_matrix(f, b));
  products_.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products_.push_back(space_.coordinates(compose(space_.basis()[i], space_.basis()[j])));
  radical_ = jacobson_radical(f, d, actions_, m.total_dimension(), [this](const Vector& c) { return action(c); });
}

Matrix EndomorphismAlgebra::action(const Vector& coeffs) const {
  const Field& f = module_.field();
  const std::size_t n = module_.total_dimension();
  Matrix out(f, n, n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out = out + scaled(actions_[k], coeffs[k]);
  }
  return out;
}

Indecomposability analyze_indecomposability(const Representation& m, std::uint64_t seed) {
  if (m.is_zero()) throw std::invalid_argument("the zero module is not indecomposable");
  EndomorphismAlgebra end(m);
  Indecomposability out;
  out.end_dimension = end.dimension();
  out.radical_dimension = end.radical().size();
  if (out.top_dimension() == 1) {
    out.indecomposable = true;
    return out;
  }
  if (find_split(end, seed)) return out;
  out.field_extension = true;
  return out;
}

bool is_indecomposable(const Representation& m, std::uint64_t seed) {
  return analyze_indecomposability(m, seed).indecomposable;
}

namespace {

void decompose_into(const Representation& m, std::uint64_t seed, Decomposition& out) {
  EndomorphismAlgebra end(m);
  if (end.dimension() - end.radical().size() == 1) {
    out.summands.push_back(m);
    return;
  }
  auto split = find_split(end, seed);
  if (!split) {
    out.field_extension = true;
    out.summands.push_back(m);
    return;
  }
  decompose_into(restrict_to(m, split->image).module, seed, out);
  decompose_into(restrict_to(m, split->kernel).module, seed, out);
}

}  // namespace

Decomposition decompose(const Representation& m, std::uint64_t seed) {
  Decomposition out;
  if (m.is_zero()) return out;
  decompose_into(m, seed, out);
  std::stable_sort(out.summands.begin(), out.summands.end(),
                   [](const Representation& a, const Representation& b) { return a.dims() < b.dims(); });
  return out;
}

bool is_brick(const Representation& m) {
  if (m.is_zero()) return false;
  return hom_dimension(m, m) == 1;
}

bool brick_criterion_socle(const Representation& m) {
  auto info = analyze_indecomposability(m);
  if (!info.indecomposable) throw NotIndecomposable("the socle criterion needs an indecomposable module");
  const auto soc = socle_family(m).dims();
  for (std::size_t v = 0; v < soc.size(); ++v) {
    if (soc[v] > 1) return false;
    if (soc[v] == 1 && m.dim(v) - soc[v] > 0) return false;
  }
  return true;
}

bool indecomposables_isomorphic(const Representation& x, const Representation& y) {
  if (x.dims() != y.dims()) return false;
  auto there = hom_basis(x, y);
  if (there.empty()) return false;
  auto back = hom_basis(y, x);
  const Field& f = x.field();
  for (const auto& g : back)
    for (const auto& h : there) {
      if (!is_nilpotent(total_matrix(f, compose(g, h)))) return true;
    }
  return false;
}

bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed, std::size_t sample_budget) {
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  auto dm = decompose(m, seed);
  auto dn = decompose(n, seed);
  if (!dm.field_extension && !dn.field_extension) {
    if (dm.summands.size() != dn.summands.size()) return false;
    std::vector<bool> used(dn.summands.size(), false);
    for (const auto& x : dm.summands) {
      bool matched = false;
      for (std::size_t j = 0; j < dn.summands.size() && !matched; ++j) {
        if (used[j] || !indecomposables_isomorphic(x, dn.summands[j])) continue;
        used[j] = true;
        matched = true;
      }
      if (!matched) return false;
    }
    return true;
  }
  HomSpace space(m, n);
  if (space.dimension() == 0) return false;
  const Field& f = m.field();
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < sample_budget; ++s) {
    Vector c(space.dimension());
    for (auto& x : c) x = f.from_int(static_cast<std::int64_t>(rng() % 2001) - 1000);
    if (!determinant(total_matrix(f, space.combination(c))).is_zero()) return true;
  }
  throw Undecided("no isomorphism found within the sample budget");
}

bool in_fac(const Representation& m, const Representation& n) {
  auto basis = hom_basis(m, n);
  for (std::size_t v = 0; v < n.vertex_count(); ++v) {
    if (n.dim(v) == 0) continue;
    std::vector<Matrix> blocks;
    for (const auto& f : basis) blocks.push_back(f.components[v]);
    if (rank(hstack(blocks, n.field(), n.dim(v))) != n.dim(v)) return false;
  }
  return true;
}

}  // namespace tensorbrick
