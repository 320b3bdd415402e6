#include "nfs/field_on_v.hpp"

#include <stdexcept>

#include "nfs/arith.hpp"

namespace nfs {

FieldOnV FieldOnV::from_field(const FiniteField& field) {
  FieldOnV f;
  f.space_ = field.space();
  f.one_ = 1;
  f.exp_ = field.exp_table();
  f.log_ = field.log_table();
  return f;
}

namespace {

// Row-reduce matrices viewed as vectors of b² digits; returns a basis of the span.
std::vector<Matrix> span_basis(const VectorSpace& space, const std::vector<Matrix>& matrices) {
  const std::uint32_t b = space.dim();
  const std::uint32_t p = space.prime();
  auto flat = [&](const Matrix& m) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(b) * b);
    for (std::uint32_t i = 0; i < b; ++i) {
      for (std::uint32_t k = 0; k < b; ++k) v[i * b + k] = m.entry(space, i, k);
    }
    return v;
  };
  std::vector<std::vector<std::uint32_t>> reduced;
  std::vector<std::size_t> pivots;
  std::vector<Matrix> basis;
  for (const auto& m : matrices) {
    auto v = flat(m);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      const std::uint32_t c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + (p - c) * reduced[r][k]) % p;
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) continue;
    const auto inv = static_cast<std::uint32_t>(*mod_inverse(v[piv], p));
    for (auto& x : v) x = x * inv % p;
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      const std::uint32_t c = reduced[r][piv];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) reduced[r][k] = (reduced[r][k] + (p - c) * v[k]) % p;
    }
    reduced.push_back(std::move(v));
    pivots.push_back(piv);
    basis.push_back(m);
  }
  return basis;
}

Matrix combine(const VectorSpace& space, const std::vector<Matrix>& basis, std::uint64_t coeff_index) {
  std::vector<Point> rows(space.dim(), 0);
  for (const auto& m : basis) {
    const auto c = static_cast<std::uint32_t>(coeff_index % space.prime());
    coeff_index /= space.prime();
    if (c == 0) continue;
    for (std::uint32_t i = 0; i < space.dim(); ++i) rows[i] = space.add(rows[i], space.scale(c, m.rows()[i]));
  }
  return Matrix(std::move(rows));
}

}  // namespace

std::optional<FieldOnV> FieldOnV::from_span(const VectorSpace& space, const std::vector<Matrix>& matrices,
                                            Point u) {
  if (u == 0 || u >= space.size()) throw std::invalid_argument("FieldOnV::from_span: bad base point");
  const auto basis = span_basis(space, matrices);
  if (basis.size() != space.dim()) return std::nullopt;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (multiply(space, basis[i], basis[j]) != multiply(space, basis[j], basis[i])) return std::nullopt;
    }
  }
  const std::uint32_t n = space.size();
  std::vector<Matrix> elems;
  std::unordered_set<Matrix, MatrixHash> set;
  for (std::uint64_t c = 0; c < n; ++c) {
    elems.push_back(combine(space, basis, c));
    set.insert(elems.back());
  }
  if (!set.count(Matrix::identity(space))) return std::nullopt;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (!set.count(multiply(space, x, y))) return std::nullopt;
    }
  }
  for (std::uint64_t c = 1; c < n; ++c) {
    if (!elems[c].is_invertible(space)) return std::nullopt;
  }
  // A primitive element: order exactly n-1.
  const auto primes = distinct_prime_factors(n - 1);
  const Matrix id = Matrix::identity(space);
  std::optional<Matrix> gen;
  Point best = 0;
  for (std::uint64_t c = 1; c < n; ++c) {
    bool primitive = true;
    for (auto r : primes) {
      if (matrix_power(space, elems[c], (n - 1) / r) == id) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    const Point image = elems[c].apply(space, u);
    if (!gen || image < best) {
      gen = elems[c];
      best = image;
    }
  }
  if (!gen) return std::nullopt;
  FieldOnV f;
  f.space_ = space;
  f.one_ = u;
  f.exp_.resize(n - 1);
  f.log_.assign(n, ~0u);
  Point v = u;
  for (std::uint32_t k = 0; k + 1 < n; ++k) {
    if (f.log_[v] != ~0u) return std::nullopt;
    f.exp_[k] = v;
    f.log_[v] = k;
    v = gen->apply(space, v);
  }
  if (v != u) return std::nullopt;
  return f;
}

Point FieldOnV::mul(Point x, Point y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[x]) + log_[y]) % exp_.size()];
}

std::uint32_t FieldOnV::log(Point x) const {
  if (x == 0) throw std::domain_error("FieldOnV::log: zero");
  return log_[x];
}

Point FieldOnV::frobenius(Point x, std::uint32_t j) const {
  if (x == 0) return 0;
  const std::uint64_t m = exp_.size();
  const std::uint64_t e = mod_pow(space_.prime(), j, m);
  return exp_[static_cast<std::uint64_t>(log_[x]) * e % m];
}

Matrix FieldOnV::multiplication_matrix(Point c) const {
  std::vector<Point> rows(space_.dim());
  for (std::uint32_t i = 0; i < space_.dim(); ++i) rows[i] = mul(c, space_.basis(i));
  return Matrix(std::move(rows));
}

std::optional<std::uint32_t> semilinear_exponent(const Matrix& g, const FieldOnV& field) {
  const VectorSpace& space = field.space();
  const Point c = g.apply(space, field.one());
  if (c == 0) return std::nullopt;
  for (std::uint32_t j = 0; j < space.dim(); ++j) {
    bool ok = true;
    for (Point x = 1; x < space.size() && ok; ++x) ok = g.apply(space, x) == field.mul(c, field.frobenius(x, j));
    if (ok) return j;
  }
  return std::nullopt;
}

bool is_semilinear(const MatrixGroup& group, const FieldOnV& field) {
  if (!(group.space() == field.space())) throw std::invalid_argument("is_semilinear: field does not live on V");
  for (const auto& g : group.elements()) {
    if (!semilinear_exponent(g, field)) return false;
  }
  return true;
}

bool normalizes_singer(const MatrixGroup& group, const FieldOnV& field) {
  if (!(group.space() == field.space())) throw std::invalid_argument("normalizes_singer: field does not live on V");
  const VectorSpace& space = field.space();
  const Matrix s = field.multiplication_matrix(field.generator());
  for (const auto& g : group.generators()) {
    const Matrix m = multiply(space, multiply(space, inverse(space, g), s), g);
    // m must be multiplication by c = 1·m
    const Point c = m.apply(space, field.one());
    if (m != field.multiplication_matrix(c)) return false;
  }
  return true;
}

}  // namespace nfs
