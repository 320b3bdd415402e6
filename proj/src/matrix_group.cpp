#include "nfs/matrix_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nfs/arith.hpp"
#include "nfs/errors.hpp"

namespace nfs {

Matrix Matrix::identity(const VectorSpace& space) {
  std::vector<Point> rows(space.dim());
  for (std::uint32_t i = 0; i < space.dim(); ++i) rows[i] = space.basis(i);
  return Matrix(std::move(rows));
}

Matrix Matrix::from_linear_perm(const VectorSpace& space, const Perm& g) {
  if (g.degree() != space.size()) throw std::invalid_argument("Matrix::from_linear_perm: degree mismatch");
  std::vector<Point> rows(space.dim());
  for (std::uint32_t i = 0; i < space.dim(); ++i) rows[i] = g(space.basis(i));
  return Matrix(std::move(rows));
}

Point Matrix::apply(const VectorSpace& space, Point v) const {
  Point acc = 0;
  for (std::uint32_t i = 0; i < rows_.size() && v != 0; ++i) {
    const std::uint32_t c = v % space.prime();
    v /= space.prime();
    if (c != 0) acc = space.add(acc, space.scale(c, rows_[i]));
  }
  return acc;
}

Perm Matrix::to_perm(const VectorSpace& space) const {
  // Images of x + λ·e_i extend those of x, so fill in rank-extension order.
  std::vector<std::uint32_t> img(space.size(), 0);
  std::uint32_t lo = 1;
  for (std::uint32_t i = 0; i < space.dim(); ++i) {
    for (std::uint32_t lambda = 1; lambda < space.prime(); ++lambda) {
      const Point r = space.scale(lambda, rows_[i]);
      for (Point low = 0; low < lo; ++low) img[low + lambda * lo] = space.add(img[low], r);
    }
    lo *= space.prime();
  }
  return Perm(std::move(img));
}

bool Matrix::is_invertible(const VectorSpace& space) const {
  return rows_.size() == space.dim() && space.rank(rows_) == space.dim();
}

std::string Matrix::digit_string(const VectorSpace& space) const {
  static const char* kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  for (std::uint32_t i = 0; i < rows_.size(); ++i) {
    for (std::uint32_t k = 0; k < space.dim(); ++k) out.push_back(kDigits[entry(space, i, k)]);
  }
  return out;
}

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto r : m.rows()) {
    h ^= r;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Matrix multiply(const VectorSpace& space, const Matrix& a, const Matrix& b) {
  std::vector<Point> rows(a.rows().size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = b.apply(space, a.rows()[i]);
  return Matrix(std::move(rows));
}

Matrix inverse(const VectorSpace& space, const Matrix& a) {
  return Matrix::from_linear_perm(space, a.to_perm(space).inverse());
}

Matrix matrix_power(const VectorSpace& space, Matrix a, std::uint64_t k) {
  Matrix acc = Matrix::identity(space);
  while (k > 0) {
    if (k & 1) acc = multiply(space, acc, a);
    a = multiply(space, a, a);
    k >>= 1;
  }
  return acc;
}

namespace {

// Closure of `gens` inside `universe`; throws if a product leaves it.
std::vector<Matrix> closure_within(const VectorSpace& space, const std::vector<Matrix>& gens,
                                   const std::unordered_set<Matrix, MatrixHash>* universe) {
  std::vector<Matrix> out{Matrix::identity(space)};
  std::unordered_set<Matrix, MatrixHash> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Matrix m = multiply(space, out[i], g);
      if (seen.count(m)) continue;
      if (universe && !universe->count(m)) throw std::invalid_argument("MatrixGroup: element set is not closed");
      seen.insert(m);
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace

MatrixGroup::MatrixGroup(VectorSpace space, std::vector<Matrix> elements) : space_(std::move(space)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& m : elements) {
    if (!m.is_invertible(space_)) throw std::invalid_argument("MatrixGroup: singular matrix");
  }
  elements_ = std::move(elements);
  set_ = std::unordered_set<Matrix, MatrixHash>(elements_.begin(), elements_.end());
  if (!set_.count(Matrix::identity(space_))) throw std::invalid_argument("MatrixGroup: identity missing");

  std::unordered_set<Matrix, MatrixHash> reached{Matrix::identity(space_)};
  for (const auto& m : elements_) {
    if (reached.count(m)) continue;
    gens_.push_back(m);
    auto cl = closure_within(space_, gens_, &set_);
    reached = std::unordered_set<Matrix, MatrixHash>(cl.begin(), cl.end());
  }
}

MatrixGroup MatrixGroup::generated_by(const VectorSpace& space, const std::vector<Matrix>& generators) {
  for (const auto& g : generators) {
    if (!g.is_invertible(space)) throw std::invalid_argument("MatrixGroup::generated_by: singular generator");
  }
  return MatrixGroup(space, closure_within(space, generators, nullptr));
}

bool MatrixGroup::contains_group(const MatrixGroup& other) const {
  if (!(other.space_ == space_)) return false;
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool MatrixGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (multiply(space_, gens_[i], gens_[j]) != multiply(space_, gens_[j], gens_[i])) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> MatrixGroup::orbit_ids() const {
  const std::uint32_t n = space_.size();
  std::vector<std::uint32_t> id(n, ~0u);
  std::uint32_t next = 0;
  for (Point x = 0; x < n; ++x) {
    if (id[x] != ~0u) continue;
    id[x] = next;
    std::vector<Point> queue{x};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& g : gens_) {
        const Point y = g.apply(space_, queue[i]);
        if (id[y] == ~0u) {
          id[y] = next;
          queue.push_back(y);
        }
      }
    }
    ++next;
  }
  return id;
}

std::vector<Perm> MatrixGroup::as_perms() const {
  std::vector<Perm> out;
  out.reserve(elements_.size());
  for (const auto& m : elements_) out.push_back(m.to_perm(space_));
  return out;
}

PermGroup MatrixGroup::as_perm_group() const {
  std::vector<Perm> gens;
  for (const auto& g : gens_) gens.push_back(g.to_perm(space_));
  return PermGroup(space_.size(), std::move(gens));
}

std::uint64_t gl_order(std::uint32_t p, std::uint32_t b) {
  u128 acc = 1;
  u128 pb = 1;
  for (std::uint32_t i = 0; i < b; ++i) pb *= p;
  u128 pi = 1;
  for (std::uint32_t i = 0; i < b; ++i) {
    acc *= pb - pi;
    pi *= p;
    if (acc > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

// Rank-extension search. span(e_0..e_{i-1}) is the point range [0, p^i), so
// choosing row i fixes the images of the points [p^i, p^{i+1}).
class RowSearch {
 public:
  RowSearch(const VectorSpace& space, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
            bool learned, std::uint64_t budget, const std::function<bool(const Matrix&)>& visit)
      : space_(space), a_(a), b_(b), learned_(learned), budget_(budget), visit_(visit) {
    const std::uint32_t n = space.size();
    if (a.size() != n || b.size() != n) throw std::invalid_argument("search_partition_maps: partition size mismatch");
    img_.assign(n, 0);
    used_.assign(n, 0);
    std::uint32_t ca = 0, cb = 0;
    for (auto c : a) ca = std::max(ca, c + 1);
    for (auto c : b) cb = std::max(cb, c + 1);
    size_a_.assign(ca, 0);
    size_b_.assign(cb, 0);
    for (auto c : a) ++size_a_[c];
    for (auto c : b) ++size_b_[c];
    fwd_.assign(ca, -1);
    bwd_.assign(cb, -1);
  }

  void run() {
    used_[0] = 1;
    std::vector<std::uint32_t> undo;
    if (!bind(0, 0, undo)) return;
    rec(0, 1);
  }

 private:
  bool bind(Point x, Point y, std::vector<std::uint32_t>& undo) {
    const std::uint32_t ca = a_[x], cb = b_[y];
    if (!learned_) return ca == cb;
    if (fwd_[ca] < 0) {
      if (bwd_[cb] >= 0 || size_a_[ca] != size_b_[cb]) return false;
      fwd_[ca] = static_cast<std::int32_t>(cb);
      bwd_[cb] = static_cast<std::int32_t>(ca);
      undo.push_back(ca);
      return true;
    }
    return fwd_[ca] == static_cast<std::int32_t>(cb);
  }

  void unbind(const std::vector<std::uint32_t>& undo) {
    for (auto ca : undo) {
      bwd_[static_cast<std::uint32_t>(fwd_[ca])] = -1;
      fwd_[ca] = -1;
    }
  }

  bool rec(std::uint32_t i, std::uint32_t lo) {
    if (i == space_.dim()) return visit_(Matrix(rows_));
    const std::uint32_t p = space_.prime();
    for (Point r = 1; r < space_.size(); ++r) {
      if (used_[r]) continue;
      if (++nodes_ > budget_) throw BoundExceeded("linear search: node budget exhausted");
      std::vector<std::uint32_t> undo;
      std::vector<Point> assigned;
      bool ok = true;
      for (std::uint32_t lambda = 1; lambda < p && ok; ++lambda) {
        const Point s = space_.scale(lambda, r);
        for (Point low = 0; low < lo; ++low) {
          const Point x = low + lambda * lo;
          const Point y = space_.add(img_[low], s);
          if (!bind(x, y, undo)) {
            ok = false;
            break;
          }
          img_[x] = y;
          used_[y] = 1;
          assigned.push_back(y);
        }
      }
      if (ok) {
        rows_.push_back(r);
        if (rec(i + 1, lo * p)) return true;
        rows_.pop_back();
      }
      for (auto y : assigned) used_[y] = 0;
      unbind(undo);
    }
    return false;
  }

  const VectorSpace& space_;
  const std::vector<std::uint32_t>& a_;
  const std::vector<std::uint32_t>& b_;
  bool learned_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  const std::function<bool(const Matrix&)>& visit_;
  std::vector<Point> img_;
  std::vector<char> used_;
  std::vector<std::uint32_t> size_a_, size_b_;
  std::vector<std::int32_t> fwd_, bwd_;
  std::vector<Point> rows_;
};

}  // namespace

std::vector<Matrix> enumerate_gl(const VectorSpace& space, std::uint64_t bound) {
  if (gl_order(space.prime(), space.dim()) > bound) throw BoundExceeded("enumerate_gl: |GL| exceeds bound");
  std::vector<std::uint32_t> part(space.size(), 1);
  part[0] = 0;
  std::vector<Matrix> out;
  std::function<bool(const Matrix&)> visit = [&](const Matrix& m) {
    out.push_back(m);
    return false;
  };
  RowSearch(space, part, part, false, ~std::uint64_t{0}, visit).run();
  return out;
}

std::vector<Matrix> partition_stabilizer(const VectorSpace& space, const std::vector<std::uint32_t>& orbit_id,
                                         std::uint64_t bound) {
  std::vector<Matrix> out;
  std::function<bool(const Matrix&)> visit = [&](const Matrix& m) {
    out.push_back(m);
    return false;
  };
  RowSearch(space, orbit_id, orbit_id, false, bound, visit).run();
  return out;
}

void search_partition_maps(const VectorSpace& space, const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b, const std::function<bool(const Matrix&)>& visit,
                           std::uint64_t bound) {
  RowSearch(space, a, b, true, bound, visit).run();
}

MatrixGroup linear_closure(const MatrixGroup& group, std::uint64_t bound) {
  const auto ids = group.orbit_ids();
  MatrixGroup closure(group.space(), partition_stabilizer(group.space(), ids, bound));
  if (!closure.contains_group(group)) throw std::logic_error("linear_closure: result does not contain the group");
  if (closure.orbit_ids() != ids) throw std::logic_error("linear_closure: orbits changed");
  return closure;
}

std::optional<Matrix> find_conjugator(const MatrixGroup& a, const MatrixGroup& b, std::uint64_t bound) {
  if (!(a.space() == b.space()) || a.order() != b.order()) return std::nullopt;
  const VectorSpace& space = a.space();
  std::optional<Matrix> found;
  std::function<bool(const Matrix&)> visit = [&](const Matrix& g) {
    const Matrix gi = inverse(space, g);
    for (const auto& h : a.generators()) {
      if (!b.contains(multiply(space, multiply(space, gi, h), g))) return false;
    }
    found = g;
    return true;
  };
  search_partition_maps(space, a.orbit_ids(), b.orbit_ids(), visit, bound);
  return found;
}

bool is_irreducible(const MatrixGroup& group) {
  const VectorSpace& space = group.space();
  std::vector<char> done(space.size(), 0);
  for (Point v = 1; v < space.size(); ++v) {
    if (done[v]) continue;
    std::vector<Point> orbit{v};
    done[v] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : group.generators()) {
        const Point w = g.apply(space, orbit[i]);
        if (!done[w]) {
          done[w] = 1;
          orbit.push_back(w);
        }
      }
    }
    if (space.rank(orbit) != space.dim()) return false;
  }
  return true;
}

}  // namespace nfs
