#include "nfs/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "nfs/arith.hpp"
#include "nfs/errors.hpp"

namespace nfs {

namespace {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

std::string factorial_string(std::uint32_t n) {
  std::vector<std::uint32_t> digits{1};  // little-endian base 10
  for (std::uint32_t k = 2; k <= n; ++k) {
    std::uint64_t carry = 0;
    for (auto& d : digits) {
      std::uint64_t v = static_cast<std::uint64_t>(d) * k + carry;
      d = static_cast<std::uint32_t>(v % 10);
      carry = v / 10;
    }
    while (carry > 0) {
      digits.push_back(static_cast<std::uint32_t>(carry % 10));
      carry /= 10;
    }
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
  return s;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;  // smaller index is the root
  }
};

}  // namespace

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators, std::vector<std::uint32_t> base_prefix)
    : degree_(degree), gens_(std::move(generators)), base_(std::move(base_prefix)) {
  for (const auto& g : gens_) {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
  }
  for (auto b : base_) {
    if (b >= degree_) throw std::invalid_argument("PermGroup: base point out of range");
  }
  build_chain();
}

PermGroup PermGroup::symmetric(std::uint32_t degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    std::vector<std::uint32_t> t(degree), c(degree);
    std::iota(t.begin(), t.end(), 0u);
    std::swap(t[0], t[1]);
    for (std::uint32_t x = 0; x < degree; ++x) c[x] = (x + 1) % degree;
    gens.push_back(Perm::unchecked(std::move(t)));
    if (degree > 2) gens.push_back(Perm::unchecked(std::move(c)));
  }
  if (degree <= 8) return PermGroup(degree, std::move(gens));
  PermGroup g(degree, {});
  g.gens_ = std::move(gens);
  g.symmetric_ = true;
  return g;
}

std::vector<const Perm*> PermGroup::level_gens(std::size_t level) const {
  std::vector<const Perm*> out;
  for (const auto& s : strong_) {
    bool fixes = true;
    for (std::size_t k = 0; k < level && fixes; ++k) fixes = s(base_[k]) == base_[k];
    if (fixes) out.push_back(&s);
  }
  return out;
}

std::vector<Perm> PermGroup::stabilizer_generators(std::size_t level) const {
  std::vector<Perm> out;
  for (const Perm* s : level_gens(level)) out.push_back(*s);
  return out;
}

void PermGroup::compute_orbit(std::size_t level) {
  Level& L = levels_[level];
  L.base_point = base_[level];
  L.orbit_pos.assign(degree_, -1);
  L.orbit.assign(1, L.base_point);
  L.transversal.assign(1, Perm::identity(degree_));
  L.orbit_pos[L.base_point] = 0;
  const auto gens = level_gens(level);
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    for (const Perm* s : gens) {
      const std::uint32_t v = (*s)(L.orbit[i]);
      if (L.orbit_pos[v] >= 0) continue;
      L.orbit_pos[v] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(v);
      L.transversal.push_back(L.transversal[i] * *s);
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::sift(Perm g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    const std::int32_t pos = L.orbit_pos[g(L.base_point)];
    if (pos < 0) return {std::move(g), l};
    g = g * L.transversal[static_cast<std::size_t>(pos)].inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::build_chain() {
  strong_.clear();
  for (const auto& g : gens_) {
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) == strong_.end()) strong_.push_back(g);
  }
  auto first_moved = [&](const Perm& g) {
    for (std::uint32_t x = 0; x < degree_; ++x) {
      if (g(x) != x) return x;
    }
    throw std::logic_error("first_moved: identity");
  };
  for (const auto& s : strong_) {
    bool fixes_all = true;
    for (auto b : base_) fixes_all = fixes_all && s(b) == b;
    if (fixes_all) base_.push_back(first_moved(s));
  }
  levels_.assign(base_.size(), Level{});
  for (std::size_t l = base_.size(); l-- > 0;) compute_orbit(l);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(base_.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    compute_orbit(level);
    bool restarted = false;
    const auto gens = level_gens(level);
    std::vector<Perm> gens_copy;
    gens_copy.reserve(gens.size());
    for (const Perm* s : gens) gens_copy.push_back(*s);
    const Level L = levels_[level];
    for (std::size_t pos = 0; pos < L.orbit.size() && !restarted; ++pos) {
      for (const Perm& s : gens_copy) {
        const std::uint32_t target = s(L.orbit[pos]);
        Perm h = L.transversal[pos] * s * L.transversal[static_cast<std::size_t>(L.orbit_pos[target])].inverse();
        if (h.is_identity()) continue;
        auto [residue, j] = sift(std::move(h), level + 1);
        if (residue.is_identity()) continue;
        strong_.push_back(residue);
        if (j == base_.size()) {
          base_.push_back(first_moved(residue));
          levels_.emplace_back();
        }
        for (std::size_t l = level + 1; l <= j; ++l) compute_orbit(l);
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

std::uint64_t PermGroup::order() const {
  if (symmetric_) {
    u128 acc = 1;
    for (std::uint32_t k = 2; k <= degree_; ++k) {
      acc *= k;
      if (acc > ~std::uint64_t{0}) throw OverflowError("PermGroup::order: symmetric group order overflows");
    }
    return static_cast<std::uint64_t>(acc);
  }
  u128 acc = 1;
  for (const auto& L : levels_) {
    acc *= L.orbit.size();
    if (acc > ~std::uint64_t{0}) throw OverflowError("PermGroup::order: order overflows");
  }
  return static_cast<std::uint64_t>(acc);
}

std::string PermGroup::order_string() const {
  if (symmetric_) return factorial_string(degree_);
  u128 acc = 1;
  for (const auto& L : levels_) acc *= L.orbit.size();
  return u128_to_string(acc);
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  if (symmetric_) return true;
  return sift(g, 0).first.is_identity();
}

bool PermGroup::contains_group(const PermGroup& other) const {
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

bool PermGroup::operator==(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  if (symmetric_ || other.symmetric_) {
    return order_string() == other.order_string() && contains_group(other) && other.contains_group(*this);
  }
  return order() == other.order() && contains_group(other);
}

std::vector<std::uint32_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::uint32_t> out;
  for (const auto& L : levels_) out.push_back(static_cast<std::uint32_t>(L.orbit.size()));
  return out;
}

std::optional<std::uint64_t> PermGroup::element_index(const Perm& g) const {
  if (symmetric_) throw BoundExceeded("PermGroup::element_index: symmetric group marker");
  if (g.degree() != degree_) return std::nullopt;
  std::uint64_t index = 0;
  Perm cur = g;
  for (const auto& L : levels_) {
    const std::int32_t pos = L.orbit_pos[cur(L.base_point)];
    if (pos < 0) return std::nullopt;
    index = index * L.orbit.size() + static_cast<std::uint64_t>(pos);
    cur = cur * L.transversal[static_cast<std::size_t>(pos)].inverse();
  }
  if (!cur.is_identity()) return std::nullopt;
  return index;
}

Perm PermGroup::element_at(std::uint64_t index) const {
  if (symmetric_) throw BoundExceeded("PermGroup::element_at: symmetric group marker");
  Perm g = Perm::identity(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& L = levels_[l];
    g = g * L.transversal[index % L.orbit.size()];
    index /= L.orbit.size();
  }
  return g;
}

std::vector<Perm> PermGroup::elements(std::uint64_t bound) const {
  std::uint64_t n;
  try {
    n = order();
  } catch (const OverflowError&) {
    throw BoundExceeded("PermGroup::elements: group too large to enumerate");
  }
  if (n > bound) throw BoundExceeded("PermGroup::elements: order " + std::to_string(n) + " exceeds bound");
  if (symmetric_) {
    std::vector<std::uint32_t> p(degree_);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<Perm> out;
    do {
      out.push_back(Perm::unchecked(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  std::vector<Perm> current{Perm::identity(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Perm> next;
    next.reserve(current.size() * levels_[l].transversal.size());
    for (const auto& h : current) {
      for (const auto& t : levels_[l].transversal) next.push_back(h * t);
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
  UnionFind uf(degree_);
  for (const auto& g : gens_) {
    for (std::uint32_t x = 0; x < degree_; ++x) uf.unite(x, g(x));
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::int32_t> slot(degree_, -1);
  for (std::uint32_t x = 0; x < degree_; ++x) {
    const auto r = uf.find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int32_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

PermGroup PermGroup::stabilizer(std::uint32_t point) const {
  if (symmetric_) {
    // Sym of the remaining points, generated by transpositions of consecutive survivors.
    std::vector<std::uint32_t> rest;
    for (std::uint32_t x = 0; x < degree_; ++x) {
      if (x != point) rest.push_back(x);
    }
    std::vector<Perm> gens;
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
      auto id = Perm::identity(degree_).images();
      std::swap(id[rest[i]], id[rest[i + 1]]);
      gens.push_back(Perm::unchecked(std::move(id)));
    }
    return PermGroup(degree_, std::move(gens));
  }
  if (!base_.empty() && base_[0] == point) return PermGroup(degree_, stabilizer_generators(1));
  PermGroup rebased(degree_, gens_, {point});
  return PermGroup(degree_, rebased.stabilizer_generators(1));
}

PermGroup group_from_generators(std::uint32_t degree, std::vector<Perm> generators) {
  return PermGroup(degree, std::move(generators));
}

TwoOrbits two_orbits(const PermGroup& group) {
  const std::uint32_t n = group.degree();
  const std::size_t pairs = static_cast<std::size_t>(n) * n;
  UnionFind uf(pairs);
  for (const auto& g : group.generators()) {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        uf.unite(static_cast<std::uint32_t>(static_cast<std::size_t>(x) * n + y),
                 static_cast<std::uint32_t>(static_cast<std::size_t>(g(x)) * n + g(y)));
      }
    }
  }
  TwoOrbits out;
  out.degree = n;
  out.cls.assign(pairs, 0);
  std::vector<std::int64_t> id(pairs, -1);
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto r = uf.find(static_cast<std::uint32_t>(k));
    if (id[r] < 0) id[r] = out.count++;
    out.cls[k] = static_cast<std::uint32_t>(id[r]);
  }
  return out;
}

PermGroup translation_group(const VectorSpace& space) {
  std::vector<Perm> gens;
  for (std::uint32_t i = 0; i < space.dim(); ++i) {
    std::vector<std::uint32_t> img(space.size());
    for (Point x = 0; x < space.size(); ++x) img[x] = space.add(x, space.basis(i));
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(space.size(), std::move(gens));
}

PermGroup affine_group(const NearField& nf, const std::vector<FieldElement>& subgroup) {
  const std::uint32_t n = nf.order();
  std::vector<char> in(n, 0);
  for (auto b : subgroup) {
    if (b == 0 || b >= n) throw std::invalid_argument("affine_group: subgroup contains an invalid element");
    in[b] = 1;
  }
  if (!in[1]) throw std::invalid_argument("affine_group: K does not contain the identity");
  for (auto a : subgroup) {
    for (auto b : subgroup) {
      if (!in[nf.mul(a, b)]) throw std::invalid_argument("affine_group: K is not a subgroup");
    }
  }
  const VectorSpace& space = nf.space();
  std::vector<Perm> gens = translation_group(space).generators();
  // greedy generating set of K
  std::vector<char> reached(n, 0);
  reached[1] = 1;
  std::vector<FieldElement> kgens;
  std::vector<FieldElement> span{1};
  for (auto b : subgroup) {
    if (reached[b]) continue;
    kgens.push_back(b);
    span.assign(1, 1);
    std::fill(reached.begin(), reached.end(), 0);
    reached[1] = 1;
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (auto g : kgens) {
        const auto y = nf.mul(span[i], g);
        if (!reached[y]) {
          reached[y] = 1;
          span.push_back(y);
        }
      }
    }
  }
  for (auto b : kgens) {
    std::vector<std::uint32_t> img(n);
    for (Point x = 0; x < n; ++x) img[x] = nf.mul(x, b);
    gens.push_back(Perm::unchecked(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup normal_closure(const PermGroup& group, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  for (const auto& e : elements) {
    if (!e.is_identity()) gens.push_back(e);
  }
  PermGroup closure(group.degree(), gens);
  bool grown = true;
  while (grown) {
    grown = false;
    for (std::size_t i = 0; i < gens.size() && !grown; ++i) {
      for (const auto& x : group.generators()) {
        Perm c = x.inverse() * gens[i] * x;
        if (!closure.contains(c)) {
          gens.push_back(std::move(c));
          closure = PermGroup(group.degree(), gens);
          grown = true;
          break;
        }
      }
    }
  }
  return closure;
}

bool is_normal_subgroup(const PermGroup& group, const PermGroup& sub) {
  if (!group.contains_group(sub)) return false;
  for (const auto& h : sub.generators()) {
    for (const auto& x : group.generators()) {
      if (!sub.contains(x.inverse() * h * x)) return false;
    }
  }
  return true;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& group, std::uint64_t bound) {
  if (group.is_symmetric_marker()) throw BoundExceeded("minimal_normal_subgroups: symmetric group marker");
  const std::uint64_t n = group.order();
  if (n > bound) throw BoundExceeded("minimal_normal_subgroups: order " + std::to_string(n) + " exceeds bound");
  std::vector<Perm> gen_inv;
  for (const auto& g : group.generators()) gen_inv.push_back(g.inverse());

  // Conjugacy classes as orbits under conjugation by the generators; elements
  // are addressed by their chain index so nothing but a bitmap is stored.
  std::vector<bool> seen(n, false);
  std::vector<Perm> reps;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    Perm rep = group.element_at(i);
    std::vector<Perm> queue{rep};
    while (!queue.empty()) {
      Perm cur = std::move(queue.back());
      queue.pop_back();
      for (std::size_t k = 0; k < gen_inv.size(); ++k) {
        Perm c = gen_inv[k] * cur * group.generators()[k];
        const auto j = *group.element_index(c);
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(std::move(c));
        }
      }
    }
    reps.push_back(std::move(rep));
  }

  std::vector<PermGroup> closures;
  for (const auto& g : reps) {
    if (g.is_identity() || !is_prime(g.order())) continue;
    PermGroup nc = normal_closure(group, {g});
    bool duplicate = false;
    for (const auto& c : closures) {
      if (c.order() == nc.order() && c.contains_group(nc)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) closures.push_back(std::move(nc));
  }

  std::vector<PermGroup> minimal;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < closures.size() && is_min; ++j) {
      if (i == j) continue;
      if (closures[j].order() < closures[i].order() && closures[i].contains_group(closures[j])) is_min = false;
    }
    if (is_min) minimal.push_back(closures[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return minimal;
}

FrobeniusResult is_frobenius(const PermGroup& group) {
  if (!group.is_transitive()) throw std::invalid_argument("is_frobenius: group is not transitive");
  if (group.degree() > kFrobeniusDegreeBound) throw BoundExceeded("is_frobenius: degree exceeds bound");
  const auto elems = group.elements();
  std::vector<Perm> kernel_elems;
  for (const auto& g : elems) {
    const auto fixed = g.fixed_point_count();
    if (!g.is_identity() && fixed >= 2) return {};
    if (fixed == 0 || g.is_identity()) kernel_elems.push_back(g);
  }
  if (kernel_elems.size() != group.degree()) {
    throw std::logic_error("is_frobenius: kernel size differs from the degree");
  }
  // Greedy generators for the kernel, then check it is exactly the kernel set.
  std::vector<Perm> gens;
  PermGroup kernel(group.degree(), {});
  for (const auto& k : kernel_elems) {
    if (kernel.contains(k)) continue;
    gens.push_back(k);
    kernel = PermGroup(group.degree(), gens);
  }
  if (kernel.order() != kernel_elems.size()) throw std::logic_error("is_frobenius: kernel is not a subgroup");
  if (!is_normal_subgroup(group, kernel)) throw std::logic_error("is_frobenius: kernel is not normal");
  return {true, std::move(kernel)};
}

}  // namespace nfs
