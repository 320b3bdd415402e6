#include "nfs/backtrack.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nfs/errors.hpp"

namespace nfs {

bool preserves_colors(const AssociationScheme& scheme, const Perm& g) {
  const std::uint32_t n = scheme.n;
  if (g.degree() != n) return false;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (scheme.color(x, y) != scheme.color(g(x), g(y))) return false;
    }
  }
  return true;
}

bool is_color_isomorphism(const AssociationScheme& a, const AssociationScheme& b, const Perm& f) {
  const std::uint32_t n = a.n;
  if (b.n != n || a.rank != b.rank || f.degree() != n) return false;
  std::vector<std::int64_t> fwd(a.rank, -1), bwd(b.rank, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto ca = a.color(x, y), cb = b.color(f(x), f(y));
      if (fwd[ca] < 0 && bwd[cb] < 0) {
        fwd[ca] = cb;
        bwd[cb] = ca;
      } else if (fwd[ca] != cb || bwd[cb] != ca) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Perm> automorphisms_full_scan(const AssociationScheme& scheme) {
  if (scheme.n > kFullScanDegreeBound) throw BoundExceeded("automorphisms_full_scan: N exceeds bound");
  std::vector<std::uint32_t> p(scheme.n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Perm> out;
  do {
    Perm g = Perm::unchecked(p);
    if (preserves_colors(scheme, g)) out.push_back(std::move(g));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> isomorphisms_full_scan(const AssociationScheme& a, const AssociationScheme& b) {
  if (a.n > kFullScanDegreeBound) throw BoundExceeded("isomorphisms_full_scan: N exceeds bound");
  if (a.n != b.n) return {};
  std::vector<std::uint32_t> p(a.n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Perm> out;
  do {
    Perm f = Perm::unchecked(p);
    if (is_color_isomorphism(a, b, f)) out.push_back(std::move(f));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

// Point-by-point search for a map a -> b. With fixed colors class c must go
// to class c; otherwise the class bijection is learned along the way.
class Search {
 public:
  Search(const AssociationScheme& a, const AssociationScheme& b, bool fixed) : a_(a), b_(b), fixed_(fixed) {
    n_ = a.n;
    root_.image.assign(n_, -1);
    root_.used.assign(n_, 0);
    root_.fwd.assign(a.rank, -1);
    root_.bwd.assign(b.rank, -1);
    root_.cand.resize(n_);
    // Initial refinement by color-degree profile: out- and in-counts per class.
    auto profiles = [](const AssociationScheme& s, bool sorted) {
      std::vector<std::vector<std::uint32_t>> prof(s.n, std::vector<std::uint32_t>(2 * s.rank, 0));
      for (std::uint32_t x = 0; x < s.n; ++x) {
        for (std::uint32_t y = 0; y < s.n; ++y) {
          ++prof[x][s.color(x, y)];
          ++prof[x][s.rank + s.color(y, x)];
        }
      }
      if (sorted) {
        for (auto& v : prof) {
          std::sort(v.begin(), v.begin() + s.rank);
          std::sort(v.begin() + s.rank, v.end());
        }
      }
      return prof;
    };
    const auto pa = profiles(a, !fixed), pb = profiles(b, !fixed);
    for (std::uint32_t x = 0; x < n_; ++x) {
      for (std::uint32_t y = 0; y < n_; ++y) {
        if (pa[x] == pb[y]) root_.cand[x].push_back(y);
      }
    }
  }

  struct State {
    std::vector<std::int32_t> image;
    std::vector<char> used;
    std::vector<std::int32_t> fwd, bwd;
    std::vector<std::vector<std::uint32_t>> cand;
    std::vector<std::uint32_t> assigned;
  };

  const State& root() const { return root_; }

  bool color_ok(const State& s, std::uint32_t ca, std::uint32_t cb) const {
    if (fixed_) return ca == cb;
    return s.fwd[ca] == static_cast<std::int32_t>(cb) || (s.fwd[ca] < 0 && s.bwd[cb] < 0);
  }

  void bind(State& s, std::uint32_t ca, std::uint32_t cb) const {
    if (fixed_ || s.fwd[ca] >= 0) return;
    s.fwd[ca] = static_cast<std::int32_t>(cb);
    s.bwd[cb] = static_cast<std::int32_t>(ca);
  }

  bool assign(State& s, std::uint32_t x, std::uint32_t y) const {
    if (s.image[x] >= 0) return s.image[x] == static_cast<std::int32_t>(y);
    if (s.used[y]) return false;
    if (!std::binary_search(s.cand[x].begin(), s.cand[x].end(), y)) return false;
    // diagonal then pairs with already assigned points
    if (!color_ok(s, a_.color(x, x), b_.color(y, y))) return false;
    bind(s, a_.color(x, x), b_.color(y, y));
    for (auto z : s.assigned) {
      const auto w = static_cast<std::uint32_t>(s.image[z]);
      if (!color_ok(s, a_.color(x, z), b_.color(y, w))) return false;
      bind(s, a_.color(x, z), b_.color(y, w));
      if (!color_ok(s, a_.color(z, x), b_.color(w, y))) return false;
      bind(s, a_.color(z, x), b_.color(w, y));
    }
    s.image[x] = static_cast<std::int32_t>(y);
    s.used[y] = 1;
    s.assigned.push_back(x);
    s.cand[x].assign(1, y);
    for (std::uint32_t z = 0; z < n_; ++z) {
      if (s.image[z] >= 0) continue;
      auto& c = s.cand[z];
      std::size_t k = 0;
      for (auto w : c) {
        if (!s.used[w] && color_ok(s, a_.color(x, z), b_.color(y, w)) && color_ok(s, a_.color(z, x), b_.color(w, y))) {
          c[k++] = w;
        }
      }
      c.resize(k);
      if (k == 0) return false;
    }
    return true;
  }

  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t z = 0; z < n_; ++z) {
        if (s.image[z] < 0 && s.cand[z].size() == 1) {
          if (!assign(s, z, s.cand[z][0])) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  // Next point to branch on: smallest candidate set, lowest index; -1 if complete.
  std::int64_t choose(const State& s) const {
    std::int64_t best = -1;
    std::size_t size = 0;
    for (std::uint32_t z = 0; z < n_; ++z) {
      if (s.image[z] >= 0) continue;
      if (best < 0 || s.cand[z].size() < size) {
        best = z;
        size = s.cand[z].size();
      }
    }
    return best;
  }

  Perm to_perm(const State& s) const {
    std::vector<std::uint32_t> img(n_);
    for (std::uint32_t x = 0; x < n_; ++x) img[x] = static_cast<std::uint32_t>(s.image[x]);
    return Perm(std::move(img));
  }

  std::optional<Perm> dfs(State s) const {
    if (!propagate(s)) return std::nullopt;
    const auto x = choose(s);
    if (x < 0) {
      Perm f = to_perm(s);
      const bool ok = fixed_ ? preserves_colors_between(f) : is_color_isomorphism(a_, b_, f);
      if (!ok) throw std::logic_error("backtrack: complete assignment fails verification");
      return f;
    }
    const auto cands = s.cand[static_cast<std::size_t>(x)];
    for (auto y : cands) {
      State t = s;
      if (!assign(t, static_cast<std::uint32_t>(x), y)) continue;
      if (auto f = dfs(std::move(t))) return f;
    }
    return std::nullopt;
  }

  bool preserves_colors_between(const Perm& f) const {
    for (std::uint32_t x = 0; x < n_; ++x) {
      for (std::uint32_t y = 0; y < n_; ++y) {
        if (a_.color(x, y) != b_.color(f(x), f(y))) return false;
      }
    }
    return true;
  }

 private:
  const AssociationScheme& a_;
  const AssociationScheme& b_;
  bool fixed_;
  std::uint32_t n_ = 0;
  State root_;
};

}  // namespace

PermGroup aut_bruteforce(const AssociationScheme& scheme) {
  const std::uint32_t n = scheme.n;
  if (n > kBacktrackDegreeBound) throw BoundExceeded("aut_bruteforce: N exceeds bound");
  if (scheme.rank <= 2) {
    PermGroup sym = PermGroup::symmetric(n);
    if (n <= kFullScanDegreeBound && automorphisms_full_scan(scheme).size() != sym.order()) {
      throw std::logic_error("aut_bruteforce: rank-2 scheme is not preserved by Sym(N)");
    }
    return sym;
  }
  Search search(scheme, scheme, true);

  // Base along the identity path: fix points one at a time until the
  // refinement forces everything.
  std::vector<std::uint32_t> base;
  std::vector<std::vector<std::uint32_t>> base_cands;
  std::vector<Search::State> prefix_states;
  Search::State s = search.root();
  if (!search.propagate(s)) throw std::logic_error("aut_bruteforce: identity rejected");
  while (true) {
    // 0 is the first base point unless the refinement already fixed it
    const std::int64_t x = base.empty() && s.image[0] < 0 ? 0 : search.choose(s);
    if (x < 0) break;
    base.push_back(static_cast<std::uint32_t>(x));
    base_cands.push_back(s.cand[static_cast<std::size_t>(x)]);
    prefix_states.push_back(s);
    if (!search.assign(s, static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(x)) || !search.propagate(s)) {
      throw std::logic_error("aut_bruteforce: identity rejected");
    }
  }

  std::vector<Perm> gens;
  std::vector<std::uint64_t> orbit_sizes(base.size(), 1);
  for (std::size_t i = base.size(); i-- > 0;) {
    const std::uint32_t b = base[i];
    // orbit of b under the generators found so far (all fix base[0..i-1])
    std::vector<char> in_orbit(n, 0);
    std::vector<std::uint32_t> orbit{b};
    in_orbit[b] = 1;
    auto grow = [&]() {
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const auto& g : gens) {
          const auto y = g(orbit[k]);
          if (!in_orbit[y]) {
            in_orbit[y] = 1;
            orbit.push_back(y);
          }
        }
      }
    };
    grow();
    for (auto y : base_cands[i]) {
      if (in_orbit[y]) continue;
      Search::State t = prefix_states[i];
      if (!search.assign(t, b, y)) continue;
      if (auto g = search.dfs(std::move(t))) {
        gens.push_back(std::move(*g));
        grow();
      }
    }
    orbit_sizes[i] = orbit.size();
  }
  PermGroup group(n, gens, base);
  std::uint64_t expected = 1;
  for (auto o : orbit_sizes) expected *= o;
  if (group.order() != expected) throw std::logic_error("aut_bruteforce: chain order mismatch");
  for (const auto& g : gens) {
    if (!preserves_colors(scheme, g)) throw std::logic_error("aut_bruteforce: generator does not preserve colors");
  }
  if (n <= kFullScanDegreeBound) {
    const auto all = automorphisms_full_scan(scheme);
    if (all.size() != group.order()) throw std::logic_error("aut_bruteforce: full scan disagrees on the order");
    for (const auto& g : all) {
      if (!group.contains(g)) throw std::logic_error("aut_bruteforce: full scan finds a missing automorphism");
    }
  }
  return group;
}

std::optional<Perm> find_color_isomorphism(const AssociationScheme& a, const AssociationScheme& b) {
  if (a.n != b.n || a.rank != b.rank) return std::nullopt;
  if (a.n > kBacktrackDegreeBound) throw BoundExceeded("find_color_isomorphism: N exceeds bound");
  // class sizes must agree as multisets
  auto sizes = [](const AssociationScheme& s) {
    std::vector<std::uint64_t> c(s.rank, 0);
    for (auto x : s.colors) ++c[x];
    std::sort(c.begin(), c.end());
    return c;
  };
  if (sizes(a) != sizes(b)) return std::nullopt;
  Search search(a, b, false);
  return search.dfs(search.root());
}

}  // namespace nfs
