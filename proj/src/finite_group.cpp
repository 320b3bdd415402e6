#include "nfs/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "nfs/errors.hpp"

namespace nfs {

FiniteGroup::FiniteGroup(std::uint32_t order, std::vector<std::uint32_t> table, bool verify)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0 || table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw std::invalid_argument("FiniteGroup: table size mismatch");
  }
  for (auto v : table_) {
    if (v >= order_) throw std::invalid_argument("FiniteGroup: table entry out of range");
  }
  bool found = false;
  for (std::uint32_t e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("FiniteGroup: no identity");
  inverse_.assign(order_, order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] == order_) throw std::invalid_argument("FiniteGroup: element without inverse");
  }
  if (!verify) return;
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      const std::uint32_t ab = mul(a, b);
      for (std::uint32_t c = 0; c < order_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) throw std::invalid_argument("FiniteGroup: not associative");
      }
    }
  }
}

std::uint32_t FiniteGroup::element_order(std::uint32_t a) const {
  std::uint32_t k = 1;
  for (std::uint32_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> FiniteGroup::closure(const std::vector<std::uint32_t>& gens) const {
  std::vector<char> in(order_, 0);
  std::vector<std::uint32_t> elems{identity_};
  in[identity_] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::uint32_t g : gens) {
      const std::uint32_t y = mul(elems[i], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool FiniteGroup::is_subgroup(const std::vector<std::uint32_t>& elements) const {
  if (elements.empty()) return false;
  std::vector<char> in(order_, 0);
  for (auto x : elements) {
    if (x >= order_) return false;
    in[x] = 1;
  }
  if (!in[identity_]) return false;
  for (auto a : elements) {
    for (auto b : elements) {
      if (!in[mul(a, b)]) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) {
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return FiniteGroup(n, std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& elements) {
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  const auto n = static_cast<std::uint32_t>(elements.size());
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      // a then b
      std::vector<std::uint32_t> ab(elements[a].size());
      for (std::size_t x = 0; x < ab.size(); ++x) ab[x] = elements[b][elements[a][x]];
      auto it = index.find(ab);
      if (it == index.end()) throw std::invalid_argument("FiniteGroup::from_permutations: not closed");
      t[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  }
  return FiniteGroup(n, std::move(t));
}

std::vector<std::vector<std::uint32_t>> enumerate_subgroups(const FiniteGroup& group, std::uint32_t bound) {
  if (group.order() > bound) {
    throw BoundExceeded("enumerate_subgroups: group order " + std::to_string(group.order()) + " exceeds bound");
  }
  struct Entry {
    std::vector<std::uint32_t> elements;
    std::vector<std::uint32_t> gens;
    std::vector<char> member;
  };
  std::vector<Entry> found;
  std::set<std::vector<std::uint32_t>> seen;
  auto add = [&](std::vector<std::uint32_t> elements, std::vector<std::uint32_t> gens) {
    if (!seen.insert(elements).second) return;
    std::vector<char> member(group.order(), 0);
    for (auto x : elements) member[x] = 1;
    found.push_back({std::move(elements), std::move(gens), std::move(member)});
  };

  std::vector<std::uint32_t> cyclic_gen;
  for (std::uint32_t a = 0; a < group.order(); ++a) {
    auto c = group.closure({a});
    if (!seen.count(c)) cyclic_gen.push_back(a);
    add(std::move(c), {a});
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::uint32_t c : cyclic_gen) {
      if (found[i].member[c]) continue;
      auto gens = found[i].gens;
      gens.push_back(c);
      auto joined = group.closure(gens);
      add(std::move(joined), std::move(gens));
    }
  }

  std::vector<std::vector<std::uint32_t>> result;
  result.reserve(found.size());
  for (auto& e : found) result.push_back(std::move(e.elements));
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

}  // namespace nfs
