#include "nfs/scheme.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "nfs/errors.hpp"

namespace nfs {

AssociationScheme cyclotomic_coloring(const VectorSpace& space, const std::function<Point(Point, Point)>& act,
                                      const std::vector<Point>& subgroup, std::vector<Point>* coset_reps) {
  const std::uint32_t n = space.size();
  std::vector<std::uint32_t> cls(n, 0);
  std::uint32_t next = 1;
  for (Point a = 1; a < n; ++a) {
    if (cls[a] != 0) continue;
    if (coset_reps) coset_reps->push_back(a);
    for (auto k : subgroup) {
      const Point x = act(a, k);
      if (cls[x] != 0 && cls[x] != next) throw std::invalid_argument("cyclotomic_coloring: cosets overlap");
      cls[x] = next;
    }
    ++next;
  }
  AssociationScheme s;
  s.n = n;
  s.rank = next;
  s.colors.resize(static_cast<std::size_t>(n) * n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) s.colors[static_cast<std::size_t>(x) * n + y] = cls[space.sub(y, x)];
  }
  return s;
}

CyclotomicScheme build_cyclotomic(const NearField& nf, std::vector<FieldElement> subgroup) {
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  const std::uint32_t n = nf.order();
  std::vector<char> in(n, 0);
  for (auto b : subgroup) {
    if (b == 0 || b >= n) throw std::invalid_argument("build_cyclotomic: K contains an invalid element");
    in[b] = 1;
  }
  if (subgroup.empty() || !in[1]) throw std::invalid_argument("build_cyclotomic: K lacks the identity");
  for (auto a : subgroup) {
    for (auto b : subgroup) {
      if (!in[nf.mul(a, b)]) throw std::invalid_argument("build_cyclotomic: K is not a subgroup");
    }
  }
  CyclotomicScheme c{nf, subgroup, {}, static_cast<std::uint32_t>(subgroup.size()), {}};
  c.scheme = cyclotomic_coloring(
      nf.space(), [&nf](Point a, Point k) { return nf.mul(a, k); }, subgroup, &c.coset_reps);
  return c;
}

std::uint32_t IntersectionTensor::operator()(std::uint32_t t, std::uint32_t r, std::uint32_t s) const {
  const std::array<std::uint32_t, 4> key{t, r, s, 0};
  auto it = std::lower_bound(entries.begin(), entries.end(), key, [](const auto& a, const auto& b) {
    return std::tie(a[0], a[1], a[2]) < std::tie(b[0], b[1], b[2]);
  });
  if (it != entries.end() && (*it)[0] == t && (*it)[1] == r && (*it)[2] == s) return (*it)[3];
  return 0;
}

SchemeAxiomResult verify_scheme_axioms(const AssociationScheme& scheme, std::uint32_t bound) {
  const std::uint32_t n = scheme.n;
  if (n > bound) throw BoundExceeded("verify_scheme_axioms: N exceeds bound");
  SchemeAxiomResult res;
  auto fail = [&](SchemeViolation v) {
    res.ok = false;
    res.witness = std::move(v);
    return res;
  };
  if (scheme.colors.size() != static_cast<std::size_t>(n) * n) {
    return fail({"range", 0, 0, 0, 0, 0, 0});
  }
  const std::uint32_t rank = scheme.rank;
  std::vector<std::uint64_t> class_size(rank, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto c = scheme.color(x, y);
      if (c >= rank) return fail({"range", x, y, 0, 0, rank, c});
      if ((c == 0) != (x == y)) return fail({"diagonal", x, y, 0, 0, x == y ? 0u : 1u, c});
      ++class_size[c];
    }
  }
  for (std::uint32_t c = 0; c < rank; ++c) {
    if (class_size[c] == 0) return fail({"empty_class", 0, 0, c, 0, 1, 0});
  }
  std::vector<std::int64_t> tr(rank, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto c = scheme.color(x, y), ct = scheme.color(y, x);
      if (tr[c] < 0) tr[c] = ct;
      if (tr[c] != ct) return fail({"transpose", x, y, c, 0, static_cast<std::uint32_t>(tr[c]), ct});
    }
  }
  res.tensor.rank = rank;
  for (auto t : tr) res.tensor.transpose.push_back(static_cast<std::uint32_t>(t));

  // Per class t, the reference counts come from its first pair.
  std::vector<std::vector<std::array<std::uint32_t, 3>>> ref(rank);
  std::vector<char> have_ref(rank, 0);
  std::vector<std::uint32_t> scratch(static_cast<std::size_t>(rank) * rank, 0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t w = 0; w < n; ++w) {
      const auto t = scheme.color(u, w);
      touched.clear();
      for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t key = scheme.color(u, v) * rank + scheme.color(v, w);
        if (scratch[key]++ == 0) touched.push_back(key);
      }
      std::sort(touched.begin(), touched.end());
      if (!have_ref[t]) {
        for (auto key : touched) ref[t].push_back({key / rank, key % rank, scratch[key]});
        have_ref[t] = 1;
      } else {
        const auto& rt = ref[t];
        std::size_t i = 0, j = 0;
        std::optional<SchemeViolation> bad;
        while ((i < rt.size() || j < touched.size()) && !bad) {
          const std::uint32_t rk = i < rt.size() ? rt[i][0] * rank + rt[i][1] : ~0u;
          const std::uint32_t tk = j < touched.size() ? touched[j] : ~0u;
          if (rk == tk) {
            if (rt[i][2] != scratch[tk]) bad = SchemeViolation{"intersection", u, w, rk / rank, rk % rank, rt[i][2], scratch[tk]};
            ++i;
            ++j;
          } else if (rk < tk) {
            bad = SchemeViolation{"intersection", u, w, rk / rank, rk % rank, rt[i][2], 0};
          } else {
            bad = SchemeViolation{"intersection", u, w, tk / rank, tk % rank, 0, scratch[tk]};
          }
        }
        if (bad) {
          for (auto key : touched) scratch[key] = 0;
          return fail(*bad);
        }
      }
      for (auto key : touched) scratch[key] = 0;
    }
  }
  for (std::uint32_t t = 0; t < rank; ++t) {
    for (const auto& e : ref[t]) res.tensor.entries.push_back({t, e[0], e[1], e[2]});
  }
  res.ok = true;
  return res;
}

bool is_primitive(const AssociationScheme& scheme) {
  const std::uint32_t n = scheme.n;
  for (std::uint32_t c = 1; c < scheme.rank; ++c) {
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto x = queue[i];
      for (std::uint32_t y = 0; y < n; ++y) {
        if (!seen[y] && scheme.color(x, y) == c) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    if (queue.size() != n) return false;
  }
  return true;
}

bool is_primitive_by_unions(const AssociationScheme& scheme, const IntersectionTensor& tensor) {
  const std::uint32_t rank = scheme.rank;
  if (rank > kUnionEnumerationRankBound) throw BoundExceeded("is_primitive_by_unions: rank exceeds bound");
  // prod[r][s]: classes t with p^t_{rs} > 0, as a bit mask.
  std::vector<std::uint32_t> prod(static_cast<std::size_t>(rank) * rank, 0);
  for (const auto& e : tensor.entries) prod[e[1] * rank + e[2]] |= 1u << e[0];
  const std::uint32_t full = (1u << rank) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1u)) continue;
    if (mask == 1u) continue;
    bool closed = true;
    for (std::uint32_t r = 0; r < rank && closed; ++r) {
      if (!(mask >> r & 1u)) continue;
      if (!(mask >> tensor.transpose[r] & 1u)) closed = false;
      for (std::uint32_t s = 0; s < rank && closed; ++s) {
        if ((mask >> s & 1u) && (prod[r * rank + s] & ~mask)) closed = false;
      }
    }
    if (closed) return false;
  }
  return true;
}

MatrixGroup base_group(const NearField& nf, const std::vector<FieldElement>& subgroup) {
  const VectorSpace& space = nf.space();
  std::vector<Matrix> elems;
  for (auto b : subgroup) {
    std::vector<Point> rows(space.dim());
    for (std::uint32_t i = 0; i < space.dim(); ++i) rows[i] = nf.mul(space.basis(i), b);
    elems.emplace_back(std::move(rows));
  }
  MatrixGroup g(space, std::move(elems));
  if (g.order() != subgroup.size()) throw std::invalid_argument("base_group: K does not act faithfully");
  return g;
}

const char* to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::ok: return "ok";
    case ReductionStatus::not_primitive: return "not primitive";
    case ReductionStatus::not_abelian: return "not abelian";
    case ReductionStatus::span_not_field: return "span not a field";
  }
  return "?";
}

FieldReduction abelian_field_reduction(const CyclotomicScheme& cyc) {
  FieldReduction out;
  if (!is_primitive(cyc.scheme)) return out;
  const MatrixGroup g = base_group(cyc.nf, cyc.subgroup);
  if (!g.is_abelian()) {
    out.status = ReductionStatus::not_abelian;
    return out;
  }
  const VectorSpace& space = cyc.nf.space();
  const Point u = 1;
  auto field = FieldOnV::from_span(space, g.elements(), u);
  if (!field) {
    out.status = ReductionStatus::span_not_field;
    return out;
  }
  for (const auto& m : g.elements()) out.subgroup.push_back(m.apply(space, u));
  std::sort(out.subgroup.begin(), out.subgroup.end());
  const FieldOnV& f = *field;
  out.scheme = cyclotomic_coloring(
      space, [&f](Point a, Point k) { return f.mul(a, k); }, out.subgroup);
  out.colors_identical = *out.scheme == cyc.scheme;
  out.field = std::move(field);
  out.status = ReductionStatus::ok;
  return out;
}

void write_scheme_json(const CyclotomicScheme& cyc, const IntersectionTensor& tensor, std::ostream& out) {
  nlohmann::ordered_json j;
  j["N"] = cyc.scheme.n;
  j["rank"] = cyc.scheme.rank;
  j["valency"] = cyc.valency;
  j["q"] = cyc.nf.pair().q;
  j["n"] = cyc.nf.pair().n;
  j["variant"] = cyc.nf.variant();
  j["subgroup"] = cyc.subgroup;
  j["colors"] = cyc.scheme.colors;
  j["intersection_numbers"] = tensor.entries;
  out << j.dump(1) << "\n";
}

}  // namespace nfs
