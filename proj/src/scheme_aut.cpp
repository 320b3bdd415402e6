#include "nfs/scheme_aut.hpp"

#include <stdexcept>

#include "nfs/backtrack.hpp"

namespace nfs {

AutResult aut_group(const CyclotomicScheme& cyc, std::uint64_t bound) {
  const VectorSpace& space = cyc.nf.space();
  if (cyc.is_trivial()) return {true, std::nullopt, PermGroup::symmetric(space.size())};
  MatrixGroup closure = linear_closure(base_group(cyc.nf, cyc.subgroup), bound);
  std::vector<Perm> gens = translation_group(space).generators();
  for (const auto& m : closure.generators()) gens.push_back(m.to_perm(space));
  PermGroup group(space.size(), gens);
  if (group.order() != static_cast<std::uint64_t>(space.size()) * closure.order()) {
    throw std::logic_error("aut_group: |T·Ḡ| differs from |V|·|Ḡ|");
  }
  for (const auto& g : gens) {
    if (!preserves_colors(cyc.scheme, g)) throw std::logic_error("aut_group: generator moves a color class");
  }
  return {false, std::move(closure), std::move(group)};
}

IsoResult are_isomorphic(const CyclotomicScheme& a, const CyclotomicScheme& b, std::uint64_t bound) {
  IsoResult out;
  const VectorSpace& space = a.nf.space();
  if (!(space == b.nf.space())) return out;
  if (a.scheme.rank != b.scheme.rank) return out;
  if (a.is_trivial()) {
    out.isomorphic = true;
    out.witness = Perm::identity(space.size());
    out.conjugator = Matrix::identity(space);
    return out;
  }
  const MatrixGroup ga = linear_closure(base_group(a.nf, a.subgroup), bound);
  const MatrixGroup gb = linear_closure(base_group(b.nf, b.subgroup), bound);
  auto g = find_conjugator(ga, gb, bound);
  if (!g) return out;
  Perm f = g->to_perm(space);
  if (!is_color_isomorphism(a.scheme, b.scheme, f)) {
    throw std::logic_error("are_isomorphic: conjugating map is not a color isomorphism");
  }
  out.isomorphic = true;
  out.witness = std::move(f);
  out.conjugator = std::move(g);
  return out;
}

bool is_additive(const Perm& g, const VectorSpace& space) {
  const std::uint32_t n = space.size();
  if (g.degree() != n) return false;
  for (Point x = 0; x < n; ++x) {
    for (Point y = x; y < n; ++y) {
      if (g(space.add(x, y)) != space.add(g(x), g(y))) return false;
    }
  }
  return true;
}

bool stabilizer_is_linear(const PermGroup& aut, const VectorSpace& space) {
  const PermGroup stab = aut.stabilizer(0);
  for (const auto& g : stab.generators()) {
    if (!is_additive(g, space)) return false;
  }
  return true;
}

StructureCheck check_aut_structure(const CyclotomicScheme& cyc, const PermGroup& aut, bool primitive,
                                   std::uint64_t bound) {
  StructureCheck out;
  const VectorSpace& space = cyc.nf.space();
  const PermGroup t = translation_group(space);
  if (!primitive) {
    const auto fr = is_frobenius(aut);
    if (!fr.is_frobenius) {
      out.detail = "not a Frobenius group";
      return out;
    }
    if (!(*fr.kernel == t)) {
      out.detail = "Frobenius kernel differs from T";
      return out;
    }
    if (!(aut == affine_group(cyc.nf, cyc.subgroup))) {
      out.detail = "Aut differs from the affine group of K";
      return out;
    }
    out.ok = out.full = true;
    return out;
  }
  if (aut.is_symmetric_marker() || aut.order() > bound) {
    out.ok = is_normal_subgroup(aut, t);
    out.detail = out.ok ? "T normal (socle not enumerated)" : "T not normal";
    return out;
  }
  const auto mins = minimal_normal_subgroups(aut, bound);
  out.full = true;
  if (mins.size() != 1) {
    out.detail = std::to_string(mins.size()) + " minimal normal subgroups";
    return out;
  }
  if (!(mins[0] == t)) {
    out.detail = "minimal normal subgroup differs from T";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace nfs
