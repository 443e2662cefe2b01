#include "omlkit/central.hpp"

#include <algorithm>
#include <map>

#include "omlkit/errors.hpp"

namespace omlkit {

CentralCongruence central_congruence(LatticePtr lattice, Element z) {
  const Lattice& L = *lattice;
  if (!L.is_central(z))
    throw PreconditionError("congruence requires a central element, got " +
                            L.name(z));

  const auto n = static_cast<Element>(L.size());
  CentralCongruence cong;
  cong.central_element = z;
  cong.class_index.assign(n, -1);

  std::map<Element, int> by_rep;  // a∧z -> class id
  for (Element a = 0; a < n; ++a) {
    Element rep = L.meet(a, z);
    auto [it, fresh] = by_rep.emplace(rep, static_cast<int>(cong.classes.size()));
    if (fresh) cong.classes.emplace_back();
    cong.class_index[a] = it->second;
    cong.classes[it->second].push_back(a);
  }

  // congruence laws: operations well-defined on classes
  auto same = [&](Element a, Element b) {
    return cong.class_index[a] == cong.class_index[b];
  };
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!same(a, b)) continue;
      if (!same(L.ortho(a), L.ortho(b)))
        throw InternalAlarm("central congruence not compatible with ortho");
      for (Element c = 0; c < n; ++c) {
        if (!same(L.meet(a, c), L.meet(b, c)) ||
            !same(L.join(a, c), L.join(b, c)))
          throw InternalAlarm("central congruence not compatible with meet/join");
      }
    }

  // pairing with the complement congruence: intersection is the diagonal,
  // composition reaches every pair
  const Element nz = L.ortho(z);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      bool both = same(a, b) && L.meet(a, nz) == L.meet(b, nz);
      if (both && a != b)
        throw InternalAlarm("congruences of z and ¬z do not meet in the diagonal");
      bool composed = false;
      for (Element c = 0; c < n && !composed; ++c)
        composed = same(a, c) && L.meet(c, nz) == L.meet(b, nz);
      if (!composed)
        throw InternalAlarm("congruences of z and ¬z do not compose to everything");
    }

  return cong;
}

QuotientResult congruence_quotient(LatticePtr lattice, Element z) {
  const Lattice& L = *lattice;
  CentralCongruence cong = central_congruence(lattice, z);

  // canonical class representatives are the values a∧z, i.e. the interval
  // [0, z] with relative complement ¬a∧z
  std::vector<Element> reps;
  for (const auto& cls : cong.classes) reps.push_back(L.meet(cls.front(), z));

  LatticeData data;
  for (Element rep : reps) data.names.push_back(L.name(rep));
  data.bottom_name = L.name(L.bottom());
  data.top_name = L.name(z);

  const std::size_t k = reps.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && L.leq(reps[i], reps[j]))
        data.leq_pairs.push_back({data.names[i], data.names[j]});
    Element rel_ortho = L.meet(L.ortho(reps[i]), z);
    auto it = std::find(reps.begin(), reps.end(), rel_ortho);
    if (it == reps.end())
      throw InternalAlarm("relative complement left the quotient representatives");
    data.ortho_pairs.push_back(
        {data.names[i], data.names[it - reps.begin()]});
  }

  auto report = validate_structure(data);
  if (!report.pass())
    throw InternalAlarm("quotient by a central element failed validation: " +
                        report.summary());

  QuotientResult out;
  out.quotient = report.lattice;
  out.projection.resize(L.size());
  for (Element a = 0; a < static_cast<Element>(L.size()); ++a)
    out.projection[a] = cong.class_index[a];

  // class ids were assigned in first-encounter order which matches reps/names
  const Lattice& Q = *out.quotient;
  for (Element a = 0; a < static_cast<Element>(L.size()); ++a) {
    if (Q.name(out.projection[a]) != L.name(L.meet(a, z)))
      throw InternalAlarm("quotient projection misaligned with representatives");
    if (Q.ortho(out.projection[a]) != out.projection[L.ortho(a)])
      throw InternalAlarm("quotient projection does not respect ortho");
    for (Element b = 0; b < static_cast<Element>(L.size()); ++b) {
      if (Q.meet(out.projection[a], out.projection[b]) !=
              out.projection[L.meet(a, b)] ||
          Q.join(out.projection[a], out.projection[b]) !=
              out.projection[L.join(a, b)])
        throw InternalAlarm("quotient projection is not a homomorphism");
    }
  }
  return out;
}

Decomposition central_decomposition(LatticePtr lattice) {
  const Lattice& L = *lattice;
  BlockView Z = center(lattice);

  Decomposition out;
  std::vector<QuotientResult> quotients;
  for (Element z : Z.atoms()) {
    quotients.push_back(congruence_quotient(lattice, z));
    out.factors.push_back(quotients.back().quotient);
  }

  for (const auto& f : out.factors)
    if (f->central_elements().size() != 2 && f->size() > 1)
      throw InternalAlarm("decomposition factor has a nontrivial center");

  out.product_lattice = product(out.factors);
  const Lattice& P = *out.product_lattice;

  // element a maps to the tuple of its classes, one per central atom
  out.iso.resize(L.size());
  for (Element a = 0; a < static_cast<Element>(L.size()); ++a) {
    std::string name = "(";
    for (std::size_t i = 0; i < out.factors.size(); ++i) {
      if (i) name += ",";
      name += out.factors[i]->name(quotients[i].projection[a]);
    }
    name += ")";
    auto idx = P.index_of(name);
    if (!idx)
      throw InternalAlarm("decomposition image missing from the factor product");
    out.iso[a] = *idx;
  }

  // verified bijective homomorphism: ortho and order carried exactly
  std::vector<bool> hit(P.size(), false);
  for (Element a = 0; a < static_cast<Element>(L.size()); ++a) {
    if (hit[out.iso[a]])
      throw InternalAlarm("decomposition map is not injective");
    hit[out.iso[a]] = true;
  }
  if (L.size() != P.size())
    throw InternalAlarm("decomposition map is not onto the factor product");
  for (Element a = 0; a < static_cast<Element>(L.size()); ++a) {
    if (P.ortho(out.iso[a]) != out.iso[L.ortho(a)])
      throw InternalAlarm("decomposition map does not respect ortho");
    for (Element b = 0; b < static_cast<Element>(L.size()); ++b)
      if (L.leq(a, b) != P.leq(out.iso[a], out.iso[b]))
        throw InternalAlarm("decomposition map does not respect the order");
  }
  return out;
}

}  // namespace omlkit
