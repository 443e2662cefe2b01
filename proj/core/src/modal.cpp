#include "omlkit/modal.hpp"

#include <algorithm>

#include "omlkit/central.hpp"
#include "omlkit/errors.hpp"

namespace omlkit {

Element necessity_of(const Lattice& L, Element a) {
  std::vector<Element> below;
  for (Element z : L.central_elements())
    if (L.leq(z, a)) below.push_back(z);
  Element box = L.join_all(below);

  // witnesses for Boolean saturation; unreachable for a validated finite
  // lattice, kept as a consistency alarm
  if (!L.is_central(box))
    throw InternalAlarm("not Boolean saturated: □" + L.name(a) +
                        " is not central");
  if (!L.leq(box, a))
    throw InternalAlarm("not Boolean saturated: □" + L.name(a) +
                        " is not below " + L.name(a));
  for (Element z : below)
    if (!L.leq(z, box))
      throw InternalAlarm("not Boolean saturated: central " + L.name(z) +
                          " below " + L.name(a) + " exceeds the join");
  return box;
}

ModalAlgebra::ModalAlgebra(LatticePtr base, std::vector<Element> box)
    : base_(std::move(base)), box_(std::move(box)) {}

ModalAlgebra ModalAlgebra::canonical(LatticePtr base) {
  std::vector<Element> box(base->size());
  for (Element a = 0; a < static_cast<Element>(base->size()); ++a)
    box[a] = necessity_of(*base, a);
  return ModalAlgebra(std::move(base), std::move(box));
}

Element ModalAlgebra::diamond(Element a) const {
  const Lattice& L = *base_;
  Element d = L.ortho(box_[L.ortho(a)]);

  // must be the least central element above a
  if (!L.is_central(d) || !L.leq(a, d))
    throw InternalAlarm("◇" + L.name(a) + " is not a central upper bound");
  for (Element z : L.central_elements())
    if (L.leq(a, z) && !L.leq(d, z))
      throw InternalAlarm("◇" + L.name(a) + " is not minimal among central "
                          "upper bounds");
  return d;
}

bool ModalAxiomReport::all_pass() const {
  return std::all_of(axioms.begin(), axioms.end(),
                     [](const ModalAxiomResult& r) { return r.pass; });
}

const char* ModalAxiomReport::axiom_name(std::size_t i) {
  static const char* names[] = {"S1", "S2", "S3", "S4", "S5", "S6", "S7"};
  return names[i];
}

ModalAxiomReport verify_modal_axioms(const Lattice& L,
                                     std::span<const Element> box,
                                     int witness_cap) {
  if (box.size() != L.size())
    throw InputError("box table must assign every element");
  for (Element b : box)
    if (b < 0 || b >= static_cast<Element>(L.size()))
      throw InputError("box table entry out of range");

  ModalAxiomReport report;
  report.axioms.resize(7);
  auto fail = [&](std::size_t axiom, std::vector<std::string> w) {
    auto& r = report.axioms[axiom];
    r.pass = false;
    if (static_cast<int>(r.witnesses.size()) < witness_cap)
      r.witnesses.push_back(std::move(w));
  };

  const auto n = static_cast<Element>(L.size());
  for (Element x = 0; x < n; ++x) {
    if (!L.leq(box[x], x)) fail(0, {L.name(x)});                    // S1
    if (box[box[x]] != box[x]) fail(2, {L.name(x)});                // S3
  }
  if (box[L.top()] != L.top()) fail(1, {L.name(L.top())});          // S2

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (box[L.meet(x, y)] != L.meet(box[x], box[y]))              // S4
        fail(3, {L.name(x), L.name(y)});
      Element bx = box[x];
      if (y != L.join(L.meet(y, bx), L.meet(y, L.ortho(bx))))       // S5
        fail(4, {L.name(x), L.name(y)});
      if (box[L.join(x, box[y])] != L.join(box[x], box[y]))         // S6
        fail(5, {L.name(x), L.name(y)});
      Element lhs = box[L.join(L.ortho(x), L.meet(y, x))];          // S7
      if (!L.leq(lhs, L.join(L.ortho(box[x]), box[y])))
        fail(6, {L.name(x), L.name(y)});
    }
  }
  return report;
}

ModalExtension modal_extension(LatticePtr lattice) {
  ModalAlgebra target = ModalAlgebra::canonical(lattice);

  std::vector<Element> embedding(lattice->size());
  for (Element e = 0; e < static_cast<Element>(lattice->size()); ++e)
    embedding[e] = e;

  // elementwise monomorphism checks (identity map, verified not assumed)
  const Lattice& S = *lattice;
  const Lattice& T = *target.base();
  if (embedding[S.bottom()] != T.bottom() || embedding[S.top()] != T.top())
    throw InternalAlarm("modal embedding moves the bounds");
  for (Element a = 0; a < static_cast<Element>(S.size()); ++a) {
    if (T.ortho(embedding[a]) != embedding[S.ortho(a)])
      throw InternalAlarm("modal embedding does not respect ortho");
    for (Element b = 0; b < static_cast<Element>(S.size()); ++b) {
      if (embedding[a] == embedding[b] && a != b)
        throw InternalAlarm("modal embedding is not injective");
      if (T.meet(embedding[a], embedding[b]) != embedding[S.meet(a, b)] ||
          T.join(embedding[a], embedding[b]) != embedding[S.join(a, b)])
        throw InternalAlarm("modal embedding is not a homomorphism");
    }
  }

  // the base splits into trivially-centered factors; decomposition verifies
  // the product isomorphism internally
  central_decomposition(lattice);

  return ModalExtension{std::move(lattice), std::move(target),
                        std::move(embedding)};
}

BlockView possibility_space(const ModalExtension& ext) {
  const Lattice& T = *ext.target.base();
  std::vector<Element> generators;
  for (Element p = 0; p < static_cast<Element>(ext.source->size()); ++p)
    generators.push_back(ext.target.diamond(ext.embed(p)));

  BlockView space = generated_boolean_subalgebra(ext.target.base(), generators);
  for (Element m : space.members())
    if (!T.is_central(m))
      throw InternalAlarm("possibility space left the center at " + T.name(m));
  return space;
}

}  // namespace omlkit
