#include "omlkit/block.hpp"

#include <algorithm>
#include <set>

#include "omlkit/clique.hpp"
#include "omlkit/errors.hpp"

namespace omlkit {

BlockView BlockView::create(LatticePtr ambient, std::vector<Element> members) {
  if (!ambient) throw PreconditionError("block needs an ambient lattice");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  const Lattice& L = *ambient;
  auto in = [&](Element e) {
    return std::binary_search(members.begin(), members.end(), e);
  };

  if (!in(L.bottom()) || !in(L.top()))
    throw InternalAlarm("block does not contain the bounds");
  for (Element a : members) {
    if (!in(L.ortho(a))) throw InternalAlarm("block not closed under ortho");
    for (Element b : members) {
      if (!L.commutes(a, b))
        throw InternalAlarm("block members " + L.name(a) + ", " + L.name(b) +
                            " do not commute");
      if (!in(L.meet(a, b)) || !in(L.join(a, b)))
        throw InternalAlarm("block not closed under meet/join");
    }
  }
  for (Element a : members)
    for (Element b : members)
      for (Element c : members)
        if (L.meet(L.join(a, b), c) != L.join(L.meet(a, c), L.meet(b, c)))
          throw InternalAlarm("block is not distributive at (" + L.name(a) +
                              ", " + L.name(b) + ", " + L.name(c) + ")");

  BlockView view;
  view.ambient_ = std::move(ambient);
  view.members_ = std::move(members);
  for (Element a : view.members_) {
    if (a == L.bottom()) continue;
    bool minimal = true;
    for (Element b : view.members_) {
      if (b == L.bottom() || b == a) continue;
      if (L.leq(b, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) view.atoms_.push_back(a);
  }

  for (Element m : view.members_) {
    std::vector<Element> below;
    for (Element a : view.atoms_)
      if (L.leq(a, m)) below.push_back(a);
    if (L.join_all(below) != m)
      throw InternalAlarm("block member " + L.name(m) +
                          " is not the join of its atoms");
  }
  return view;
}

bool BlockView::contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

std::vector<Element> BlockView::shared_members(const BlockView& other) const {
  std::vector<Element> out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return out;
}

TwoValuedHom::TwoValuedHom(BlockView domain, Element selected_atom)
    : domain_(std::move(domain)), selected_(selected_atom) {
  const auto& atoms = domain_.atoms();
  if (std::find(atoms.begin(), atoms.end(), selected_) == atoms.end())
    throw PreconditionError("selected element is not an atom of the block");
}

int TwoValuedHom::value(Element member) const {
  if (!domain_.contains(member))
    throw PreconditionError("element outside the hom's domain");
  return domain_.ambient()->leq(selected_, member) ? 1 : 0;
}

void TwoValuedHom::verify() const {
  const Lattice& L = *domain_.ambient();
  if (value(L.bottom()) != 0 || value(L.top()) != 1)
    throw InternalAlarm("hom does not fix the bounds");
  int ones = 0;
  for (Element a : domain_.atoms()) ones += value(a);
  if (ones != 1) throw InternalAlarm("hom must select exactly one atom");
  for (Element a : domain_.members()) {
    if (value(L.ortho(a)) != 1 - value(a))
      throw InternalAlarm("hom does not respect ortho at " + L.name(a));
    for (Element b : domain_.members()) {
      if (value(L.meet(a, b)) != std::min(value(a), value(b)))
        throw InternalAlarm("hom does not respect meet at (" + L.name(a) +
                            ", " + L.name(b) + ")");
      if (value(L.join(a, b)) != std::max(value(a), value(b)))
        throw InternalAlarm("hom does not respect join at (" + L.name(a) +
                            ", " + L.name(b) + ")");
    }
  }
}

std::vector<BlockView> enumerate_blocks(LatticePtr lattice) {
  const Lattice& L = *lattice;
  const std::size_t n = L.size();
  BitMatrix adj(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && L.commutes(static_cast<Element>(a), static_cast<Element>(b)) &&
          L.commutes(static_cast<Element>(b), static_cast<Element>(a)))
        adj.set(a, b);

  std::vector<BlockView> blocks;
  for (auto& clique : maximal_cliques(adj)) {
    std::vector<Element> members(clique.begin(), clique.end());
    blocks.push_back(BlockView::create(lattice, std::move(members)));
  }
  return blocks;  // maximal_cliques already yields canonical order
}

std::vector<TwoValuedHom> boolean_homs(const BlockView& block) {
  std::vector<TwoValuedHom> homs;
  homs.reserve(block.atoms().size());
  for (Element a : block.atoms()) {
    TwoValuedHom h(block, a);
    h.verify();
    homs.push_back(std::move(h));
  }
  return homs;
}

bool is_greechie_set(const Lattice& L, std::span<const Element> subset) {
  if (subset.empty())
    throw PreconditionError("greechie-set test needs a non-empty subset");
  const std::size_t k = subset.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        Element a = subset[i], b = subset[j], c = subset[l];
        bool a_ok = L.commutes(a, b) && L.commutes(b, a) && L.commutes(a, c) &&
                    L.commutes(c, a);
        bool b_ok = L.commutes(b, a) && L.commutes(a, b) && L.commutes(b, c) &&
                    L.commutes(c, b);
        bool c_ok = L.commutes(c, a) && L.commutes(a, c) && L.commutes(c, b) &&
                    L.commutes(b, c);
        if (!a_ok && !b_ok && !c_ok) return false;
      }
  return true;
}

namespace {

std::vector<Element> close_under(const Lattice& L, std::span<const Element> seed,
                                 bool with_ortho) {
  std::set<Element> members(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Element> snapshot(members.begin(), members.end());
    for (Element a : snapshot) {
      if (with_ortho && members.insert(L.ortho(a)).second) grew = true;
      for (Element b : snapshot) {
        if (members.insert(L.meet(a, b)).second) grew = true;
        if (members.insert(L.join(a, b)).second) grew = true;
      }
    }
  }
  return {members.begin(), members.end()};
}

}  // namespace

GeneratedSublattice generated_sublattice(LatticePtr lattice,
                                         std::span<const Element> subset) {
  if (subset.empty())
    throw PreconditionError("generated sublattice needs a non-empty subset");
  const Lattice& L = *lattice;
  GeneratedSublattice out;
  out.members = close_under(L, subset, /*with_ortho=*/false);

  out.closed_under_ortho = true;
  for (Element a : out.members)
    if (!std::binary_search(out.members.begin(), out.members.end(), L.ortho(a)))
      out.closed_under_ortho = false;

  out.distributive = true;
  for (Element a : out.members)
    for (Element b : out.members)
      for (Element c : out.members)
        if (L.meet(L.join(a, b), c) != L.join(L.meet(a, c), L.meet(b, c)))
          out.distributive = false;
  return out;
}

BlockView generated_boolean_subalgebra(LatticePtr lattice,
                                       std::span<const Element> generators) {
  const Lattice& L = *lattice;
  std::vector<Element> seed(generators.begin(), generators.end());
  seed.push_back(L.bottom());
  seed.push_back(L.top());
  auto members = close_under(L, seed, /*with_ortho=*/true);
  return BlockView::create(std::move(lattice), std::move(members));
}

BlockView center(LatticePtr lattice) {
  std::vector<Element> members = lattice->central_elements();
  return BlockView::create(std::move(lattice), std::move(members));
}

}  // namespace omlkit
