#pragma once

#include <span>
#include <string>
#include <vector>

#include "omlkit/lattice.hpp"

namespace omlkit {

/// A Boolean subalgebra of an ambient lattice, tracked as a sorted member
/// list plus its atoms (minimal nonzero members). Construction re-verifies
/// the full invariant set: members pairwise commute, are closed under meet,
/// join and orthocomplement, contain the bounds, satisfy distributivity on
/// all triples, and every member is the join of the atoms below it.
class BlockView {
 public:
  static BlockView create(LatticePtr ambient, std::vector<Element> members);

  const LatticePtr& ambient() const { return ambient_; }
  const std::vector<Element>& members() const { return members_; }
  const std::vector<Element>& atoms() const { return atoms_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element e) const;

  std::vector<Element> shared_members(const BlockView& other) const;
  bool operator==(const BlockView& other) const {
    return ambient_ == other.ambient_ && members_ == other.members_;
  }

 private:
  BlockView() = default;
  LatticePtr ambient_;
  std::vector<Element> members_;
  std::vector<Element> atoms_;
};

/// Two-valued Boolean homomorphism on a block, represented by its selected
/// atom: the unique atom mapped to 1. Evaluation at a member m is the order
/// test "selected atom below m".
class TwoValuedHom {
 public:
  TwoValuedHom(BlockView domain, Element selected_atom);

  int value(Element member) const;
  Element selected_atom() const { return selected_; }
  const BlockView& domain() const { return domain_; }

  /// Exhaustive invariant re-check: bounds map correctly, meet/join/ortho are
  /// respected on every member pair, exactly one atom takes value 1.
  void verify() const;

  bool operator==(const TwoValuedHom& o) const {
    return domain_ == o.domain_ && selected_ == o.selected_;
  }

 private:
  BlockView domain_;
  Element selected_;
};

/// All maximal Boolean sublattices (blocks) of a validated lattice, realized
/// as the maximal cliques of the commutation graph, in canonical order
/// (lexicographic by sorted member indices).
std::vector<BlockView> enumerate_blocks(LatticePtr lattice);

/// The two-valued homomorphisms of a block: exactly one per atom.
std::vector<TwoValuedHom> boolean_homs(const BlockView& block);

/// True iff among any three distinct elements of the subset, at least one
/// commutes with the other two. Vacuously true below three elements.
bool is_greechie_set(const Lattice& lattice, std::span<const Element> subset);

/// Fixpoint closure of a subset under meet and join only; reports whether the
/// resulting sublattice is Boolean (distributive and closed under ortho).
struct GeneratedSublattice {
  std::vector<Element> members;
  bool closed_under_ortho = false;
  bool distributive = false;
  bool boolean() const { return closed_under_ortho && distributive; }
};
GeneratedSublattice generated_sublattice(LatticePtr lattice,
                                         std::span<const Element> subset);

/// Closure under meet, join and ortho, packaged as a verified BlockView.
/// Callers use this only where theory guarantees a Boolean result.
BlockView generated_boolean_subalgebra(LatticePtr lattice,
                                       std::span<const Element> generators);

/// The center as a block: all central elements, verified Boolean.
BlockView center(LatticePtr lattice);

}  // namespace omlkit
