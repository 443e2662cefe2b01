#pragma once

#include <span>
#include <string>
#include <vector>

#include "omlkit/block.hpp"
#include "omlkit/lattice.hpp"

namespace omlkit {

/// Largest central element below a, computed as the join of all central
/// elements under a. Asserts the defining witness properties: the result is
/// central, lies below a, and no central element below a exceeds it.
Element necessity_of(const Lattice& lattice, Element a);

/// A lattice equipped with a necessity table. The canonical construction
/// derives the table from the center; a table can also be supplied verbatim
/// for axiom auditing.
class ModalAlgebra {
 public:
  static ModalAlgebra canonical(LatticePtr base);

  const LatticePtr& base() const { return base_; }
  Element box(Element a) const { return box_[a]; }

  /// ¬□¬a; asserted equal to the least central element above a.
  Element diamond(Element a) const;

  const std::vector<Element>& box_table() const { return box_; }

 private:
  ModalAlgebra(LatticePtr base, std::vector<Element> box);
  LatticePtr base_;
  std::vector<Element> box_;
};

/// Result of auditing a candidate necessity table against the seven
/// operator axioms. Witnesses are element-name tuples, capped and collected
/// in deterministic order.
struct ModalAxiomResult {
  bool pass = true;
  std::vector<std::vector<std::string>> witnesses;
};

struct ModalAxiomReport {
  // indexed S1..S7 in order
  std::vector<ModalAxiomResult> axioms;
  bool all_pass() const;
  static const char* axiom_name(std::size_t i);  // "S1".."S7"
};

/// Exhaustively evaluates the operator axioms S1-S7 for a supplied box table:
///   S1  □x ≤ x
///   S2  □1 = 1
///   S3  □□x = □x
///   S4  □(x∧y) = □x ∧ □y
///   S5  y = (y∧□x) ∨ (y∧¬□x)
///   S6  □(x ∨ □y) = □x ∨ □y
///   S7  □(¬x ∨ (y∧x)) ≤ ¬□x ∨ □y
/// S7 (and the other pair axioms) iterate ordered pairs.
ModalAxiomReport verify_modal_axioms(const Lattice& base,
                                     std::span<const Element> box_table,
                                     int witness_cap = 32);

/// Embedding of a lattice into a modal algebra. At finite scale the target
/// carries the canonical box and the embedding is the identity; construction
/// still verifies elementwise that the map is an orthomodular monomorphism.
struct ModalExtension {
  LatticePtr source;
  ModalAlgebra target;
  std::vector<Element> embedding;

  Element embed(Element e) const { return embedding[e]; }
};

/// Builds the canonical modal extension and certifies the construction:
/// the embedding preserves meet, join, ortho and the bounds, and the base
/// decomposes into factors with trivial centers.
ModalExtension modal_extension(LatticePtr lattice);

/// The Boolean subalgebra generated by all diamond images of the source,
/// verified to lie inside the center of the target.
BlockView possibility_space(const ModalExtension& extension);

}  // namespace omlkit
