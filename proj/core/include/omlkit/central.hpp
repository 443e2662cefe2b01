#pragma once

#include <vector>

#include "omlkit/block.hpp"
#include "omlkit/lattice.hpp"

namespace omlkit {

/// Factor congruence induced by a central element z: a ~ b iff a∧z = b∧z.
/// Construction verifies the congruence laws and the pairing with the
/// congruence of ¬z (meet is the diagonal, composition is everything).
struct CentralCongruence {
  Element central_element;
  std::vector<int> class_index;               // element -> class
  std::vector<std::vector<Element>> classes;  // sorted members per class
};

CentralCongruence central_congruence(LatticePtr lattice, Element z);

/// Quotient by the congruence of a central z, with its projection map. The
/// quotient is revalidated as an orthomodular lattice and the projection is
/// checked to be a surjective homomorphism for meet, join and ortho.
struct QuotientResult {
  LatticePtr quotient;
  std::vector<Element> projection;  // ambient element -> quotient element
};

QuotientResult congruence_quotient(LatticePtr lattice, Element z);

/// Splits a lattice into directly indecomposable factors, one per atom of the
/// center, together with the verified isomorphism onto the factor product.
struct Decomposition {
  std::vector<LatticePtr> factors;
  LatticePtr product_lattice;
  std::vector<Element> iso;  // original element -> product element
};

Decomposition central_decomposition(LatticePtr lattice);

}  // namespace omlkit
