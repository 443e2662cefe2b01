#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omlkit/bits.hpp"

namespace omlkit {

using Element = int;

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

/// Raw candidate structure as read from input: named elements, an order
/// relation given as pairs (reflexive and transitive pairs optional), and a
/// total orthocomplement map. Nothing here is trusted until it passes
/// validate_structure.
struct LatticeData {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> leq_pairs;
  std::vector<std::pair<std::string, std::string>> ortho_pairs;
  std::string bottom_name = "0";
  std::string top_name = "1";
};

struct AxiomFailure {
  std::string axiom;                 // stable identifier, e.g. "orthomodular-law"
  std::vector<std::string> witness;  // element names of a minimal counterexample
};

struct ValidationOptions {
  int witness_cap = 32;  // failures collected exhaustively up to this many per axiom
};

/// Outcome of validate_structure. Input errors (malformed candidate) are kept
/// separate from axiom failures (well-formed candidate that is not an
/// orthomodular lattice); only a fully passing candidate yields a lattice.
struct ValidationReport {
  std::vector<std::string> input_errors;
  std::vector<AxiomFailure> failures;
  std::size_t element_count = 0;
  LatticePtr lattice;  // non-null iff pass()

  bool input_ok() const { return input_errors.empty(); }
  bool pass() const { return input_ok() && failures.empty(); }
  bool axiom_failed(const std::string& axiom) const;
  std::string summary() const;
};

/// A certified finite orthomodular lattice: immutable after construction,
/// all relations precomputed as dense tables, every accessor a table lookup.
/// Instances exist only as outputs of validate_structure (or helpers built
/// on it), so holding a Lattice is holding a proof of the axioms.
class Lattice {
 public:
  std::size_t size() const { return names_.size(); }
  const std::string& name(Element e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> index_of(const std::string& name) const;

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element a, Element b) const { return leq_.get(a, b); }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element ortho(Element a) const { return ortho_[a]; }

  /// a commutes with b iff a = (a ∧ b) ∨ (a ∧ ¬b).
  bool commutes(Element a, Element b) const {
    return a == join(meet(a, b), meet(a, ortho(b)));
  }

  /// z is central iff a = (a ∧ z) ∨ (a ∧ ¬z) for every a.
  bool is_central(Element z) const { return central_[z]; }
  const std::vector<Element>& central_elements() const { return centrals_; }

  bool is_atom(Element a) const;
  std::vector<Element> atoms() const;
  std::vector<Element> upper_covers(Element a) const;

  /// Join over an arbitrary element set; empty set yields bottom.
  Element join_all(const std::vector<Element>& xs) const;
  Element meet_all(const std::vector<Element>& xs) const;

  const BitMatrix& leq_matrix() const { return leq_; }

 private:
  friend ValidationReport validate_structure(const LatticeData&,
                                             const ValidationOptions&);
  Lattice() = default;

  std::vector<std::string> names_;
  std::map<std::string, Element> index_;
  BitMatrix leq_;
  BitMatrix geq_;  // transpose; row e = all elements below-or-equal e
  std::vector<Element> ortho_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<bool> central_;
  std::vector<Element> centrals_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Checks the three layers — lattice, ortholattice, orthomodular law — and
/// reports every failed axiom with a witness tuple (capped, deterministic
/// index order). A passing candidate comes back with cached meet/join tables.
ValidationReport validate_structure(const LatticeData& candidate,
                                    const ValidationOptions& options = {});

/// Direct product of finitely many lattices; element names are tuples of
/// factor element names. Product of certified lattices is certified again
/// through validate_structure.
LatticePtr product(const std::vector<LatticePtr>& factors);

/// Lattice isomorphism test via atom-map backtracking (finite OMLs are
/// atomistic, so an atom bijection determines the whole map).
bool is_isomorphic(const Lattice& a, const Lattice& b);

}  // namespace omlkit
