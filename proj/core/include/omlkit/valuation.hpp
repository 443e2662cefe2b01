#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omlkit/block.hpp"
#include "omlkit/filter.hpp"
#include "omlkit/modal.hpp"

namespace omlkit {

/// A family of two-valued homs, one per maximal block in canonical order,
/// agreeing on every shared element.
struct GlobalValuation {
  std::vector<BlockView> blocks;
  std::vector<Element> selected;  // selected atom per block

  /// Exhaustive compatibility re-check over all block pairs and all shared
  /// elements, plus per-hom invariants.
  void verify() const;

  TwoValuedHom hom(std::size_t block_index) const;
};

enum class SearchMode { First, Count, Enumerate };
enum class SearchStatus { Sat, Unsat, NodeLimitExceeded };

struct SearchLimits {
  std::uint64_t node_limit = 10'000'000;
  std::size_t enumerate_cap = 10'000;
};

struct ValuationSearchResult {
  SearchStatus status = SearchStatus::Unsat;
  std::vector<GlobalValuation> witnesses;
  std::uint64_t solution_count = 0;
  std::uint64_t nodes = 0;
  std::vector<std::string> block_order;  // "B0", "B1", ... visit order
  bool truncated = false;                // enumeration stopped at the cap

  bool sat() const { return status == SearchStatus::Sat; }
};

/// Backtracking search for a global valuation: blocks in canonical order,
/// one selected atom per block, agreement propagated eagerly on all shared
/// elements after each assignment. Every returned witness is re-verified.
/// An unsat result certifies full exhaustion via a replayable node count.
ValuationSearchResult find_global_valuation(LatticePtr lattice, SearchMode mode,
                                            SearchLimits limits = {});

/// Output of an actualization: the hom on the chosen block with the target
/// element forced to 1, plus the witnessing hom on the join of the block
/// with the possibility space that restricts to it.
struct Actualization {
  TwoValuedHom restricted;  // on W, maps p to 1
  TwoValuedHom witness;     // on <W ∪ ◇L>, restricts to both inputs
};

/// Actualizes p inside the block W compatibly with a hom f on the
/// possibility space. Preconditions: p ∈ W, p ≠ 0, f(◇p) = 1. The
/// construction extends the filter generated by f's filter together with p;
/// a properness failure is an internal alarm, never silently patched.
Actualization actualize(const ModalExtension& extension, const BlockView& W,
                        Element p, const TwoValuedHom& f);

/// Extends a hom on a Boolean sublattice W to the subalgebra generated by
/// W and the possibility space, restricting back to it exactly.
TwoValuedHom extend_to_modal_closure(const ModalExtension& extension,
                                     const BlockView& W, const TwoValuedHom& f);

/// Global-valuation search constrained blockwise to agree with a fixed hom f
/// on each block's intersection with the possibility space.
ValuationSearchResult compatible_actualization(const ModalExtension& extension,
                                               const TwoValuedHom& f,
                                               SearchMode mode,
                                               SearchLimits limits = {});

/// Decides both sides of the valuation/actualization equivalence: a global
/// valuation exists iff some hom on the possibility space admits a
/// compatible actualization. A mismatch between completed sides raises an
/// internal alarm.
struct EquivalenceReport {
  bool has_global_valuation = false;
  bool some_hom_admits_actualization = false;
  bool equivalent = false;
  bool complete = true;  // false if a node limit interrupted either side
  ValuationSearchResult left;
  std::vector<std::pair<Element, ValuationSearchResult>> right;  // per ◇L-hom
};

EquivalenceReport check_valuation_actualization_equivalence(
    const ModalExtension& extension, SearchLimits limits = {});

/// {"valuation": {"B0": atom-name, ...}}
std::string witness_json(const GlobalValuation& valuation);

/// {"exhausted": true, "nodes": n, "order": [block ids]}
std::string unsat_certificate_json(const ValuationSearchResult& result);

}  // namespace omlkit
