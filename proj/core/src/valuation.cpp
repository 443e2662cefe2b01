#include "omlkit/valuation.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "omlkit/errors.hpp"

namespace omlkit {

void GlobalValuation::verify() const {
  if (blocks.size() != selected.size())
    throw InternalAlarm("valuation block/atom arity mismatch");
  for (std::size_t i = 0; i < blocks.size(); ++i) hom(i).verify();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      TwoValuedHom hi = hom(i), hj = hom(j);
      for (Element shared : blocks[i].shared_members(blocks[j]))
        if (hi.value(shared) != hj.value(shared))
          throw InternalAlarm(
              "global valuation incompatible on shared element " +
              blocks[i].ambient()->name(shared));
    }
  }
}

TwoValuedHom GlobalValuation::hom(std::size_t block_index) const {
  return TwoValuedHom(blocks[block_index], selected[block_index]);
}

namespace {

// one backtracking engine serves both the unconstrained search and the
// possibility-space-constrained one; node accounting must stay identical
// across modes so unsat certificates replay exactly
struct ValuationSearch {
  const Lattice& L;
  const std::vector<BlockView>& blocks;
  std::vector<std::vector<Element>> candidates;        // per block
  std::vector<std::vector<std::vector<Element>>> shared;  // [i][j], i != j
  SearchMode mode;
  SearchLimits limits;
  ValuationSearchResult& result;
  std::vector<Element> chosen;
  bool out_of_budget = false;

  bool agree(Element a, Element b, const std::vector<Element>& on) const {
    for (Element s : on)
      if (L.leq(a, s) != L.leq(b, s)) return false;
    return true;
  }

  bool consistent_with_assigned(std::size_t i, Element a,
                                std::size_t upto) const {
    for (std::size_t j = 0; j < upto; ++j)
      if (!agree(a, chosen[j], shared[i][j])) return false;
    return true;
  }

  // eager propagation: after tentatively assigning block i, every later
  // block must retain at least one candidate compatible with all choices
  bool future_feasible(std::size_t i) const {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      bool any = false;
      for (Element b : candidates[j]) {
        if (consistent_with_assigned(j, b, i + 1)) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  }

  // returns false when the search should stop early (witness found in First
  // mode, enumeration cap hit, or node budget exhausted)
  bool dfs(std::size_t i) {
    if (i == blocks.size()) {
      ++result.solution_count;
      if (mode != SearchMode::Count) {
        GlobalValuation v{blocks, chosen};
        v.verify();
        result.witnesses.push_back(std::move(v));
      }
      if (mode == SearchMode::First) return false;
      if (mode == SearchMode::Enumerate &&
          result.witnesses.size() >= limits.enumerate_cap) {
        result.truncated = true;
        return false;
      }
      return true;
    }
    for (Element a : candidates[i]) {
      ++result.nodes;
      if (result.nodes > limits.node_limit) {
        out_of_budget = true;
        return false;
      }
      if (!consistent_with_assigned(i, a, i)) continue;
      chosen[i] = a;
      if (!future_feasible(i)) continue;
      if (!dfs(i + 1)) return false;
    }
    return true;
  }
};

ValuationSearchResult run_search(
    LatticePtr lattice, const std::vector<BlockView>& blocks, SearchMode mode,
    SearchLimits limits,
    const std::function<bool(const BlockView&, Element)>& admit) {
  const Lattice& L = *lattice;
  ValuationSearchResult result;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    result.block_order.push_back("B" + std::to_string(i));

  ValuationSearch search{L, blocks, {}, {}, mode, limits, result, {}, false};
  search.candidates.resize(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (Element a : blocks[i].atoms())
      if (!admit || admit(blocks[i], a)) search.candidates[i].push_back(a);

  search.shared.assign(blocks.size(), {});
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    search.shared[i].resize(blocks.size());
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (i != j) search.shared[i][j] = blocks[i].shared_members(blocks[j]);
  }

  search.chosen.assign(blocks.size(), -1);
  search.dfs(0);

  if (search.out_of_budget)
    result.status = SearchStatus::NodeLimitExceeded;
  else
    result.status =
        result.solution_count > 0 ? SearchStatus::Sat : SearchStatus::Unsat;
  return result;
}

}  // namespace

ValuationSearchResult find_global_valuation(LatticePtr lattice, SearchMode mode,
                                            SearchLimits limits) {
  auto blocks = enumerate_blocks(lattice);
  return run_search(std::move(lattice), blocks, mode, limits, nullptr);
}

Actualization actualize(const ModalExtension& ext, const BlockView& W,
                        Element p, const TwoValuedHom& f) {
  LatticePtr base = ext.target.base();
  const Lattice& L = *base;
  if (W.ambient() != base)
    throw PreconditionError("block does not live in the extension target");
  if (!W.contains(p))
    throw PreconditionError("element " + L.name(p) + " is not in the block");
  if (p == L.bottom())
    throw PreconditionError("cannot actualize the bottom element");

  BlockView space = possibility_space(ext);
  if (!(f.domain() == space))
    throw PreconditionError("hom is not defined on the possibility space");
  Element dp = ext.target.diamond(p);
  if (f.value(dp) != 1)
    throw PreconditionError("hom assigns 0 to the possibility of " + L.name(p));

  std::vector<Element> generators = W.members();
  generators.insert(generators.end(), space.members().begin(),
                    space.members().end());
  BlockView closure = generated_boolean_subalgebra(base, generators);

  std::vector<Element> seed;
  for (Element m : space.members())
    if (f.value(m) == 1) seed.push_back(m);
  seed.push_back(p);
  FilterView lifted = generated_filter(closure, seed);
  if (!lifted.proper())
    throw InternalAlarm("actualization filter of " + L.name(p) +
                        " is improper; this contradicts the existence theorem");

  MaximalFilter maximal = extend_to_maximal(closure, lifted);
  const TwoValuedHom& g = maximal.hom;

  // restrict g to W: exactly one W-atom is valued 1
  Element selected = -1;
  for (Element a : W.atoms()) {
    if (g.value(a) == 1) {
      if (selected >= 0)
        throw InternalAlarm("restriction to the block selects two atoms");
      selected = a;
    }
  }
  if (selected < 0)
    throw InternalAlarm("restriction to the block selects no atom");
  TwoValuedHom fp(W, selected);
  fp.verify();

  if (fp.value(p) != 1)
    throw InternalAlarm("actualization failed to force " + L.name(p) + " to 1");
  for (Element m : W.members())
    if (g.value(m) != fp.value(m))
      throw InternalAlarm("witness hom does not restrict to the block hom");
  for (Element m : space.members())
    if (g.value(m) != f.value(m))
      throw InternalAlarm("witness hom does not restrict to the given hom");

  return Actualization{std::move(fp), g};
}

TwoValuedHom extend_to_modal_closure(const ModalExtension& ext,
                                     const BlockView& W,
                                     const TwoValuedHom& f) {
  LatticePtr base = ext.target.base();
  if (W.ambient() != base)
    throw PreconditionError("block does not live in the extension target");
  if (!(f.domain() == W))
    throw PreconditionError("hom is not defined on the given block");

  BlockView space = possibility_space(ext);
  std::vector<Element> generators = W.members();
  generators.insert(generators.end(), space.members().begin(),
                    space.members().end());
  BlockView closure = generated_boolean_subalgebra(base, generators);

  FilterView lifted = generated_filter(closure, filter_of_hom(f).members());
  if (!lifted.proper())
    throw InternalAlarm("hom filter became improper in the modal closure");
  MaximalFilter maximal = extend_to_maximal(closure, lifted);

  for (Element m : W.members())
    if (maximal.hom.value(m) != f.value(m))
      throw InternalAlarm("modal closure extension does not restrict to f");
  return maximal.hom;
}

ValuationSearchResult compatible_actualization(const ModalExtension& ext,
                                               const TwoValuedHom& f,
                                               SearchMode mode,
                                               SearchLimits limits) {
  LatticePtr base = ext.target.base();
  BlockView space = possibility_space(ext);
  if (!(f.domain() == space))
    throw PreconditionError("hom is not defined on the possibility space");

  const Lattice& L = *base;
  auto blocks = enumerate_blocks(base);
  auto admit = [&](const BlockView& block, Element atom) {
    for (Element z : block.shared_members(space))
      if ((L.leq(atom, z) ? 1 : 0) != f.value(z)) return false;
    return true;
  };
  auto result = run_search(base, blocks, mode, limits, admit);

  // witnesses must agree with f on every block's central part
  for (const auto& w : result.witnesses)
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
      TwoValuedHom h = w.hom(i);
      for (Element z : w.blocks[i].shared_members(space))
        if (h.value(z) != f.value(z))
          throw InternalAlarm("compatible actualization witness disagrees "
                              "with the possibility-space hom");
    }
  return result;
}

EquivalenceReport check_valuation_actualization_equivalence(
    const ModalExtension& ext, SearchLimits limits) {
  EquivalenceReport report;
  report.left = find_global_valuation(ext.target.base(), SearchMode::First,
                                      limits);
  if (report.left.status == SearchStatus::NodeLimitExceeded)
    report.complete = false;
  report.has_global_valuation = report.left.sat();

  BlockView space = possibility_space(ext);
  for (const TwoValuedHom& f : boolean_homs(space)) {
    auto res = compatible_actualization(ext, f, SearchMode::First, limits);
    if (res.status == SearchStatus::NodeLimitExceeded) report.complete = false;
    bool sat = res.sat();
    report.right.emplace_back(f.selected_atom(), std::move(res));
    if (sat) {
      report.some_hom_admits_actualization = true;
      break;
    }
  }

  report.equivalent =
      report.has_global_valuation == report.some_hom_admits_actualization;
  if (report.complete && !report.equivalent)
    throw InternalAlarm(
        "valuation/actualization equivalence failed: global valuation " +
        std::string(report.has_global_valuation ? "exists" : "does not exist") +
        " but compatible actualization " +
        std::string(report.some_hom_admits_actualization ? "exists"
                                                         : "does not exist"));
  return report;
}

std::string witness_json(const GlobalValuation& valuation) {
  nlohmann::json homs = nlohmann::json::object();
  for (std::size_t i = 0; i < valuation.blocks.size(); ++i)
    homs["B" + std::to_string(i)] =
        valuation.blocks[i].ambient()->name(valuation.selected[i]);
  return nlohmann::json{{"valuation", homs}}.dump();
}

std::string unsat_certificate_json(const ValuationSearchResult& result) {
  return nlohmann::json{{"exhausted", result.status == SearchStatus::Unsat},
                        {"nodes", result.nodes},
                        {"order", result.block_order}}
      .dump();
}

}  // namespace omlkit
