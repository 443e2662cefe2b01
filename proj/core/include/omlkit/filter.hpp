#pragma once

#include <span>
#include <vector>

#include "omlkit/block.hpp"

namespace omlkit {

/// A filter of a Boolean block: upward closed and meet closed. At finite
/// scale every filter is the up-set of its total meet, which is kept as the
/// generator.
class FilterView {
 public:
  FilterView(BlockView ambient, std::vector<Element> members);

  const BlockView& ambient() const { return ambient_; }
  const std::vector<Element>& members() const { return members_; }
  Element generator() const { return generator_; }

  bool contains(Element e) const;
  bool proper() const;

  /// Maximal iff for each member exactly one of x, ¬x belongs; equivalently
  /// the generator is an atom of the block.
  bool maximal() const;

 private:
  BlockView ambient_;
  std::vector<Element> members_;
  Element generator_;
};

/// The filter generated by a subset of the block: the upward closure of all
/// finite meets. An empty subset yields the minimum filter {1}. The result
/// may be improper (contain 0); that is reported, not rejected.
FilterView generated_filter(const BlockView& block,
                            std::span<const Element> subset);

/// Extends a proper filter to a maximal one. Deterministic rule: among the
/// block atoms below the filter's meet, the lowest element index is selected.
/// Also returns the induced two-valued hom, which maps the filter to 1.
struct MaximalFilter {
  FilterView filter;
  TwoValuedHom hom;
};

MaximalFilter extend_to_maximal(const BlockView& block, const FilterView& filter);

/// The filter associated with a hom: all members valued 1.
FilterView filter_of_hom(const TwoValuedHom& hom);

}  // namespace omlkit
