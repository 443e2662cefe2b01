#include "omlkit/filter.hpp"

#include <algorithm>

#include "omlkit/errors.hpp"

namespace omlkit {

FilterView::FilterView(BlockView ambient, std::vector<Element> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());

  const Lattice& L = *ambient_.ambient();
  for (Element m : members_)
    if (!ambient_.contains(m))
      throw PreconditionError("filter member outside its block");
  if (members_.empty()) throw PreconditionError("filter cannot be empty");

  generator_ = L.meet_all(members_);

  // invariant checks: meet-closed and upward closed within the block
  if (!contains(generator_))
    throw InternalAlarm("filter does not contain its total meet");
  for (Element a : members_)
    for (Element b : members_)
      if (!contains(L.meet(a, b)))
        throw InternalAlarm("filter not closed under meet");
  for (Element a : members_)
    for (Element x : ambient_.members())
      if (L.leq(a, x) && !contains(x))
        throw InternalAlarm("filter not upward closed");
}

bool FilterView::contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

bool FilterView::proper() const {
  return !contains(ambient_.ambient()->bottom());
}

bool FilterView::maximal() const {
  if (!proper()) return false;
  const Lattice& L = *ambient_.ambient();
  for (Element x : ambient_.members())
    if (contains(x) == contains(L.ortho(x))) return false;
  return true;
}

FilterView generated_filter(const BlockView& block,
                            std::span<const Element> subset) {
  const Lattice& L = *block.ambient();
  for (Element e : subset)
    if (!block.contains(e))
      throw PreconditionError("filter generator outside the block");

  // upward closure of all finite meets = up-set of the total meet
  Element bottom_of_filter = L.top();
  for (Element e : subset) bottom_of_filter = L.meet(bottom_of_filter, e);

  std::vector<Element> members;
  for (Element x : block.members())
    if (L.leq(bottom_of_filter, x)) members.push_back(x);
  return FilterView(block, std::move(members));
}

MaximalFilter extend_to_maximal(const BlockView& block,
                                const FilterView& filter) {
  if (!filter.proper())
    throw PreconditionError("cannot extend an improper filter");
  const Lattice& L = *block.ambient();

  Element chosen = -1;
  for (Element a : block.atoms()) {  // atoms are sorted; first hit is lowest
    if (L.leq(a, filter.generator())) {
      chosen = a;
      break;
    }
  }
  if (chosen < 0)
    throw InternalAlarm("proper filter with no atom below its meet");

  std::vector<Element> members;
  for (Element x : block.members())
    if (L.leq(chosen, x)) members.push_back(x);

  MaximalFilter out{FilterView(block, std::move(members)),
                    TwoValuedHom(block, chosen)};
  if (!out.filter.maximal())
    throw InternalAlarm("extension did not reach a maximal filter");
  for (Element m : filter.members())
    if (out.hom.value(m) != 1)
      throw InternalAlarm("maximal extension does not map the filter to 1");
  out.hom.verify();
  return out;
}

FilterView filter_of_hom(const TwoValuedHom& hom) {
  std::vector<Element> members;
  for (Element m : hom.domain().members())
    if (hom.value(m) == 1) members.push_back(m);
  return FilterView(hom.domain(), std::move(members));
}

}  // namespace omlkit
