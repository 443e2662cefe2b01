#include "omlkit/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "omlkit/errors.hpp"

namespace omlkit {

bool ValidationReport::axiom_failed(const std::string& axiom) const {
  for (const auto& f : failures)
    if (f.axiom == axiom) return true;
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  if (!input_ok()) {
    out << "input error: " << input_errors.front();
    return out.str();
  }
  if (pass()) {
    out << "orthomodular lattice, " << element_count << " elements";
    return out.str();
  }
  out << "not an orthomodular lattice:";
  for (const auto& f : failures) {
    out << " " << f.axiom << "(";
    for (std::size_t i = 0; i < f.witness.size(); ++i)
      out << (i ? ", " : "") << f.witness[i];
    out << ")";
  }
  return out.str();
}

std::optional<Element> Lattice::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Lattice::is_atom(Element a) const {
  if (a == bottom_) return false;
  for (Element x = 0; x < static_cast<Element>(size()); ++x)
    if (x != a && x != bottom_ && leq(x, a)) return false;
  return true;
}

std::vector<Element> Lattice::atoms() const {
  std::vector<Element> out;
  for (Element a = 0; a < static_cast<Element>(size()); ++a)
    if (is_atom(a)) out.push_back(a);
  return out;
}

std::vector<Element> Lattice::upper_covers(Element a) const {
  std::vector<Element> out;
  const auto n = static_cast<Element>(size());
  for (Element b = 0; b < n; ++b) {
    if (b == a || !leq(a, b)) continue;
    bool covers = true;
    for (Element c = 0; c < n; ++c) {
      if (c == a || c == b) continue;
      if (leq(a, c) && leq(c, b)) {
        covers = false;
        break;
      }
    }
    if (covers) out.push_back(b);
  }
  return out;
}

Element Lattice::join_all(const std::vector<Element>& xs) const {
  Element acc = bottom_;
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element Lattice::meet_all(const std::vector<Element>& xs) const {
  Element acc = top_;
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

namespace {

class WitnessCollector {
 public:
  WitnessCollector(std::vector<AxiomFailure>& sink, int cap)
      : sink_(sink), cap_(cap) {}

  // adds a failure unless the per-axiom cap is reached; returns whether the
  // axiom is still below cap (callers may stop scanning once saturated)
  bool add(const std::string& axiom, std::vector<std::string> witness) {
    int& n = counts_[axiom];
    if (n >= cap_) return false;
    ++n;
    sink_.push_back({axiom, std::move(witness)});
    return n < cap_;
  }

  bool seen(const std::string& axiom) const { return counts_.count(axiom) > 0; }

 private:
  std::vector<AxiomFailure>& sink_;
  int cap_;
  std::map<std::string, int> counts_;
};

}  // namespace

ValidationReport validate_structure(const LatticeData& candidate,
                                    const ValidationOptions& options) {
  ValidationReport report;
  report.element_count = candidate.names.size();

  // --- input layer -------------------------------------------------------
  std::map<std::string, Element> index;
  for (std::size_t i = 0; i < candidate.names.size(); ++i) {
    const auto& nm = candidate.names[i];
    if (nm.empty())
      report.input_errors.push_back("element name at position " +
                                    std::to_string(i) + " is empty");
    else if (!index.emplace(nm, static_cast<Element>(i)).second)
      report.input_errors.push_back("duplicate element name \"" + nm + "\"");
  }
  if (candidate.names.empty())
    report.input_errors.push_back("no elements declared");
  if (!index.count(candidate.bottom_name))
    report.input_errors.push_back("missing bottom element \"" +
                                  candidate.bottom_name + "\"");
  if (!index.count(candidate.top_name))
    report.input_errors.push_back("missing top element \"" +
                                  candidate.top_name + "\"");

  auto lookup = [&](const std::string& nm, const char* where) -> Element {
    auto it = index.find(nm);
    if (it == index.end()) {
      report.input_errors.push_back(std::string("unknown element \"") + nm +
                                    "\" in " + where);
      return -1;
    }
    return it->second;
  };

  const std::size_t n = candidate.names.size();
  BitMatrix leq(n);
  for (const auto& [lo, hi] : candidate.leq_pairs) {
    Element a = lookup(lo, "leq");
    Element b = lookup(hi, "leq");
    if (a >= 0 && b >= 0) leq.set(a, b);
  }

  std::vector<Element> ortho(n, -1);
  for (const auto& [from, to] : candidate.ortho_pairs) {
    Element a = lookup(from, "neg");
    Element b = lookup(to, "neg");
    if (a < 0 || b < 0) continue;
    if (ortho[a] != -1 && ortho[a] != b)
      report.input_errors.push_back("conflicting neg entries for \"" + from +
                                    "\"");
    ortho[a] = b;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (ortho[i] == -1)
      report.input_errors.push_back("neg map missing entry for \"" +
                                    candidate.names[i] + "\"");

  if (!report.input_ok()) return report;

  const Element bottom = index.at(candidate.bottom_name);
  const Element top = index.at(candidate.top_name);
  auto nm = [&](Element e) { return candidate.names[e]; };
  WitnessCollector witness(report.failures, options.witness_cap);

  // --- order layer --------------------------------------------------------
  leq.close_transitively();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq.get(i, j) && leq.get(j, i))
        witness.add("antisymmetry", {nm(i), nm(j)});
  if (witness.seen("antisymmetry")) return report;  // not a poset; stop here

  for (std::size_t x = 0; x < n; ++x) {
    if (!leq.get(bottom, x)) witness.add("bounds", {nm(x)});
    if (!leq.get(x, top)) witness.add("bounds", {nm(x)});
  }

  // --- lattice layer: every pair needs a unique extremal bound ------------
  BitMatrix geq = leq.transposed();  // row e = elements <= e
  std::vector<Element> meet(n * n, -1), join(n * n, -1);
  std::vector<std::uint64_t> bounds(leq.words());

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      bitops::and_rows(geq.row(x), geq.row(y), bounds);
      Element m = -1;
      for (std::size_t z = 0; z < n; ++z)
        if (bitops::test(bounds, z) && bitops::subset(bounds, leq.row(z))) {
          m = static_cast<Element>(z);
          break;  // dominating lower bound is unique by antisymmetry
        }
      if (m < 0)
        witness.add("meet-existence", {nm(x), nm(y)});
      meet[x * n + y] = meet[y * n + x] = m;

      bitops::and_rows(leq.row(x), leq.row(y), bounds);
      Element j = -1;
      for (std::size_t z = 0; z < n; ++z)
        if (bitops::test(bounds, z) && bitops::subset(bounds, geq.row(z))) {
          j = static_cast<Element>(z);
          break;
        }
      if (j < 0)
        witness.add("join-existence", {nm(x), nm(y)});
      join[x * n + y] = join[y * n + x] = j;
    }
  }
  const bool lattice_ok =
      !witness.seen("meet-existence") && !witness.seen("join-existence");

  // --- ortholattice layer --------------------------------------------------
  for (std::size_t x = 0; x < n; ++x)
    if (ortho[ortho[x]] != static_cast<Element>(x))
      witness.add("ortho-involution", {nm(x)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq.get(x, y) && !leq.get(ortho[y], ortho[x]))
        witness.add("ortho-antitone", {nm(x), nm(y)});

  if (lattice_ok) {
    for (std::size_t x = 0; x < n; ++x) {
      if (meet[x * n + ortho[x]] != bottom)
        witness.add("complement-meet", {nm(x)});
      if (join[x * n + ortho[x]] != top)
        witness.add("complement-join", {nm(x)});
    }

    // --- orthomodular layer: x <= y implies y = x v (y ^ x') ---------------
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!leq.get(x, y)) continue;
        Element rhs = join[x * n + meet[y * n + ortho[x]]];
        if (rhs != static_cast<Element>(y))
          witness.add("orthomodular-law", {nm(x), nm(y)});
      }
  }

  if (!report.failures.empty()) return report;

  // --- certified: build the lattice with cached tables ---------------------
  auto lat = std::shared_ptr<Lattice>(new Lattice());
  lat->names_ = candidate.names;
  lat->index_ = std::move(index);
  lat->leq_ = std::move(leq);
  lat->geq_ = std::move(geq);
  lat->ortho_ = std::move(ortho);
  lat->meet_ = std::move(meet);
  lat->join_ = std::move(join);
  lat->bottom_ = bottom;
  lat->top_ = top;
  lat->central_.assign(n, false);
  for (std::size_t z = 0; z < n; ++z) {
    bool central = true;
    for (std::size_t a = 0; a < n && central; ++a)
      central = lat->commutes(static_cast<Element>(a), static_cast<Element>(z));
    lat->central_[z] = central;
    if (central) lat->centrals_.push_back(static_cast<Element>(z));
  }
  report.lattice = lat;
  return report;
}

LatticePtr product(const std::vector<LatticePtr>& factors) {
  if (factors.empty())
    throw PreconditionError("product of zero lattices is undefined");

  const std::size_t k = factors.size();
  std::size_t total = 1;
  for (const auto& f : factors) total *= f->size();

  // mixed-radix tuples, first factor most significant
  auto decode = [&](std::size_t idx) {
    std::vector<Element> tuple(k);
    for (std::size_t i = k; i-- > 0;) {
      tuple[i] = static_cast<Element>(idx % factors[i]->size());
      idx /= factors[i]->size();
    }
    return tuple;
  };

  LatticeData data;
  data.names.reserve(total);
  std::vector<std::vector<Element>> tuples(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    tuples[idx] = decode(idx);
    std::string name = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) name += ",";
      name += factors[i]->name(tuples[idx][i]);
    }
    name += ")";
    data.names.push_back(std::move(name));
  }
  data.bottom_name = data.names.front();
  data.top_name = data.names.back();

  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = 0; b < total; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < k && le; ++i)
        le = factors[i]->leq(tuples[a][i], tuples[b][i]);
      if (le && a != b) data.leq_pairs.push_back({data.names[a], data.names[b]});
    }
    std::size_t neg = 0;
    for (std::size_t i = 0; i < k; ++i)
      neg = neg * factors[i]->size() + factors[i]->ortho(tuples[a][i]);
    data.ortho_pairs.push_back({data.names[a], data.names[neg]});
  }

  auto report = validate_structure(data);
  if (!report.pass())
    throw InternalAlarm("product of valid lattices failed validation: " +
                        report.summary());
  return report.lattice;
}

namespace {

// backtracking extension of an atom bijection to a full isomorphism
bool extend_atom_map(const Lattice& a, const Lattice& b,
                     const std::vector<Element>& atoms_a,
                     const std::vector<Element>& atoms_b,
                     std::vector<int>& image, std::vector<bool>& used,
                     std::size_t next) {
  if (next == atoms_a.size()) {
    // atoms fixed; derive the full map via joins and verify all tables
    const auto n = static_cast<Element>(a.size());
    std::vector<Element> full(n, -1);
    std::vector<bool> hit(n, false);
    for (Element e = 0; e < n; ++e) {
      std::vector<Element> img_atoms;
      for (std::size_t i = 0; i < atoms_a.size(); ++i)
        if (a.leq(atoms_a[i], e)) img_atoms.push_back(atoms_b[image[i]]);
      Element img = b.join_all(img_atoms);
      full[e] = img;
      if (hit[img]) return false;
      hit[img] = true;
    }
    for (Element x = 0; x < n; ++x) {
      if (b.ortho(full[x]) != full[a.ortho(x)]) return false;
      for (Element y = 0; y < n; ++y)
        if (a.leq(x, y) != b.leq(full[x], full[y])) return false;
    }
    return true;
  }

  Element ax = atoms_a[next];
  for (std::size_t cand = 0; cand < atoms_b.size(); ++cand) {
    if (used[cand]) continue;
    Element bx = atoms_b[cand];
    bool ok = a.is_central(ax) == b.is_central(bx);
    for (std::size_t prev = 0; prev < next && ok; ++prev) {
      Element ay = atoms_a[prev], by = atoms_b[image[prev]];
      ok = a.leq(ax, a.ortho(ay)) == b.leq(bx, b.ortho(by)) &&
           a.commutes(ax, ay) == b.commutes(bx, by) &&
           (a.join(ax, ay) == a.top()) == (b.join(bx, by) == b.top());
    }
    if (!ok) continue;
    image[next] = static_cast<int>(cand);
    used[cand] = true;
    if (extend_atom_map(a, b, atoms_a, atoms_b, image, used, next + 1))
      return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return false;
  auto atoms_a = a.atoms();
  auto atoms_b = b.atoms();
  if (atoms_a.size() != atoms_b.size()) return false;
  if (a.central_elements().size() != b.central_elements().size()) return false;
  if (a.size() == 1) return true;

  std::vector<int> image(atoms_a.size(), -1);
  std::vector<bool> used(atoms_b.size(), false);
  return extend_atom_map(a, b, atoms_a, atoms_b, image, used, 0);
}

}  // namespace omlkit
