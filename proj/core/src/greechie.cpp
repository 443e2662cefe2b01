#include "omlkit/greechie.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "omlkit/errors.hpp"

namespace omlkit {

namespace {

bool valid_atom_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

GreechieDiagram parse_greechie(std::string_view text) {
  GreechieDiagram diagram;
  std::map<std::string, int> atom_index;

  std::istringstream stream{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;

    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head != "block:")
      parse_fail(lineno, "expected \"block:\", got \"" + head + "\"");

    std::vector<int> block;
    std::set<int> in_block;
    std::string atom;
    while (words >> atom) {
      if (!valid_atom_name(atom))
        parse_fail(lineno, "invalid atom name \"" + atom + "\"");
      if (atom == "0" || atom == "1")
        parse_fail(lineno, "atom names \"0\" and \"1\" are reserved for the bounds");
      auto [it, fresh] =
          atom_index.emplace(atom, static_cast<int>(diagram.atoms.size()));
      if (fresh) diagram.atoms.push_back(atom);
      if (!in_block.insert(it->second).second)
        parse_fail(lineno, "duplicate atom \"" + atom + "\" within a block");
      block.push_back(it->second);
    }
    if (block.size() < 2)
      parse_fail(lineno, "a block needs at least two atoms");
    diagram.blocks.push_back(std::move(block));
  }

  if (diagram.blocks.empty()) throw InputError("diagram declares no blocks");

  // structural invariants: no containment, intersections of size <= 1
  std::vector<std::set<int>> sets;
  for (const auto& b : diagram.blocks) sets.emplace_back(b.begin(), b.end());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(),
                        sets[i].end()))
        throw InputError("block " + std::to_string(i + 1) +
                         " is contained in block " + std::to_string(j + 1));
      if (j > i) {
        std::vector<int> common;
        std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                              sets[j].end(), std::back_inserter(common));
        if (common.size() > 1)
          throw InputError("blocks " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1) + " share " +
                           std::to_string(common.size()) +
                           " atoms; at most one is allowed");
      }
    }
  return diagram;
}

ContextHypergraph diagram_hypergraph(const GreechieDiagram& diagram) {
  ContextHypergraph H;
  H.outcomes = diagram.atoms;
  for (const auto& b : diagram.blocks) {
    std::vector<int> c(b.begin(), b.end());
    std::sort(c.begin(), c.end());
    H.contexts.push_back(std::move(c));
  }
  H.check_well_formed();
  return H;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PasteResult paste_to_lattice(const GreechieDiagram& diagram) {
  // nodes: one per (block, proper nonempty subset); subsets as bitmasks over
  // the block's listed atom order
  struct Node {
    int block;
    unsigned mask;
    std::vector<int> atom_set;  // sorted global atom ids
  };
  std::vector<Node> nodes;
  std::vector<std::vector<int>> node_of_block;  // block -> node ids by mask

  for (std::size_t b = 0; b < diagram.blocks.size(); ++b) {
    const auto& atoms = diagram.blocks[b];
    const unsigned full = (1u << atoms.size()) - 1;
    node_of_block.emplace_back(full + 1, -1);
    for (unsigned mask = 1; mask < full; ++mask) {
      std::vector<int> set;
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (mask & (1u << i)) set.push_back(atoms[i]);
      std::sort(set.begin(), set.end());
      node_of_block[b][mask] =
          static_cast<int>(nodes.size());
      nodes.push_back({static_cast<int>(b), mask, std::move(set)});
    }
  }

  // identify (B,S) ~ (B',S') when S = S' or the in-block complements agree
  UnionFind uf(nodes.size());
  std::map<std::vector<int>, int> by_set, by_complement;
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    const auto& node = nodes[id];
    auto [it, fresh] = by_set.emplace(node.atom_set, static_cast<int>(id));
    if (!fresh) uf.unite(static_cast<int>(id), it->second);

    std::vector<int> complement;
    for (int a : diagram.blocks[node.block])
      if (!std::binary_search(node.atom_set.begin(), node.atom_set.end(), a))
        complement.push_back(a);
    std::sort(complement.begin(), complement.end());
    auto [it2, fresh2] =
        by_complement.emplace(complement, static_cast<int>(id));
    if (!fresh2) uf.unite(static_cast<int>(id), it2->second);
  }

  // canonical name per class: lexicographically least "+"-joined rep
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t id = 0; id < nodes.size(); ++id)
    classes[uf.find(static_cast<int>(id))].push_back(id);

  auto rep_name = [&](const Node& node) {
    std::string name;
    for (std::size_t i = 0; i < node.atom_set.size(); ++i) {
      if (i) name += "+";
      name += diagram.atoms[node.atom_set[i]];
    }
    return name;
  };

  std::map<int, std::string> class_name;   // class root -> name
  std::map<int, int> class_element;        // class root -> element index
  LatticeData data;
  data.names.push_back("0");

  // enumerate classes in first-node order for deterministic element indices
  std::vector<int> roots_in_order;
  {
    std::set<int> seen;
    for (std::size_t id = 0; id < nodes.size(); ++id) {
      int root = uf.find(static_cast<int>(id));
      if (seen.insert(root).second) roots_in_order.push_back(root);
    }
  }
  for (int root : roots_in_order) {
    std::string best;
    for (std::size_t id : classes[root]) {
      std::string candidate = rep_name(nodes[id]);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
    class_name[root] = best;
    class_element[root] = static_cast<int>(data.names.size());
    data.names.push_back(best);
  }
  data.names.push_back("1");
  const std::string bottom = "0", top = "1";

  auto element_of = [&](int block, unsigned mask) -> std::string {
    const unsigned full = (1u << diagram.blocks[block].size()) - 1;
    if (mask == 0) return bottom;
    if (mask == full) return top;
    return class_name.at(uf.find(node_of_block[block][mask]));
  };

  // order: subset inclusion within each block; bounds relate to everything.
  // validate_structure closes transitively.
  std::set<std::pair<std::string, std::string>> leq;
  for (std::size_t b = 0; b < diagram.blocks.size(); ++b) {
    const unsigned full = (1u << diagram.blocks[b].size()) - 1;
    for (unsigned s = 0; s <= full; ++s)
      for (unsigned t = 0; t <= full; ++t)
        if ((s & t) == s && s != t)
          leq.insert({element_of(b, s), element_of(b, t)});
  }
  for (const auto& name : data.names) {
    if (name != bottom) leq.insert({bottom, name});
    if (name != top) leq.insert({name, top});
  }
  data.leq_pairs.assign(leq.begin(), leq.end());

  // ortho: in-block complement; must agree across every representative
  std::map<std::string, std::string> ortho{{bottom, top}, {top, bottom}};
  for (std::size_t b = 0; b < diagram.blocks.size(); ++b) {
    const unsigned full = (1u << diagram.blocks[b].size()) - 1;
    for (unsigned s = 1; s < full; ++s) {
      std::string from = element_of(b, s), to = element_of(b, full & ~s);
      auto [it, fresh] = ortho.emplace(from, to);
      if (!fresh && it->second != to)
        throw InternalAlarm("pasting produced an ambiguous orthocomplement at " +
                            from);
    }
  }
  data.ortho_pairs.assign(ortho.begin(), ortho.end());

  PasteResult out;
  out.report = validate_structure(data);
  if (out.report.lattice) {
    for (const auto& atom : diagram.atoms) {
      auto idx = out.report.lattice->index_of(atom);
      if (!idx)
        throw InternalAlarm("diagram atom lost during pasting: " + atom);
      out.atom_elements.push_back(*idx);
    }
  }
  return out;
}

}  // namespace omlkit
