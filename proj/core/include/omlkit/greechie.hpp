#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "omlkit/hypergraph.hpp"
#include "omlkit/lattice.hpp"

namespace omlkit {

/// Atoms-and-blocks input for lattice pasting. Valid diagrams have blocks of
/// at least two atoms, no block contained in another, and pairwise block
/// intersections of at most one atom.
struct GreechieDiagram {
  std::vector<std::string> atoms;          // in order of first appearance
  std::vector<std::vector<int>> blocks;    // atom indices, input order per block

  const std::vector<int>& block(std::size_t i) const { return blocks[i]; }
};

/// Parses the line-oriented diagram format: blank lines and '#' comments are
/// skipped; every other line reads "block:" followed by two or more atom
/// names over [A-Za-z0-9_]. Errors carry 1-based line numbers.
GreechieDiagram parse_greechie(std::string_view text);

/// The diagram read as a bare hypergraph: outcomes are atoms, contexts are
/// blocks (sorted).
ContextHypergraph diagram_hypergraph(const GreechieDiagram& diagram);

/// Pastes the diagram into a candidate lattice and validates it. Elements
/// are classes of (block, proper nonempty atom subset) pairs plus global
/// bounds; two pairs are identified when their subsets are equal or their
/// in-block complements are equal. A diagram may legitimately paste to a
/// non-orthomodular structure; that comes back as a failing report, not an
/// error.
struct PasteResult {
  ValidationReport report;                 // report.lattice set iff pasting is an OML
  std::vector<Element> atom_elements;      // diagram atom -> lattice element (if pass)
};

PasteResult paste_to_lattice(const GreechieDiagram& diagram);

}  // namespace omlkit
