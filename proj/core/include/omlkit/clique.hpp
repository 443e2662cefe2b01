#pragma once

#include <vector>

#include "omlkit/bits.hpp"

namespace omlkit {

/// All maximal cliques of an undirected graph given by a symmetric adjacency
/// matrix (diagonal ignored). Bron–Kerbosch with a deterministic pivot;
/// cliques come back with sorted members, in lexicographic order.
std::vector<std::vector<int>> maximal_cliques(const BitMatrix& adjacency);

}  // namespace omlkit
