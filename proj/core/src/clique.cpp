#include "omlkit/clique.hpp"

#include <algorithm>

namespace omlkit {

namespace {

using Words = std::vector<std::uint64_t>;

int popcount_and(const Words& a, std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w)
    c += __builtin_popcountll(a[w] & b[w]);
  return c;
}

struct Search {
  const BitMatrix& adj;
  std::size_t n;
  std::vector<int> current;
  std::vector<std::vector<int>>& out;

  void run(Words p, Words x) {
    bool p_empty = true, x_empty = true;
    for (auto w : p) p_empty &= (w == 0);
    for (auto w : x) x_empty &= (w == 0);
    if (p_empty && x_empty) {
      out.push_back(current);
      return;
    }
    if (p_empty) return;

    // pivot: vertex of P ∪ X with the most neighbours in P, lowest index wins
    int pivot = -1, best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!bitops::test(p, v) && !bitops::test(x, v)) continue;
      int deg = popcount_and(p, adj.row(v));
      if (deg > best) {
        best = deg;
        pivot = static_cast<int>(v);
      }
    }

    for (std::size_t v = 0; v < n; ++v) {
      if (!bitops::test(p, v)) continue;
      if (adj.get(pivot, v)) continue;  // skip neighbours of the pivot

      Words p2(p.size()), x2(x.size());
      bitops::and_rows(p, adj.row(v), p2);
      bitops::and_rows(x, adj.row(v), x2);
      current.push_back(static_cast<int>(v));
      run(std::move(p2), std::move(x2));
      current.pop_back();

      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      x[v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const BitMatrix& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::vector<int>> out;
  if (n == 0) return out;

  Words p((n + 63) / 64, 0), x((n + 63) / 64, 0);
  for (std::size_t v = 0; v < n; ++v) bitops::set(p, v);

  Search s{adjacency, n, {}, out};
  s.run(std::move(p), std::move(x));

  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace omlkit
