#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omlkit/valuation.hpp"

namespace omlkit {

/// Measurement contexts over shared named outcomes. Contexts may overlap in
/// any number of outcomes; sharing is by outcome identity.
struct ContextHypergraph {
  std::vector<std::string> outcomes;
  std::vector<std::vector<int>> contexts;  // sorted outcome indices

  std::size_t incidence(int outcome) const;
  void check_well_formed() const;  // throws InputError
};

struct ParityCertificate {
  std::size_t context_count = 0;
  bool all_even_incidence = false;
};

struct KsOptions {
  bool use_parity_fast_path = true;
  SearchLimits limits;
};

struct KsResult {
  SearchStatus status = SearchStatus::Unsat;
  std::vector<std::vector<int>> assignments;  // selected outcomes per witness
  std::uint64_t solution_count = 0;
  std::uint64_t nodes = 0;
  bool truncated = false;
  std::optional<ParityCertificate> parity;  // set when the fast path fired

  bool sat() const { return status == SearchStatus::Sat; }
};

/// Searches 0/1 assignments with exactly one 1 per context. Fast path: if
/// every outcome lies in an even number of contexts and the context count is
/// odd, no assignment exists and a parity certificate is emitted without
/// search. Otherwise deterministic exhaustive backtracking over contexts.
KsResult ks_hypergraph_check(const ContextHypergraph& hypergraph,
                             SearchMode mode, KsOptions options = {});

/// {"parity": {"contexts": n, "all_even_incidence": true}}
std::string parity_certificate_json(const ParityCertificate& certificate);

/// {"exhausted": true, "nodes": n, "order": [context ids]}
std::string ks_unsat_certificate_json(const KsResult& result,
                                      std::size_t context_count);

}  // namespace omlkit
