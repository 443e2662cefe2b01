#include "omlkit/hypergraph.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "omlkit/errors.hpp"

namespace omlkit {

std::size_t ContextHypergraph::incidence(int outcome) const {
  std::size_t n = 0;
  for (const auto& c : contexts)
    n += std::binary_search(c.begin(), c.end(), outcome) ? 1 : 0;
  return n;
}

void ContextHypergraph::check_well_formed() const {
  if (contexts.empty()) throw InputError("hypergraph has no contexts");
  std::set<std::string> seen;
  for (const auto& o : outcomes)
    if (!seen.insert(o).second)
      throw InputError("duplicate outcome name \"" + o + "\"");
  std::set<std::vector<int>> distinct;
  for (const auto& c : contexts) {
    if (c.empty()) throw InputError("empty context");
    for (int o : c)
      if (o < 0 || o >= static_cast<int>(outcomes.size()))
        throw InputError("context references an unknown outcome");
    if (!std::is_sorted(c.begin(), c.end()))
      throw InputError("context outcome lists must be sorted");
    if (!distinct.insert(c).second) throw InputError("duplicate context");
  }
  for (int o = 0; o < static_cast<int>(outcomes.size()); ++o)
    if (incidence(o) == 0)
      throw InputError("outcome \"" + outcomes[o] + "\" occurs in no context");
}

namespace {

// exactly-one-per-context backtracking with eager zero propagation; node
// accounting mirrors the valuation solver so certificates replay
struct KsSearch {
  const ContextHypergraph& H;
  std::vector<std::vector<int>> of_outcome;  // contexts containing an outcome
  SearchMode mode;
  SearchLimits limits;
  KsResult& result;
  std::vector<int> state;      // -1 free, 0 excluded, 1 selected
  std::vector<int> satisfied;  // per context: count of selected outcomes
  bool out_of_budget = false;

  bool context_open(int c) const {
    if (satisfied[c] > 0) return false;
    for (int o : H.contexts[c])
      if (state[o] != 0) return true;
    return false;
  }

  int next_context(std::size_t from) const {
    for (std::size_t c = from; c < H.contexts.size(); ++c)
      if (satisfied[c] == 0) return static_cast<int>(c);
    return -1;
  }

  bool select(int o, std::vector<int>& trail) {
    state[o] = 1;
    trail.push_back(o);
    bool clash = false;
    for (int c : of_outcome[o]) {  // all counters first so unwind stays symmetric
      ++satisfied[c];
      clash |= satisfied[c] > 1;
    }
    if (clash) return false;
    for (int c : of_outcome[o])
      for (int other : H.contexts[c]) {
        if (other == o || state[other] != -1) continue;
        state[other] = 0;
        trail.push_back(other);
      }
    // any untouched context left without viable outcomes fails later at its
    // own branch; contexts containing only excluded outcomes fail now
    for (std::size_t c = 0; c < H.contexts.size(); ++c) {
      if (satisfied[c] > 0) continue;
      bool viable = false;
      for (int cand : H.contexts[c])
        if (state[cand] != 0) {
          viable = true;
          break;
        }
      if (!viable) return false;
    }
    return true;
  }

  void unwind(const std::vector<int>& trail) {
    for (int o : trail) {
      if (state[o] == 1)
        for (int c : of_outcome[o]) --satisfied[c];
      state[o] = -1;
    }
  }

  bool record_solution() {
    ++result.solution_count;
    if (mode != SearchMode::Count) {
      std::vector<int> chosen;
      for (int o = 0; o < static_cast<int>(H.outcomes.size()); ++o)
        if (state[o] == 1) chosen.push_back(o);
      for (const auto& c : H.contexts) {
        int ones = 0;
        for (int o : c) ones += (state[o] == 1);
        if (ones != 1)
          throw InternalAlarm("assignment does not hit each context once");
      }
      result.assignments.push_back(std::move(chosen));
    }
    if (mode == SearchMode::First) return false;
    if (mode == SearchMode::Enumerate &&
        result.assignments.size() >= limits.enumerate_cap) {
      result.truncated = true;
      return false;
    }
    return true;
  }

  bool dfs(std::size_t from) {
    int c = next_context(from);
    if (c < 0) return record_solution();
    for (int o : H.contexts[c]) {
      if (state[o] == 0) continue;
      ++result.nodes;
      if (result.nodes > limits.node_limit) {
        out_of_budget = true;
        return false;
      }
      std::vector<int> trail;
      bool ok = select(o, trail);
      if (ok && !dfs(c + 1)) {
        unwind(trail);
        return false;
      }
      unwind(trail);
    }
    return true;
  }
};

}  // namespace

KsResult ks_hypergraph_check(const ContextHypergraph& H, SearchMode mode,
                             KsOptions options) {
  H.check_well_formed();
  KsResult result;

  if (options.use_parity_fast_path && H.contexts.size() % 2 == 1) {
    bool all_even = true;
    for (int o = 0; o < static_cast<int>(H.outcomes.size()) && all_even; ++o)
      all_even = H.incidence(o) % 2 == 0;
    if (all_even) {
      // every selected outcome covers an even number of contexts, so an odd
      // number of contexts can never be covered exactly once each
      result.status = SearchStatus::Unsat;
      result.parity = ParityCertificate{H.contexts.size(), true};
      return result;
    }
  }

  KsSearch search{H,        {},     mode, options.limits, result,
                  {},       {},     false};
  search.of_outcome.resize(H.outcomes.size());
  for (std::size_t c = 0; c < H.contexts.size(); ++c)
    for (int o : H.contexts[c])
      search.of_outcome[o].push_back(static_cast<int>(c));
  search.state.assign(H.outcomes.size(), -1);
  search.satisfied.assign(H.contexts.size(), 0);
  search.dfs(0);

  if (search.out_of_budget)
    result.status = SearchStatus::NodeLimitExceeded;
  else
    result.status =
        result.solution_count > 0 ? SearchStatus::Sat : SearchStatus::Unsat;
  return result;
}

std::string parity_certificate_json(const ParityCertificate& certificate) {
  return nlohmann::json{
      {"parity",
       {{"contexts", certificate.context_count},
        {"all_even_incidence", certificate.all_even_incidence}}}}
      .dump();
}

std::string ks_unsat_certificate_json(const KsResult& result,
                                      std::size_t context_count) {
  std::vector<std::string> order;
  for (std::size_t c = 0; c < context_count; ++c)
    order.push_back("C" + std::to_string(c));
  return nlohmann::json{{"exhausted", result.status == SearchStatus::Unsat},
                        {"nodes", result.nodes},
                        {"order", order}}
      .dump();
}

}  // namespace omlkit
