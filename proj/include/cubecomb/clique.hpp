#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cubecomb {

using NodeMask = boost::dynamic_bitset<std::uint64_t>;

struct CliqueResult {
  std::vector<std::size_t> members;  // ascending
  bool complete = false;             // search finished: members is maximum
  std::uint64_t nodes = 0;
};

// Branch and bound with greedy-colouring bounds. `adjacency` must be symmetric
// and irreflexive. budget == 0 means unlimited. With `stop_at`, the search
// ends once a clique of that size is found (complete is then true).
CliqueResult max_clique(const std::vector<NodeMask>& adjacency, const NodeMask& candidates,
                        std::uint64_t budget = 0, std::optional<std::size_t> stop_at = std::nullopt);

}  // namespace cubecomb
