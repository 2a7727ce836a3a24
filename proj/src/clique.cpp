#include "cubecomb/clique.hpp"

#include <algorithm>

namespace cubecomb {

namespace {

class Search {
 public:
  Search(const std::vector<NodeMask>& adjacency, std::uint64_t budget,
         std::optional<std::size_t> stop_at)
      : adjacency_(adjacency), budget_(budget), stop_at_(stop_at) {}

  void seed_greedy(NodeMask candidates) {
    std::vector<std::size_t> clique;
    while (candidates.any()) {
      std::size_t pick = candidates.find_first();
      std::size_t best_degree = 0;
      for (auto v = candidates.find_first(); v != NodeMask::npos; v = candidates.find_next(v)) {
        const auto degree = (adjacency_[v] & candidates).count();
        if (degree > best_degree) {
          best_degree = degree;
          pick = v;
        }
      }
      clique.push_back(pick);
      candidates &= adjacency_[pick];
    }
    record(clique);
  }

  void expand(NodeMask candidates, std::vector<std::size_t>& current) {
    if (aborted_ || done_) return;
    if (budget_ != 0 && nodes_ >= budget_) {
      aborted_ = true;
      return;
    }
    ++nodes_;

    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    NodeMask uncoloured = candidates;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      NodeMask available = uncoloured;
      while (available.any()) {
        const auto v = available.find_first();
        available.reset(v);
        uncoloured.reset(v);
        available -= adjacency_[v];
        order.push_back(v);
        colour.push_back(c);
      }
    }

    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size()) return;
      const auto v = order[i];
      current.push_back(v);
      NodeMask next = candidates & adjacency_[v];
      if (next.none()) {
        record(current);
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      candidates.reset(v);
      if (aborted_ || done_) return;
    }
  }

  CliqueResult result() const {
    CliqueResult out;
    out.members = best_;
    std::sort(out.members.begin(), out.members.end());
    out.complete = !aborted_;
    out.nodes = nodes_;
    return out;
  }

  bool done() const { return done_; }

 private:
  void record(const std::vector<std::size_t>& clique) {
    if (clique.size() > best_.size()) best_ = clique;
    if (stop_at_ && best_.size() >= *stop_at_) done_ = true;
  }

  const std::vector<NodeMask>& adjacency_;
  std::uint64_t budget_;
  std::optional<std::size_t> stop_at_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
};

}  // namespace

CliqueResult max_clique(const std::vector<NodeMask>& adjacency, const NodeMask& candidates,
                        std::uint64_t budget, std::optional<std::size_t> stop_at) {
  Search search(adjacency, budget, stop_at);
  search.seed_greedy(candidates);
  if (!search.done()) {
    std::vector<std::size_t> current;
    search.expand(candidates, current);
  }
  return search.result();
}

}  // namespace cubecomb
