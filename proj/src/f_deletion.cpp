#include "secluded/f_deletion.hpp"

#include <algorithm>

#include "secluded/errors.hpp"
#include "secluded/patterns.hpp"

namespace secluded {

namespace {

class DeletionBrancher {
 public:
  DeletionBrancher(const Graph& g, std::span<const Graph> family, std::span<const Vertex> forbidden)
      : g_(g), family_(family), removed_(g.vertex_count(), 0), forbidden_(g.vertex_count(), 0) {
    for (Vertex v : forbidden) forbidden_[v] = 1;
  }

  void remove(Vertex v) {
    removed_[v] = 1;
    chosen_.push_back(v);
  }

  void branch(int budget) {
    auto copy = find_forbidden_copy(g_, family_, removed_);
    if (!copy) {
      found_.push_back(make_set(chosen_));
      return;
    }
    if (budget == 0) return;
    for (Vertex v : copy->image) {
      if (forbidden_[v]) continue;
      removed_[v] = 1;
      chosen_.push_back(v);
      branch(budget - 1);
      chosen_.pop_back();
      removed_[v] = 0;
    }
  }

  std::vector<VertexSet> take() { return std::move(found_); }

 private:
  const Graph& g_;
  std::span<const Graph> family_;
  std::vector<char> removed_;
  std::vector<char> forbidden_;
  std::vector<Vertex> chosen_;
  std::vector<VertexSet> found_;
};

std::vector<char> removal_mask(int n, std::span<const Vertex> s) {
  std::vector<char> m(n, 0);
  for (Vertex v : s) m[v] = 1;
  return m;
}

}  // namespace

std::vector<VertexSet> enum_f_deletion_sets(const Graph& g, std::span<const Graph> family,
                                            std::span<const Vertex> forced_in, std::span<const Vertex> forbidden,
                                            int budget) {
  require_vertices(g, forced_in);
  require_vertices(g, forbidden);
  if (budget < 0) return {};
  const VertexSet forced = make_set({forced_in.begin(), forced_in.end()});
  const VertexSet banned = make_set({forbidden.begin(), forbidden.end()});
  for (Vertex v : forced)
    if (std::binary_search(banned.begin(), banned.end(), v))
      throw InputError("vertex " + std::to_string(v) + " is both forced and forbidden");

  DeletionBrancher brancher(g, family, banned);
  for (Vertex v : forced) brancher.remove(v);
  brancher.branch(budget);
  auto found = brancher.take();
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<VertexSet> keep_minimal_deletion_sets(const Graph& g, std::span<const Graph> family,
                                                  std::span<const Vertex> forced_in, std::vector<VertexSet> sets) {
  const VertexSet forced = make_set({forced_in.begin(), forced_in.end()});
  std::erase_if(sets, [&](const VertexSet& s) {
    for (Vertex v : s) {
      if (std::binary_search(forced.begin(), forced.end(), v)) continue;
      auto mask = removal_mask(g.vertex_count(), s);
      mask[v] = 0;
      if (!find_forbidden_copy(g, family, mask)) return true;
    }
    return false;
  });
  return sets;
}

}  // namespace secluded
