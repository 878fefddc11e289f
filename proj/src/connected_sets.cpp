#include "secluded/connected_sets.hpp"

#include <algorithm>

#include "secluded/errors.hpp"

namespace secluded {

namespace {

class ConnectedSetEnumerator {
 public:
  ConnectedSetEnumerator(const Graph& g, int k, int t, BoundaryMode mode)
      : g_(g), k_(k), t_(t), mode_(mode), state_(g.vertex_count(), kFree) {}

  std::vector<VertexSet> run(Vertex v) {
    state_[v] = kInside;
    inside_.push_back(v);
    branch();
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  static constexpr char kFree = 0, kInside = 1, kExcluded = 2;

  std::vector<Vertex> frontier() const {
    std::vector<Vertex> f;
    for (Vertex u : inside_)
      for (Vertex x : g_.neighbors(u))
        if (state_[x] == kFree) f.push_back(x);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
  }

  void branch() {
    if (excluded_ > t_) return;
    const auto f = frontier();
    if (static_cast<int>(inside_.size()) == k_) {
      const int boundary = excluded_ + static_cast<int>(f.size());
      if (mode_ == BoundaryMode::exact ? boundary == t_ : boundary <= t_) out_.push_back(make_set(inside_));
      return;
    }
    if (f.empty()) return;
    const Vertex u = f.front();

    state_[u] = kInside;
    inside_.push_back(u);
    branch();
    inside_.pop_back();

    state_[u] = kExcluded;
    ++excluded_;
    branch();
    --excluded_;
    state_[u] = kFree;
  }

  const Graph& g_;
  int k_, t_;
  BoundaryMode mode_;
  std::vector<char> state_;
  std::vector<Vertex> inside_;
  int excluded_ = 0;
  std::vector<VertexSet> out_;
};

}  // namespace

std::vector<VertexSet> enum_connected_secluded_sets(const Graph& g, Vertex v, int k, int t, BoundaryMode mode) {
  if (!g.valid(v)) throw InputError("start vertex " + std::to_string(v) + " out of range");
  if (k < 1) throw InputError("k must be at least 1");
  if (t < 0) throw InputError("t must be nonnegative");
  return ConnectedSetEnumerator(g, k, t, mode).run(v);
}

}  // namespace secluded
