#include "secluded/patterns.hpp"

#include <algorithm>

namespace secluded {

namespace {

// Order pattern vertices so each one (after the first of its component) has an
// already-placed neighbor; within that, prefer high degree.
std::vector<Vertex> search_order(const Graph& pattern) {
  const int k = pattern.vertex_count();
  std::vector<Vertex> order;
  std::vector<char> placed(k, 0);
  std::vector<int> links(k, 0);
  for (int step = 0; step < k; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      if (best < 0 || links[v] > links[best] ||
          (links[v] == links[best] && pattern.degree(v) > pattern.degree(best)))
        best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex x : pattern.neighbors(best)) ++links[x];
  }
  return order;
}

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, std::span<const char> excluded)
      : host_(host), pattern_(pattern), excluded_(excluded), image_(pattern.vertex_count(), -1),
        used_(host.vertex_count(), 0) {
    order_ = search_order(pattern);
  }

  // Pins some pattern vertices up front; false if the pins already conflict.
  bool pin(const std::vector<Vertex>& partial) {
    for (Vertex p = 0; p < pattern_.vertex_count(); ++p) {
      const Vertex h = partial[p];
      if (h < 0) continue;
      if (!host_.valid(h) || used_[h]) return false;
      for (Vertex q = 0; q < p; ++q)
        if (partial[q] >= 0 && pattern_.adjacent(p, q) != host_.adjacent(h, partial[q])) return false;
      used_[h] = 1;
      image_[p] = h;
    }
    std::erase_if(order_, [&](Vertex p) { return image_[p] >= 0; });
    std::vector<Vertex> pinned;
    for (Vertex p = 0; p < pattern_.vertex_count(); ++p)
      if (image_[p] >= 0) pinned.push_back(p);
    order_.insert(order_.begin(), pinned.begin(), pinned.end());
    first_free_ = pinned.size();
    return true;
  }

  bool run() { return extend(first_free_); }
  std::vector<Vertex> image() const { return image_; }

 private:
  bool blocked(Vertex h) const { return !excluded_.empty() && excluded_[h]; }

  bool consistent(Vertex p, Vertex h) const {
    if (host_.degree(h) < pattern_.degree(p)) return false;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      Vertex q = order_[i];
      if (image_[q] < 0) continue;
      if (pattern_.adjacent(p, q) != host_.adjacent(h, image_[q])) return false;
    }
    return true;
  }

  bool try_vertex(Vertex p, Vertex h, std::size_t depth) {
    if (used_[h] || blocked(h) || !consistent(p, h)) return false;
    used_[h] = 1;
    image_[p] = h;
    if (extend(depth + 1)) return true;
    used_[h] = 0;
    image_[p] = -1;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex p = order_[depth];
    // candidates come from the neighborhood of a placed neighbor when there is one
    Vertex anchor = -1;
    for (Vertex q : pattern_.neighbors(p))
      if (image_[q] >= 0) {
        anchor = q;
        break;
      }
    if (anchor >= 0) {
      for (Vertex h : host_.neighbors(image_[anchor]))
        if (try_vertex(p, h, depth)) return true;
      return false;
    }
    for (Vertex h = 0; h < host_.vertex_count(); ++h)
      if (try_vertex(p, h, depth)) return true;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::span<const char> excluded_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::size_t first_free_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced_copy(const Graph& host, const Graph& pattern,
                                                     std::span<const char> excluded) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  Matcher m(host, pattern, excluded);
  if (!m.run()) return std::nullopt;
  return m.image();
}

std::optional<std::vector<Vertex>> find_induced_extension(const Graph& host, const Graph& pattern,
                                                          std::vector<Vertex> partial_image,
                                                          std::span<const char> excluded) {
  if (partial_image.size() != static_cast<std::size_t>(pattern.vertex_count()))
    partial_image.resize(pattern.vertex_count(), -1);
  Matcher m(host, pattern, excluded);
  if (!m.pin(partial_image) || !m.run()) return std::nullopt;
  return m.image();
}

bool contains_induced(const Graph& host, const Graph& pattern) {
  return find_induced_copy(host, pattern).has_value();
}

bool is_f_free(const Graph& g, std::span<const Graph> family) {
  return !find_forbidden_copy(g, family).has_value();
}

std::optional<ForbiddenCopy> find_forbidden_copy(const Graph& g, std::span<const Graph> family,
                                                 std::span<const char> excluded) {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (auto image = find_induced_copy(g, family[i], excluded)) return ForbiddenCopy{i, std::move(*image)};
  return std::nullopt;
}

}  // namespace secluded
