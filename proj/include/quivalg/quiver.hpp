#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "quivalg/errors.hpp"

namespace quivalg {

// Finite directed multigraph. Vertices and arrows are referred to by dense
// indices; declaration order of arrows fixes the monomial order downstream.
class Quiver {
 public:
  struct Arrow {
    std::string name;
    int source;
    int target;
  };

  int add_vertex(const std::string& name) {
    if (vertex_index_.count(name)) throw Error("duplicate vertex name: " + name);
    vertex_index_[name] = static_cast<int>(vertices_.size());
    vertices_.push_back(name);
    return static_cast<int>(vertices_.size()) - 1;
  }

  int add_arrow(const std::string& name, int source, int target) {
    if (arrow_index_.count(name)) throw Error("duplicate arrow name: " + name);
    if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count())
      throw Error("arrow " + name + " references undeclared vertex");
    arrow_index_[name] = static_cast<int>(arrows_.size());
    arrows_.push_back({name, source, target});
    return static_cast<int>(arrows_.size()) - 1;
  }

  int add_arrow(const std::string& name, const std::string& src, const std::string& tgt) {
    return add_arrow(name, vertex(src), vertex(tgt));
  }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end()) throw Error("unknown vertex: " + name);
    return it->second;
  }

  std::optional<int> find_arrow(const std::string& name) const {
    auto it = arrow_index_.find(name);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }

  int arrow_id(const std::string& name) const {
    auto a = find_arrow(name);
    if (!a) throw Error("unknown arrow: " + name);
    return *a;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
};

// A path: a (possibly empty) composable word of arrows. Arrows compose
// left-to-right, so in the word "ab" arrow a is traversed first and
// target(a) = source(b). The word stores arrow ids as bytes.
struct Path {
  int src = 0;
  int tgt = 0;
  std::string word;

  int length() const { return static_cast<int>(word.size()); }
  bool stationary() const { return word.empty(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.src == b.src && a.word == b.word;
  }
};

// Degree-lexicographic order: longer words are larger; equal lengths compare
// position-wise by arrow index (= declaration order). Stationary paths of
// distinct vertices are ordered by vertex to make the order total.
struct DeglexLess {
  bool operator()(const Path& a, const Path& b) const {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    int c = a.word.compare(b.word);
    if (c != 0) return c < 0;
    return a.src < b.src;
  }
};

inline Path stationary_path(int vertex) { return Path{vertex, vertex, {}}; }

inline Path arrow_path(const Quiver& q, int arrow) {
  const auto& a = q.arrow(arrow);
  return Path{a.source, a.target, std::string(1, static_cast<char>(arrow))};
}

// Builds the path a0 a1 ... ak-1, validating composability.
inline Path make_path(const Quiver& q, const std::vector<int>& arrows) {
  if (arrows.empty()) throw Error("make_path needs at least one arrow; use stationary_path");
  Path p = arrow_path(q, arrows[0]);
  for (size_t i = 1; i < arrows.size(); ++i) {
    const auto& a = q.arrow(arrows[i]);
    if (a.source != p.tgt) throw Error("arrows do not compose in make_path");
    p.word.push_back(static_cast<char>(arrows[i]));
    p.tgt = a.target;
  }
  return p;
}

// Concatenation when target(p) = source(q); otherwise the zero marker.
inline std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.tgt != q.src) return std::nullopt;
  Path r;
  r.src = p.src;
  r.tgt = q.tgt;
  r.word = p.word + q.word;
  return r;
}

inline Path power(const Path& cycle, int k) {
  if (cycle.src != cycle.tgt) throw Error("power of a non-cycle path");
  if (k < 0) throw Error("negative path power");
  Path r = stationary_path(cycle.src);
  for (int i = 0; i < k; ++i) r = *compose(r, cycle);
  return r;
}

inline std::string path_to_string(const Quiver& q, const Path& p, const char* sep = "") {
  if (p.stationary()) return "e_" + q.vertex_name(p.src);
  std::string out;
  for (size_t i = 0; i < p.word.size(); ++i) {
    if (i) out += sep;
    out += q.arrow(static_cast<unsigned char>(p.word[i])).name;
  }
  return out;
}

// All paths of length <= max_len ordered by (length, lexicographic on arrow
// indices); stationary paths come first in vertex order. Deterministic.
inline std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
  if (max_len < 0) throw Error("enumerate_paths: max_len must be >= 0");
  std::vector<std::vector<int>> out_arrows(q.vertex_count());
  for (int a = 0; a < q.arrow_count(); ++a) out_arrows[q.arrow(a).source].push_back(a);

  std::vector<Path> result;
  std::vector<Path> layer;
  for (int v = 0; v < q.vertex_count(); ++v) layer.push_back(stationary_path(v));
  result = layer;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : layer)
      for (int a : out_arrows[p.tgt]) {
        Path e = p;
        e.word.push_back(static_cast<char>(a));
        e.tgt = q.arrow(a).target;
        next.push_back(std::move(e));
      }
    std::sort(next.begin(), next.end(), [](const Path& a, const Path& b) {
      return DeglexLess{}(a, b);
    });
    result.insert(result.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return result;
}

}  // namespace quivalg
