#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "quivalg/element.hpp"
#include "quivalg/quiver.hpp"

namespace quivalg {

// Independent linear-algebra oracle for the rewriting engine. For a level L
// it computes the per-(source, target) dimensions of
//
//   span(paths of length <= L) / span{ p*r*q truncated to length <= L },
//
// i.e. of the quotient of the truncated path algebra KQ/(paths > L) by the
// image of the relation ideal, via exact sparse rank. Since that quotient
// is KQ/(I + (paths > L)), its dimension is monotone in L and bounded above
// by dim KQ/I, so agreement with the rewriting basis certifies the basis
// from below. No rules or normal forms are consulted here.
struct TruncationTable {
  int level = 0;
  std::vector<std::vector<long>> dims;
  long total = 0;

  friend bool operator==(const TruncationTable& a, const TruncationTable& b) {
    return a.dims == b.dims;
  }
};

namespace trunc_detail {

// Sparse RREF over per-block path-indexed columns; pivot of a row is its
// deglex-largest monomial. Invariant: row tails never contain a pivoted
// column, so reduction of an incoming vector is a single descending sweep
// and back-substitution patches exactly the rows listing the new pivot.
template <FieldType F>
class BlockEchelon {
 public:
  using Elem = typename F::Elem;
  // entries sorted by descending column id; front is the pivot
  using Row = std::vector<std::pair<int, Elem>>;

  explicit BlockEchelon(const F& f) : f_(&f) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  const Row& row(int id) const { return rows_[id]; }

  // Returns the new row id, or -1 when the vector reduced to zero.
  int insert(std::map<int, Elem, std::greater<int>> vec) {
    for (auto it = vec.begin(); it != vec.end();) {
      auto p = pivot_of_.find(it->first);
      if (p == pivot_of_.end()) {
        ++it;
        continue;
      }
      Elem coef = it->second;
      it = vec.erase(it);
      const Row& r = rows_[p->second];
      for (size_t k = 1; k < r.size(); ++k) {
        auto [jt, inserted] = vec.emplace(r[k].first, f_->zero());
        jt->second = f_->sub(jt->second, f_->mul(coef, r[k].second));
        if (f_->is_zero(jt->second)) vec.erase(jt);
      }
      // merged tail columns are unpivoted, so the sweep never revisits
      it = vec.upper_bound(p->first);
    }
    if (vec.empty()) return -1;

    int id = static_cast<int>(rows_.size());
    Row row;
    row.reserve(vec.size());
    Elem inv = f_->inv(vec.begin()->second);
    for (const auto& [c, e] : vec) row.emplace_back(c, f_->mul(inv, e));
    int pivot = row[0].first;
    for (size_t k = 1; k < row.size(); ++k) tail_index_[row[k].first].push_back(id);
    rows_.push_back(std::move(row));
    pivot_of_[pivot] = id;

    // back-substitution: strip the new pivot from older tails
    auto hit = tail_index_.find(pivot);
    if (hit != tail_index_.end()) {
      std::vector<int> holders = std::move(hit->second);
      tail_index_.erase(hit);
      for (int h : holders) {
        if (h == id) continue;
        eliminate_tail_entry(h, pivot, id);
      }
    }
    return id;
  }

 private:
  void eliminate_tail_entry(int host, int col, int pivot_row) {
    Row& r = rows_[host];
    auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == col; });
    if (it == r.end()) return;  // stale index entry
    Elem coef = it->second;
    r.erase(it);
    const Row& src = rows_[pivot_row];
    for (size_t k = 1; k < src.size(); ++k) {
      auto [c, e] = src[k];
      auto jt = std::find_if(r.begin(), r.end(), [&](const auto& x) { return x.first == c; });
      if (jt == r.end()) {
        r.emplace_back(c, f_->neg(f_->mul(coef, e)));
        tail_index_[c].push_back(host);
      } else {
        jt->second = f_->sub(jt->second, f_->mul(coef, e));
        if (f_->is_zero(jt->second)) r.erase(jt);
      }
    }
    std::sort(r.begin() + 1, r.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
  }

  const F* f_;
  std::vector<Row> rows_;
  std::unordered_map<int, int> pivot_of_;
  std::unordered_map<int, std::vector<int>> tail_index_;
};

template <FieldType F>
TruncationTable run_level(const F& f, const Quiver& q,
                          const std::vector<AlgebraElement<F>>& relations, int L) {
  using Elem = typename F::Elem;
  const int n = q.vertex_count();
  std::vector<std::vector<int>> out_arrows(n), in_arrows(n);
  for (int a = 0; a < q.arrow_count(); ++a) {
    out_arrows[q.arrow(a).source].push_back(a);
    in_arrows[q.arrow(a).target].push_back(a);
  }

  // Columns: all paths of length <= L, per-block ids ascending in deglex.
  std::unordered_map<std::string, long> column_of;  // src-byte + word -> block*stride + col
  std::vector<std::vector<Path>> col_path(static_cast<size_t>(n) * n);
  auto key_of = [](int src, const std::string& word) {
    std::string k;
    k.reserve(word.size() + 1);
    k.push_back(static_cast<char>(src));
    k += word;
    return k;
  };
  const long stride = 1L << 40;
  {
    std::vector<Path> layer;
    for (int v = 0; v < n; ++v) layer.push_back(stationary_path(v));
    auto reg = [&](const Path& p) {
      int b = p.src * n + p.tgt;
      column_of.emplace(key_of(p.src, p.word),
                        static_cast<long>(b) * stride + static_cast<long>(col_path[b].size()));
      col_path[b].push_back(p);
    };
    for (const Path& p : layer) reg(p);
    for (int len = 1; len <= L; ++len) {
      std::vector<Path> next;
      for (const Path& p : layer)
        for (int a : out_arrows[p.tgt]) {
          Path e = p;
          e.word.push_back(static_cast<char>(a));
          e.tgt = q.arrow(a).target;
          next.push_back(std::move(e));
        }
      if (next.empty()) break;
      std::sort(next.begin(), next.end(),
                [](const Path& x, const Path& y) { return DeglexLess{}(x, y); });
      for (const Path& p : next) reg(p);
      layer = std::move(next);
    }
  }

  std::vector<BlockEchelon<F>> echelon(static_cast<size_t>(n) * n, BlockEchelon<F>(f));

  // Work queue of echelon rows awaiting one-step arrow extensions, processed
  // by ascending pivot degree; (degree, block, pivot col, row id).
  using QItem = std::tuple<int, int, int, int>;
  std::priority_queue<QItem, std::vector<QItem>, std::greater<QItem>> queue;

  auto insert_vec = [&](int block, std::map<int, Elem, std::greater<int>> vec) {
    int id = echelon[block].insert(std::move(vec));
    if (id < 0) return;
    const auto& row = echelon[block].row(id);
    int pivot = row[0].first;
    int deg = col_path[block][pivot].length();
    queue.emplace(deg, block, pivot, id);
  };

  // Seeds: the defining relations truncated to length <= L.
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    std::map<int, Elem, std::greater<int>> vec;
    int block = -1;
    for (const auto& [w, c] : rel.terms) {
      if (w.length() > L) continue;
      long code = column_of.at(key_of(w.src, w.word));
      block = static_cast<int>(code / stride);
      vec.emplace(static_cast<int>(code % stride), c);
    }
    if (!vec.empty()) insert_vec(block, std::move(vec));
  }

  // Closure of the row space under truncated left and right multiplication
  // by arrows; every row is extended exactly once, which spans the image of
  // the full two-sided ideal in the truncated algebra.
  std::string buf;
  while (!queue.empty()) {
    auto [deg, block, pivot, id] = queue.top();
    queue.pop();
    const int bi = block / n, bj = block % n;
    const auto row = echelon[block].row(id);  // copy: row may be patched later

    for (int a : in_arrows[bi]) {  // left multiplication
      int src = q.arrow(a).source;
      int nb = src * n + bj;
      std::map<int, Elem, std::greater<int>> vec;
      for (const auto& [c, e] : row) {
        const Path& p = col_path[block][c];
        if (p.length() + 1 > L) continue;
        buf.clear();
        buf.push_back(static_cast<char>(src));
        buf.push_back(static_cast<char>(a));
        buf += p.word;
        vec.emplace(static_cast<int>(column_of.at(buf) % stride), e);
      }
      if (!vec.empty()) insert_vec(nb, std::move(vec));
    }
    for (int a : out_arrows[bj]) {  // right multiplication
      int tgt = q.arrow(a).target;
      int nb = bi * n + tgt;
      std::map<int, Elem, std::greater<int>> vec;
      for (const auto& [c, e] : row) {
        const Path& p = col_path[block][c];
        if (p.length() + 1 > L) continue;
        buf.clear();
        buf.push_back(static_cast<char>(p.src));
        buf += p.word;
        buf.push_back(static_cast<char>(a));
        vec.emplace(static_cast<int>(column_of.at(buf) % stride), e);
      }
      if (!vec.empty()) insert_vec(nb, std::move(vec));
    }
  }

  TruncationTable table;
  table.level = L;
  table.dims.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int b = i * n + j;
      long d = static_cast<long>(col_path[b].size()) - echelon[b].rank();
      table.dims[i][j] = d;
      table.total += d;
    }
  return table;
}

}  // namespace trunc_detail

// Runs the truncated-ideal computation at levels L and L+2 and returns the
// table only when the two agree; disagreement means the truncation level
// has not stabilized yet.
template <FieldType F>
TruncationTable verify_by_truncation(const F& f, const Quiver& q,
                                     const std::vector<AlgebraElement<F>>& relations, int L) {
  if (L < 1) throw Error("verify_by_truncation: L must be positive");
  TruncationTable a = trunc_detail::run_level(f, q, relations, L);
  TruncationTable b = trunc_detail::run_level(f, q, relations, L + 2);
  if (!(a == b))
    throw StabilizationFailure("truncated-ideal dimensions did not stabilize between levels " +
                               std::to_string(L) + " and " + std::to_string(L + 2));
  return a;
}

}  // namespace quivalg
