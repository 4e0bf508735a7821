#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quivalg/field.hpp"
#include "quivalg/quiver.hpp"

namespace quivalg {

// Finite K-linear combination of paths with nonzero coefficients; the zero
// element is the empty map. Terms are kept in deglex order so the leading
// monomial is the last entry.
template <FieldType F>
struct AlgebraElement {
  using Elem = typename F::Elem;
  std::map<Path, Elem, DeglexLess> terms;

  bool is_zero() const { return terms.empty(); }

  const std::pair<const Path, Elem>& leading() const {
    if (terms.empty()) throw Error("leading term of zero element");
    return *terms.rbegin();
  }

  // True when all terms share one (source, target) pair.
  bool parallel() const {
    if (terms.empty()) return true;
    int s = terms.begin()->first.src, t = terms.begin()->first.tgt;
    for (const auto& [p, c] : terms)
      if (p.src != s || p.tgt != t) return false;
    return true;
  }
};

template <FieldType F>
AlgebraElement<F> element_from_path(const F& f, const Path& p) {
  AlgebraElement<F> e;
  e.terms.emplace(p, f.one());
  return e;
}

template <FieldType F>
AlgebraElement<F> element_from_term(const F& f, const Path& p, const typename F::Elem& c) {
  AlgebraElement<F> e;
  if (!f.is_zero(c)) e.terms.emplace(p, c);
  return e;
}

template <FieldType F>
void add_term(const F& f, AlgebraElement<F>& x, const Path& p, const typename F::Elem& c) {
  if (f.is_zero(c)) return;
  auto [it, inserted] = x.terms.emplace(p, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) x.terms.erase(it);
  }
}

template <FieldType F>
AlgebraElement<F> add(const F& f, const AlgebraElement<F>& x, const AlgebraElement<F>& y) {
  AlgebraElement<F> r = x;
  for (const auto& [p, c] : y.terms) add_term(f, r, p, c);
  return r;
}

template <FieldType F>
AlgebraElement<F> sub(const F& f, const AlgebraElement<F>& x, const AlgebraElement<F>& y) {
  AlgebraElement<F> r = x;
  for (const auto& [p, c] : y.terms) add_term(f, r, p, f.neg(c));
  return r;
}

template <FieldType F>
AlgebraElement<F> scale(const F& f, const typename F::Elem& c, const AlgebraElement<F>& x) {
  AlgebraElement<F> r;
  if (f.is_zero(c)) return r;
  for (const auto& [p, cc] : x.terms) r.terms.emplace(p, f.mul(c, cc));
  return r;
}

// Bilinear extension of path concatenation; mismatched products vanish.
template <FieldType F>
AlgebraElement<F> multiply(const F& f, const AlgebraElement<F>& x, const AlgebraElement<F>& y) {
  AlgebraElement<F> r;
  for (const auto& [p, cp] : x.terms)
    for (const auto& [q, cq] : y.terms)
      if (auto pq = compose(p, q)) add_term(f, r, *pq, f.mul(cp, cq));
  return r;
}

template <FieldType F>
AlgebraElement<F> multiply_path(const F& f, const Path& p, const AlgebraElement<F>& x,
                                const Path& q) {
  AlgebraElement<F> r;
  for (const auto& [w, c] : x.terms) {
    auto pw = compose(p, w);
    if (!pw) continue;
    auto pwq = compose(*pw, q);
    if (!pwq) continue;
    add_term(f, r, *pwq, c);
  }
  return r;
}

template <FieldType F>
bool equal(const F& f, const AlgebraElement<F>& x, const AlgebraElement<F>& y) {
  if (x.terms.size() != y.terms.size()) return false;
  auto it = x.terms.begin();
  auto jt = y.terms.begin();
  for (; it != x.terms.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (!f.eq(it->second, jt->second)) return false;
  }
  return true;
}

template <FieldType F>
std::string element_to_string(const F& f, const Quiver& q, const AlgebraElement<F>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  // print leading term last, smallest first, matching the deglex map order
  for (const auto& [p, c] : x.terms) {
    if (!first) out += " + ";
    first = false;
    std::string cs = f.str(c);
    if (cs != "1" || p.stationary()) out += cs + "*";
    out += path_to_string(q, p);
  }
  return out;
}

}  // namespace quivalg
