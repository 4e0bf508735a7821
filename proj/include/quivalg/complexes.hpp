#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quivalg/analysis.hpp"
#include "quivalg/linalg.hpp"
#include "quivalg/rewrite.hpp"

namespace quivalg {

// Bounded complex of projectives: each degree holds a formal direct sum of
// indecomposable projectives P_v (recorded by vertex id), the differential
// d_n: degree n -> n-1 is a matrix of algebra elements, the entry from
// summand P_c to summand P_r lying in e_r A e_c (left multiplication).
template <FieldType F>
struct ProjComplex {
  using AlgMatrix = std::vector<std::vector<AlgebraElement<F>>>;

  const QuotientAlgebra<F>* A = nullptr;
  int lo = 0;
  int hi = -1;                              // empty when hi < lo
  std::vector<std::vector<int>> summands;   // index: degree - lo
  std::vector<AlgMatrix> diff;              // diff[k]: degree lo+k -> lo+k-1 (diff[0] unused)

  bool has_degree(int n) const { return n >= lo && n <= hi && !summands[n - lo].empty(); }
  const std::vector<int>& at(int n) const {
    static const std::vector<int> empty;
    return (n >= lo && n <= hi) ? summands[n - lo] : empty;
  }
  const AlgMatrix* differential(int n) const {  // d_n, defined for lo < n <= hi
    if (n <= lo || n > hi) return nullptr;
    return &diff[n - lo];
  }
};

template <FieldType F>
ProjComplex<F> stalk_complex(const QuotientAlgebra<F>& A, int vertex, int degree = 0) {
  ProjComplex<F> X;
  X.A = &A;
  X.lo = X.hi = degree;
  X.summands = {{vertex}};
  X.diff.resize(1);
  return X;
}

// d o d = 0 after normal-form reduction; entry typing is also checked.
template <FieldType F>
void validate_complex(const ProjComplex<F>& X) {
  const F& f = X.A->field();
  for (int n = X.lo + 1; n <= X.hi; ++n) {
    const auto& d = *X.differential(n);
    const auto& rows = X.at(n - 1);
    const auto& cols = X.at(n);
    if (d.size() != rows.size()) throw Error("differential has wrong shape");
    for (size_t r = 0; r < rows.size(); ++r) {
      if (d[r].size() != cols.size()) throw Error("differential has wrong shape");
      for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [p, cc] : d[r][c].terms)
          if (p.src != rows[r] || p.tgt != cols[c])
            throw Error("differential entry outside its Hom block");
    }
  }
  for (int n = X.lo + 2; n <= X.hi; ++n) {
    const auto& d1 = *X.differential(n);      // n -> n-1
    const auto& d0 = *X.differential(n - 1);  // n-1 -> n-2
    for (size_t r = 0; r < X.at(n - 2).size(); ++r)
      for (size_t c = 0; c < X.at(n).size(); ++c) {
        AlgebraElement<F> acc;
        for (size_t k = 0; k < X.at(n - 1).size(); ++k)
          acc = add(f, acc, multiply(f, d0[r][k], d1[k][c]));
        if (!X.A->normal_form(acc).is_zero()) throw Error("d o d != 0");
      }
  }
}

// Translation X[s]: degree n holds X_{n+s}, differential scaled by (-1)^s.
template <FieldType F>
ProjComplex<F> shift_complex(const ProjComplex<F>& X, int s) {
  ProjComplex<F> Y = X;
  Y.lo = X.lo - s;
  Y.hi = X.hi - s;
  if (s % 2 != 0) {
    const F& f = X.A->field();
    for (auto& mat : Y.diff)
      for (auto& row : mat)
        for (auto& e : row) e = scale(f, f.neg(f.one()), e);
  }
  return Y;
}

// Degree-wise map between complexes; comp[n] has shape Y_n x X_n.
template <FieldType F>
struct ChainMap {
  const ProjComplex<F>* X = nullptr;
  const ProjComplex<F>* Y = nullptr;
  std::map<int, typename ProjComplex<F>::AlgMatrix> comp;

  const AlgebraElement<F>* entry(int n, size_t r, size_t c) const {
    auto it = comp.find(n);
    if (it == comp.end()) return nullptr;
    return &it->second[r][c];
  }
};

template <FieldType F>
ChainMap<F> zero_chain_map(const ProjComplex<F>& X, const ProjComplex<F>& Y) {
  ChainMap<F> f;
  f.X = &X;
  f.Y = &Y;
  int lo = std::max(X.lo, Y.lo), hi = std::min(X.hi, Y.hi);
  for (int n = lo; n <= hi; ++n)
    f.comp[n].assign(Y.at(n).size(), std::vector<AlgebraElement<F>>(X.at(n).size()));
  return f;
}

template <FieldType F>
bool chain_map_commutes(const ChainMap<F>& f) {
  const QuotientAlgebra<F>& A = *f.X->A;
  const F& ff = A.field();
  // d_Y f_n = f_{n-1} d_X on every degree n with X_n and Y_{n-1} nonempty
  for (int n = f.X->lo; n <= f.X->hi + 1; ++n) {
    size_t xc = f.X->at(n).size();
    size_t yr = f.Y->at(n - 1).size();
    if (xc == 0 || yr == 0) continue;
    for (size_t r = 0; r < yr; ++r)
      for (size_t c = 0; c < xc; ++c) {
        AlgebraElement<F> acc;
        if (auto dy = f.Y->differential(n))
          for (size_t k = 0; k < f.Y->at(n).size(); ++k)
            if (const auto* e = f.entry(n, k, c)) acc = add(ff, acc, multiply(ff, (*dy)[r][k], *e));
        if (auto dx = f.X->differential(n))
          for (size_t k = 0; k < f.X->at(n - 1).size(); ++k)
            if (const auto* e = f.entry(n - 1, r, k))
              acc = sub(ff, acc, multiply(ff, *e, (*dx)[k][c]));
        if (!A.normal_form(acc).is_zero()) return false;
      }
  }
  return true;
}

// outer o inner (inner applied first); requires inner.Y and outer.X to be
// the same complex object.
template <FieldType F>
ChainMap<F> compose_chain(const ChainMap<F>& outer, const ChainMap<F>& inner) {
  if (inner.Y != outer.X) throw Error("compose_chain: middle complexes differ");
  const F& f = inner.X->A->field();
  ChainMap<F> out = zero_chain_map(*inner.X, *outer.Y);
  for (auto& [n, mat] : out.comp) {
    size_t mid = outer.X->at(n).size();
    for (size_t r = 0; r < mat.size(); ++r)
      for (size_t c = 0; c < mat[r].size(); ++c) {
        AlgebraElement<F> acc;
        for (size_t k = 0; k < mid; ++k) {
          const auto* g = outer.entry(n, r, k);
          const auto* h = inner.entry(n, k, c);
          if (g && h) acc = add(f, acc, multiply(f, *g, *h));
        }
        mat[r][c] = inner.X->A->normal_form(acc);
      }
  }
  return out;
}

// Hom space in the homotopy category: the chain-map solution space modulo
// null-homotopic maps, with a canonical complement and coordinates.
template <FieldType F>
class HomSpace {
 public:
  struct Coord {
    int degree;
    int row;       // summand index in Y_degree
    int col;       // summand index in X_degree
    int basis_id;  // algebra basis id inside block (Y vertex, X vertex)
  };

  HomSpace(const ProjComplex<F>& X, const ProjComplex<F>& Y)
      : X_(&X), Y_(&Y), A_(X.A), classes_(A_->field(), 0) {
    build();
  }

  int dim() const { return classes_.class_dim(); }
  int chain_map_dim() const { return z_dim_; }
  int homotopy_dim() const { return b_dim_; }
  const std::vector<Coord>& coords() const { return coords_; }

  std::vector<typename F::Elem> to_coords(const ChainMap<F>& f) const {
    const F& ff = A_->field();
    std::vector<typename F::Elem> v(coords_.size(), ff.zero());
    for (const auto& [n, mat] : f.comp)
      for (size_t r = 0; r < mat.size(); ++r)
        for (size_t c = 0; c < mat[r].size(); ++c) {
          if (mat[r][c].is_zero()) continue;
          for (const auto& [id, cc] : A_->nf_coords(mat[r][c])) {
            auto it = coord_index_.find({n, static_cast<int>(r), static_cast<int>(c), id});
            if (it == coord_index_.end()) throw Error("chain map entry outside Hom coordinates");
            v[it->second] = cc;
          }
        }
    return v;
  }

  ChainMap<F> from_coords(const std::vector<typename F::Elem>& v) const {
    const F& ff = A_->field();
    ChainMap<F> f = zero_chain_map(*X_, *Y_);
    for (size_t k = 0; k < coords_.size(); ++k) {
      const Coord& c = coords_[k];
      if (ff.is_zero(v[k])) continue;
      auto& e = f.comp[c.degree][c.row][c.col];
      e = add(ff, e, element_from_term(ff, A_->basis()[c.basis_id], v[k]));
    }
    return f;
  }

  std::vector<typename F::Elem> class_of(const ChainMap<F>& f) const {
    return classes_.class_coords(to_coords(f));
  }

  std::vector<typename F::Elem> class_of_coords(const std::vector<typename F::Elem>& v) const {
    return classes_.class_coords(v);
  }

  // Representative chain map of the k-th class basis vector.
  ChainMap<F> class_rep(int k) const { return from_coords(classes_.class_basis()[k]); }

 private:
  void build() {
    const F& f = A_->field();
    int lo = std::max(X_->lo, Y_->lo), hi = std::min(X_->hi, Y_->hi);
    for (int n = lo; n <= hi; ++n) {
      const auto& xs = X_->at(n);
      const auto& ys = Y_->at(n);
      for (size_t r = 0; r < ys.size(); ++r)
        for (size_t c = 0; c < xs.size(); ++c)
          for (int id : A_->block(ys[r], xs[c]))
            coords_.push_back(Coord{n, static_cast<int>(r), static_cast<int>(c), id});
    }
    const int width = static_cast<int>(coords_.size());
    classes_ = QuotientSpace<F>(f, width);
    coord_index_.clear();
    for (int k = 0; k < width; ++k) {
      const Coord& c = coords_[k];
      coord_index_[{c.degree, c.row, c.col, c.basis_id}] = k;
    }

    // chain-map constraints d_Y f_n - f_{n-1} d_X = 0
    std::vector<std::vector<typename F::Elem>> rows;
    for (int n = X_->lo; n <= X_->hi + 1; ++n) {
      const auto& xs = X_->at(n);
      const auto& yprev = Y_->at(n - 1);
      if (xs.empty() || yprev.empty()) continue;
      // target coordinates: (row s over yprev, col t over xs, basis id)
      std::map<std::tuple<int, int, int>, int> target;
      std::vector<std::vector<typename F::Elem>> local;
      auto target_row = [&](int s, int t, int id) -> std::vector<typename F::Elem>& {
        auto [it, inserted] = target.emplace(std::make_tuple(s, t, id), local.size());
        if (inserted) local.emplace_back(width, f.zero());
        return local[it->second];
      };
      if (auto dy = Y_->differential(n)) {
        const auto& ymid = Y_->at(n);
        for (size_t s = 0; s < yprev.size(); ++s)
          for (size_t u = 0; u < ymid.size(); ++u) {
            if ((*dy)[s][u].is_zero()) continue;
            for (size_t t = 0; t < xs.size(); ++t)
              for (int b : A_->block(ymid[u], xs[t])) {
                auto prod = A_->nf_coords(
                    multiply(f, (*dy)[s][u], element_from_path(f, A_->basis()[b])));
                int k = coord_index_.at({n, static_cast<int>(u), static_cast<int>(t), b});
                for (const auto& [id, c] : prod) {
                  auto& row = target_row(static_cast<int>(s), static_cast<int>(t), id);
                  row[k] = f.add(row[k], c);
                }
              }
          }
      }
      if (auto dx = X_->differential(n)) {
        const auto& xmid = X_->at(n - 1);
        for (size_t u = 0; u < xmid.size(); ++u)
          for (size_t t = 0; t < xs.size(); ++t) {
            if ((*dx)[u][t].is_zero()) continue;
            for (size_t s = 0; s < yprev.size(); ++s)
              for (int b : A_->block(yprev[s], xmid[u])) {
                auto prod = A_->nf_coords(
                    multiply(f, element_from_path(f, A_->basis()[b]), (*dx)[u][t]));
                auto it = coord_index_.find({n - 1, static_cast<int>(s), static_cast<int>(u), b});
                if (it == coord_index_.end()) continue;
                for (const auto& [id, c] : prod) {
                  auto& row = target_row(static_cast<int>(s), static_cast<int>(t), id);
                  row[it->second] = f.sub(row[it->second], c);
                }
              }
          }
      }
      for (auto& r : local) rows.push_back(std::move(r));
    }

    Matrix<F> m(f, static_cast<int>(rows.size()), width);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < width; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
    auto zbasis = width == 0 ? std::vector<std::vector<typename F::Elem>>{}
                             : nullspace(f, std::move(m));
    z_dim_ = static_cast<int>(zbasis.size());

    // null-homotopic generators d_Y s + s d_X from elementary homotopies
    for (int n = X_->lo; n <= X_->hi; ++n) {
      const auto& xs = X_->at(n);
      const auto& ynext = Y_->at(n + 1);
      if (xs.empty() || ynext.empty()) continue;
      for (size_t u = 0; u < ynext.size(); ++u)
        for (size_t t = 0; t < xs.size(); ++t)
          for (int b : A_->block(ynext[u], xs[t])) {
            std::vector<typename F::Elem> h(width, f.zero());
            if (auto dy = Y_->differential(n + 1)) {
              for (size_t s = 0; s < Y_->at(n).size(); ++s) {
                if ((*dy)[s][u].is_zero()) continue;
                auto prod = A_->nf_coords(
                    multiply(f, (*dy)[s][u], element_from_path(f, A_->basis()[b])));
                for (const auto& [id, c] : prod) {
                  auto it = coord_index_.find({n, static_cast<int>(s), static_cast<int>(t), id});
                  if (it != coord_index_.end()) h[it->second] = f.add(h[it->second], c);
                }
              }
            }
            if (auto dx = X_->differential(n + 1)) {
              for (size_t t2 = 0; t2 < X_->at(n + 1).size(); ++t2) {
                if ((*dx)[t][t2].is_zero()) continue;
                auto prod = A_->nf_coords(
                    multiply(f, element_from_path(f, A_->basis()[b]), (*dx)[t][t2]));
                for (const auto& [id, c] : prod) {
                  auto it =
                      coord_index_.find({n + 1, static_cast<int>(u), static_cast<int>(t2), id});
                  if (it != coord_index_.end()) h[it->second] = f.add(h[it->second], c);
                }
              }
            }
            classes_.add_subspace_vector(h);
          }
    }
    b_dim_ = classes_.subspace_dim();
    for (const auto& z : zbasis) classes_.add_total_vector(z);
  }

  const ProjComplex<F>* X_;
  const ProjComplex<F>* Y_;
  const QuotientAlgebra<F>* A_;
  std::vector<Coord> coords_;
  std::map<std::tuple<int, int, int, int>, int> coord_index_;
  QuotientSpace<F> classes_;
  int z_dim_ = 0;
  int b_dim_ = 0;
};

// Hom_{K^b}(X, Y[shift]) with canonical class representatives. The shifted
// copy of Y lives behind a stable pointer inside the returned object.
template <FieldType F>
struct ShiftedHom {
  std::unique_ptr<ProjComplex<F>> shifted_target;
  std::unique_ptr<HomSpace<F>> hom;

  int dim() const { return hom->dim(); }
};

template <FieldType F>
ShiftedHom<F> hom_complexes(const ProjComplex<F>& X, const ProjComplex<F>& Y, int shift) {
  ShiftedHom<F> out;
  out.shifted_target = std::make_unique<ProjComplex<F>>(shift_complex(Y, shift));
  out.hom = std::make_unique<HomSpace<F>>(X, *out.shifted_target);
  return out;
}

// Alternating-sum dimension count from the Cartan matrix; valid when
// Hom(X, Y[i]) vanishes for all i != 0. dim Hom_A(P_i, P_j) = C[j][i].
template <FieldType F>
long euler_hom_dimension(const ProjComplex<F>& X, const ProjComplex<F>& Y,
                         const std::vector<std::vector<long>>& C) {
  long acc = 0;
  for (int r = X.lo; r <= X.hi; ++r)
    for (int s = Y.lo; s <= Y.hi; ++s) {
      long term = 0;
      for (int u : X.at(r))
        for (int v : Y.at(s)) term += C[v][u];
      acc += ((r - s) % 2 == 0) ? term : -term;
    }
  return acc;
}

}  // namespace quivalg
