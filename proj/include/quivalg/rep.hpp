#pragma once

#include <optional>
#include <vector>

#include "quivalg/analysis.hpp"
#include "quivalg/linalg.hpp"
#include "quivalg/rewrite.hpp"

namespace quivalg {

// Finite-dimensional right module as a quiver representation: a space per
// vertex and, for each arrow a: j -> k, the action matrix M_a of shape
// dims[k] x dims[j] acting on column coordinates (x -> M_a x realizes
// x |-> x*a). Every constructed representation is checked against the
// defining relations of its algebra.
template <FieldType F>
struct Representation {
  const QuotientAlgebra<F>* A = nullptr;
  std::vector<int> dims;
  std::vector<Matrix<F>> arrow_mat;

  long total_dim() const {
    long t = 0;
    for (int d : dims) t += d;
    return t;
  }
};

// Degree-wise matrices N_j x M_j of a homomorphism M -> N.
template <FieldType F>
struct ModuleMap {
  std::vector<Matrix<F>> vertex_mat;
};

template <FieldType F>
Matrix<F> path_matrix(const Representation<F>& M, const Path& p) {
  const F& f = M.A->field();
  Matrix<F> m = Matrix<F>::identity(f, M.dims[p.src]);
  for (char ch : p.word) {
    int a = static_cast<unsigned char>(ch);
    m = matmul(f, M.arrow_mat[a], m);
  }
  return m;
}

template <FieldType F>
bool satisfies_relations(const Representation<F>& M) {
  const F& f = M.A->field();
  for (const auto& rel : M.A->relations()) {
    if (rel.is_zero()) continue;
    const Path& lead = rel.leading().first;
    Matrix<F> acc(f, M.dims[lead.tgt], M.dims[lead.src]);
    for (const auto& [p, c] : rel.terms) {
      Matrix<F> pm = path_matrix(M, p);
      for (size_t t = 0; t < acc.data.size(); ++t)
        acc.data[t] = f.add(acc.data[t], f.mul(c, pm.data[t]));
    }
    for (const auto& x : acc.data)
      if (!f.is_zero(x)) return false;
  }
  return true;
}

template <FieldType F>
void assert_relations(const Representation<F>& M, const char* what) {
  if (!satisfies_relations(M))
    throw Error(std::string("representation violates defining relations: ") + what);
}

// Indecomposable projective P_i = e_i A on the basis blocks e_i A e_j with
// right multiplication as arrow action.
template <FieldType F>
Representation<F> projective(const QuotientAlgebra<F>& A, int i) {
  const F& f = A.field();
  const Quiver& q = A.quiver();
  Representation<F> M;
  M.A = &A;
  int n = q.vertex_count();
  M.dims.resize(n);
  std::vector<std::map<int, int>> pos(n);  // basis id -> position in block(i, j)
  for (int j = 0; j < n; ++j) {
    const auto& blk = A.block(i, j);
    M.dims[j] = static_cast<int>(blk.size());
    for (size_t t = 0; t < blk.size(); ++t) pos[j].emplace(blk[t], static_cast<int>(t));
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    int js = q.arrow(a).source, jt = q.arrow(a).target;
    Matrix<F> m(f, M.dims[jt], M.dims[js]);
    const auto& blk = A.block(i, js);
    for (size_t t = 0; t < blk.size(); ++t)
      for (const auto& [w, c] : A.right_mult_arrow(blk[t], a))
        m.at(pos[jt].at(w), static_cast<int>(t)) = c;
    M.arrow_mat.push_back(std::move(m));
  }
  assert_relations(M, "projective");
  return M;
}

template <FieldType F>
Representation<F> simple(const QuotientAlgebra<F>& A, int i) {
  const F& f = A.field();
  const Quiver& q = A.quiver();
  Representation<F> M;
  M.A = &A;
  M.dims.assign(q.vertex_count(), 0);
  M.dims[i] = 1;
  for (int a = 0; a < q.arrow_count(); ++a)
    M.arrow_mat.push_back(Matrix<F>(f, M.dims[q.arrow(a).target], M.dims[q.arrow(a).source]));
  assert_relations(M, "simple");
  return M;
}

// dim of top(M) = M / M rad(A) at each vertex.
template <FieldType F>
std::vector<int> top_dims(const Representation<F>& M) {
  const F& f = M.A->field();
  const Quiver& q = M.A->quiver();
  std::vector<int> out;
  for (int k = 0; k < q.vertex_count(); ++k) {
    RowSpace<F> im(f, M.dims[k]);
    for (int a = 0; a < q.arrow_count(); ++a) {
      if (q.arrow(a).target != k) continue;
      const Matrix<F>& m = M.arrow_mat[a];
      for (int c = 0; c < m.cols; ++c) {
        std::vector<typename F::Elem> col(m.rows, f.zero());
        for (int r = 0; r < m.rows; ++r) col[r] = m.at(r, c);
        im.add(std::move(col));
      }
    }
    out.push_back(M.dims[k] - im.dim());
  }
  return out;
}

template <FieldType F>
struct Cover {
  Representation<F> P;
  std::vector<int> multiplicities;              // per vertex
  std::vector<std::pair<int, int>> summands;    // (vertex k, copy t), in order
  ModuleMap<F> epi;                             // P -> M
};

// Minimal projective cover: one projective summand P_k per basis vector of
// top(M) at k, mapping its stationary generator to a chosen lift.
template <FieldType F>
Cover<F> projective_cover(const Representation<F>& M) {
  const QuotientAlgebra<F>& A = *M.A;
  const F& f = A.field();
  const Quiver& q = A.quiver();
  const int n = q.vertex_count();

  Cover<F> cover;
  cover.multiplicities.assign(n, 0);
  std::vector<std::vector<std::vector<typename F::Elem>>> lifts(n);
  for (int k = 0; k < n; ++k) {
    RowSpace<F> im(f, M.dims[k]);
    for (int a = 0; a < q.arrow_count(); ++a) {
      if (q.arrow(a).target != k) continue;
      const Matrix<F>& m = M.arrow_mat[a];
      for (int c = 0; c < m.cols; ++c) {
        std::vector<typename F::Elem> col(m.rows, f.zero());
        for (int r = 0; r < m.rows; ++r) col[r] = m.at(r, c);
        im.add(std::move(col));
      }
    }
    // greedy deterministic lifts: standard basis vectors completing im
    for (int t = 0; t < M.dims[k]; ++t) {
      std::vector<typename F::Elem> e(M.dims[k], f.zero());
      e[t] = f.one();
      if (im.add(e)) {
        lifts[k].push_back(e);
        ++cover.multiplicities[k];
      }
    }
    for (int t = 0; t < cover.multiplicities[k]; ++t) cover.summands.emplace_back(k, t);
  }

  // direct sum of projectives, with vertex-j spaces ordered by summand
  Representation<F>& P = cover.P;
  P.A = &A;
  P.dims.assign(n, 0);
  std::vector<std::vector<int>> offset(cover.summands.size(), std::vector<int>(n, 0));
  for (size_t s = 0; s < cover.summands.size(); ++s)
    for (int j = 0; j < n; ++j) {
      offset[s][j] = P.dims[j];
      P.dims[j] += static_cast<int>(A.block(cover.summands[s].first, j).size());
    }
  for (int a = 0; a < q.arrow_count(); ++a) {
    int js = q.arrow(a).source, jt = q.arrow(a).target;
    Matrix<F> m(f, P.dims[jt], P.dims[js]);
    for (size_t s = 0; s < cover.summands.size(); ++s) {
      int k = cover.summands[s].first;
      const auto& blk_s = A.block(k, js);
      const auto& blk_t = A.block(k, jt);
      std::map<int, int> pos;
      for (size_t t = 0; t < blk_t.size(); ++t) pos.emplace(blk_t[t], static_cast<int>(t));
      for (size_t t = 0; t < blk_s.size(); ++t)
        for (const auto& [w, c] : A.right_mult_arrow(blk_s[t], a))
          m.at(offset[s][jt] + pos.at(w), offset[s][js] + static_cast<int>(t)) = c;
    }
    P.arrow_mat.push_back(std::move(m));
  }
  assert_relations(P, "projective cover");

  // epi: generator of summand (k, t) goes to the lift x_{k,t}; basis path u
  // of e_k A e_j goes to x * u.
  cover.epi.vertex_mat.clear();
  for (int j = 0; j < n; ++j) cover.epi.vertex_mat.push_back(Matrix<F>(f, M.dims[j], P.dims[j]));
  for (size_t s = 0; s < cover.summands.size(); ++s) {
    auto [k, t] = cover.summands[s];
    const auto& x = lifts[k][t];
    for (int j = 0; j < n; ++j) {
      const auto& blk = A.block(k, j);
      for (size_t u = 0; u < blk.size(); ++u) {
        Matrix<F> act = path_matrix(M, A.basis()[blk[u]]);
        for (int r = 0; r < M.dims[j]; ++r) {
          typename F::Elem v = f.zero();
          for (int c = 0; c < M.dims[k]; ++c) v = f.add(v, f.mul(act.at(r, c), x[c]));
          cover.epi.vertex_mat[j].at(r, offset[s][j] + static_cast<int>(u)) = v;
        }
      }
    }
  }
  return cover;
}

template <FieldType F>
struct Syzygy {
  Representation<F> kernel;
  ModuleMap<F> inclusion;  // kernel -> cover.P
  Cover<F> cover;
};

// Kernel of the minimal projective cover, as a subrepresentation with a
// deterministic nullspace basis.
template <FieldType F>
Syzygy<F> syzygy(const Representation<F>& M) {
  const QuotientAlgebra<F>& A = *M.A;
  const F& f = A.field();
  const Quiver& q = A.quiver();
  const int n = q.vertex_count();

  Syzygy<F> out;
  out.cover = projective_cover(M);
  const Representation<F>& P = out.cover.P;

  std::vector<std::vector<std::vector<typename F::Elem>>> kernels(n);
  for (int j = 0; j < n; ++j) {
    Matrix<F> phi = out.cover.epi.vertex_mat[j];
    kernels[j] = nullspace(f, std::move(phi));
  }

  Representation<F>& K = out.kernel;
  K.A = &A;
  K.dims.resize(n);
  for (int j = 0; j < n; ++j) K.dims[j] = static_cast<int>(kernels[j].size());

  // solver per vertex: express vectors of P_j in the kernel basis
  std::vector<Matrix<F>> kmat(n);
  std::vector<std::vector<int>> kpiv(n);
  for (int j = 0; j < n; ++j) {
    Matrix<F> m(f, P.dims[j], K.dims[j]);
    for (int c = 0; c < K.dims[j]; ++c)
      for (int r = 0; r < P.dims[j]; ++r) m.at(r, c) = kernels[j][c][r];
    kmat[j] = m;
  }
  auto in_kernel_coords = [&](int j, const std::vector<typename F::Elem>& v) {
    // solve kmat[j] * y = v by augmented elimination (small systems)
    Matrix<F> aug(f, P.dims[j], K.dims[j] + 1);
    for (int r = 0; r < P.dims[j]; ++r) {
      for (int c = 0; c < K.dims[j]; ++c) aug.at(r, c) = kmat[j].at(r, c);
      aug.at(r, K.dims[j]) = v[r];
    }
    auto piv = rref(f, aug);
    std::vector<typename F::Elem> y(K.dims[j], f.zero());
    for (size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == K.dims[j]) throw Error("syzygy: vector not in kernel");
      y[piv[r]] = aug.at(static_cast<int>(r), K.dims[j]);
    }
    return y;
  };

  for (int a = 0; a < q.arrow_count(); ++a) {
    int js = q.arrow(a).source, jt = q.arrow(a).target;
    Matrix<F> m(f, K.dims[jt], K.dims[js]);
    for (int c = 0; c < K.dims[js]; ++c) {
      std::vector<typename F::Elem> img(P.dims[jt], f.zero());
      for (int r = 0; r < P.dims[jt]; ++r) {
        typename F::Elem s = f.zero();
        for (int t = 0; t < P.dims[js]; ++t)
          s = f.add(s, f.mul(P.arrow_mat[a].at(r, t), kernels[js][c][t]));
        img[r] = s;
      }
      auto y = in_kernel_coords(jt, img);
      for (int r = 0; r < K.dims[jt]; ++r) m.at(r, c) = y[r];
    }
    K.arrow_mat.push_back(std::move(m));
  }
  assert_relations(K, "syzygy");

  out.inclusion.vertex_mat.clear();
  for (int j = 0; j < n; ++j) out.inclusion.vertex_mat.push_back(kmat[j]);
  return out;
}

// Basis of Hom(M, N): solutions of the intertwining system
// N_a F_j = F_k M_a for every arrow a: j -> k.
template <FieldType F>
std::vector<ModuleMap<F>> module_hom_space(const Representation<F>& M,
                                           const Representation<F>& N) {
  const QuotientAlgebra<F>& A = *M.A;
  const F& f = A.field();
  const Quiver& q = A.quiver();
  const int n = q.vertex_count();

  std::vector<int> offset(n + 1, 0);
  for (int j = 0; j < n; ++j) offset[j + 1] = offset[j] + N.dims[j] * M.dims[j];
  int unknowns = offset[n];
  if (unknowns == 0) return {};

  std::vector<std::vector<typename F::Elem>> rows;
  for (int a = 0; a < q.arrow_count(); ++a) {
    int js = q.arrow(a).source, jt = q.arrow(a).target;
    // constraint block: N_a F_js - F_jt M_a = 0, entries (r, c) over
    // N.dims[jt] x M.dims[js]
    for (int r = 0; r < N.dims[jt]; ++r)
      for (int c = 0; c < M.dims[js]; ++c) {
        std::vector<typename F::Elem> row(unknowns, f.zero());
        bool nz = false;
        for (int t = 0; t < N.dims[js]; ++t) {
          const auto& coef = N.arrow_mat[a].at(r, t);
          if (f.is_zero(coef)) continue;
          row[offset[js] + t * M.dims[js] + c] = f.add(row[offset[js] + t * M.dims[js] + c], coef);
          nz = true;
        }
        for (int t = 0; t < M.dims[jt]; ++t) {
          const auto& coef = M.arrow_mat[a].at(t, c);
          if (f.is_zero(coef)) continue;
          int idx = offset[jt] + r * M.dims[jt] + t;
          row[idx] = f.sub(row[idx], coef);
          nz = true;
        }
        if (nz) rows.push_back(std::move(row));
      }
  }
  Matrix<F> m(f, static_cast<int>(rows.size()), unknowns);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  auto basis = nullspace(f, std::move(m));

  std::vector<ModuleMap<F>> out;
  for (const auto& v : basis) {
    ModuleMap<F> h;
    for (int j = 0; j < n; ++j) {
      Matrix<F> mat(f, N.dims[j], M.dims[j]);
      for (int r = 0; r < N.dims[j]; ++r)
        for (int c = 0; c < M.dims[j]; ++c) mat.at(r, c) = v[offset[j] + r * M.dims[j] + c];
      h.vertex_mat.push_back(std::move(mat));
    }
    out.push_back(std::move(h));
  }
  return out;
}

// Isomorphism witness search: quick reject on dimension vectors, then the
// intertwining solution space is swept (seeded random trials, deterministic
// sweep) for an element invertible at every vertex. NoWitness (nullopt)
// after an exhausted sweep is inconclusive.
template <FieldType F>
std::optional<ModuleMap<F>> modules_isomorphic(const Representation<F>& M,
                                               const Representation<F>& N, std::uint64_t seed,
                                               long budget = 1000000) {
  const F& f = M.A->field();
  if (M.dims != N.dims) return std::nullopt;
  auto homs = module_hom_space(M, N);
  if (homs.empty()) {
    // zero module: the empty map is an isomorphism
    if (M.total_dim() == 0) return ModuleMap<F>{};
    return std::nullopt;
  }
  const int n = static_cast<int>(M.dims.size());
  auto invertible_map = [&](const ModuleMap<F>& h) {
    for (int j = 0; j < n; ++j)
      if (M.dims[j] > 0 && !invertible(f, h.vertex_mat[j])) return false;
    return true;
  };

  // identical representations: the identity intertwines, try it first
  bool same = true;
  for (int a = 0; same && a < M.A->quiver().arrow_count(); ++a)
    for (size_t t = 0; t < M.arrow_mat[a].data.size(); ++t)
      if (!f.eq(M.arrow_mat[a].data[t], N.arrow_mat[a].data[t])) {
        same = false;
        break;
      }
  if (same) {
    ModuleMap<F> id;
    for (int j = 0; j < n; ++j) id.vertex_mat.push_back(Matrix<F>::identity(f, M.dims[j]));
    return id;
  }

  // flatten hom basis for the generic search helper
  std::vector<int> offset(n + 1, 0);
  for (int j = 0; j < n; ++j) offset[j + 1] = offset[j] + N.dims[j] * M.dims[j];
  auto flatten = [&](const ModuleMap<F>& h) {
    std::vector<typename F::Elem> v(offset[n], f.zero());
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < N.dims[j]; ++r)
        for (int c = 0; c < M.dims[j]; ++c)
          v[offset[j] + r * M.dims[j] + c] = h.vertex_mat[j].at(r, c);
    return v;
  };
  auto unflatten = [&](const std::vector<typename F::Elem>& v) {
    ModuleMap<F> h;
    for (int j = 0; j < n; ++j) {
      Matrix<F> mat(f, N.dims[j], M.dims[j]);
      for (int r = 0; r < N.dims[j]; ++r)
        for (int c = 0; c < M.dims[j]; ++c) mat.at(r, c) = v[offset[j] + r * M.dims[j] + c];
      h.vertex_mat.push_back(std::move(mat));
    }
    return h;
  };

  std::vector<std::vector<typename F::Elem>> basis;
  for (const auto& h : homs) basis.push_back(flatten(h));
  auto good = [&](const std::vector<typename F::Elem>& v) { return invertible_map(unflatten(v)); };
  auto found = search_combination<F>(f, basis, good, seed, 20, budget);
  if (!found) return std::nullopt;
  return unflatten(*found);
}

struct OmegaStep {
  std::vector<int> dim_vector;
  bool isomorphic_to_start = false;
};

// Iterated syzygies of the simple at vertex i with an isomorphism test
// against the starting module at every step.
template <FieldType F>
std::vector<OmegaStep> omega_orbit(const QuotientAlgebra<F>& A, int i, int steps,
                                   std::uint64_t seed = 1) {
  Representation<F> start = simple(A, i);
  Representation<F> current = start;
  std::vector<OmegaStep> out;
  for (int s = 1; s <= steps; ++s) {
    current = syzygy(current).kernel;
    OmegaStep step;
    step.dim_vector = current.dims;
    step.isomorphic_to_start = modules_isomorphic(current, start, seed).has_value();
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace quivalg
