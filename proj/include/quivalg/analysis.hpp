#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivalg/linalg.hpp"
#include "quivalg/rewrite.hpp"

namespace quivalg {

// A finite-dimensional basic algebra presented by structure constants on a
// basis compatible with a complete set of orthogonal idempotents: basis
// elements live in blocks e_i A e_j. Both bound quiver algebras and tilting
// endomorphism algebras are analyzed through this view.
template <FieldType F>
struct TableAlgebra {
  using Elem = typename F::Elem;
  using SparseVec = std::vector<std::pair<int, Elem>>;

  const F* f = nullptr;
  int n_blocks = 0;
  std::vector<std::pair<int, int>> basis_block;          // basis id -> (i, j)
  std::vector<std::vector<std::vector<int>>> blocks;     // (i, j) -> basis ids
  std::vector<std::vector<SparseVec>> table;             // product on basis pairs
  std::vector<SparseVec> idempotents;                    // e_i as coordinate vectors
  std::vector<std::string> labels;                       // printable basis labels

  int dim() const { return static_cast<int>(basis_block.size()); }

  SparseVec mult(const SparseVec& x, const SparseVec& y) const {
    std::map<int, Elem> acc;
    for (const auto& [u, cu] : x)
      for (const auto& [v, cv] : y)
        for (const auto& [w, cw] : table[u][v]) {
          auto [it, inserted] = acc.emplace(w, f->zero());
          it->second = f->add(it->second, f->mul(f->mul(cu, cv), cw));
          if (f->is_zero(it->second)) acc.erase(it);
        }
    return SparseVec(acc.begin(), acc.end());
  }

  SparseVec unit() const {
    SparseVec u;
    std::map<int, Elem> acc;
    for (const auto& e : idempotents)
      for (const auto& [w, c] : e) acc.emplace(w, c);
    return SparseVec(acc.begin(), acc.end());
  }
};

template <FieldType F>
TableAlgebra<F> to_table(const QuotientAlgebra<F>& A) {
  TableAlgebra<F> t;
  t.f = &A.field();
  t.n_blocks = A.quiver().vertex_count();
  t.basis_block.resize(A.dim());
  t.blocks.assign(t.n_blocks, std::vector<std::vector<int>>(t.n_blocks));
  for (int u = 0; u < A.dim(); ++u) {
    const Path& p = A.basis()[u];
    t.basis_block[u] = {p.src, p.tgt};
    t.blocks[p.src][p.tgt].push_back(u);
    t.labels.push_back(path_to_string(A.quiver(), p));
  }
  t.table.assign(A.dim(), std::vector<typename TableAlgebra<F>::SparseVec>(A.dim()));
  for (int u = 0; u < A.dim(); ++u)
    for (int v = 0; v < A.dim(); ++v)
      if (A.basis()[u].tgt == A.basis()[v].src) t.table[u][v] = A.mult_basis(u, v);
  for (int i = 0; i < t.n_blocks; ++i)
    t.idempotents.push_back({{A.stationary_id(i), A.field().one()}});
  return t;
}

// Cartan matrix with the convention C[i][j] = dim e_i A e_j.
template <FieldType F>
std::vector<std::vector<long>> cartan(const TableAlgebra<F>& A) {
  std::vector<std::vector<long>> c(A.n_blocks, std::vector<long>(A.n_blocks, 0));
  for (int i = 0; i < A.n_blocks; ++i)
    for (int j = 0; j < A.n_blocks; ++j) c[i][j] = static_cast<long>(A.blocks[i][j].size());
  return c;
}

template <FieldType F>
std::vector<std::vector<long>> cartan(const QuotientAlgebra<F>& A) {
  int n = A.quiver().vertex_count();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = static_cast<long>(A.block(i, j).size());
  return c;
}

template <FieldType F>
int dimension(const QuotientAlgebra<F>& A) {
  return A.dim();
}

template <FieldType F>
struct IdentityCheck {
  bool pass = false;
  AlgebraElement<F> residual;
};

// Checks lhs = rhs in A; a failing check carries the nonzero residual.
template <FieldType F>
IdentityCheck<F> verify_identity(const QuotientAlgebra<F>& A, const AlgebraElement<F>& lhs,
                                 const AlgebraElement<F>& rhs) {
  IdentityCheck<F> out;
  out.residual = A.normal_form(sub(A.field(), lhs, rhs));
  out.pass = out.residual.is_zero();
  return out;
}

// Right socle of e_i A: solutions of x * a = 0 for every arrow a, computed
// per projective by an exact kernel. Returns the coordinate basis in terms
// of the block-row basis ids.
template <FieldType F>
struct SocleBasis {
  std::vector<int> row_ids;                                // basis ids of e_i A
  std::vector<std::vector<typename F::Elem>> vectors;      // kernel basis over row_ids
};

template <FieldType F>
SocleBasis<F> socle_basis(const QuotientAlgebra<F>& A, int i) {
  const F& f = A.field();
  const Quiver& q = A.quiver();
  SocleBasis<F> out;
  for (int j = 0; j < q.vertex_count(); ++j)
    for (int u : A.block(i, j)) out.row_ids.push_back(u);
  std::vector<int> pos(A.dim(), -1);
  for (size_t k = 0; k < out.row_ids.size(); ++k) pos[out.row_ids[k]] = static_cast<int>(k);

  int cols = static_cast<int>(out.row_ids.size());
  int rows = 0;
  for (int a = 0; a < q.arrow_count(); ++a) rows += cols;  // generous upper bound
  Matrix<F> m(f, rows, cols);
  int r = 0;
  for (int a = 0; a < q.arrow_count(); ++a) {
    // constraint rows indexed by target coordinates of x*a
    std::map<int, int> target_row;
    for (int k = 0; k < cols; ++k) {
      for (const auto& [w, c] : A.right_mult_arrow(out.row_ids[k], a)) {
        auto [it, inserted] = target_row.emplace(w, r);
        if (inserted) ++r;
        m.at(it->second, k) = f.add(m.at(it->second, k), c);
      }
    }
  }
  m.rows = r;
  m.data.resize(static_cast<size_t>(r) * cols, f.zero());
  out.vectors = nullspace(f, m);
  return out;
}

template <FieldType F>
std::vector<int> socle_dims(const QuotientAlgebra<F>& A) {
  std::vector<int> dims;
  for (int i = 0; i < A.quiver().vertex_count(); ++i)
    dims.push_back(static_cast<int>(socle_basis(A, i).vectors.size()));
  return dims;
}

// A symmetrizing functional phi: symmetric (phi(xy) = phi(yx)) with a
// non-degenerate Gram matrix G[u][v] = phi(b_u b_v); its existence
// certifies that the algebra is symmetric.
template <FieldType F>
struct SymmetrizingForm {
  std::vector<typename F::Elem> phi;  // values on the basis
  Matrix<F> gram;
  int gram_rank = 0;
};

template <FieldType F>
Matrix<F> gram_matrix(const TableAlgebra<F>& A, const std::vector<typename F::Elem>& phi) {
  const F& f = *A.f;
  Matrix<F> g(f, A.dim(), A.dim());
  for (int u = 0; u < A.dim(); ++u)
    for (int v = 0; v < A.dim(); ++v) {
      typename F::Elem s = f.zero();
      for (const auto& [w, c] : A.table[u][v]) s = f.add(s, f.mul(c, phi[w]));
      g.at(u, v) = s;
    }
  return g;
}

// Solves phi(b_u b_v - b_v b_u) = 0 exactly, then searches the solution
// space for a functional with full-rank Gram matrix (seeded random trials,
// then a deterministic sweep). NotFound (nullopt) is inconclusive: it does
// not prove the algebra non-symmetric.
template <FieldType F>
std::optional<SymmetrizingForm<F>> find_symmetrizing_form(const TableAlgebra<F>& A,
                                                          std::uint64_t seed,
                                                          long random_trials = 20,
                                                          long budget = 1000000) {
  const F& f = *A.f;
  const int d = A.dim();
  std::vector<std::vector<typename F::Elem>> rows;
  for (int u = 0; u < d; ++u)
    for (int v = u + 1; v < d; ++v) {
      std::vector<typename F::Elem> row(d, f.zero());
      bool nonzero = false;
      for (const auto& [w, c] : A.table[u][v]) {
        row[w] = f.add(row[w], c);
        nonzero = true;
      }
      for (const auto& [w, c] : A.table[v][u]) {
        row[w] = f.sub(row[w], c);
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  Matrix<F> m(f, static_cast<int>(rows.size()), d);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < d; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  auto basis = nullspace(f, std::move(m));
  if (basis.empty()) return std::nullopt;

  auto good = [&](const std::vector<typename F::Elem>& phi) {
    return rank(f, gram_matrix(A, phi)) == d;
  };
  auto found = search_combination<F>(f, basis, good, seed, random_trials, budget);
  if (!found) return std::nullopt;
  SymmetrizingForm<F> out;
  out.phi = *found;
  out.gram = gram_matrix(A, out.phi);
  out.gram_rank = rank(f, out.gram);
  return out;
}

// Jacobson radical via the trace form of the left regular representation
// (valid in characteristic zero): per block, J ∩ e_i A e_j is the kernel of
// tr(L_{xy}) against the opposite block. Returns per-block radical bases.
template <FieldType F>
struct RadicalData {
  std::vector<std::vector<std::vector<std::vector<typename F::Elem>>>> block_basis;
  std::vector<std::vector<long>> rad_dims;
  std::vector<std::vector<long>> rad_sq_dims;

  std::vector<std::vector<long>> arrow_counts() const {
    auto m = rad_dims;
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m[i].size(); ++j) m[i][j] -= rad_sq_dims[i][j];
    return m;
  }
};

template <FieldType F>
RadicalData<F> radical_data(const TableAlgebra<F>& A) {
  const F& f = *A.f;
  if (f.characteristic() != 0)
    throw Error("radical_data requires characteristic zero");
  const int d = A.dim();
  const int n = A.n_blocks;

  // traces of left multiplications by basis elements
  std::vector<typename F::Elem> tr(d, f.zero());
  for (int w = 0; w < d; ++w)
    for (int v = 0; v < d; ++v)
      for (const auto& [x, c] : A.table[w][v])
        if (x == v) tr[w] = f.add(tr[w], c);

  RadicalData<F> out;
  out.block_basis.assign(n, std::vector<std::vector<std::vector<typename F::Elem>>>(n));
  out.rad_dims.assign(n, std::vector<long>(n, 0));
  out.rad_sq_dims.assign(n, std::vector<long>(n, 0));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& bij = A.blocks[i][j];
      const auto& bji = A.blocks[j][i];
      if (bij.empty()) continue;
      Matrix<F> m(f, static_cast<int>(bji.size()), static_cast<int>(bij.size()));
      for (size_t r = 0; r < bji.size(); ++r)
        for (size_t c = 0; c < bij.size(); ++c) {
          typename F::Elem s = f.zero();
          for (const auto& [w, cc] : A.table[bij[c]][bji[r]]) s = f.add(s, f.mul(cc, tr[w]));
          m.at(static_cast<int>(r), static_cast<int>(c)) = s;
        }
      out.block_basis[i][j] = nullspace(f, std::move(m));
      out.rad_dims[i][j] = static_cast<long>(out.block_basis[i][j].size());
    }

  // rad^2 per block: sums of products of radical elements
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RowSpace<F> span(f, d);
      for (int k = 0; k < n; ++k)
        for (const auto& x : out.block_basis[i][k])
          for (const auto& y : out.block_basis[k][j]) {
            // x, y are coordinates over their block bases; expand and multiply
            typename TableAlgebra<F>::SparseVec xv, yv;
            for (size_t t = 0; t < x.size(); ++t)
              if (!f.is_zero(x[t])) xv.emplace_back(A.blocks[i][k][t], x[t]);
            for (size_t t = 0; t < y.size(); ++t)
              if (!f.is_zero(y[t])) yv.emplace_back(A.blocks[k][j][t], y[t]);
            auto prod = A.mult(xv, yv);
            std::vector<typename F::Elem> dense(d, f.zero());
            bool nz = false;
            for (const auto& [w, c] : prod) {
              dense[w] = c;
              nz = true;
            }
            if (nz) span.add(std::move(dense));
          }
      out.rad_sq_dims[i][j] = span.dim();
    }
  return out;
}

}  // namespace quivalg
