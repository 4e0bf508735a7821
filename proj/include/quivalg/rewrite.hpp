#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quivalg/element.hpp"
#include "quivalg/linalg.hpp"
#include "quivalg/quiver.hpp"

namespace quivalg {

inline constexpr long kDefaultCompletionBudget = 10000;

// Oriented relation: lhs is a single path (the deglex-largest monomial of
// the relation, normalized to coefficient 1), rhs a combination of strictly
// smaller parallel monomials.
template <FieldType F>
struct RewriteRule {
  Path lhs;
  AlgebraElement<F> rhs;
};

template <FieldType F>
RewriteRule<F> orient_one(const F& f, const AlgebraElement<F>& relation) {
  if (relation.is_zero()) throw MalformedRelation("zero relation");
  if (!relation.parallel())
    throw NonParallelRelation("relation terms do not share source and target");
  for (const auto& [p, c] : relation.terms)
    if (p.length() < 2)
      throw MalformedRelation("relation not contained in the square of the arrow ideal");
  const auto& [lead, coef] = relation.leading();
  AlgebraElement<F> tail = relation;
  tail.terms.erase(std::prev(tail.terms.end()));
  RewriteRule<F> rule{lead, scale(f, f.neg(f.inv(coef)), tail)};
  return rule;
}

template <FieldType F>
std::vector<RewriteRule<F>> orient(const F& f, const std::vector<AlgebraElement<F>>& relations) {
  std::vector<RewriteRule<F>> rules;
  rules.reserve(relations.size());
  for (const auto& r : relations) rules.push_back(orient_one(f, r));
  return rules;
}

enum class ReductionStrategy { standard, alternate };

// Oriented rewriting system with diamond-lemma completion. Rewriting
// strictly decreases the deglex order, so every reduction terminates; after
// completion all overlap ambiguities up to the degree bound resolve to zero.
template <FieldType F>
class RewriteSystem {
 public:
  using Elem = typename F::Elem;

  RewriteSystem(const F& f, const Quiver& q, std::vector<RewriteRule<F>> rules)
      : f_(f), q_(q) {
    for (auto& r : rules) add_rule_unchecked(std::move(r));
  }

  const F& field() const { return f_; }
  const Quiver& quiver() const { return q_; }

  std::vector<RewriteRule<F>> active_rules() const {
    std::vector<RewriteRule<F>> out;
    for (size_t i = 0; i < rules_.size(); ++i)
      if (active_[i]) out.push_back(rules_[i]);
    return out;
  }

  int active_count() const {
    int n = 0;
    for (bool a : active_) n += a;
    return n;
  }

  // First rule application on the word per strategy, or none.
  std::optional<std::pair<int, int>> find_match(const std::string& word,
                                                ReductionStrategy s) const {
    auto try_at = [&](int pos) -> std::optional<std::pair<int, int>> {
      if (s == ReductionStrategy::standard) {
        for (size_t r = 0; r < rules_.size(); ++r)
          if (active_[r] && matches_at(word, pos, r)) return std::pair{static_cast<int>(r), pos};
      } else {
        for (size_t r = rules_.size(); r-- > 0;)
          if (active_[r] && matches_at(word, pos, r)) return std::pair{static_cast<int>(r), pos};
      }
      return std::nullopt;
    };
    if (s == ReductionStrategy::standard) {
      for (int pos = 0; pos < static_cast<int>(word.size()); ++pos)
        if (auto m = try_at(pos)) return m;
    } else {
      for (int pos = static_cast<int>(word.size()) - 1; pos >= 0; --pos)
        if (auto m = try_at(pos)) return m;
    }
    return std::nullopt;
  }

  bool reducible(const std::string& word) const {
    return find_match(word, ReductionStrategy::standard).has_value();
  }

  // True when some rule lhs matches a suffix of the word (used by the
  // irreducible-word DFS where all proper prefixes are already irreducible).
  bool reducible_at_end(const std::string& word) const {
    for (size_t r = 0; r < rules_.size(); ++r) {
      if (!active_[r]) continue;
      const std::string& l = rules_[r].lhs.word;
      if (l.size() <= word.size() &&
          word.compare(word.size() - l.size(), l.size(), l) == 0)
        return true;
    }
    return false;
  }

  AlgebraElement<F> normal_form(AlgebraElement<F> x,
                                ReductionStrategy s = ReductionStrategy::standard) const {
    while (true) {
      bool rewrote = false;
      if (s == ReductionStrategy::standard) {
        for (auto it = x.terms.rbegin(); it != x.terms.rend(); ++it)
          if (rewrite_term(x, it->first, it->second, s)) {
            rewrote = true;
            break;
          }
      } else {
        for (auto it = x.terms.begin(); it != x.terms.end(); ++it)
          if (rewrite_term(x, it->first, it->second, s)) {
            rewrote = true;
            break;
          }
      }
      if (!rewrote) return x;
    }
  }

  // Resolves all overlap ambiguities with overlap word length at most
  // 2*(degree_cap+1), adding oriented S-polynomials as new rules and keeping
  // the system inter-reduced. Throws CompletionBudgetExceeded when more than
  // `budget` rules are created in total.
  void complete(int degree_cap, long budget) {
    budget_ = budget;
    bound_ = 2 * (degree_cap + 1);
    for (size_t i = 0; i < rules_.size(); ++i)
      if (active_[i]) enqueue_overlaps(static_cast<int>(i));

    while (!queue_.empty()) {
      auto [len, word, i, j, s] = *queue_.begin();
      queue_.erase(queue_.begin());
      if (!active_[i] || !active_[j]) continue;
      resolve_overlap(i, j, s);
    }
    // final pass: store fully reduced right-hand sides
    for (size_t i = 0; i < rules_.size(); ++i)
      if (active_[i]) rules_[i].rhs = normal_form(rules_[i].rhs);
  }

  int rules_created() const { return static_cast<int>(rules_.size()); }

 private:
  bool matches_at(const std::string& word, int pos, size_t rule) const {
    const std::string& l = rules_[rule].lhs.word;
    return l.size() + pos <= word.size() && word.compare(pos, l.size(), l) == 0;
  }

  Path path_from_word(int src, const std::string& word) const {
    Path p;
    p.src = src;
    p.tgt = src;
    p.word = word;
    for (char ch : word) {
      const auto& a = q_.arrow(static_cast<unsigned char>(ch));
      assert(a.source == p.tgt);
      p.tgt = a.target;
    }
    return p;
  }

  // Applies one rewrite to the given term if possible.
  bool rewrite_term(AlgebraElement<F>& x, const Path& term, const Elem& coef,
                    ReductionStrategy s) const {
    auto m = find_match(term.word, s);
    if (!m) return false;
    auto [rule, pos] = *m;
    const RewriteRule<F>& r = rules_[rule];
    Path prefix = path_from_word(term.src, term.word.substr(0, pos));
    Path suffix = path_from_word(r.lhs.tgt, term.word.substr(pos + r.lhs.word.size()));
    Elem c = coef;
    x.terms.erase(term);
    for (const auto& [w, cw] : multiply_path(f_, prefix, r.rhs, suffix).terms)
      add_term(f_, x, w, f_.mul(c, cw));
    return true;
  }

  void add_rule_unchecked(RewriteRule<F> r) {
    rules_.push_back(std::move(r));
    active_.push_back(true);
  }

  void enqueue_overlaps(int k) {
    for (size_t i = 0; i < rules_.size(); ++i) {
      if (!active_[i]) continue;
      enqueue_pair(static_cast<int>(i), k);
      if (static_cast<int>(i) != k) enqueue_pair(k, static_cast<int>(i));
    }
  }

  // Proper overlaps: a proper suffix of lhs_i equals a proper prefix of
  // lhs_j. Inclusions are handled by inter-reduction instead.
  void enqueue_pair(int i, int j) {
    const std::string& u = rules_[i].lhs.word;
    const std::string& v = rules_[j].lhs.word;
    int maxs = static_cast<int>(std::min(u.size(), v.size())) - 1;
    for (int s = 1; s <= maxs; ++s) {
      if (u.compare(u.size() - s, s, v, 0, s) != 0) continue;
      std::string w = u + v.substr(s);
      if (static_cast<int>(w.size()) > bound_) continue;
      queue_.insert({w.size(), std::move(w), i, j, s});
    }
  }

  void resolve_overlap(int i, int j, int s) {
    const RewriteRule<F>& ri = rules_[i];
    const RewriteRule<F>& rj = rules_[j];
    Path suffix = path_from_word(ri.lhs.tgt, rj.lhs.word.substr(s));
    Path prefix = path_from_word(ri.lhs.src,
                                 ri.lhs.word.substr(0, ri.lhs.word.size() - s));
    AlgebraElement<F> e1 = multiply_path(f_, stationary_path(ri.lhs.src), ri.rhs, suffix);
    AlgebraElement<F> e2 = multiply_path(f_, prefix, rj.rhs, stationary_path(rj.lhs.tgt));
    AlgebraElement<F> diff = normal_form(sub(f_, e1, e2));
    if (diff.is_zero()) return;
    add_new_rules(diff);
  }

  // Orients the element into a rule, deactivating any rule whose lhs became
  // reducible; deactivated rules re-enter as relations via the worklist.
  void add_new_rules(AlgebraElement<F> first) {
    std::vector<AlgebraElement<F>> work{std::move(first)};
    while (!work.empty()) {
      AlgebraElement<F> rel = normal_form(std::move(work.back()));
      work.pop_back();
      if (rel.is_zero()) continue;
      RewriteRule<F> rule = orient_one(f_, rel);
      if (static_cast<long>(rules_.size()) + 1 > budget_)
        throw CompletionBudgetExceeded(
            "completion exceeded the rule budget of " + std::to_string(budget_) +
            "; the presentation is likely infinite-dimensional or mistyped");
      int id = static_cast<int>(rules_.size());
      add_rule_unchecked(std::move(rule));
      const std::string& lnew = rules_[id].lhs.word;
      for (size_t k = 0; k + 1 < rules_.size(); ++k) {
        if (!active_[k]) continue;
        if (rules_[k].lhs.word.find(lnew) == std::string::npos) continue;
        active_[k] = false;
        work.push_back(sub(f_, element_from_path(f_, rules_[k].lhs), rules_[k].rhs));
      }
      enqueue_overlaps(id);
    }
  }

  F f_;
  Quiver q_;
  std::vector<RewriteRule<F>> rules_;
  std::vector<bool> active_;
  std::set<std::tuple<size_t, std::string, int, int, int>> queue_;
  long budget_ = kDefaultCompletionBudget;
  int bound_ = 0;
};

// Standalone completion entry point.
template <FieldType F>
std::vector<RewriteRule<F>> complete(const F& f, const Quiver& q,
                                     std::vector<RewriteRule<F>> rules, int degree_cap,
                                     long budget = kDefaultCompletionBudget) {
  RewriteSystem<F> sys(f, q, std::move(rules));
  sys.complete(degree_cap, budget);
  return sys.active_rules();
}

// The finite-dimensional quotient of a path algebra by an admissible ideal:
// a confluent rewriting system, the normal-form monomial basis grouped by
// (source, target) blocks, and right multiplication maps on the basis.
template <FieldType F>
class QuotientAlgebra {
 public:
  using Elem = typename F::Elem;
  using SparseVec = std::vector<std::pair<int, Elem>>;

  QuotientAlgebra(std::vector<AlgebraElement<F>> relations, RewriteSystem<F> system,
                  std::vector<Path> basis, int degree_cap, int rules_initial)
      : relations_(std::move(relations)),
        system_(std::move(system)),
        basis_(std::move(basis)),
        degree_cap_(degree_cap),
        rules_initial_(rules_initial) {
    for (size_t i = 0; i < basis_.size(); ++i) basis_index_.emplace(basis_[i], static_cast<int>(i));
    int n = quiver().vertex_count();
    blocks_.assign(n, std::vector<std::vector<int>>(n));
    for (size_t i = 0; i < basis_.size(); ++i)
      blocks_[basis_[i].src][basis_[i].tgt].push_back(static_cast<int>(i));
    stationary_ids_.assign(n, -1);
    for (size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].stationary()) stationary_ids_[basis_[i].src] = static_cast<int>(i);
    build_arrow_actions();
  }

  const F& field() const { return system_.field(); }
  const Quiver& quiver() const { return system_.quiver(); }
  const std::vector<AlgebraElement<F>>& relations() const { return relations_; }
  const std::vector<Path>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int degree_cap() const { return degree_cap_; }
  int rules_initial() const { return rules_initial_; }
  int rules_completed() const { return static_cast<int>(system_.active_rules().size()); }
  const RewriteSystem<F>& system() const { return system_; }

  const std::vector<int>& block(int i, int j) const { return blocks_.at(i).at(j); }
  int stationary_id(int v) const { return stationary_ids_.at(v); }

  std::optional<int> basis_id(const Path& p) const {
    auto it = basis_index_.find(p);
    if (it == basis_index_.end()) return std::nullopt;
    return it->second;
  }

  AlgebraElement<F> normal_form(const AlgebraElement<F>& x,
                                ReductionStrategy s = ReductionStrategy::standard) const {
    return system_.normal_form(x, s);
  }

  // Normal form in basis coordinates.
  SparseVec nf_coords(const AlgebraElement<F>& x) const {
    AlgebraElement<F> nf = system_.normal_form(x);
    SparseVec v;
    v.reserve(nf.terms.size());
    for (const auto& [p, c] : nf.terms) {
      auto id = basis_id(p);
      if (!id) throw Error("normal form left the basis; completion is inconsistent");
      v.emplace_back(*id, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  AlgebraElement<F> element_of(const SparseVec& coords) const {
    AlgebraElement<F> e;
    for (const auto& [id, c] : coords) add_term(field(), e, basis_[id], c);
    return e;
  }

  // Right multiplication of basis element u by arrow a (empty when the
  // endpoints do not compose).
  const SparseVec& right_mult_arrow(int u, int a) const { return arrow_right_[a][u]; }

  SparseVec mult_basis(int u, int v) const {
    auto uv = compose(basis_[u], basis_[v]);
    if (!uv) return {};
    return nf_coords(element_from_path(field(), *uv));
  }

  // Largest k with rad^k != 0; the build certificate guarantees it is at
  // most degree_cap.
  int nilpotency_degree(int limit = 1 << 20) const {
    const F& f = field();
    RowSpace<F> v(f, dim());
    for (int u = 0; u < dim(); ++u)
      if (!basis_[u].stationary()) {
        std::vector<Elem> unit(dim(), f.zero());
        unit[u] = f.one();
        v.add(std::move(unit));
      }
    int k = 1;
    while (v.dim() > 0 && k < limit) {
      RowSpace<F> next(f, dim());
      for (const auto& row : v.rows())
        for (int a = 0; a < quiver().arrow_count(); ++a) {
          std::vector<Elem> w(dim(), f.zero());
          bool nonzero = false;
          for (int u = 0; u < dim(); ++u) {
            if (f.is_zero(row[u])) continue;
            for (const auto& [t, c] : arrow_right_[a][u]) {
              w[t] = f.add(w[t], f.mul(row[u], c));
              nonzero = true;
            }
          }
          if (nonzero) next.add(std::move(w));
        }
      if (next.dim() == 0) break;
      v = std::move(next);
      ++k;
    }
    return k;
  }

 private:
  void build_arrow_actions() {
    arrow_right_.assign(quiver().arrow_count(), std::vector<SparseVec>(basis_.size()));
    for (int a = 0; a < quiver().arrow_count(); ++a) {
      Path ap = arrow_path(quiver(), a);
      for (int u = 0; u < dim(); ++u) {
        auto ba = compose(basis_[u], ap);
        if (!ba) continue;
        arrow_right_[a][u] = nf_coords(element_from_path(field(), *ba));
      }
    }
  }

  std::vector<AlgebraElement<F>> relations_;
  RewriteSystem<F> system_;
  std::vector<Path> basis_;
  int degree_cap_;
  int rules_initial_;
  std::map<Path, int, DeglexLess> basis_index_;
  std::vector<std::vector<std::vector<int>>> blocks_;
  std::vector<int> stationary_ids_;
  std::vector<std::vector<SparseVec>> arrow_right_;  // [arrow][basis id]
};

namespace detail {

// All rewriting-irreducible words, by DFS; prefixes of irreducible words are
// irreducible, so extensions only need a suffix check. Returns nullopt when
// an irreducible word of length max_len+1 exists.
template <FieldType F>
std::optional<std::vector<Path>> irreducible_words(const RewriteSystem<F>& sys, int max_len,
                                                   size_t hard_limit = 1000000) {
  const Quiver& q = sys.quiver();
  std::vector<std::vector<int>> out_arrows(q.vertex_count());
  for (int a = 0; a < q.arrow_count(); ++a) out_arrows[q.arrow(a).source].push_back(a);
  std::vector<Path> words;
  bool overflow = false;

  std::function<void(Path&)> dfs = [&](Path& p) {
    if (overflow) return;
    words.push_back(p);
    if (words.size() > hard_limit) throw Error("irreducible word enumeration exceeded limit");
    if (p.length() > max_len) {
      overflow = true;
      return;
    }
    for (int a : out_arrows[p.tgt]) {
      Path e = p;
      e.word.push_back(static_cast<char>(a));
      e.tgt = q.arrow(a).target;
      if (!sys.reducible_at_end(e.word)) dfs(e);
    }
  };
  for (int v = 0; v < q.vertex_count() && !overflow; ++v) {
    Path p = stationary_path(v);
    dfs(p);
  }
  if (overflow) return std::nullopt;
  std::sort(words.begin(), words.end(), [](const Path& a, const Path& b) {
    return DeglexLess{}(a, b);
  });
  return words;
}

}  // namespace detail

// Builds the bound quiver algebra KQ/I. The degree cap is raised twice
// before giving up; a successful build certifies that every path of length
// degree_cap+1 reduces to zero (rad^(cap+1) = 0).
template <FieldType F>
QuotientAlgebra<F> build_algebra(const F& f, const Quiver& q,
                                 const std::vector<AlgebraElement<F>>& relations, int degree_cap,
                                 long budget = kDefaultCompletionBudget) {
  std::vector<RewriteRule<F>> seed = orient(f, relations);
  int rules_initial = static_cast<int>(seed.size());
  for (const auto& r : seed)
    if (r.lhs.length() > degree_cap)
      degree_cap = r.lhs.length();  // pre: cap at least the max relation degree

  std::string last_failure;
  for (int attempt = 0; attempt < 3; ++attempt) {
    int cap = degree_cap + 4 * attempt;
    RewriteSystem<F> sys(f, q, seed);
    sys.complete(cap, budget);
    auto words = detail::irreducible_words(sys, cap);
    if (!words) {
      last_failure = "irreducible path of length " + std::to_string(cap + 1);
      continue;
    }
    QuotientAlgebra<F> algebra(relations, std::move(sys), std::move(*words), cap, rules_initial);
    if (algebra.nilpotency_degree(cap + 2) > cap) {
      last_failure = "radical not nilpotent within degree " + std::to_string(cap);
      continue;
    }
    return algebra;
  }
  throw NoFiniteCertificate("no finiteness certificate up to degree cap " +
                            std::to_string(degree_cap + 8) + " (" + last_failure +
                            "); raise --cap");
}

}  // namespace quivalg
