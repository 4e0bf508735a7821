#pragma once

#include <string>
#include <vector>

#include "quivalg/element.hpp"
#include "quivalg/quiver.hpp"

namespace quivalg {

// A quiver together with the defining relations of an admissible ideal.
template <FieldType F>
struct Presentation {
  Quiver quiver;
  std::vector<AlgebraElement<F>> relations;
  int default_degree_cap = 0;
};

inline void check_preset_params(int m, bool allow_m1) {
  if (m < 1 || (m == 1 && !allow_m1))
    throw Error("presets require m >= 2 (m = 1 is exploratory only and needs --allow-m1)");
}

template <FieldType F>
void check_lambda(const F& f, const typename F::Elem& lambda) {
  if (f.is_zero(lambda)) throw Error("lambda must be a nonzero field element");
}

namespace preset_detail {

template <FieldType F>
AlgebraElement<F> binomial(const F& f, const Path& a, const Path& b) {
  return sub(f, element_from_path(f, a), element_from_path(f, b));
}

// a - b - lambda*c
template <FieldType F>
AlgebraElement<F> trinomial(const F& f, const typename F::Elem& lambda, const Path& a,
                            const Path& b, const Path& c) {
  auto r = sub(f, element_from_path(f, a), element_from_path(f, b));
  return sub(f, r, element_from_term(f, c, lambda));
}

}  // namespace preset_detail

// Arrow ids of the 6-vertex spherical quiver, in declaration order.
namespace sph {
enum : int { alpha, beta, gamma, sigma, delta, nu, rho, omega };
}

// The spherical algebra S(m,lambda): two oriented 4-cycles glued along the
// vertices 1 and 3, eight binomial/trinomial relations and two zero
// relations. dim S = 36m + 4.
template <FieldType F>
Presentation<F> spherical_presentation(const F& f, int m, const typename F::Elem& lambda,
                                       bool allow_m1 = false) {
  check_preset_params(m, allow_m1);
  check_lambda(f, lambda);

  Presentation<F> P;
  Quiver& q = P.quiver;
  for (int v = 1; v <= 6; ++v) q.add_vertex(std::to_string(v));
  q.add_arrow("α", "1", "2");
  q.add_arrow("β", "2", "3");
  q.add_arrow("γ", "3", "4");
  q.add_arrow("σ", "4", "1");
  q.add_arrow("δ", "5", "1");
  q.add_arrow("ν", "3", "5");
  q.add_arrow("ϱ", "1", "6");
  q.add_arrow("ω", "6", "3");

  using namespace sph;
  auto w = [&](std::vector<int> ids) { return make_path(q, ids); };
  auto cyc = [&](std::vector<int> ids, int k) { return power(make_path(q, ids), k); };
  auto cat = [&](const Path& a, const Path& b) { return *compose(a, b); };

  using preset_detail::binomial;
  using preset_detail::trinomial;
  auto& R = P.relations;
  R.push_back(trinomial(f, lambda, w({beta, nu, delta}), w({beta, gamma, sigma}),
                        cat(cyc({beta, gamma, sigma, alpha}, m - 1), w({beta, gamma, sigma}))));
  R.push_back(binomial(f, w({alpha, beta, nu}), w({rho, omega, nu})));
  R.push_back(trinomial(f, lambda, w({nu, delta, alpha}), w({gamma, sigma, alpha}),
                        cat(cyc({gamma, sigma, alpha, beta}, m - 1), w({gamma, sigma, alpha}))));
  R.push_back(binomial(f, w({delta, alpha, beta}), w({delta, rho, omega})));
  R.push_back(trinomial(f, lambda, w({sigma, rho, omega}), w({sigma, alpha, beta}),
                        cat(cyc({sigma, alpha, beta, gamma}, m - 1), w({sigma, alpha, beta}))));
  R.push_back(binomial(f, w({omega, gamma, sigma}), w({omega, nu, delta})));
  R.push_back(trinomial(f, lambda, w({rho, omega, gamma}), w({alpha, beta, gamma}),
                        cat(cyc({alpha, beta, gamma, sigma}, m - 1), w({alpha, beta, gamma}))));
  R.push_back(binomial(f, w({gamma, sigma, rho}), w({nu, delta, rho})));
  R.push_back(element_from_path(f, cat(cyc({alpha, beta, gamma, sigma}, m), w({alpha}))));
  R.push_back(element_from_path(f, cat(cyc({gamma, sigma, alpha, beta}, m), w({gamma}))));

  P.default_degree_cap = 4 * m + 4;
  return P;
}

// Arrow ids of the 6-vertex tetrahedral (triangulation) quiver.
namespace tet {
enum : int { delta, nu, eps, rho, sigma, alpha, gamma, beta, xi, eta, omega, mu };
}

// The two order-3 arrow permutations of the triangulation quiver: every
// arrow lies in exactly one f-orbit and one g-orbit, all of size 3.
struct TriangulationData {
  std::vector<int> f;  // arrow id -> arrow id
  std::vector<int> g;

  // (theta, f(theta), f^2(theta))^(m-1) theta f(theta) g(f(theta))
  Path zero_relation_word(const Quiver& q, int theta, int m) const {
    Path cycle = make_path(q, {theta, f[theta], f[f[theta]]});
    Path head = power(cycle, m - 1);
    Path tail = make_path(q, {theta, f[theta], g[f[theta]]});
    return *compose(head, tail);
  }
};

template <FieldType F>
struct TetrahedralPreset {
  Presentation<F> presentation;
  TriangulationData triangulation;
};

// The tetrahedral algebra Lambda(m,lambda) on the triangulation quiver of
// the tetrahedron: twelve binomial/trinomial relations plus one zero
// relation per arrow. dim Lambda = 36m.
template <FieldType F>
TetrahedralPreset<F> tetrahedral_presentation(const F& f, int m, const typename F::Elem& lambda,
                                              bool allow_m1 = false) {
  check_preset_params(m, allow_m1);
  check_lambda(f, lambda);

  TetrahedralPreset<F> out;
  Quiver& q = out.presentation.quiver;
  for (int v = 1; v <= 6; ++v) q.add_vertex(std::to_string(v));
  // Arrow endpoints are forced by the typing of the relations below.
  q.add_arrow("δ", "1", "5");
  q.add_arrow("ν", "1", "6");
  q.add_arrow("ε", "2", "5");
  q.add_arrow("ϱ", "2", "6");
  q.add_arrow("σ", "3", "2");
  q.add_arrow("α", "3", "1");
  q.add_arrow("γ", "4", "1");
  q.add_arrow("β", "4", "2");
  q.add_arrow("ξ", "5", "3");
  q.add_arrow("η", "5", "4");
  q.add_arrow("ω", "6", "4");
  q.add_arrow("μ", "6", "3");

  using namespace tet;
  TriangulationData& tri = out.triangulation;
  tri.f.assign(12, -1);
  tri.g.assign(12, -1);
  auto orbit = [](std::vector<int>& perm, int a, int b, int c) {
    perm[a] = b;
    perm[b] = c;
    perm[c] = a;
  };
  orbit(tri.f, gamma, delta, eta);
  orbit(tri.f, eps, xi, sigma);
  orbit(tri.f, rho, omega, beta);
  orbit(tri.f, nu, mu, alpha);
  orbit(tri.g, delta, xi, alpha);
  orbit(tri.g, nu, omega, gamma);
  orbit(tri.g, eps, eta, beta);
  orbit(tri.g, rho, mu, sigma);

  auto w = [&](std::vector<int> ids) { return make_path(q, ids); };
  auto cyc = [&](std::vector<int> ids, int k) { return power(make_path(q, ids), k); };
  auto cat = [&](const Path& a, const Path& b) { return *compose(a, b); };

  using preset_detail::binomial;
  using preset_detail::trinomial;
  auto& R = out.presentation.relations;
  R.push_back(trinomial(f, lambda, w({gamma, delta}), w({beta, eps}),
                        cat(cyc({beta, rho, omega}, m - 1), w({beta, eps}))));
  R.push_back(binomial(f, w({delta, eta}), w({nu, omega})));
  R.push_back(binomial(f, w({eta, gamma}), w({xi, alpha})));
  R.push_back(binomial(f, w({nu, mu}), w({delta, xi})));
  R.push_back(trinomial(f, lambda, w({rho, omega}), w({eps, eta}),
                        cat(cyc({eps, xi, sigma}, m - 1), w({eps, eta}))));
  R.push_back(binomial(f, w({omega, beta}), w({mu, sigma})));
  R.push_back(binomial(f, w({beta, rho}), w({gamma, nu})));
  R.push_back(binomial(f, w({mu, alpha}), w({omega, gamma})));
  R.push_back(trinomial(f, lambda, w({xi, sigma}), w({eta, beta}),
                        cat(cyc({eta, gamma, delta}, m - 1), w({eta, beta}))));
  R.push_back(binomial(f, w({sigma, eps}), w({alpha, delta})));
  R.push_back(binomial(f, w({eps, xi}), w({rho, mu})));
  R.push_back(binomial(f, w({alpha, nu}), w({sigma, rho})));
  for (int theta = 0; theta < 12; ++theta)
    R.push_back(element_from_path(f, tri.zero_relation_word(q, theta, m)));

  out.presentation.default_degree_cap = 4 * m + 4;
  return out;
}

}  // namespace quivalg
