// quivalg: command-line workbench for the spherical and tetrahedral
// families of bound quiver algebras.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quivalg/report.hpp"

namespace {

using namespace quivalg;

struct CommonOpts {
  std::string preset = "spherical";
  std::string file;
  std::vector<int> ms;
  std::string lambda = "1";
  std::string field = "Q";
  int cap = 0;
  std::uint64_t seed = 1;
  std::string format = "md";
  bool keep_going = false;
  bool allow_m1 = false;
  bool timings = false;
  // resolve/hom extras
  int vertex = 0;
  int steps = 4;
  int hom_i = 1;
  int hom_j = 1;
  int hom_shift = 0;
};

long env_budget(long fallback) {
  const char* v = std::getenv("QUIVALG_BUDGET");
  if (!v) return fallback;
  try {
    long b = std::stol(v);
    if (b > 0) return b;
  } catch (const std::exception&) {
  }
  throw Error("QUIVALG_BUDGET must be a positive integer");
}

template <class Fn>
int with_field(const CommonOpts& o, Fn&& fn) {
  FieldSpec spec = FieldSpec::parse(o.field, o.lambda);
  if (spec.kind == FieldSpec::Kind::rationals) {
    Rationals f;
    auto lam = f.parse(spec.lambda);
    if (!lam) throw Error("cannot parse lambda '" + spec.lambda + "' as a rational");
    if (f.is_zero(*lam)) throw Error("lambda must be nonzero");
    return fn(f, *lam, spec);
  }
  PrimeField f(spec.p);
  auto lam = f.parse(spec.lambda);
  if (!lam) throw Error("cannot parse lambda '" + spec.lambda + "' in " + f.describe());
  if (f.is_zero(*lam)) throw Error("lambda must be nonzero in " + f.describe());
  return fn(f, *lam, spec);
}

template <FieldType F>
Presentation<F> load_presentation(const F& f, const CommonOpts& o, int m,
                                  const typename F::Elem& lambda) {
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw Error("cannot open presentation file: " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(f, buf.str(), lambda);
  }
  if (o.preset == "spherical") return spherical_presentation(f, m, lambda, o.allow_m1);
  if (o.preset == "tetrahedral")
    return tetrahedral_presentation(f, m, lambda, o.allow_m1).presentation;
  throw Error("unknown preset '" + o.preset + "' (expected spherical or tetrahedral)");
}

void emit(const CommonOpts& o, const ordered_json& j, const std::string& md) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << md;
}

std::string cartan_markdown(const std::vector<std::vector<long>>& c) {
  std::ostringstream out;
  for (const auto& row : c) {
    out << "  ";
    for (long x : row) out << x << " ";
    out << "\n";
  }
  return out.str();
}

int cmd_build(const CommonOpts& o) {
  return with_field(o, [&](const auto& f, auto lam, const FieldSpec& spec) -> int {
    int m = o.ms.empty() ? 2 : o.ms.front();
    auto P = load_presentation(f, o, m, lam);
    int cap = o.cap ? o.cap : P.default_degree_cap;
    auto A = build_algebra(f, P.quiver, P.relations, cap, env_budget(kDefaultCompletionBudget));
    ordered_json j;
    j["field"] = ordered_json{{"kind", spec.describe()}, {"note", kFieldNote}};
    if (o.file.empty()) {
      j["preset"] = o.preset;
      j["m"] = m;
    } else {
      j["file"] = o.file;
    }
    j["lambda"] = o.lambda;
    j["algebra"] = algebra_summary_json(A);
    std::ostringstream md;
    md << "# algebra summary\n\n";
    if (o.file.empty()) md << "- preset: " << o.preset << ", m = " << m;
    else md << "- file: " << o.file;
    md << ", lambda = " << o.lambda << ", field = " << spec.describe() << "\n";
    md << "- dim = " << A.dim() << "\n";
    md << "- rewrite rules: " << A.rules_initial() << " given, " << A.rules_completed()
       << " after completion\n";
    md << "- radical nilpotency degree: " << A.nilpotency_degree() << "\n";
    md << "- " << kCartanNote << ":\n\n" << cartan_markdown(cartan(A)) << "\n";
    md << "- socle dims per projective: ";
    for (int d : socle_dims(A)) md << d << " ";
    md << "\n- note: " << kFieldNote << "\n";
    emit(o, j, md.str());
    return 0;
  });
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
  return with_field(o, [&](const auto& f, auto lam, const FieldSpec& spec) -> int {
    RunParams params;
    params.ms = o.ms.empty() ? std::vector<int>{2, 3} : o.ms;
    params.lambda_text = o.lambda;
    params.field = spec;
    params.seed = o.seed;
    params.cap_override = o.cap;
    params.completion_budget = env_budget(kDefaultCompletionBudget);
    params.search_budget = env_budget(1000000);
    params.keep_going = o.keep_going;
    params.allow_m1 = o.allow_m1;
    params.timings = o.timings;
    using FT = std::decay_t<decltype(f)>;
    VerificationRun<FT> run(f, lam, params);
    run.run_suite(suite);
    emit(o, run.to_json(), run.to_markdown());
    return run.all_passed() ? 0 : 1;
  });
}

int cmd_resolve(const CommonOpts& o) {
  return with_field(o, [&](const auto& f, auto lam, const FieldSpec& spec) -> int {
    int m = o.ms.empty() ? 2 : o.ms.front();
    auto P = load_presentation(f, o, m, lam);
    int cap = o.cap ? o.cap : P.default_degree_cap;
    auto A = build_algebra(f, P.quiver, P.relations, cap, env_budget(kDefaultCompletionBudget));
    std::vector<int> vertices;
    if (o.vertex > 0)
      vertices.push_back(o.vertex - 1);
    else
      for (int i = 0; i < A.quiver().vertex_count(); ++i) vertices.push_back(i);

    ordered_json j;
    j["field"] = spec.describe();
    j["steps"] = o.steps;
    ordered_json arr = ordered_json::array();
    std::ostringstream md;
    md << "# syzygy orbits (" << o.steps << " steps)\n\n";
    for (int v : vertices) {
      auto orbit = omega_orbit(A, v, o.steps, o.seed);
      ordered_json steps = ordered_json::array();
      md << "- simple at vertex " << A.quiver().vertex_name(v) << ": ";
      for (const auto& st : orbit) {
        steps.push_back(
            ordered_json{{"dim_vector", st.dim_vector}, {"iso_to_start", st.isomorphic_to_start}});
        md << "(";
        for (size_t k = 0; k < st.dim_vector.size(); ++k)
          md << (k ? "," : "") << st.dim_vector[k];
        md << (st.isomorphic_to_start ? ")* " : ") ");
      }
      md << "\n";
      arr.push_back(ordered_json{{"vertex", A.quiver().vertex_name(v)}, {"orbit", steps}});
    }
    md << "\n(* marks steps isomorphic to the starting simple)\n";
    j["orbits"] = arr;
    emit(o, j, md.str());
    return 0;
  });
}

int cmd_hom(const CommonOpts& o) {
  return with_field(o, [&](const auto& f, auto lam, const FieldSpec& spec) -> int {
    using FT = std::decay_t<decltype(f)>;
    int m = o.ms.empty() ? 2 : o.ms.front();
    auto P = load_presentation(f, o, m, lam);
    int cap = o.cap ? o.cap : P.default_degree_cap;
    auto A = build_algebra(f, P.quiver, P.relations, cap, env_budget(kDefaultCompletionBudget));
    std::vector<ProjComplex<FT>> Ts;
    std::string what;
    if (o.file.empty() && o.preset == "tetrahedral") {
      Ts = build_tilting_T(A);
      what = "tilting summand";
    } else {
      for (int v = 0; v < A.quiver().vertex_count(); ++v)
        Ts.push_back(stalk_complex(A, v));
      what = "stalk projective";
    }
    int n = static_cast<int>(Ts.size());
    if (o.hom_i < 1 || o.hom_i > n || o.hom_j < 1 || o.hom_j > n)
      throw Error("--i/--j out of range 1.." + std::to_string(n));
    auto h = hom_complexes(Ts[o.hom_i - 1], Ts[o.hom_j - 1], o.hom_shift);
    ordered_json j;
    j["field"] = spec.describe();
    j["object"] = what;
    j["i"] = o.hom_i;
    j["j"] = o.hom_j;
    j["shift"] = o.hom_shift;
    j["chain_map_dim"] = h.hom->chain_map_dim();
    j["null_homotopic_dim"] = h.hom->homotopy_dim();
    j["hom_dim"] = h.dim();
    std::ostringstream md;
    md << "Hom(" << what << " " << o.hom_i << ", " << what << " " << o.hom_j << "["
       << o.hom_shift << "]) = " << h.dim() << "  (chain maps " << h.hom->chain_map_dim()
       << ", null-homotopic " << h.hom->homotopy_dim() << ")\n";
    emit(o, j, md.str());
    return 0;
  });
}

int cmd_report(const CommonOpts& o) {
  return with_field(o, [&](const auto& f, auto lam, const FieldSpec& spec) -> int {
    using FT = std::decay_t<decltype(f)>;
    RunParams params;
    params.ms = o.ms.empty() ? std::vector<int>{2, 3} : o.ms;
    params.lambda_text = o.lambda;
    params.field = spec;
    params.seed = o.seed;
    params.cap_override = o.cap;
    params.completion_budget = env_budget(kDefaultCompletionBudget);
    params.search_budget = env_budget(1000000);
    params.keep_going = o.keep_going;
    params.allow_m1 = o.allow_m1;
    params.timings = o.timings;

    ordered_json builds = ordered_json::array();
    std::ostringstream md;
    md << "# quivalg full report\n\n## algebras\n\n";
    for (int m : params.ms) {
      for (const char* preset : {"spherical", "tetrahedral"}) {
        CommonOpts bo = o;
        bo.preset = preset;
        auto P = load_presentation(f, bo, m, lam);
        int cap = o.cap ? o.cap : P.default_degree_cap;
        auto A = build_algebra(f, P.quiver, P.relations, cap, params.completion_budget);
        ordered_json b;
        b["preset"] = preset;
        b["m"] = m;
        b["summary"] = algebra_summary_json(A);
        builds.push_back(std::move(b));
        md << "### " << preset << ", m = " << m << "\n\n- dim = " << A.dim() << "\n\n"
           << cartan_markdown(cartan(A)) << "\n";
      }
    }
    VerificationRun<FT> run(f, lam, params);
    run.run_suite("all");
    ordered_json j = run.to_json();
    j["builds"] = builds;
    md << "\n" << run.to_markdown();
    emit(o, j, md.str());
    return run.all_passed() ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quivalg: a workbench for spherical and tetrahedral bound quiver algebras"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_common = [&](CLI::App* cmd, bool with_preset = true) {
    if (with_preset) {
      cmd->add_option("--preset", o.preset, "spherical | tetrahedral");
      cmd->add_option("--file", o.file, "presentation file (.qpa) instead of a preset");
    }
    cmd->add_option("--m", o.ms, "degree parameter(s) m >= 2");
    cmd->add_option("--lambda", o.lambda, "nonzero scalar parameter (rational or residue)");
    cmd->add_option("--field", o.field, "coefficient field: Q (default) or Fp:<p>");
    cmd->add_option("--cap", o.cap, "degree cap override for the rewriting basis");
    cmd->add_option("--seed", o.seed, "seed for certificate searches");
    cmd->add_option("--format", o.format, "md (default) or json")
        ->check(CLI::IsMember({"md", "json"}));
    cmd->add_flag("--keep-going", o.keep_going, "do not stop at the first failing check");
    cmd->add_flag("--allow-m1", o.allow_m1, "allow the exploratory m = 1 presets");
    cmd->add_flag("--timings", o.timings, "include wall-clock timings in the output");
  };

  auto* build = app.add_subcommand("build", "build an algebra and print its summary");
  add_common(build);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("--suite", suite,
                     "identities | symmetric | tilting | derived-equivalence | periodicity | all")
      ->check(CLI::IsMember(
          {"identities", "symmetric", "tilting", "derived-equivalence", "periodicity", "all"}));
  add_common(verify, false);
  auto* resolve = app.add_subcommand("resolve", "iterated syzygies of simple modules");
  add_common(resolve);
  resolve->add_option("--vertex", o.vertex, "1-based vertex (default: all)");
  resolve->add_option("--steps", o.steps, "number of syzygy steps");
  auto* hom = app.add_subcommand("hom", "Hom spaces in the homotopy category");
  add_common(hom);
  hom->add_option("--i", o.hom_i, "source object index (1-based)");
  hom->add_option("--j", o.hom_j, "target object index (1-based)");
  hom->add_option("--shift", o.hom_shift, "translation applied to the target");
  auto* report = app.add_subcommand("report", "algebra summaries plus the full suite");
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (verify->parsed()) return cmd_verify(o, suite);
    if (resolve->parsed()) return cmd_resolve(o);
    if (hom->parsed()) return cmd_hom(o);
    if (report->parsed()) return cmd_report(o);
    return 2;
  } catch (const quivalg::CompletionBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const quivalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
