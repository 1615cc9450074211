#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cli.hpp"

namespace nexakt::cli {

namespace {

struct Env {
  AlgebraPtr alg;
  std::size_t n = 2;
  std::uint64_t seed = 0;
  const Json& params;
  const Json& inputs;
};

struct LabeledList {
  std::vector<Module> modules;
  std::vector<std::string> labels;
  bool complete = false;
};

std::size_t param_count(const Json& params, const char* key, std::size_t fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (!it->is_number_unsigned()) throw InputError(std::string("parameter \"") + key + "\" must be a non-negative integer");
  return it->get<std::size_t>();
}

bool param_flag(const Json& params, const char* key) {
  auto it = params.find(key);
  return it != params.end() && it->is_boolean() && it->get<bool>();
}

const Json& need(const Env& env, const char* key, const char* flag) {
  auto it = env.inputs.find(key);
  if (it == env.inputs.end()) throw InputError(std::string("missing input: pass ") + flag);
  return *it;
}

LabeledList read_list(const Env& env, const Json& j, const std::string& where) {
  LabeledList out;
  if (!j.is_array()) throw InputError(where + ": expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    if (!j[i].is_object() || !j[i].contains("label") || !j[i].contains("module")) {
      throw InputError(w + ": expected {\"label\", \"module\"}");
    }
    out.labels.push_back(j[i]["label"].get<std::string>());
    out.modules.push_back(module_from_json(env.alg, j[i]["module"], w + "/module"));
  }
  return out;
}

AddCat read_m(const Env& env) {
  LabeledList l = read_list(env, need(env, "m", "--m LIST"), "/m");
  try {
    return AddCat(env.alg, l.modules, env.seed);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string("--m: ") + e.what());
  }
}

std::vector<std::string> m_labels(const Env& env) {
  std::vector<std::string> out;
  for (const auto& e : env.inputs.at("m")) out.push_back(e.at("label").get<std::string>());
  return out;
}

/// The supplied --indecs list, or the uniserial modules of a Nakayama algebra.
LabeledList read_indecs(const Env& env) {
  if (auto it = env.inputs.find("indecs"); it != env.inputs.end()) {
    LabeledList l = read_list(env, *it, "/indecs");
    l.complete = param_flag(env.params, "complete");
    return l;
  }
  std::vector<LabeledModule> nak;
  try {
    nak = nakayama_indecomposables(env.alg);
  } catch (const PreconditionError& e) {
    throw InputError(std::string("no --indecs list given and ") + e.what());
  }
  LabeledList l;
  for (auto& lm : nak) {
    l.labels.push_back(lm.label);
    l.modules.push_back(lm.module);
  }
  l.complete = true;
  return l;
}

Morphism read_map(const Env& env) { return morphism_from_json(env.alg, need(env, "map", "--map FILE"), {}, "/map"); }
ComplexSeq read_complex(const Env& env) {
  return complex_from_json(env.alg, need(env, "complex", "--complex FILE"), {}, "/complex");
}

Json dims_of(const ComplexSeq& x) {
  Json out = Json::array();
  for (const auto& t : x.terms()) out.push_back(t.dims());
  return out;
}

std::string dims_string(const std::vector<std::size_t>& d) {
  std::string s;
  for (auto v : d) s += std::to_string(v);
  return s;
}

std::string exactness_summary(const NExactCert& c, const std::string& what) {
  std::size_t bad = 0;
  for (const auto& r : c.records) bad += r.exact ? 0 : 1;
  std::ostringstream ss;
  if (c.verdict()) {
    ss << what << ": " << c.interior_checks() << " interior and " << c.end_checks() << " end checks, all exact";
  } else {
    ss << "not " << what << ": " << bad << " of " << c.records.size() << " Hom-exactness checks fail";
  }
  return ss.str();
}

std::vector<std::string> record_lines(const NExactCert& c) {
  std::vector<std::string> out;
  for (const auto& r : c.records) {
    if (r.exact) continue;
    std::ostringstream ss;
    ss << "  inexact: generator " << r.generator << (r.covariant ? " Hom(G,-)" : " Hom(-,G)") << " at degree "
       << r.degree << (r.end_check ? " (end)" : "") << ", dim " << r.hom_dim << ", ranks " << r.rank_in << "/"
       << r.rank_out;
    out.push_back(ss.str());
  }
  return out;
}

bool is_projective_module(const AlgebraPtr& alg, const Module& x) {
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    if (isomorphic(x, projective_module(alg, v))) return true;
  }
  return false;
}

/// "Λ ⊕ S2 ⊕ S4" for a generator set containing all projectives.
std::string lambda_plus(const AlgebraPtr& alg, const std::vector<Module>& mods, const std::vector<std::string>& labels) {
  std::string s = "Λ";
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (!is_projective_module(alg, mods[i])) s += " ⊕ " + labels[i];
  }
  return s;
}

// ---------------------------------------------------------------------------

Outcome algebra_check(const Json& params, const Json& inputs) {
  (void)params;
  Outcome o;
  AlgebraPresentation pres = presentation_from_json(inputs.at("algebra"));
  AlgebraPtr alg;
  try {
    alg = build_algebra(pres);
  } catch (const AdmissibilityError& e) {
    o.summary = std::string("not admissible: ") + e.what();
    o.result = {{"error", e.what()}, {"kind", "admissibility"}};
    return o;
  } catch (const BoundError& e) {
    o.summary = std::string("nilpotency bound fails: ") + e.what();
    o.result = {{"error", e.what()}, {"kind", "nilpotency_bound"}};
    return o;
  }
  const Quiver& q = alg->quiver();
  std::vector<Module> projectives;
  Json pdims = Json::object(), idims = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    projectives.push_back(projective_module(alg, v));
    pdims[q.vertices()[v]] = projectives.back().dims();
    idims[q.vertices()[v]] = injective_module(alg, v).dims();
  }
  bool selfinjective = true;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    selfinjective = selfinjective && in_add(injective_module(alg, v), projectives).member;
  }
  Json basis = Json::array();
  for (const auto& w : alg->basis()) {
    Json path = Json::array();
    for (auto a : w.arrows) path.push_back(q.arrows()[a].name);
    basis.push_back({{"base", q.vertices()[w.base]}, {"path", path}});
  }
  o.pass = true;
  o.result = {{"dimension", alg->dimension()}, {"basis", basis}, {"projective_dims", pdims},
              {"injective_dims", idims}, {"selfinjective", selfinjective}};
  o.summary = "algebra builds: dimension " + std::to_string(alg->dimension()) +
              (selfinjective ? ", selfinjective" : ", not selfinjective");
  return o;
}

Outcome nct_check(const Env& env) {
  AddCat m = read_m(env);
  LabeledList indecs = read_indecs(env);
  NctReport r = check_n_cluster_tilting(m, env.n, indecs.modules, indecs.complete, indecs.labels);
  Outcome o;
  o.pass = r.pass();
  o.summary = r.verdict(env.n);
  o.result = to_json(r, env.n);
  o.result["generators"] = m_labels(env);
  o.result["indecomposables"] = indecs.labels;
  for (const auto& w : r.witnesses) o.report.push_back("  " + w);
  return o;
}

Outcome ncoker(const Env& env, bool kernel) {
  AddCat m = read_m(env);
  Morphism d = read_map(env);
  Outcome o;
  try {
    ComplexSeq x = kernel ? n_kernel(d, m, env.n) : n_cokernel(d, m, env.n);
    NExactCert c = kernel ? verify_n_kernel(x, m) : verify_n_cokernel(x, m);
    o.pass = c.verdict();
    o.summary = exactness_summary(c, kernel ? "n-kernel" : "n-cokernel");
    o.result = {{"complex", to_json(x)}, {"term_dims", dims_of(x)}, {"certificate", to_json(c)}};
    std::string terms;
    for (const auto& t : x.terms()) terms += (terms.empty() ? "" : " -> ") + dims_string(t.dims());
    o.report.push_back("  terms (dimension vectors): " + terms);
    for (auto& l : record_lines(c)) o.report.push_back(l);
  } catch (const HypothesisError& e) {
    o.summary = std::string("construction failed: ") + e.what();
    o.result = {{"error", e.what()}, {"degree", e.degree()}};
  }
  return o;
}

Outcome npushout(const Env& env) {
  AddCat m = read_m(env);
  ComplexSeq x = read_complex(env);
  Morphism f0 = read_map(env);
  if (x.size() != env.n + 1) {
    throw InputError("/complex: npushout needs n + 1 = " + std::to_string(env.n + 1) + " terms");
  }
  Outcome o;
  try {
    PushoutResult r = n_pushout(x, f0, m);
    NExactCert cone = verify_n_cokernel(mapping_cone(r.f), m);
    Json comps = Json::array();
    for (const auto& c : r.f.components()) comps.push_back(to_json(c)["components"]);
    o.result = {{"y", to_json(r.y)},           {"y_dims", dims_of(r.y)},
                {"f", comps},                  {"source_mono", r.source_mono},
                {"target_mono", r.target_mono}, {"cone_certificate", to_json(cone)}};
    o.pass = cone.verdict();
    o.summary = "n-pushout: cone " + std::string(cone.verdict() ? "is" : "is not") + " an n-cokernel of its head";
    if (param_flag(env.params, "good")) {
      GoodPushoutResult g = good_n_pushout(x, f0, m);
      NExactCert gcone = verify_n_cokernel(mapping_cone(g.f), m);
      bool split = std::all_of(g.split_mono.begin(), g.split_mono.end(), [](bool b) { return b; });
      bool contractible = contract(g.padding, m).has_value();
      o.result["good"] = {{"y", to_json(g.y)},
                          {"y_dims", dims_of(g.y)},
                          {"padding_dims", dims_of(g.padding)},
                          {"split_mono", g.split_mono},
                          {"padding_contractible", contractible},
                          {"cone_certificate", to_json(gcone)}};
      o.pass = o.pass && gcone.verdict() && split && contractible;
      o.summary += std::string("; good pushout ") + (gcone.verdict() && split && contractible ? "verified" : "failed");
    }
  } catch (const HypothesisError& e) {
    o.summary = std::string("construction failed: ") + e.what();
    o.result = {{"error", e.what()}, {"degree", e.degree()}};
  }
  return o;
}

Outcome verify_nexact(const Env& env) {
  AddCat m = read_m(env);
  ComplexSeq x = read_complex(env);
  if (x.size() != env.n + 2) {
    throw InputError("/complex: an n-exact sequence has n + 2 = " + std::to_string(env.n + 2) + " terms, got " +
                     std::to_string(x.size()));
  }
  NExactCert c = verify_n_exact(x, m, env.n);
  Outcome o;
  o.pass = c.verdict();
  o.summary = exactness_summary(c, "n-exact");
  o.result = to_json(c);
  o.report = record_lines(c);
  return o;
}

Outcome ext_compare(const Env& env) {
  AddCat m = read_m(env);
  LabeledList l = read_indecs(env);
  std::size_t k_only = param_count(env.params, "k", 0);
  if (env.n < 2) throw InputError("ext compare needs n >= 2");
  if (k_only >= env.n) throw InputError("--k must lie in 1 .. n-1");
  std::size_t compared = 0, agree = 0, outside = 0;
  Json rows = Json::array();
  for (std::size_t a = 0; a < l.modules.size(); ++a) {
    for (std::size_t b = 0; b < l.modules.size(); ++b) {
      for (std::size_t k = 1; k < env.n; ++k) {
        if (k_only != 0 && k != k_only) continue;
        Json row = {{"a", l.labels[a]}, {"b", l.labels[b]}, {"k", k}};
        std::size_t direct = ext_dim(l.modules[a], l.modules[b], k);
        row["ext_dim"] = direct;
        try {
          std::size_t via = ext_via_approx_resolution(l.modules[a], l.modules[b], m, k, env.n);
          row["via_approx"] = via;
          row["hypothesis"] = true;
          ++compared;
          if (via == direct) ++agree;
        } catch (const HypothesisError& e) {
          row["hypothesis"] = false;
          row["reason"] = e.what();
          ++outside;
        }
        rows.push_back(row);
      }
    }
  }
  Outcome o;
  o.pass = compared > 0 && agree == compared;
  o.summary = "Ext agreement on " + std::to_string(agree) + " of " + std::to_string(compared) +
              " instances satisfying the hypothesis (" + std::to_string(outside) + " outside it)";
  o.result = {{"comparisons", rows}, {"compared", compared}, {"agree", agree}, {"outside_hypothesis", outside}};
  for (const auto& r : rows) {
    if (r["hypothesis"] && r["ext_dim"] != r["via_approx"]) {
      o.report.push_back("  mismatch: Ext^" + r["k"].dump() + "(" + r["a"].get<std::string>() + ", " +
                         r["b"].get<std::string>() + ")");
    }
  }
  return o;
}

FrobeniusCtx frobenius_ctx(const Env& env) {
  AddCat m = read_m(env);
  LabeledList l = read_indecs(env);
  return check_frobenius_setup(m, env.n, l.modules, l.complete);
}

Outcome frobenius_setup(const Env& env) {
  Outcome o;
  try {
    FrobeniusCtx ctx = frobenius_ctx(env);
    std::vector<std::string> labels = m_labels(env);
    const auto& gens = ctx.m().generators();
    Json table = Json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Module s = ctx.suspension(gens[i]);
      std::string cls = "0";
      if (!strip_projective_injective(ctx, s).is_zero()) {
        cls = "?";
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (stably_isomorphic(ctx, s, gens[j])) {
            cls = labels[j];
            break;
          }
        }
      }
      table.push_back({{"generator", labels[i]}, {"suspension_dims", s.dims()}, {"suspension_class", cls}});
      o.report.push_back("  Σ " + labels[i] + " ≅ " + cls);
    }
    o.pass = true;
    o.summary = "Frobenius n-exact setup verified";
    o.result = {{"suspension", table}};
  } catch (const SetupError& e) {
    o.summary = std::string("setup fails: ") + e.what();
    o.result = {{"error", e.what()}};
  }
  return o;
}

Angle input_angle(const Env& env, const FrobeniusCtx& ctx) {
  if (env.inputs.contains("map")) return standard_angle(ctx, read_map(env));
  if (env.inputs.contains("complex")) return induced_angle(ctx, read_complex(env));
  throw InputError("an angle needs --map FILE (standard angle) or --complex FILE (induced angle)");
}

Outcome frobenius_angle(const Env& env, const std::string& mode) {
  Outcome o;
  try {
    FrobeniusCtx ctx = frobenius_ctx(env);
    Angle a = input_angle(env, ctx);
    if (mode == "angle") {
      AngleCheck c = verify_angle_exact(ctx, a);
      o.pass = c.pass();
      o.result = {{"angle", to_json(a)}, {"check", to_json(c)}};
      o.summary = std::string("angle ") + (c.pass() ? "passes" : "fails") + " the exactness check";
    } else if (mode == "rotate") {
      std::size_t times = param_count(env.params, "times", 1);
      Json steps = Json::array();
      bool all = true;
      for (std::size_t i = 1; i <= times; ++i) {
        a = rotate_angle(ctx, a);
        AngleCheck c = verify_angle_exact(ctx, a);
        all = all && c.pass();
        steps.push_back({{"rotation", i}, {"angle", to_json(a)}, {"check", to_json(c)}});
        o.report.push_back("  rotation " + std::to_string(i) + (c.pass() ? ": pass" : ": fail"));
      }
      o.pass = all;
      o.result = {{"rotations", steps}};
      o.summary = std::to_string(times) + " rotation(s) " + (all ? "pass" : "fail") + " the exactness check";
    } else {
      AngleMorphism phi = complete_angle_morphism(ctx, a, a, Morphism::identity(a.objects[0]),
                                                  Morphism::identity(a.objects[1]));
      bool mor = verify_angle_morphism(ctx, phi);
      Angle c = angle_cone(ctx, phi);
      AngleCheck check = verify_angle_exact(ctx, c);
      o.pass = mor && check.pass();
      o.result = {{"angle", to_json(a)}, {"morphism_verified", mor}, {"cone", to_json(c)}, {"check", to_json(check)}};
      o.summary = std::string("cone of the identity completion ") + (o.pass ? "passes" : "fails");
    }
  } catch (const SetupError& e) {
    o.summary = std::string("setup fails: ") + e.what();
    o.result = {{"error", e.what()}};
  }
  return o;
}

Json hit_labels(const NctSearchResult& r, const std::vector<std::string>& labels) {
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Json one = Json::array();
    for (auto i : h) one.push_back(labels[i]);
    hits.push_back(one);
  }
  return hits;
}

Outcome search_nct(const Env& env) {
  LabeledList l = read_indecs(env);
  NctSearchResult r = brute_force_nct_search(env.alg, env.n, l.modules, l.complete);
  Outcome o;
  o.pass = !r.hits.empty();
  o.result = {{"tested", r.tested}, {"hits", hit_labels(r, l.labels)}, {"complete", l.complete}};
  o.summary = std::to_string(r.hits.size()) + " " + std::to_string(env.n) + "-CT module(s) among " +
              std::to_string(r.tested) + " candidate subsets";
  for (const auto& h : r.hits) {
    std::vector<Module> mods;
    std::vector<std::string> labs;
    for (auto i : h) {
      mods.push_back(l.modules[i]);
      labs.push_back(l.labels[i]);
    }
    o.report.push_back("  " + lambda_plus(env.alg, mods, labs));
  }
  return o;
}

// ---------------------------------------------------------------------------
// demo presets

struct SearchHit {
  std::vector<Module> modules;
  std::vector<std::string> labels;
};

std::vector<SearchHit> nakayama_search(const AlgebraPtr& alg, std::size_t n, NctSearchResult& r) {
  auto labs = nakayama_indecomposables(alg);
  std::vector<Module> mods;
  for (auto& lm : labs) mods.push_back(lm.module);
  r = brute_force_nct_search(alg, n, mods, true);
  std::vector<SearchHit> hits;
  for (const auto& h : r.hits) {
    SearchHit sh;
    for (auto i : h) {
      sh.modules.push_back(labs[i].module);
      sh.labels.push_back(labs[i].label);
    }
    hits.push_back(std::move(sh));
  }
  return hits;
}

bool same_generators(const std::vector<Module>& a, const std::vector<Module>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Module& x) {
    return std::any_of(b.begin(), b.end(), [&](const Module& y) { return isomorphic(x, y); });
  });
}

Json hits_json(const std::vector<SearchHit>& hits) {
  Json out = Json::array();
  for (const auto& h : hits) out.push_back(h.labels);
  return out;
}

void require_preset_algebra(const AlgebraPtr& alg, const Json& inputs) {
  if (alg->presentation() != presentation_from_json(inputs.at("algebra"))) {
    throw InputError("/algebra: does not match the preset presentation");
  }
}

Outcome demo(const Env& env) {
  const std::string preset = env.params.at("preset").get<std::string>();
  const std::uint32_t p = presentation_from_json(env.inputs.at("algebra")).p;
  const std::size_t n = env.n;
  Outcome o;
  NctSearchResult r;
  if (preset == "a3-j2" || preset == "a5-j2") {
    std::size_t edges = preset == "a3-j2" ? 2 : 4;
    ExampleAlgebra ex = gen_linear_An_J2(n, edges / n, p);
    require_preset_algebra(ex.algebra, env.inputs);
    std::vector<Module> expected;
    std::vector<std::string> expected_labels;
    for (auto& lm : ex.expected) {
      expected.push_back(lm.module);
      expected_labels.push_back(lm.label);
    }
    NctReport rep = check_n_cluster_tilting(AddCat(ex.algebra, expected, env.seed), n,
                                            [&] {
                                              std::vector<Module> all;
                                              for (auto& lm : nakayama_indecomposables(ex.algebra))
                                                all.push_back(lm.module);
                                              return all;
                                            }(),
                                            true);
    auto hits = nakayama_search(ex.algebra, n, r);
    bool unique = hits.size() == 1;
    bool match = unique && same_generators(hits[0].modules, expected);
    o.pass = unique && match && rep.pass();
    o.result = {{"expected", expected_labels}, {"expected_check", to_json(rep, n)}, {"hits", hits_json(hits)},
                {"tested", r.tested}, {"unique", unique}, {"matches_expected", match}};
    if (o.pass) {
      o.summary = "unique " + std::to_string(n) + "-CT module found: " +
                  lambda_plus(ex.algebra, hits[0].modules, hits[0].labels);
    } else {
      o.summary = "expected a unique " + std::to_string(n) + "-CT module matching " +
                  lambda_plus(ex.algebra, expected, expected_labels) + ", found " + std::to_string(hits.size());
    }
    return o;
  }
  if (n != 2) throw InputError("preset " + preset + " runs with --n 2");
  if (preset == "preproj-a2") {
    AlgebraPtr alg = gen_preprojective_A(2, p);
    require_preset_algebra(alg, env.inputs);
    auto hits = nakayama_search(alg, n, r);
    o.result = {{"hits", hits_json(hits)}, {"tested", r.tested}};
    if (hits.size() != 2) {
      o.summary = "expected two 2-CT modules, found " + std::to_string(hits.size());
      return o;
    }
    std::vector<Module> all;
    for (auto& lm : nakayama_indecomposables(alg)) all.push_back(lm.module);
    FrobeniusCtx ctx = check_frobenius_setup(AddCat(alg, hits[0].modules, env.seed), n, all, true);
    std::size_t s = 0;
    while (is_projective_module(alg, hits[0].modules[s])) ++s;
    const Module& x = hits[0].modules[s];
    Angle a = standard_angle(ctx, injective_envelope(x));
    AngleCheck c0 = verify_angle_exact(ctx, a);
    AngleCheck c1 = verify_angle_exact(ctx, rotate_angle(ctx, a));
    bool sigma2 = stably_isomorphic(ctx, cosyzygy(ctx, x, 2), x);
    o.pass = c0.pass() && c1.pass() && sigma2;
    o.result["frobenius"] = {{"generator", hits[0].labels[s]}, {"cosyzygy2_stably_isomorphic", sigma2},
                             {"standard_angle", to_json(a)}, {"angle_check", to_json(c0)},
                             {"rotation_check", to_json(c1)}};
    o.summary = "two 2-CT modules found: " + lambda_plus(alg, hits[0].modules, hits[0].labels) + ", " +
                lambda_plus(alg, hits[1].modules, hits[1].labels) + "; standard angle on " + hits[0].labels[s] +
                (o.pass ? " verified" : " failed");
    return o;
  }
  if (preset == "auslander-a2") {
    AlgebraPtr alg = gen_auslander_linear_A(2, p);
    require_preset_algebra(alg, env.inputs);
    bool iso = presented_isomorphic(*alg, *gen_linear_An_J2(2, 1, p).algebra);
    auto hits = nakayama_search(alg, n, r);
    o.pass = iso && hits.size() == 1;
    o.result = {{"isomorphic_to_a3_j2", iso}, {"hits", hits_json(hits)}, {"tested", r.tested}};
    o.summary = std::string(iso ? "Auslander algebra of A2 ≅ K A3/J²" : "Auslander algebra of A2 not matched") +
                "; " + std::to_string(hits.size()) + " 2-CT module(s) found" +
                (hits.size() == 1 ? ": " + lambda_plus(alg, hits[0].modules, hits[0].labels) : "");
    return o;
  }
  throw InputError("demo has no preset \"" + preset + "\"");
}

Outcome recheck(const Json& inputs) {
  const Json& cert = inputs.at("certificate");
  for (const char* key : {"check", "parameters", "inputs"}) {
    if (!cert.contains(key)) throw InputError(std::string("/: certificate lacks \"") + key + "\"");
  }
  const std::string check = cert["check"].get<std::string>();
  if (check == "recheck") throw InputError("/check: cannot recheck a recheck certificate");
  Outcome inner = run_check(check, cert["parameters"], cert["inputs"]);
  Json fresh = make_certificate(check, cert["parameters"], cert["inputs"], inner);
  Json stored = cert;
  stored.erase("timing_ms");
  bool verdict_same = stored.value("verdict", "") == fresh["verdict"];
  bool identical = canonical_dump(stored) == canonical_dump(fresh);
  Outcome o;
  o.pass = verdict_same && identical;
  o.result = {{"check", check},
              {"stored_verdict", stored.value("verdict", "")},
              {"recomputed_verdict", fresh["verdict"]},
              {"identical", identical},
              {"certificate_hash", content_hash(stored)}};
  o.summary = "recheck of " + check + ": verdict " + fresh["verdict"].get<std::string>() +
              (identical ? ", certificate reproduced exactly" : ", certificate differs");
  return o;
}

}  // namespace

Outcome run_check(const std::string& check, const Json& params, const Json& inputs) {
  if (check == "recheck") return recheck(inputs);
  if (!inputs.contains("algebra")) throw InputError("/inputs: missing algebra");
  if (check == "algebra check") return algebra_check(params, inputs);

  AlgebraPtr alg;
  try {
    alg = build_algebra(presentation_from_json(inputs.at("algebra")));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string("algebra does not build: ") + e.what());
  }
  Env env{alg, param_count(params, "n", 2), params.value("seed", std::uint64_t{0}), params, inputs};
  if (env.n == 0) throw InputError("--n must be at least 1");

  if (check == "nct check") return nct_check(env);
  if (check == "ncoker") return ncoker(env, false);
  if (check == "nkernel") return ncoker(env, true);
  if (check == "npushout") return npushout(env);
  if (check == "verify-nexact") return verify_nexact(env);
  if (check == "ext compare") return ext_compare(env);
  if (check == "frobenius setup") return frobenius_setup(env);
  if (check == "frobenius angle") return frobenius_angle(env, "angle");
  if (check == "frobenius rotate") return frobenius_angle(env, "rotate");
  if (check == "frobenius cone") return frobenius_angle(env, "cone");
  if (check == "search nct") return search_nct(env);
  if (check == "demo") return demo(env);
  throw InputError("unknown check \"" + check + "\"");
}

Json make_certificate(const std::string& check, const Json& params, const Json& inputs, const Outcome& outcome) {
  Json hashes = Json::object();
  for (auto it = inputs.begin(); it != inputs.end(); ++it) hashes[it.key()] = content_hash(*it);
  return {{"certificate_format", 1},
          {"tool", {{"name", "nexakt"}, {"version", NEXAKT_VERSION}}},
          {"check", check},
          {"parameters", params},
          {"inputs", inputs},
          {"input_hashes", hashes},
          {"retry_bound", kRetryBound},
          {"verdict", outcome.pass ? "pass" : "fail"},
          {"summary", outcome.summary},
          {"result", outcome.result}};
}

}  // namespace nexakt::cli
