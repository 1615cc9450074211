#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "nexakt/error.hpp"
#include "nexakt/examples.hpp"

namespace nexakt {

ExampleAlgebra gen_linear_An_J2(std::size_t n, std::size_t m, std::uint32_t p, bool reverse) {
  if (n < 1) throw PreconditionError("gen_linear_An_J2 needs n >= 1");
  const std::size_t top = n * m;
  if (top + 1 > 12) throw PreconditionError("gen_linear_An_J2 supports at most 12 vertices");
  AlgebraPresentation pres;
  pres.p = p;
  pres.nilpotency_bound = 2;
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i <= top; ++i) vertices.push_back(std::to_string(i));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 1; i <= top; ++i) {
    std::string a = vertices[i], b = vertices[i - 1];
    if (reverse) std::swap(a, b);
    arrows.emplace_back("a" + std::to_string(i), a, b);
  }
  pres.quiver = Quiver::from_names(vertices, arrows);
  for (std::size_t i = 1; i < top; ++i) {
    std::string first = "a" + std::to_string(i + 1), second = "a" + std::to_string(i);
    if (reverse) std::swap(first, second);
    pres.relations.push_back({{1, {first, second}}});
  }
  ExampleAlgebra out;
  out.algebra = build_algebra(pres);
  for (std::size_t v = 0; v <= top; ++v) out.expected.push_back({"P" + vertices[v], projective_module(out.algebra, v)});
  for (std::size_t k = 1; k <= m; ++k) {
    std::size_t v = reverse ? top - k * n : k * n;
    out.expected.push_back({"S" + vertices[v], simple_module(out.algebra, v)});
  }
  return out;
}

AlgebraPtr gen_preprojective_A(std::size_t n, std::uint32_t p) {
  AlgebraPresentation pres;
  pres.p = p;
  if (n == 2) {
    pres.quiver = Quiver::from_names({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
    pres.relations = {{{1, {"a", "b"}}}, {{1, {"b", "a"}}}};
    pres.nilpotency_bound = 2;
  } else if (n == 3) {
    pres.quiver = Quiver::from_names({"1", "2", "3"},
                                     {{"a1", "1", "2"}, {"a2", "2", "3"}, {"b1", "2", "1"}, {"b2", "3", "2"}});
    pres.relations = {{{1, {"a1", "b1"}}}, {{1, {"b2", "a2"}}}, {{1, {"b1", "a1"}}, {-1, {"a2", "b2"}}}};
    pres.nilpotency_bound = 3;
  } else {
    throw PreconditionError("gen_preprojective_A supports n = 2 and n = 3");
  }
  return build_algebra(pres);
}

AlgebraPtr gen_auslander_linear_A(std::size_t m, std::uint32_t p) {
  if (m < 1 || m > 4) throw PreconditionError("gen_auslander_linear_A supports 1 <= m <= 4");
  auto vname = [](std::size_t i, std::size_t j) { return std::to_string(i) + "-" + std::to_string(j); };
  auto xname = [](std::size_t i, std::size_t j) { return "x" + std::to_string(i) + std::to_string(j); };
  auto yname = [](std::size_t i, std::size_t j) { return "y" + std::to_string(i) + std::to_string(j); };
  AlgebraPresentation pres;
  pres.p = p;
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j) vertices.push_back(vname(i, j));
  // [i,j] -> [i,j+1] (inclusion) and [i,j] -> [i+1,j] (quotient).
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j) {
      if (j < m) arrows.emplace_back(xname(i, j), vname(i, j), vname(i, j + 1));
      if (i < j) arrows.emplace_back(yname(i, j), vname(i, j), vname(i + 1, j));
    }
  pres.quiver = Quiver::from_names(vertices, arrows);
  // Mesh starting at [i,j] and ending at [i+1,j+1].
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Relation r{{1, {xname(i, j), yname(i, j + 1)}}};
      if (i < j) r.push_back({-1, {yname(i, j), xname(i + 1, j)}});
      pres.relations.push_back(std::move(r));
    }
  for (std::size_t bound = 2;; ++bound) {
    pres.nilpotency_bound = bound;
    try {
      return build_algebra(pres);
    } catch (const BoundError&) {
      if (bound > 2 * m + 2) throw;
    }
  }
}

std::vector<LabeledModule> nakayama_indecomposables(const AlgebraPtr& alg) {
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> in(q.vertex_count(), 0), out(q.vertex_count(), 0);
  for (const auto& a : q.arrows()) {
    ++out[a.source];
    ++in[a.target];
  }
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (in[v] > 1 || out[v] > 1) throw PreconditionError("not a Nakayama algebra: vertex " + q.vertices()[v]);

  std::vector<LabeledModule> result;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Module pv = projective_module(alg, v);
    std::size_t loewy = 0;
    for (std::size_t w = 0; w < q.vertex_count(); ++w)
      for (std::size_t b : alg->basis_between(v, w)) loewy = std::max(loewy, alg->basis()[b].length() + 1);
    for (std::size_t l = 1; l <= loewy; ++l) {
      // Keep basis paths of length < l; the rest span rad^l P_v.
      std::vector<std::vector<std::size_t>> keep(q.vertex_count());
      std::vector<std::vector<bool>> kept(q.vertex_count());
      std::vector<std::size_t> dims(q.vertex_count());
      for (std::size_t w = 0; w < q.vertex_count(); ++w) {
        const auto& b = alg->basis_between(v, w);
        kept[w].assign(b.size(), false);
        for (std::size_t i = 0; i < b.size(); ++i)
          if (alg->basis()[b[i]].length() < l) {
            keep[w].push_back(i);
            kept[w][i] = true;
          }
        dims[w] = keep[w].size();
      }
      std::vector<Mat> action;
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const Arrow& arr = q.arrows()[a];
        const Mat& full = pv.action(a);
        for (std::size_t c = 0; c < full.cols(); ++c)
          for (std::size_t r = 0; r < full.rows(); ++r)
            if (!kept[arr.source][c] && kept[arr.target][r] && full(r, c) != 0) {
              throw PreconditionError("radical layers are not submodules; relations must be homogeneous");
            }
        action.push_back(full.rows_of(keep[arr.target]).columns(keep[arr.source]));
      }
      const std::string& name = q.vertices()[v];
      std::string label = l == 1 ? "S" + name : (l == loewy ? "P" + name : "P" + name + "/rad" + std::to_string(l));
      result.push_back({label, Module(alg, dims, std::move(action))});
    }
  }
  return result;
}

NctSearchResult brute_force_nct_search(const AlgebraPtr& alg, std::size_t n, const std::vector<Module>& list,
                                       bool complete) {
  if (list.size() > 20) throw PreconditionError("brute_force_nct_search supports at most 20 modules");
  if (n == 0) throw PreconditionError("n-cluster tilting needs n >= 1");
  ExtTable table(alg, list, n - 1);
  NctSearchResult out;
  std::vector<bool> is_proj(list.size(), false);
  for (const auto& pi : table.projective_index()) {
    if (!pi) return out;
    is_proj[*pi] = true;
  }
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < list.size(); ++i)
    if (!is_proj[i]) free.push_back(i);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (is_proj[i]) gens.push_back(i);
    for (std::size_t b = 0; b < free.size(); ++b)
      if (mask >> b & 1) gens.push_back(free[b]);
    std::sort(gens.begin(), gens.end());
    ++out.tested;
    if (check_n_cluster_tilting_indices(table, gens, n, complete).pass()) out.hits.push_back(gens);
  }
  std::sort(out.hits.begin(), out.hits.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return out;
}

namespace {

// Whether every relation of `from`, pushed through the arrow map, vanishes in `to`.
bool relations_map_into(const Algebra& from, const Algebra& to, const std::vector<std::size_t>& vmap,
                        const std::vector<std::size_t>& amap) {
  const Field& f = to.field();
  for (const auto& rel : from.relations()) {
    std::map<std::size_t, Residue> acc;
    for (const auto& [c, w] : rel) {
      PathWord img{vmap[w.base], {}};
      for (std::size_t a : w.arrows) img.arrows.push_back(amap[a]);
      for (const auto& [k, v] : to.normal_form(img)) acc[k] = f.add(acc[k], f.mul(c, v));
    }
    for (const auto& [k, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

}  // namespace

bool presented_isomorphic(const Algebra& a, const Algebra& b) {
  const Quiver& qa = a.quiver();
  const Quiver& qb = b.quiver();
  if (a.field() != b.field() || qa.vertex_count() != qb.vertex_count() || qa.arrow_count() != qb.arrow_count() ||
      a.dimension() != b.dimension()) {
    return false;
  }
  const std::size_t nv = qa.vertex_count();
  if (nv > 8) throw PreconditionError("presented_isomorphic supports at most 8 vertices");
  std::vector<std::size_t> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool dims_ok = true;
    for (std::size_t s = 0; s < nv && dims_ok; ++s)
      for (std::size_t t = 0; t < nv && dims_ok; ++t)
        dims_ok = a.basis_between(s, t).size() == b.basis_between(perm[s], perm[t]).size();
    if (!dims_ok) continue;
    // Group arrows of a by endpoints; each group must match a group of b.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> ga, gb;
    for (std::size_t i = 0; i < qa.arrow_count(); ++i)
      ga[{perm[qa.arrows()[i].source], perm[qa.arrows()[i].target]}].push_back(i);
    for (std::size_t i = 0; i < qb.arrow_count(); ++i) gb[{qb.arrows()[i].source, qb.arrows()[i].target}].push_back(i);
    bool match = ga.size() == gb.size();
    for (const auto& [key, arrs] : ga) match = match && gb.count(key) && gb[key].size() == arrs.size();
    if (!match) continue;
    std::vector<std::vector<std::size_t>> groups;
    for (auto& [key, arrs] : gb) groups.push_back(arrs);
    std::vector<std::vector<std::size_t>> sources;
    for (auto& [key, arrs] : gb) sources.push_back(ga[key]);
    // Try all arrow bijections within groups.
    std::function<bool(std::size_t, std::vector<std::size_t>&)> rec = [&](std::size_t g, std::vector<std::size_t>& amap) {
      if (g == groups.size()) {
        std::vector<std::size_t> inv_v(nv), inv_a(amap.size());
        for (std::size_t s = 0; s < nv; ++s) inv_v[perm[s]] = s;
        for (std::size_t i = 0; i < amap.size(); ++i) inv_a[amap[i]] = i;
        return relations_map_into(a, b, perm, amap) && relations_map_into(b, a, inv_v, inv_a);
      }
      std::vector<std::size_t> order = groups[g];
      std::sort(order.begin(), order.end());
      do {
        for (std::size_t i = 0; i < order.size(); ++i) amap[sources[g][i]] = order[i];
        if (rec(g + 1, amap)) return true;
      } while (std::next_permutation(order.begin(), order.end()));
      return false;
    };
    std::vector<std::size_t> amap(qa.arrow_count());
    if (rec(0, amap)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace nexakt
