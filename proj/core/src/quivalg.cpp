#include "nexakt/quivalg.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "nexakt/error.hpp"
#include "nexakt/modcat.hpp"

namespace nexakt {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw InputError("duplicate vertex name '" + v + "'");
  }
  std::set<std::string> arrow_names;
  for (const auto& a : arrows_) {
    if (!arrow_names.insert(a.name).second) throw InputError("duplicate arrow name '" + a.name + "'");
    if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
      throw InputError("arrow '" + a.name + "' has an undeclared endpoint");
    }
  }
}

Quiver Quiver::from_names(
    std::vector<std::string> vertices,
    const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  auto find = [&](const std::string& name) {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) throw InputError("arrow endpoint '" + name + "' is not a vertex");
    return static_cast<std::size_t>(it - vertices.begin());
  };
  std::vector<Arrow> out;
  for (const auto& [name, s, t] : arrows) out.push_back({name, find(s), find(t)});
  return Quiver(std::move(vertices), std::move(out));
}

std::size_t Quiver::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw LookupError("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return i;
  }
  throw LookupError("unknown arrow '" + name + "'");
}

Quiver Quiver::reversed() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& a : arrows_) rev.push_back({a.name, a.target, a.source});
  return Quiver(vertices_, std::move(rev));
}

namespace {

PathWord resolve_word(const Quiver& q, const std::vector<std::string>& names, std::size_t base) {
  PathWord w;
  w.base = base;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::size_t a = q.arrow_index(names[i]);
    if (i == 0) {
      w.base = q.arrows()[a].source;
    } else if (q.arrows()[w.arrows.back()].target != q.arrows()[a].source) {
      throw InputError("path arrows '" + names[i - 1] + "' and '" + names[i] + "' do not compose");
    }
    w.arrows.push_back(a);
  }
  return w;
}

// All paths of length <= n, grouped by source vertex.
std::vector<PathWord> enumerate_paths(const Quiver& q, std::size_t n) {
  std::vector<PathWord> all;
  std::vector<PathWord> frontier;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) frontier.push_back({v, {}});
  all = frontier;
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<PathWord> next;
    for (const auto& w : frontier) {
      std::size_t t = w.target(q);
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrows()[a].source != t) continue;
        PathWord e = w;
        e.arrows.push_back(a);
        next.push_back(std::move(e));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

PathWord concat(const PathWord& a, const PathWord& b) {
  PathWord out = a;
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

}  // namespace

PathWord Algebra::word(const std::vector<std::string>& arrow_names, std::size_t base) const {
  return resolve_word(quiver(), arrow_names, base);
}

BasisVector Algebra::normal_form(const PathWord& w) const {
  auto it = path_index_.find(w);
  if (it == path_index_.end()) return {};
  std::size_t idx = it->second;
  if (path_basis_[idx] >= 0) return {{static_cast<std::size_t>(path_basis_[idx]), 1}};
  BasisVector out;
  if (path_row_[idx] < 0) return out;
  auto row = reduced_rows_.row(static_cast<std::size_t>(path_row_[idx]));
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    std::ptrdiff_t b = path_basis_[path_of_column_[c]];
    if (b >= 0) out.emplace_back(static_cast<std::size_t>(b), field_.neg(row[c]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BasisVector Algebra::multiply(std::size_t i, std::size_t j) const {
  const PathWord& a = basis_.at(i);
  const PathWord& b = basis_.at(j);
  if (a.target(quiver()) != b.source()) return {};
  return normal_form(concat(a, b));
}

AlgebraPtr build_algebra(const AlgebraPresentation& pres) {
  if (pres.nilpotency_bound < 1) throw InputError("nilpotency bound must be at least 1");
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->pres_ = pres;
  alg->field_ = Field(pres.p);
  const Quiver& q = alg->pres_.quiver;
  const Field& f = alg->field_;
  const std::size_t n = pres.nilpotency_bound;

  // Resolve relations.
  for (const auto& rel : pres.relations) {
    std::vector<std::pair<Residue, PathWord>> terms;
    std::ptrdiff_t src = -1, tgt = -1;
    for (const auto& term : rel) {
      if (term.path.size() < 2) {
        throw AdmissibilityError("relation term of length " + std::to_string(term.path.size()) +
                                 " is not in J^2");
      }
      PathWord w = resolve_word(q, term.path, 0);
      auto s = static_cast<std::ptrdiff_t>(w.source());
      auto t = static_cast<std::ptrdiff_t>(w.target(q));
      if (src < 0) {
        src = s;
        tgt = t;
      } else if (s != src || t != tgt) {
        throw InputError("relation terms do not share source and target");
      }
      Residue c = f.reduce(term.coeff);
      if (c != 0) terms.emplace_back(c, std::move(w));
    }
    alg->rels_.push_back(std::move(terms));
  }

  std::vector<PathWord> paths = enumerate_paths(q, n);
  for (std::size_t i = 0; i < paths.size(); ++i) alg->path_index_[paths[i]] = i;

  // Columns ordered longest path first so that pivots eliminate long paths.
  std::vector<std::size_t> order(paths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (paths[a].length() != paths[b].length()) return paths[a].length() > paths[b].length();
    return paths[a] < paths[b];
  });
  alg->path_of_column_ = order;
  alg->column_of_path_.assign(paths.size(), 0);
  for (std::size_t c = 0; c < order.size(); ++c) alg->column_of_path_[order[c]] = c;

  // Ideal generators: u * r * w truncated to length <= n, plus all length-n paths
  // are NOT added; they must be shown to lie in the span.
  std::vector<std::vector<Residue>> gens;
  std::vector<std::vector<const PathWord*>> ending_at(q.vertex_count()), starting_at(q.vertex_count());
  for (const auto& p : paths) {
    ending_at[p.target(q)].push_back(&p);
    starting_at[p.source()].push_back(&p);
  }
  for (const auto& rel : alg->rels_) {
    if (rel.empty()) continue;
    std::size_t s = rel.front().second.source();
    std::size_t t = rel.front().second.target(q);
    for (const PathWord* u : ending_at[s]) {
      for (const PathWord* w : starting_at[t]) {
        std::vector<Residue> row(paths.size(), 0);
        bool any = false;
        for (const auto& [c, term] : rel) {
          PathWord full = concat(concat(*u, term), *w);
          if (full.length() > n) continue;
          full.base = u->base;
          std::size_t col = alg->column_of_path_[alg->path_index_.at(full)];
          row[col] = f.add(row[col], c);
          any = true;
        }
        if (any) gens.push_back(std::move(row));
      }
    }
  }
  Mat span(f, gens.size(), paths.size());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t c = 0; c < paths.size(); ++c) span(r, c) = gens[r][c];
  }
  Rref red = rref(span);
  alg->reduced_rows_ = red.reduced;
  alg->path_row_.assign(paths.size(), -1);
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    alg->path_row_[order[red.pivots[r]]] = static_cast<std::ptrdiff_t>(r);
  }

  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].length() != n) continue;
    bool zero = alg->path_row_[i] >= 0;
    if (zero) {
      auto row = red.reduced.row(static_cast<std::size_t>(alg->path_row_[i]));
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] != 0 && alg->path_row_[order[c]] < 0) zero = false;
      }
    }
    if (!zero) {
      throw BoundError("a path of length " + std::to_string(n) +
                       " is nonzero modulo the relations; increase the nilpotency bound");
    }
  }

  // Basis: non-pivot paths, ordered by source, then length, then word.
  std::vector<std::size_t> basis_paths;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (alg->path_row_[i] < 0) basis_paths.push_back(i);
  }
  std::stable_sort(basis_paths.begin(), basis_paths.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = paths[a];
    const auto& pb = paths[b];
    return std::make_tuple(pa.source(), pa.length(), pa.arrows) <
           std::make_tuple(pb.source(), pb.length(), pb.arrows);
  });
  alg->path_basis_.assign(paths.size(), -1);
  const std::size_t nv = q.vertex_count();
  alg->between_.assign(nv * nv, {});
  for (std::size_t k = 0; k < basis_paths.size(); ++k) {
    const PathWord& w = paths[basis_paths[k]];
    alg->path_basis_[basis_paths[k]] = static_cast<std::ptrdiff_t>(k);
    alg->basis_.push_back(w);
    alg->between_[w.source() * nv + w.target(q)].push_back(k);
  }

  // Associativity spot check on small algebras.
  const std::size_t d = alg->dimension();
  if (d <= 64) {
    auto mul_vec = [&](const BasisVector& x, std::size_t j, bool left) {
      std::vector<Residue> acc(d, 0);
      for (const auto& [i, c] : x) {
        for (const auto& [k, c2] : left ? alg->multiply(i, j) : alg->multiply(j, i)) {
          acc[k] = f.add(acc[k], f.mul(c, c2));
        }
      }
      return acc;
    };
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        BasisVector ij = alg->multiply(i, j);
        for (std::size_t k = 0; k < d; ++k) {
          auto lhs = mul_vec(ij, k, true);
          auto jk = alg->multiply(j, k);
          auto rhs = mul_vec(jk, i, false);
          if (lhs != rhs) throw Error("multiplication table failed the associativity check");
        }
      }
    }
  }
  return alg;
}

AlgebraPtr opposite_algebra(const Algebra& alg) {
  AlgebraPresentation op = alg.presentation();
  op.quiver = op.quiver.reversed();
  for (auto& rel : op.relations) {
    for (auto& term : rel) std::reverse(term.path.begin(), term.path.end());
  }
  return build_algebra(op);
}

bool same_algebra(const Algebra& a, const Algebra& b) noexcept {
  return &a == &b || a.presentation() == b.presentation();
}

Module projective_module(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  if (v >= q.vertex_count()) throw LookupError("vertex index out of range");
  const Field& f = alg->field();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> dims(nv);
  std::vector<std::vector<std::ptrdiff_t>> pos(nv);  // basis index -> position at vertex
  for (std::size_t w = 0; w < nv; ++w) dims[w] = alg->basis_between(v, w).size();
  std::vector<std::ptrdiff_t> local(alg->dimension(), -1);
  for (std::size_t w = 0; w < nv; ++w) {
    const auto& b = alg->basis_between(v, w);
    for (std::size_t i = 0; i < b.size(); ++i) local[b[i]] = static_cast<std::ptrdiff_t>(i);
  }
  std::vector<Mat> action;
  for (const auto& arrow : q.arrows()) {
    Mat m(f, dims[arrow.target], dims[arrow.source]);
    const auto& src = alg->basis_between(v, arrow.source);
    for (std::size_t col = 0; col < src.size(); ++col) {
      PathWord w = alg->basis()[src[col]];
      w.arrows.push_back(static_cast<std::size_t>(&arrow - q.arrows().data()));
      for (const auto& [k, c] : alg->normal_form(w)) {
        m(static_cast<std::size_t>(local[k]), col) = f.add(m(static_cast<std::size_t>(local[k]), col), c);
      }
    }
    action.push_back(std::move(m));
  }
  return Module(alg, std::move(dims), std::move(action));
}

Module injective_module(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  if (v >= q.vertex_count()) throw LookupError("vertex index out of range");
  const Field& f = alg->field();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> dims(nv);
  std::vector<std::ptrdiff_t> local(alg->dimension(), -1);
  for (std::size_t w = 0; w < nv; ++w) {
    const auto& b = alg->basis_between(w, v);
    dims[w] = b.size();
    for (std::size_t i = 0; i < b.size(); ++i) local[b[i]] = static_cast<std::ptrdiff_t>(i);
  }
  // Functionals on paths w -> v; the arrow a: w -> w' sends phi to (q' |-> phi(a q')).
  std::vector<Mat> action;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arrow = q.arrows()[ai];
    Mat m(f, dims[arrow.target], dims[arrow.source]);
    const auto& tgt_paths = alg->basis_between(arrow.target, v);
    for (std::size_t row = 0; row < tgt_paths.size(); ++row) {
      PathWord w{arrow.source, {ai}};
      const PathWord& tail = alg->basis()[tgt_paths[row]];
      w.arrows.insert(w.arrows.end(), tail.arrows.begin(), tail.arrows.end());
      for (const auto& [k, c] : alg->normal_form(w)) {
        m(row, static_cast<std::size_t>(local[k])) = f.add(m(row, static_cast<std::size_t>(local[k])), c);
      }
    }
    action.push_back(std::move(m));
  }
  return Module(alg, std::move(dims), std::move(action));
}

}  // namespace nexakt
