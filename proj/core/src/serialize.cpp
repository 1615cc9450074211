#include "nexakt/serialize.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nexakt/error.hpp"

namespace nexakt {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  throw InputError((where.empty() ? "/" : where) + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

std::size_t as_count(const Json& j, const std::string& where) {
  std::int64_t v = as_int(j, where);
  if (v < 0) bad(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

Mat mat_from_json(const Json& j, const Field& f, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a matrix as an array of rows");
  if (j.size() != rows) bad(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rw = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) bad(rw, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.reduce(as_int(j[r][c], rw + "/" + std::to_string(c)));
  }
  return m;
}

std::string pointer_key(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

Module resolve_module(const AlgebraPtr& alg, const Json& j, const ModuleResolver& resolve, const std::string& where) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    std::optional<Module> m = resolve ? resolve(name) : std::nullopt;
    if (!m) bad(where, "unknown module \"" + name + "\"");
    return *m;
  }
  return module_from_json(alg, j, where);
}

}  // namespace

Json to_json(const AlgebraPresentation& pres) {
  Json arrows = Json::array();
  for (const auto& a : pres.quiver.arrows()) {
    arrows.push_back({{"name", a.name},
                      {"from", pres.quiver.vertices()[a.source]},
                      {"to", pres.quiver.vertices()[a.target]}});
  }
  Json rels = Json::array();
  for (const auto& rel : pres.relations) {
    Json r = Json::array();
    for (const auto& t : rel) r.push_back({{"coeff", t.coeff}, {"path", t.path}});
    rels.push_back(r);
  }
  return {{"field", {{"p", pres.p}}},
          {"quiver", {{"vertices", pres.quiver.vertices()}, {"arrows", arrows}}},
          {"relations", rels},
          {"nilpotency_bound", pres.nilpotency_bound}};
}

AlgebraPresentation presentation_from_json(const Json& j) {
  AlgebraPresentation pres;
  std::int64_t p = as_int(field(field(j, "field", ""), "p", "/field"), "/field/p");
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint32_t>(p))) {
    bad("/field/p", "expected a prime below 2^31");
  }
  pres.p = static_cast<std::uint32_t>(p);
  const Json& q = field(j, "quiver", "");
  const Json& vs = field(q, "vertices", "/quiver");
  if (!vs.is_array()) bad("/quiver/vertices", "expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(as_string(vs[i], "/quiver/vertices/" + std::to_string(i)));
  const Json& as = field(q, "arrows", "/quiver");
  if (!as.is_array()) bad("/quiver/arrows", "expected an array");
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::string w = "/quiver/arrows/" + std::to_string(i);
    std::string name = as_string(field(as[i], "name", w), w + "/name");
    std::string from = as_string(field(as[i], "from", w), w + "/from");
    std::string to = as_string(field(as[i], "to", w), w + "/to");
    for (const auto& [end, key] : {std::pair{from, "/from"}, std::pair{to, "/to"}}) {
      if (std::find(vertices.begin(), vertices.end(), end) == vertices.end()) {
        bad(w + key, "\"" + end + "\" is not a vertex");
      }
    }
    arrows.emplace_back(std::move(name), std::move(from), std::move(to));
  }
  try {
    pres.quiver = Quiver::from_names(vertices, arrows);
  } catch (const Error& e) {
    bad("/quiver", e.what());
  }
  const Json& rs = field(j, "relations", "");
  if (!rs.is_array()) bad("/relations", "expected an array");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string w = "/relations/" + std::to_string(i);
    if (!rs[i].is_array()) bad(w, "expected an array of terms");
    Relation rel;
    for (std::size_t k = 0; k < rs[i].size(); ++k) {
      const std::string tw = w + "/" + std::to_string(k);
      RelationTerm t;
      t.coeff = as_int(field(rs[i][k], "coeff", tw), tw + "/coeff");
      const Json& path = field(rs[i][k], "path", tw);
      if (!path.is_array()) bad(tw + "/path", "expected an array of arrow names");
      for (std::size_t a = 0; a < path.size(); ++a) t.path.push_back(as_string(path[a], tw + "/path/" + std::to_string(a)));
      rel.push_back(std::move(t));
    }
    pres.relations.push_back(std::move(rel));
  }
  pres.nilpotency_bound = as_count(field(j, "nilpotency_bound", ""), "/nilpotency_bound");
  return pres;
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Module& m) {
  const Quiver& q = m.algebra().quiver();
  Json dims = Json::object(), arrows = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.vertices()[v]] = m.dim(v);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) arrows[q.arrows()[a].name] = to_json(m.action(a));
  return {{"dims", dims}, {"arrows", arrows}};
}

Module module_from_json(const AlgebraPtr& alg, const Json& j, const std::string& where) {
  const Quiver& q = alg->quiver();
  const Json& dj = field(j, "dims", where);
  const Json& aj = field(j, "arrows", where);
  if (!dj.is_object()) bad(where + "/dims", "expected an object keyed by vertex");
  if (!aj.is_object()) bad(where + "/arrows", "expected an object keyed by arrow");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (auto it = dj.begin(); it != dj.end(); ++it) {
    const std::string w = where + "/dims/" + pointer_key(it.key());
    std::size_t v;
    try {
      v = q.vertex_index(it.key());
    } catch (const Error&) {
      bad(w, "unknown vertex");
    }
    dims[v] = as_count(*it, w);
  }
  std::vector<Mat> action;
  for (const auto& arrow : q.arrows()) {
    const std::string w = where + "/arrows/" + pointer_key(arrow.name);
    auto it = aj.find(arrow.name);
    if (it == aj.end()) {
      if (dims[arrow.source] == 0 || dims[arrow.target] == 0) {
        action.emplace_back(alg->field(), dims[arrow.target], dims[arrow.source]);
        continue;
      }
      bad(w, "missing matrix");
    }
    action.push_back(mat_from_json(*it, alg->field(), dims[arrow.target], dims[arrow.source], w));
  }
  for (auto it = aj.begin(); it != aj.end(); ++it) {
    try {
      q.arrow_index(it.key());
    } catch (const Error&) {
      bad(where + "/arrows/" + pointer_key(it.key()), "unknown arrow");
    }
  }
  try {
    return Module(alg, std::move(dims), std::move(action));
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

Json to_json(const Morphism& f) {
  const Quiver& q = f.source().algebra().quiver();
  Json comps = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) comps[q.vertices()[v]] = to_json(f.component(v));
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", comps}};
}

Morphism morphism_from_json(const AlgebraPtr& alg, const Json& j, const ModuleResolver& resolve,
                            const std::string& where) {
  Module s = resolve_module(alg, field(j, "source", where), resolve, where + "/source");
  Module t = resolve_module(alg, field(j, "target", where), resolve, where + "/target");
  const Json& cj = field(j, "components", where);
  if (!cj.is_object()) bad(where + "/components", "expected an object keyed by vertex");
  const Quiver& q = alg->quiver();
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::string w = where + "/components/" + pointer_key(q.vertices()[v]);
    auto it = cj.find(q.vertices()[v]);
    if (it == cj.end()) {
      if (s.dim(v) == 0 || t.dim(v) == 0) {
        comps.emplace_back(alg->field(), t.dim(v), s.dim(v));
        continue;
      }
      bad(w, "missing component");
    }
    comps.push_back(mat_from_json(*it, alg->field(), t.dim(v), s.dim(v), w));
  }
  try {
    return Morphism(std::move(s), std::move(t), std::move(comps));
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

Json to_json(const ComplexSeq& x) {
  Json maps = Json::array();
  for (const auto& d : x.diffs()) maps.push_back(to_json(d));
  Json terms = Json::array();
  for (const auto& t : x.terms()) terms.push_back(to_json(t));
  return {{"lo", x.lo()}, {"maps", maps}, {"terms", terms}};
}

ComplexSeq complex_from_json(const AlgebraPtr& alg, const Json& j, const ModuleResolver& resolve,
                             const std::string& where) {
  int lo = static_cast<int>(as_int(field(j, "lo", where), where + "/lo"));
  const Json& mj = field(j, "maps", where);
  if (!mj.is_array() || mj.empty()) bad(where + "/maps", "expected a non-empty array of morphisms");
  std::vector<Morphism> maps;
  for (std::size_t i = 0; i < mj.size(); ++i) {
    maps.push_back(morphism_from_json(alg, mj[i], resolve, where + "/maps/" + std::to_string(i)));
  }
  try {
    return ComplexSeq::from_maps(lo, maps);
  } catch (const Error& e) {
    bad(where + "/maps", e.what());
  }
}

Json parse_json(const std::string& text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source_name + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::string canonical_dump(const Json& j) { return j.dump(); }

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 computation failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

std::string content_hash(const Json& j) { return sha256_hex(canonical_dump(j)); }
std::string content_hash(const Module& m) { return content_hash(to_json(m)); }

Json to_json(const ExactnessRecord& r) {
  return {{"generator", r.generator}, {"functor", r.covariant ? "Hom(G,-)" : "Hom(-,G)"},
          {"degree", r.degree},       {"end_check", r.end_check},
          {"hom_dim", r.hom_dim},     {"rank_in", r.rank_in},
          {"rank_out", r.rank_out},   {"exact", r.exact}};
}

Json to_json(const NExactCert& c) {
  Json recs = Json::array();
  for (const auto& r : c.records) recs.push_back(to_json(r));
  return {{"cokernel_side", c.cokernel_side}, {"kernel_side", c.kernel_side},
          {"interior_checks", c.interior_checks()}, {"end_checks", c.end_checks()},
          {"records", recs}, {"verdict", c.verdict()}};
}

Json to_json(const NctReport& r, std::size_t n) {
  return {{"generating", r.generating}, {"cogenerating", r.cogenerating}, {"rigid", r.rigid},
          {"maximal", r.maximal},       {"complete", r.complete},         {"witnesses", r.witnesses},
          {"pass", r.pass()},           {"verdict", r.verdict(n)}};
}

Json to_json(const AngleCheck& c) {
  Json recs = Json::array();
  for (const auto& r : c.records) recs.push_back(to_json(r));
  return {{"composites_vanish", c.composites_vanish}, {"exact", c.exact}, {"records", recs}, {"pass", c.pass()}};
}

Json to_json(const Angle& a) {
  Json objs = Json::array(), maps = Json::array();
  for (const auto& o : a.objects) objs.push_back({{"hash", content_hash(o)}, {"dims", o.dims()}});
  for (const auto& m : a.maps) maps.push_back(to_json(m)["components"]);
  return {{"objects", objs},
          {"maps", maps},
          {"closing", to_json(a.closing)["components"]},
          {"sigma_first", {{"hash", content_hash(a.sigma_first())}, {"dims", a.sigma_first().dims()}}}};
}

}  // namespace nexakt
