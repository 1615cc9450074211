#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "cli.hpp"

namespace nexakt::cli {

namespace {

std::size_t family_size(const std::string& name, std::size_t n, std::size_t edges) {
  if (n == 0 || edges % n != 0) {
    throw InputError("preset " + name + " needs --n dividing " + std::to_string(edges));
  }
  return edges / n;
}

/// Module names usable without a file: P<v>, S<v>, I<v> for a vertex name v.
std::optional<Module> builtin_module(const AlgebraPtr& alg, const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  const auto& vs = alg->quiver().vertices();
  auto it = std::find(vs.begin(), vs.end(), name.substr(1));
  if (it == vs.end()) return std::nullopt;
  std::size_t v = static_cast<std::size_t>(it - vs.begin());
  switch (name[0]) {
    case 'P': return projective_module(alg, v);
    case 'S': return simple_module(alg, v);
    case 'I': return injective_module(alg, v);
    default: return std::nullopt;
  }
}

template <class F>
auto with_source(const std::string& source, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (msg.rfind(source + ":", 0) == 0) throw;
    throw InputError(source + ": " + msg);
  }
}

class Loader {
 public:
  Loader(AlgebraPtr alg, const std::vector<std::string>& module_flags) : alg_(std::move(alg)) {
    for (const auto& flag : module_flags) {
      auto eq = flag.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == flag.size()) {
        throw InputError("--module expects NAME=FILE, got \"" + flag + "\"");
      }
      files_[flag.substr(0, eq)] = flag.substr(eq + 1);
    }
  }

  std::optional<Module> resolve(const std::string& name) {
    if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    std::optional<Module> m;
    if (auto it = files_.find(name); it != files_.end()) {
      const std::string& path = it->second;
      m = with_source(path, [&] { return module_from_json(alg_, load_json_file(path)); });
    } else {
      m = builtin_module(alg_, name);
    }
    if (m) cache_.emplace(name, *m);
    return m;
  }

  ModuleResolver resolver() {
    return [this](const std::string& name) { return resolve(name); };
  }

  /// A list given as a JSON file (array of names or inline modules) or as
  /// comma-separated names.
  Json list(const std::string& arg) {
    Json out = Json::array();
    if (std::filesystem::is_regular_file(arg)) {
      Json j = load_json_file(arg);
      with_source(arg, [&] {
        if (j.is_object() && j.contains("modules")) j = j["modules"];
        if (!j.is_array()) throw InputError("/: expected an array of modules");
        for (std::size_t i = 0; i < j.size(); ++i) {
          const std::string where = "/" + std::to_string(i);
          if (j[i].is_string()) {
            out.push_back(named(j[i].get<std::string>(), where));
          } else {
            Module m = module_from_json(alg_, j[i], where);
            out.push_back({{"label", "M" + std::to_string(i)}, {"module", to_json(m)}});
          }
        }
        return 0;
      });
      return out;
    }
    std::stringstream ss(arg);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      out.push_back(named(name, "--m"));
    }
    if (out.empty()) throw InputError("empty module list \"" + arg + "\"");
    return out;
  }

 private:
  Json named(const std::string& name, const std::string& where) {
    auto m = resolve(name);
    if (!m) throw InputError(where + ": unknown module \"" + name + "\" (use --module NAME=FILE or P<v>, S<v>, I<v>)");
    return {{"label", name}, {"module", to_json(*m)}};
  }

  AlgebraPtr alg_;
  std::map<std::string, std::string> files_;
  std::map<std::string, Module> cache_;
};

}  // namespace

std::vector<std::string> preset_names() {
  return {"a3-j2", "a5-j2", "preproj-a2", "preproj-a3", "auslander-a2", "auslander-a3"};
}

AlgebraPresentation preset_presentation(const std::string& name, std::size_t n, std::uint32_t p) {
  if (name == "a3-j2") return gen_linear_An_J2(n, family_size(name, n, 2), p).algebra->presentation();
  if (name == "a5-j2") return gen_linear_An_J2(n, family_size(name, n, 4), p).algebra->presentation();
  if (name == "preproj-a2") return gen_preprojective_A(2, p)->presentation();
  if (name == "preproj-a3") return gen_preprojective_A(3, p)->presentation();
  if (name == "auslander-a2") return gen_auslander_linear_A(2, p)->presentation();
  if (name == "auslander-a3") return gen_auslander_linear_A(3, p)->presentation();
  throw InputError("unknown preset \"" + name + "\"");
}

Json resolve_inputs(const std::string& check, const Options& opt) {
  AlgebraPresentation pres;
  if (!opt.preset.empty()) {
    if (opt.p && !is_prime(*opt.p)) throw InputError("--p must be prime");
    pres = preset_presentation(opt.preset, opt.n, opt.p.value_or(101));
  } else if (!opt.algebra.empty()) {
    pres = with_source(opt.algebra, [&] { return presentation_from_json(load_json_file(opt.algebra)); });
    if (opt.p) {
      if (!is_prime(*opt.p)) throw InputError("--p must be prime");
      pres.p = *opt.p;
    }
  } else {
    throw InputError(check + ": no algebra given (use --algebra FILE or --preset NAME)");
  }
  Json inputs = {{"algebra", to_json(pres)}};
  bool needs_modules = !opt.m.empty() || !opt.indecs.empty() || !opt.complex.empty() || !opt.map.empty();
  if (!needs_modules) return inputs;

  AlgebraPtr alg;
  try {
    alg = build_algebra(pres);
  } catch (const Error& e) {
    throw InputError("algebra does not build: " + std::string(e.what()));
  }
  Loader loader(alg, opt.modules);
  if (!opt.m.empty()) inputs["m"] = loader.list(opt.m);
  if (!opt.indecs.empty()) inputs["indecs"] = loader.list(opt.indecs);
  if (!opt.complex.empty()) {
    inputs["complex"] = with_source(opt.complex, [&] {
      return to_json(complex_from_json(alg, load_json_file(opt.complex), loader.resolver()));
    });
  }
  if (!opt.map.empty()) {
    inputs["map"] = with_source(opt.map, [&] {
      return to_json(morphism_from_json(alg, load_json_file(opt.map), loader.resolver()));
    });
  }
  return inputs;
}

}  // namespace nexakt::cli
