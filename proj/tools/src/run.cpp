#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "cli.hpp"

namespace nexakt::cli {

namespace {

// Which optional flag groups a subcommand accepts.
enum Flags : unsigned {
  kAlgebra = 1u << 0,
  kM = 1u << 1,
  kIndecs = 1u << 2,
  kMap = 1u << 3,
  kComplex = 1u << 4,
  kGood = 1u << 5,
  kTimes = 1u << 6,
  kK = 1u << 7,
  kN = 1u << 8,
};

struct Leaf {
  CLI::App* app;
  std::string check;
  unsigned flags;
};

std::uint64_t session_seed(const Options& opt) {
  if (opt.seed) return *opt.seed;
  if (const char* env = std::getenv("NEXAKT_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("NEXAKT_SEED is not an unsigned integer: \"") + env + "\"");
  }
  return 0;
}

std::string file_stem(const std::string& check, const Options& opt) {
  std::string s = check == "demo" ? "demo-" + opt.preset : check;
  std::replace(s.begin(), s.end(), ' ', '-');
  return s;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nexakt: exact verification of n-cluster tilting, n-exact and (n+2)-angulated structure"};
  app.name("nexakt");
  app.require_subcommand(1);
  Options opt;
  std::string cert_path;
  std::vector<Leaf> leaves;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& check, const std::string& about,
                  unsigned flags) {
    CLI::App* sub = parent->add_subcommand(name, about);
    if (flags & kAlgebra) {
      sub->add_option("--algebra", opt.algebra, "algebra presentation (JSON file)");
      sub->add_option("--preset", opt.preset, "built-in algebra instead of --algebra");
      sub->add_option("--module", opt.modules, "named module file, NAME=FILE (repeatable)");
    }
    if (flags & kAlgebra || check == "demo") sub->add_option("--p", opt.p, "field characteristic (prime)");
    if (flags & kN) sub->add_option("--n", opt.n, "the n of n-cluster tilting (default 2)");
    if (flags & kM) sub->add_option("--m", opt.m, "generators of M: JSON file or comma-separated names");
    if (flags & kIndecs) {
      sub->add_option("--indecs", opt.indecs, "indecomposables to test against (default: Nakayama list)");
      sub->add_flag("--complete", opt.complete, "assert that --indecs lists every indecomposable");
    }
    if (flags & kMap) sub->add_option("--map", opt.map, "morphism (JSON file)");
    if (flags & kComplex) sub->add_option("--complex", opt.complex, "complex (JSON file)");
    if (flags & kGood) sub->add_flag("--good", opt.good, "also build the good n-pushout");
    if (flags & kTimes) sub->add_option("--times", opt.times, "number of rotations (default 1)");
    if (flags & kK) sub->add_option("--k", opt.k, "compare only Ext^k (default: every 1 <= k < n)");
    sub->add_option("--seed", opt.seed, "seed (falls back to NEXAKT_SEED, then 0)");
    sub->add_option("--out", opt.out, "directory for the certificate (default .)");
    sub->add_option("--format", opt.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", opt.timing, "record wall-clock time in the certificate");
    leaves.push_back({sub, check, flags});
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& about) {
    CLI::App* g = app.add_subcommand(name, about);
    g->require_subcommand(1);
    return g;
  };

  const unsigned base = kAlgebra | kN;
  leaf(group("algebra", "algebra checks"), "check", "algebra check", "build KQ/I and report its basis", kAlgebra);
  leaf(group("nct", "n-cluster tilting"), "check", "nct check", "check that add M is n-cluster tilting",
       base | kM | kIndecs);
  leaf(&app, "ncoker", "ncoker", "n-cokernel of a morphism by the approximation ladder", base | kM | kMap);
  leaf(&app, "nkernel", "nkernel", "n-kernel of a morphism by the approximation ladder", base | kM | kMap);
  leaf(&app, "npushout", "npushout", "n-pushout of a complex along a morphism", base | kM | kMap | kComplex | kGood);
  leaf(&app, "verify-nexact", "verify-nexact", "check that a complex is n-exact", base | kM | kComplex);
  leaf(group("ext", "Ext computations"), "compare", "ext compare",
       "compare Ext via projective resolutions and add M resolutions", base | kM | kIndecs | kK);
  CLI::App* frob = group("frobenius", "Frobenius n-exact categories and their stable categories");
  leaf(frob, "setup", "frobenius setup", "check the Frobenius setting", base | kM | kIndecs);
  leaf(frob, "angle", "frobenius angle", "verify a standard or induced angle", base | kM | kIndecs | kMap | kComplex);
  leaf(frob, "rotate", "frobenius rotate", "rotate an angle and verify each rotation",
       base | kM | kIndecs | kMap | kComplex | kTimes);
  leaf(frob, "cone", "frobenius cone", "cone of the identity morphism of an angle",
       base | kM | kIndecs | kMap | kComplex);
  leaf(group("search", "exhaustive searches"), "nct", "search nct", "find every n-cluster tilting subset",
       base | kIndecs);
  CLI::App* demo = leaf(&app, "demo", "demo", "run a built-in example", kN);
  demo->add_option("preset", opt.preset, "one of: a3-j2, a5-j2, preproj-a2, auslander-a2")
      ->required()
      ->check(CLI::IsMember({"a3-j2", "a5-j2", "preproj-a2", "auslander-a2"}));
  CLI::App* re = leaf(&app, "recheck", "recheck", "re-run a certificate from its embedded inputs", 0);
  re->add_option("certificate", cert_path, "certificate file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Leaf* chosen = nullptr;
  for (const auto& l : leaves) {
    if (l.app->parsed()) chosen = &l;
  }
  if (!chosen) {
    err << "error: no command given\n";
    return 2;
  }
  const std::string& check = chosen->check;

  Json params, inputs;
  Outcome outcome;
  double elapsed_ms = 0;
  try {
    if (check == "recheck") {
      inputs = {{"certificate", load_json_file(cert_path)}};
      params = Json::object();
    } else {
      inputs = resolve_inputs(check, opt);
      params = {{"seed", session_seed(opt)}, {"p", inputs["algebra"]["field"]["p"]}};
      if (chosen->flags & kN) params["n"] = opt.n;
      if (chosen->flags & kIndecs) params["complete"] = opt.complete;
      if (chosen->flags & kGood) params["good"] = opt.good;
      if (chosen->flags & kTimes) params["times"] = opt.times;
      if (chosen->flags & kK) params["k"] = opt.k;
      if (check == "demo") params["preset"] = opt.preset;
    }
    auto t0 = std::chrono::steady_clock::now();
    outcome = run_check(check, params, inputs);
    elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  }

  Json cert = make_certificate(check, params, inputs, outcome);
  if (opt.timing) cert["timing_ms"] = static_cast<std::int64_t>(elapsed_ms * 1000) / 1000.0;

  std::filesystem::path path = std::filesystem::path(opt.out) / (file_stem(check, opt) + ".json");
  {
    std::error_code ec;
    std::filesystem::create_directories(opt.out, ec);
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << canonical_dump(cert) << "\n") || !f.flush()) {
      err << "error: cannot write certificate " << path.string() << "\n";
      return 2;
    }
  }

  if (opt.format == "json") {
    out << canonical_dump(cert) << "\n";
  } else {
    for (const auto& line : outcome.report) out << line << "\n";
    out << (outcome.pass ? "PASS" : "FAIL") << " [" << check << "] " << outcome.summary << " (certificate "
        << path.string() << ")\n";
  }
  return outcome.pass ? 0 : 1;
}

}  // namespace nexakt::cli
