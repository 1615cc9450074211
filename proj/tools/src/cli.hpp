#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nexakt/nexakt.hpp>

namespace nexakt::cli {

/// Flags shared by the subcommands, as parsed from argv.
struct Options {
  std::optional<std::uint32_t> p;
  std::optional<std::uint64_t> seed;
  std::size_t n = 2;
  std::string algebra;
  std::string preset;
  std::vector<std::string> modules;  // NAME=FILE
  std::string m;
  std::string indecs;
  bool complete = false;
  std::string complex;
  std::string map;
  bool good = false;
  std::size_t times = 1;
  std::size_t k = 0;
  std::string out = ".";
  std::string format = "text";
  bool timing = false;
};

/// Algebra presentations for the named families; `n` selects the member where
/// the family depends on it.
AlgebraPresentation preset_presentation(const std::string& name, std::size_t n, std::uint32_t p);
std::vector<std::string> preset_names();

/// Loads every file named by the options into one self-contained JSON object:
/// the algebra presentation and each module list or map written out inline.
Json resolve_inputs(const std::string& check, const Options& opt);

struct Outcome {
  bool pass = false;
  std::string summary;
  Json result;
  std::vector<std::string> report;  // human-readable lines for --format text
};

/// Runs a check from its parameters and resolved inputs. Deterministic for a
/// fixed seed; throws InputError (or another nexakt::Error) on malformed input.
Outcome run_check(const std::string& check, const Json& params, const Json& inputs);

Json make_certificate(const std::string& check, const Json& params, const Json& inputs, const Outcome& outcome);

/// Full driver: parse, run, write the certificate, print. Returns the exit code
/// (0 pass, 1 fail with certificate, 2 usage or input error).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nexakt::cli
