#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "abeldim/examples.hpp"
#include "abeldim/lattice.hpp"
#include "io.hpp"

namespace abeldim::cli {

// Where the graph comes from: a JSON file / inline string, or a builtin.
struct GraphSource {
  std::string graph;                  // --graph
  std::string example;                // --example twin_gamma|star
  std::int64_t b = 0;                 // --b; 0 picks the builtin default
  std::vector<std::string> branches;  // --branches Gamma,E237 (star only)
  std::int64_t n = 1;                 // --n (star only)
};

struct ResolvedGraph {
  PlumbingGraph graph;
  std::optional<BuiltinExample> example;
};

ResolvedGraph resolve(const GraphSource& src);

struct DimOptions {
  GraphSource source;
  std::string Z;       // --Z; empty means the automatic cap
  bool Z_auto = false;
  std::string lprime;  // --lprime; empty means the builtin default
  std::string method = "all";
  bool timing = false;
};

struct SiOptions {
  std::int64_t d = 3;
  std::int64_t k = 0;
  std::optional<std::int64_t> k0;
};

// Each command returns its report; library errors propagate as abeldim::Error.
ordered_json cmd_check(const GraphSource& src);
ordered_json cmd_dim(const DimOptions& opt);
ordered_json cmd_bounds(const DimOptions& opt);
ordered_json cmd_superisolated(const SiOptions& opt);
ordered_json cmd_examples(const GraphSource& src);

// Full command line (without the program name). Writes the JSON report or
// an error object to out and a one-line diagnostic to err. Exit codes:
// 0 success, 1 invalid input, 2 internal cross-check failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abeldim::cli
