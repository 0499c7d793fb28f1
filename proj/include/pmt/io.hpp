#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "pmt/instance.hpp"
#include "pmt/plan.hpp"

namespace pmt {

// Instance text format, one keyword per line, '#' starts a comment:
//
//   vertices 5
//   edges 0-1 1-2 2-3 1-4
//   transshipment 1
//   variant ts
//   kind pmt
//   start 0 3
//   target 3 0
//
// Kind-specific goal lines: `target` (pmt), `destinations` (unlabeled),
// `marked` + `goal` (motion), `subtree` (gather). Pebble i starts at the
// i-th entry of `start`.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Plan text format: one "u -> v" line per move, then a trailer
//   moves <count>
//   crossings v:k v:k ...   (vertices with a nonzero arrival count)
Plan parse_plan(const std::string& text);
std::string serialize_plan(const Plan& plan);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Uniform labelled tree on n vertices from a random Pruefer sequence.
Tree random_tree(int n, std::mt19937_64& rng, double ts_probability = 0.0);

struct GeneratorOptions {
  int max_attempts = 1000;
  double ts_probability = 0.25;  // chance a degree >= 2 vertex becomes ts
};

/// Random instance satisfying the hole assumption of its variant. Deterministic
/// in (seed, n, p, variant, kind). Throws AssumptionUnsatisfiable when the
/// attempt cap is hit.
Instance generate_random_instance(std::uint64_t seed, int n, int p, Variant variant,
                                  ProblemKind kind, const GeneratorOptions& options = {});

}  // namespace pmt
