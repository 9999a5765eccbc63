#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geo/quadrilateral.hpp"
#include "geo/rng.hpp"

namespace geo::fuzz {

enum class Theorem {
  Desargues,
  Reciprocal,
  Menelaus,
  NewtonGauss,
  Problem1,
  Problem2,
};

std::optional<Theorem> theorem_from_name(const std::string& name);
const char* theorem_name(Theorem t);

struct FuzzSpec {
  Theorem theorem = Theorem::Desargues;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t coordinate_bound = 10;  // integer grid half-width

  bool valid() const { return trials >= 1 && coordinate_bound >= 2; }
};

/// One reproducible trial: (seed, index) fully determines the record. Points
/// and witnesses carry canonical homogeneous triples as decimal strings.
struct TrialRecord {
  std::uint64_t index = 0;
  std::uint64_t derived_seed = 0;
  std::vector<std::pair<std::string, ProjPoint>> points;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, std::array<std::string, 3>>> witnesses;
  std::uint64_t rejections = 0;

  bool falsified = false;          // exit-status input, not serialized
  std::string falsification_note;  // exact-coordinate dump when falsified
};

struct FuzzSummary {
  std::uint64_t trials = 0;
  std::uint64_t falsifications = 0;
  std::uint64_t total_rejections = 0;
  std::map<std::string, std::uint64_t> verdict_true_counts;
};

/// Runs a single trial with the splitmix64 stream derived from
/// (spec.seed, index).
TrialRecord run_trial(const FuzzSpec& spec, std::uint64_t index);

/// Runs all trials in index order, streaming one JSON record per line when
/// json is set (plus a final summary line) or a human summary otherwise.
/// Identical (seed, spec) reproduce byte-identical output.
FuzzSummary run_fuzz(const FuzzSpec& spec, std::ostream& out, bool json);

}  // namespace geo::fuzz
