#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "edgeposet/action.hpp"
#include "edgeposet/peck.hpp"

namespace edgeposet {

/// Everything measured about one induced action of G on B_n.
struct SweepRecord {
  std::string generators;  // cycle notation, 1-indexed
  std::size_t order = 0;
  int n = 0;
  bool cct = false;
  std::optional<CctTriple> witness;  // masks of B_n
  std::vector<std::size_t> quotient_ranks;        // B_n/G
  std::vector<std::size_t> edge_quotient_ranks;   // E(B_n)/G
  std::vector<std::size_t> quotient_edge_ranks;   // E(B_n/G)
  std::vector<std::size_t> h_quotient_ranks;      // H(B_n)/G
  PeckReport quotient_edges;                      // Peck data of E(B_n/G)
  bool q_bijective = false;
  bool q_isomorphism = false;
  double millis = 0.0;
};

/// Runs all four CCT methods and the Peck checks. Throws Error{Internal} when
/// the methods disagree or a CCT action yields a non-Peck E(B_n/G).
SweepRecord analyse_bn_action(const PermGroup& group, std::size_t oracle_threshold = 0);

/// One record per group using up to `jobs` threads; sorted by (order, generators).
std::vector<SweepRecord> run_sweep(const std::vector<PermGroup>& groups, unsigned jobs,
                                   std::size_t oracle_threshold = 0);

nlohmann::json to_json(const SweepRecord& r);
nlohmann::json to_json(const PeckReport& r);

std::string sweep_csv_header();
std::string to_csv_row(const SweepRecord& r);

/// Points of a B_n mask, 0-indexed.
std::vector<int> mask_points(Element mask);

}  // namespace edgeposet
