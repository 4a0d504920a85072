#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shiftred/freegroup.hpp"
#include "shiftred/report.hpp"

namespace shiftred {

/// Sample sizes and radii of the property suites. The defaults are the acceptance values.
struct SuiteConfig
{
  std::uint64_t seed = 1;

  // enumeration
  Index roundtrip_count = 10'000;
  unsigned roundtrip_length = 6;
  unsigned ball_radius = 6;
  unsigned brute_ball_radius = 4;
  unsigned center_radius = 2;
  unsigned associativity_length = 3;
  unsigned decomposition_length = 5;

  // pi group
  Index pi_max_a = 50;
  Index pi_max_k = 5000;
  Index hom_max_a = 30;
  Index hom_max_k = 2000;

  // labelings
  unsigned action_samples = 50;
  unsigned action_radius = 4;
  unsigned equality_samples = 200;

  // sublemma
  unsigned fin_support_samples = 100;
  unsigned quotient_samples = 20;
  unsigned sublemma_radius = 4;
  unsigned equivariance_samples = 24;  // points (2/3 fin-support) for the equivariance check
  unsigned equivariance_radius = 3;
  unsigned equivariance_shift_radius = 2;

  // embedding
  unsigned embed_equivariance_radius = 3;
  unsigned injectivity_pairs = 50;
  unsigned check_a_images = 20;
  Index check_a_max_m = 12;

  // encoder
  unsigned forward_samples = 100;
  Index forward_max_a = 20;
  Index forward_coords = 500;
  unsigned refute_pairs = 20;
  Index refute_max_a = 20;
  Index refute_coords = 200;

  // left-free
  unsigned lf_value_radius = 4;
  unsigned z0_length = 6;
  unsigned lf_pair_radius = 2;

  // relations
  unsigned e0_pairs = 200;
  unsigned product_pairs = 200;

  /// Replaces the radii of the position balls (sublemma, equivariance, left-free values,
  /// shift action) by `depth`.
  SuiteConfig with_depth(unsigned depth) const;
};

struct Suite
{
  std::string name;
  int criterion;  // acceptance criterion number, 0 for supporting suites
  std::function<void(const SuiteConfig&, Report&)> run;
};

void run_enumeration_suite(const SuiteConfig& config, Report& report);
void run_pi_group_suite(const SuiteConfig& config, Report& report);
void run_labelings_suite(const SuiteConfig& config, Report& report);
void run_sublemma_suite(const SuiteConfig& config, Report& report);
void run_embedding_suite(const SuiteConfig& config, Report& report);
void run_encoder_suite(const SuiteConfig& config, Report& report);
void run_left_free_suite(const SuiteConfig& config, Report& report);
void run_relations_suite(const SuiteConfig& config, Report& report);

const std::vector<Suite>& all_suites();

/// Throws std::invalid_argument for an unknown name.
const Suite& find_suite(const std::string& name);

/// Runs every suite (or just `only`) and returns the merged report.
Report run_suites(const SuiteConfig& config, const std::optional<std::string>& only = {});

}  // namespace shiftred
