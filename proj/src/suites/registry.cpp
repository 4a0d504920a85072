#include <stdexcept>

#include "shiftred/suites.hpp"

namespace shiftred {

SuiteConfig SuiteConfig::with_depth(unsigned depth) const
{
  SuiteConfig out = *this;
  out.sublemma_radius = depth;
  out.equivariance_radius = depth;
  out.embed_equivariance_radius = depth;
  out.lf_value_radius = depth;
  out.action_radius = depth;
  return out;
}

const std::vector<Suite>& all_suites()
{
  static const std::vector<Suite> suites{
    {"enumeration", 1, run_enumeration_suite},
    {"pi-group", 2, run_pi_group_suite},
    {"sublemma", 3, run_sublemma_suite},
    {"embedding", 4, run_embedding_suite},
    {"encoder", 5, run_encoder_suite},
    {"left-free", 6, run_left_free_suite},
    {"relations", 7, run_relations_suite},
    {"labelings", 0, run_labelings_suite},
  };
  return suites;
}

const Suite& find_suite(const std::string& name)
{
  for (const Suite& s : all_suites())
    if (s.name == name)
      return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

Report run_suites(const SuiteConfig& config, const std::optional<std::string>& only)
{
  Report report;
  if (only) {
    find_suite(*only).run(config, report);
    return report;
  }
  for (const Suite& s : all_suites())
    s.run(config, report);
  return report;
}

}  // namespace shiftred
