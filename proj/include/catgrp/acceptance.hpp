#pragma once

#include <iosfwd>
#include <string>

#include "catgrp/dsl.hpp"

namespace catgrp {

// The A3-in-S3 inclusion crossed module as a self-contained document: S3,
// A3 (its even permutations), the inclusion hom and the conjugation action.
// With `trivial_action` the action rows are replaced by the identity, which
// breaks equivariance.
SpecDocument a3_s3_xmod_document(bool trivial_action = false);

struct AcceptanceConfig {
  std::string cli_path;  // catgrp binary, used by the parser/CLI criterion
  std::string temp_dir;  // scratch directory for generated fixture files
};

// Runs the full acceptance suite, printing one pass/fail line per criterion.
// Returns true iff every criterion passes.
bool run_acceptance(const AcceptanceConfig& config, std::ostream& out);

}  // namespace catgrp
