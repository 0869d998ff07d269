#pragma once

#include "qglue/decompose.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qglue {

const std::vector<std::string>& reproduce_ids();
// Runs the scripted pipeline for one fixture; returns 0 on success and 2 on any mismatch.
int reproduce(const std::string& id, const Oracle& o, std::ostream& out,
              const std::string& fixture_dir = QGLUE_FIXTURE_DIR);

}  // namespace qglue
