#pragma once

#include <string>
#include <vector>

#include "support.hpp"

namespace gsp::cli {

struct DemoOptions {
  std::size_t n = 0;  // 0 selects the demo's own size
};

const std::vector<std::string>& demo_names();

/// Runs one demo, writes <out_dir>/<name>/report.json plus CSV panels, and
/// returns the process exit code (0 iff every embedded check passed).
int run_demo(const std::string& name, const GlobalOptions& global, const DemoOptions& opts);

}  // namespace gsp::cli
