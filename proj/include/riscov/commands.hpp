// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "riscov/config.hpp"

namespace riscov {

// Each command resolves the scene from the config, runs, and writes its
// artifacts under out_dir. All return 0 on success and throw on failure;
// the CLI maps exceptions to nonzero exit codes.
int cmd_baseline(const RunConfig& config);
int cmd_place(const RunConfig& config);
int cmd_sweep(const RunConfig& config);
int cmd_report(const std::vector<std::string>& artifact_paths);

}  // namespace riscov
