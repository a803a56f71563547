// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors
//
// Flat "key = value" experiment configuration. Keys are the ExperimentConfig
// field names; nested settings use a prefix (pso_swarm_size, sca_max_iters)
// and physical parameters use their RawParams names (pmax_dbm, num_lus).
// Lists are comma separated, '#' starts a comment.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pinchsec/harness.hpp"

namespace pinchsec {

/// Desk-scale defaults for an experiment. Sweeps drop the grid search and
/// the n and zeta sweeps keep only the SSR objective.
ExperimentConfig default_config(Experiment experiment);

/// Applies one setting. Throws std::invalid_argument for unknown keys or
/// malformed values.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Applies every line of a config stream; errors carry `source:line`.
void apply_config(ExperimentConfig& cfg, std::istream& in, const std::string& source = "<config>");
void load_config(ExperimentConfig& cfg, const std::string& path);

/// Writes every key so that apply_config reproduces `cfg`.
void write_config(const ExperimentConfig& cfg, std::ostream& out);

/// Names of all recognized keys, in write_config order.
std::vector<std::string> config_keys();

}  // namespace pinchsec
