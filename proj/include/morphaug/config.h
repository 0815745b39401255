// Copyright 2026 The morphaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Run configuration.
//
// A config file is flat `key = value` lines; `#` starts a comment. Relative
// paths in a file resolve against the file's directory. Values are layered
// defaults < file < MORPHAUG_<KEY> environment variables < command-line
// flags, and every problem found is reported in a single ConfigError.

#ifndef MORPHAUG_CONFIG_H_
#define MORPHAUG_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphaug/aligner.h"
#include "morphaug/assembler.h"
#include "morphaug/augmentor.h"
#include "morphaug/lm_filter.h"

namespace morphaug {

inline constexpr std::string_view kEnvPrefix = "MORPHAUG_";

struct RunConfig {
  std::filesystem::path source;
  std::filesystem::path target;
  std::filesystem::path seed_tsv;  // alternative to source + target
  std::filesystem::path lexicon;
  std::filesystem::path src_paradigms;
  std::filesystem::path tgt_paradigms;
  std::filesystem::path monolingual_source;
  std::filesystem::path monolingual_target;
  std::filesystem::path seed_alignments;  // Pharaoh file; skips training
  std::filesystem::path out_dir;

  AugmentationConfig augment;
  TierSpec tiers;
  RoundOptions rounds;
  std::size_t min_len = 7;
  bool interleave = false;

  AlignerOptions aligner;
  Symmetrization symmetrize = Symmetrization::kGrowDiag;

  int lm_order = 3;
  double lm_discount = 0.75;
  ScoreSide lm_side = ScoreSide::kTarget;

  SelectionMode mode = SelectionMode::kFiltered;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

struct Setting {
  std::string key;
  std::string value;
  std::string origin;  // where the value came from, for error messages
  // Directory that relative path values resolve against; empty for cwd.
  std::filesystem::path base;
};

// Every recognized key, in documentation order.
const std::vector<std::string_view>& config_keys();

// Parses a config file into settings. Malformed lines are reported through
// `errors` rather than thrown.
std::vector<Setting> read_config_file(const std::filesystem::path& path,
                                      std::vector<std::string>& errors);

// Settings from `NAME=value` strings (as in environ) carrying kEnvPrefix.
std::vector<Setting> settings_from_env(const std::vector<std::string>& environment);

// Applies layers in order; throws ConfigError listing every problem.
RunConfig resolve_config(const std::optional<std::filesystem::path>& file,
                         const std::vector<Setting>& env, const std::vector<Setting>& flags);

// Inputs a command needs that are unset or missing on disk, one message
// each. Commands: align, train-lm, augment, filter, emit, build, stats.
std::vector<std::string> check_inputs(const RunConfig& cfg, std::string_view command);

// Effective configuration as `key = value` lines in config_keys() order.
std::string format_config(const RunConfig& cfg);

}  // namespace morphaug

#endif  // MORPHAUG_CONFIG_H_
