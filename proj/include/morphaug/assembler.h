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

// Nested synthetic tiers and training-file emission.
//
// Per-delta tiers: round r generates a fresh pool for the increment
// sizes[r] - sizes[r-1], excluding every pair of earlier rounds' pools, and
// the increment is selected from that pool alone. Tier r is tier r-1 plus
// the increment. Global tiers: one pool, one ranking, tiers are prefixes.

#ifndef MORPHAUG_ASSEMBLER_H_
#define MORPHAUG_ASSEMBLER_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "morphaug/augmentor.h"
#include "morphaug/corpus.h"
#include "morphaug/lm_filter.h"

namespace morphaug {

struct TierSpec {
  std::vector<std::size_t> sizes = {5000, 10000, 50000, 100000, 200000};
  std::string clean_tag = "<clean>";
  std::string noisy_tag = "<noisy>";

  // Throws ConfigError listing every violated constraint.
  void validate() const;
};

enum class TierStrategy { kPerDelta, kGlobal };

TierStrategy parse_tier_strategy(std::string_view name);
std::string_view to_string(TierStrategy strategy);

// Directory name of a tier: "5K" for multiples of 1000, else the number.
std::string tier_label(std::size_t size);

struct RoundOptions {
  TierStrategy strategy = TierStrategy::kPerDelta;
  // Pool size aimed for, as a multiple of the pairs the round must supply.
  double oversample = 1.0;
  // Variants per seed; 0 sizes it from the seed count and doubles it until
  // the pool is large enough or stops growing.
  std::size_t per_seed = 0;
};

struct Round {
  std::size_t index = 0;
  std::size_t needed = 0;    // pairs this round must supply
  std::size_t per_seed = 0;  // M actually used
  std::vector<SyntheticPair> pool;
};

// Pool of one round with M variants per seed, none of them in `exclude`.
// Must be deterministic, and a larger M must not shrink the pool.
using PoolGenerator = std::function<std::vector<SyntheticPair>(
    std::size_t round, std::size_t per_seed, const std::unordered_set<std::string>& exclude)>;

// Throws CapacityError (with the tier size reachable so far) when a round
// cannot supply its increment.
std::vector<Round> generate_rounds(const PoolGenerator& generate, std::size_t productive_seeds,
                                   const TierSpec& spec, const RoundOptions& options);

// Convenience wrapper over generate_pool.
std::vector<Round> generate_rounds(const ParallelCorpus& seeds, const Resources& res,
                                   const AugmentationConfig& cfg, const TierSpec& spec,
                                   const RoundOptions& options);

// Cumulative tiers from scored rounds, one per spec size.
std::vector<std::vector<ScoredPair>> build_tiers(const std::vector<std::vector<ScoredPair>>& rounds,
                                                 const TierSpec& spec, TierStrategy strategy,
                                                 SelectionMode mode, std::uint64_t rng_seed);

struct ManifestRecord {
  std::string path;  // relative to the output root
  std::size_t lines = 0;
  std::string sha256;
};

enum class Tagging { kTagged, kUntagged };

struct EmitOptions {
  Tagging tagging = Tagging::kTagged;
  // Deterministic hash order instead of seed block then synthetic block.
  bool interleave = false;
  std::uint64_t rng_seed = 0;
};

// Writes dir/train.src and dir/train.tgt. Untagged emission is the seed
// alone without prefixes. Paths in the records are relative to `root`.
std::vector<ManifestRecord> emit_dataset(const ParallelCorpus& seed,
                                         const std::vector<SyntheticPair>& tier,
                                         const TierSpec& spec, const std::filesystem::path& root,
                                         const std::string& dir, const EmitOptions& options);

// `# rng_seed<TAB>N`, then one path<TAB>lines<TAB>sha256 line per record,
// sorted by path.
std::string format_manifest(std::vector<ManifestRecord> records, std::uint64_t rng_seed);

struct TierStats {
  std::string label;
  std::size_t size = 0;
  std::size_t unique_seeds = 0;
  std::size_t seed_source_types = 0;
  std::size_t seed_target_types = 0;
  std::size_t new_source_types = 0;  // in the tier but not in the seed
  std::size_t new_target_types = 0;
  double mean_ppl = 0.0;
  double median_ppl = 0.0;
};

TierStats stats(const std::vector<ScoredPair>& tier, const ParallelCorpus& seed,
                std::string label = "");

}  // namespace morphaug

#endif  // MORPHAUG_ASSEMBLER_H_
