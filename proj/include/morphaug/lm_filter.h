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

// Perplexity scoring of synthetic pairs and k-best selection.

#ifndef MORPHAUG_LM_FILTER_H_
#define MORPHAUG_LM_FILTER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morphaug/augmentor.h"
#include "morphaug/ngram_lm.h"

namespace morphaug {

struct ScoredPair {
  SyntheticPair pair;
  double ppl = 0.0;
};

// kSum pools both sides: 2^(-(log2 p(src) + log2 p(tgt)) / (t_src + t_tgt)).
enum class ScoreSide { kTarget, kSource, kSum };

ScoreSide parse_score_side(std::string_view name);
std::string_view to_string(ScoreSide side);

enum class SelectionMode { kFiltered, kRandom };

SelectionMode parse_selection_mode(std::string_view name);
std::string_view to_string(SelectionMode mode);

struct Scorer {
  const NGramLM* source = nullptr;  // required for kSource and kSum
  const NGramLM* target = nullptr;  // required for kTarget and kSum
  ScoreSide side = ScoreSide::kTarget;

  double score(const SyntheticPair& pair) const;
};

// Scores every pair; parallel over `workers`, output in pool order.
std::vector<ScoredPair> score_pool(std::vector<SyntheticPair> pool, const Scorer& scorer,
                                   std::size_t workers = 1);

// Positions of the k selected pairs. Filtered: ascending ppl, ties by pool
// position. Random: the first k steps of a Fisher-Yates shuffle driven by
// `rng`, in draw order. Both modes nest: the result for k is a prefix of
// the result for any larger k. Throws ConfigError when k > |pool|.
std::vector<std::size_t> select_indices(const std::vector<double>& ppls, std::size_t k,
                                        SelectionMode mode, std::uint64_t rng_seed = 0);

std::vector<ScoredPair> filter_rank(const std::vector<ScoredPair>& pool, std::size_t k,
                                    SelectionMode mode, std::uint64_t rng_seed = 0);

// Pool TSV with a sixth ppl column.
std::string format_scored_line(const ScoredPair& scored);
ScoredPair parse_scored_line(std::string_view line);

}  // namespace morphaug

#endif  // MORPHAUG_LM_FILTER_H_
