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

// Synthetic sentence pairs by lexical replacement of aligned word pairs.
//
// A slot is a source token with exactly one analysis whose POS is eligible,
// exactly one alignment link, and a linked target token with exactly one
// analysis. One attempt on a seed draws, in this order from its Rng:
//
//   1. k = 1 + below(c) where c = min(max_replacements, #slots), skipped
//      when c == 1 (k = 1);
//   2. k slots by partial Fisher-Yates over slot positions: for i < k,
//      swap(order[i], order[i + below(#slots - i)]); the chosen slots are
//      then visited in ascending source position;
//   3. per visited slot, one candidate: below(#pool) into the candidate
//      pool, which is the lexicon's matching list (lemma order, restriction
//      applied) minus entries with the slot's own lemma.
//
// The attempt stops at the first slot without a candidate or realization
// and yields nothing. Seed s in round r draws from Rng::stream(rng_seed,
// {r, s.id}), so seeds can be processed in any order or in parallel.

#ifndef MORPHAUG_AUGMENTOR_H_
#define MORPHAUG_AUGMENTOR_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "morphaug/corpus.h"
#include "morphaug/lexicon.h"
#include "morphaug/morphology.h"
#include "morphaug/rng.h"

namespace morphaug {

enum class Strategy { kInformed, kNaive };

Strategy parse_strategy(std::string_view name);
std::string_view to_string(Strategy strategy);

struct AugmentationConfig {
  Strategy strategy = Strategy::kInformed;
  std::size_t per_seed = 3;
  std::size_t max_replacements = 2;
  std::set<Pos> eligible_pos = {Pos::kNoun, Pos::kAdjective, Pos::kVerb};
  std::uint64_t rng_seed = 0;
  Restriction restriction = Restriction::kAll;
  CandidateMatch match = CandidateMatch::kParadigm;
  bool inflect_source = true;
  bool inflect_target = true;
  // Attempts per requested sentence before giving up on it.
  std::size_t max_attempts = 10;
  std::size_t workers = 1;

  // Throws ConfigError listing every violated constraint.
  void validate() const;
};

struct Slot {
  std::size_t src_index = 0;
  std::size_t tgt_index = 0;
  Analysis src;
  Analysis tgt;
};

struct Replacement {
  std::size_t src_index = 0;
  std::size_t tgt_index = 0;
  std::string old_lemma;
  std::string new_lemma;
  // Lexicon entry that supplied new_lemma; npos when parsed from a file.
  std::size_t entry = static_cast<std::size_t>(-1);

  bool operator==(const Replacement& o) const {
    return src_index == o.src_index && tgt_index == o.tgt_index &&
           old_lemma == o.old_lemma && new_lemma == o.new_lemma;
  }
};

struct SyntheticPair {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::uint64_t seed_id = 0;
  std::vector<Replacement> replacements;
  Strategy strategy = Strategy::kInformed;

  std::string source_text() const;
  std::string target_text() const;
  // source<TAB>target; the identity used for de-duplication.
  std::string key() const;

  bool operator==(const SyntheticPair& o) const {
    return source == o.source && target == o.target && seed_id == o.seed_id &&
           replacements == o.replacements && strategy == o.strategy;
  }
};

struct Resources {
  const BilingualLexicon& lexicon;
  const ParadigmLexicon& src_paradigms;
  const ParadigmLexicon& tgt_paradigms;
};

// Replaceable positions of an aligned pair, by ascending source index.
std::vector<Slot> select_replaceable(const SentencePair& pair, const ParadigmLexicon& src_lex,
                                     const ParadigmLexicon& tgt_lex,
                                     const AugmentationConfig& cfg);

// Source token -> candidate source lemma inflected for the slot's bundle;
// target token -> lemmatized translation inflected for the target token's
// bundle. The new source surface must re-analyze uniquely to the slot's
// bundle. `consumed` is honored under Restriction::kConsumeOnce.
std::optional<SyntheticPair> augment_informed(const SentencePair& pair,
                                              const std::vector<Slot>& slots,
                                              const Resources& res,
                                              const AugmentationConfig& cfg, Rng& rng,
                                              const ConsumedSet* consumed = nullptr);

// Same POS only; both dictionary words are inserted verbatim.
std::optional<SyntheticPair> augment_naive(const SentencePair& pair,
                                           const std::vector<Slot>& slots,
                                           const Resources& res, const AugmentationConfig& cfg,
                                           Rng& rng, const ConsumedSet* consumed = nullptr);

struct PoolOptions {
  std::uint64_t round = 0;
  // Variants requested per seed; 0 means cfg.per_seed.
  std::size_t per_seed = 0;
  // Keys (SyntheticPair::key) that must not appear in the pool.
  const std::unordered_set<std::string>* exclude = nullptr;
};

// Up to per_seed unique pairs per seed in corpus order, then a pool-wide
// de-duplication keeping first occurrences. Requires aligned pairs.
std::vector<SyntheticPair> generate_pool(const ParallelCorpus& seeds, const Resources& res,
                                         const AugmentationConfig& cfg,
                                         const PoolOptions& options = {});

// Number of seeds that have at least one slot.
std::size_t count_productive_seeds(const ParallelCorpus& seeds, const Resources& res,
                                   const AugmentationConfig& cfg);

// Pool TSV: seed_id<TAB>strategy<TAB>source<TAB>target<TAB>replacements, the
// last column holding space-separated `src-tgt:old>new` descriptors.
std::string format_pool_line(const SyntheticPair& pair);
SyntheticPair parse_pool_line(std::string_view line);

}  // namespace morphaug

#endif  // MORPHAUG_AUGMENTOR_H_
