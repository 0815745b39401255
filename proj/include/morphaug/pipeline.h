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

// Pipeline stages. Each stage reads its inputs from the configured files
// and from earlier stages' files in out_dir, and writes only into out_dir:
//
//   align     seed.align, ttable.fwd.tsv, ttable.rev.tsv
//   train-lm  lm.tgt.arpa and/or lm.src.arpa
//   augment   pool.<round>.tsv
//   filter    scored.<round>.tsv, tiers/<label>.tsv
//   emit      0K/train.{src,tgt}, <label>/train.{src,tgt}, manifest
//
// build runs the five stages in order through the same files, so a build
// and five separate stage runs leave identical out_dir contents.

#ifndef MORPHAUG_PIPELINE_H_
#define MORPHAUG_PIPELINE_H_

#include <string>
#include <vector>

#include "morphaug/assembler.h"
#include "morphaug/config.h"
#include "morphaug/corpus.h"

namespace morphaug {

// All non-empty seed lines, tokenized.
ParallelCorpus load_seed_corpus(const RunConfig& cfg);

// Each stage returns a one-line summary.
std::string run_align(const RunConfig& cfg);
std::string run_train_lm(const RunConfig& cfg);
std::string run_augment(const RunConfig& cfg);
std::string run_filter(const RunConfig& cfg);
std::string run_emit(const RunConfig& cfg);
std::vector<std::string> run_build(const RunConfig& cfg);

// Seed-only row labelled 0K, then one row per tier.
std::vector<TierStats> run_stats(const RunConfig& cfg);
std::string stats_json(const std::vector<TierStats>& rows);

}  // namespace morphaug

#endif  // MORPHAUG_PIPELINE_H_
