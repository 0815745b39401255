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

// Corpus-level BLEU over pre-tokenized sentences, one reference each.

#ifndef MORPHAUG_METRICS_H_
#define MORPHAUG_METRICS_H_

#include <array>
#include <string>
#include <vector>

namespace morphaug {

struct BleuOptions {
  // Add one to matches and totals of every order n >= 2.
  bool smooth = false;
};

struct BleuResult {
  static constexpr int kMaxOrder = 4;

  double score = 0.0;  // 0..100
  std::array<double, kMaxOrder> precisions{};
  std::array<std::size_t, kMaxOrder> matches{};
  std::array<std::size_t, kMaxOrder> totals{};
  double brevity_penalty = 0.0;
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;

  // "BLEU = 41.23, 70.0/50.0/40.0/30.0 (BP=1.000, hyp_len=10, ref_len=10)"
  std::string summary() const;
};

// Clipped n-gram precisions up to 4-grams, geometric mean, brevity penalty
// exp(1 - r/c) when c < r. Without smoothing any zero precision gives 0.
// An empty hypothesis side gives a zero penalty. Throws StructuralError on
// mismatched lengths or empty input.
BleuResult corpus_bleu(const std::vector<std::vector<std::string>>& hypotheses,
                       const std::vector<std::vector<std::string>>& references,
                       const BleuOptions& options = {});

}  // namespace morphaug

#endif  // MORPHAUG_METRICS_H_
