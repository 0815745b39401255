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

#include "morphaug/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "morphaug/error.h"

namespace morphaug {

namespace {

using NGramCounts = std::map<std::vector<std::string>, std::size_t>;

NGramCounts count_ngrams(const std::vector<std::string>& tokens, std::size_t n) {
  NGramCounts counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i)
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  return counts;
}

}  // namespace

BleuResult corpus_bleu(const std::vector<std::vector<std::string>>& hypotheses,
                       const std::vector<std::vector<std::string>>& references,
                       const BleuOptions& options) {
  if (hypotheses.size() != references.size())
    throw StructuralError("BLEU needs one reference per hypothesis: " +
                          std::to_string(hypotheses.size()) + " hypotheses, " +
                          std::to_string(references.size()) + " references");
  if (hypotheses.empty()) throw StructuralError("BLEU of an empty corpus");

  BleuResult r;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    const auto& hyp = hypotheses[s];
    const auto& ref = references[s];
    r.hyp_length += hyp.size();
    r.ref_length += ref.size();
    for (int n = 1; n <= BleuResult::kMaxOrder; ++n) {
      auto h = count_ngrams(hyp, static_cast<std::size_t>(n));
      auto g = count_ngrams(ref, static_cast<std::size_t>(n));
      for (const auto& [gram, c] : h) {
        auto it = g.find(gram);
        if (it != g.end()) r.matches[n - 1] += std::min(c, it->second);
        r.totals[n - 1] += c;
      }
    }
  }

  double log_sum = 0.0;
  bool zero = false;
  for (int n = 0; n < BleuResult::kMaxOrder; ++n) {
    double m = static_cast<double>(r.matches[n]);
    double t = static_cast<double>(r.totals[n]);
    if (options.smooth && n >= 1) {
      m += 1.0;
      t += 1.0;
    }
    r.precisions[n] = t > 0 ? m / t : 0.0;
    if (r.precisions[n] <= 0.0) {
      zero = true;
    } else {
      log_sum += std::log(r.precisions[n]);
    }
  }

  const double c = static_cast<double>(r.hyp_length);
  const double ref = static_cast<double>(r.ref_length);
  if (r.hyp_length == 0) {
    r.brevity_penalty = 0.0;
  } else {
    r.brevity_penalty = c < ref ? std::exp(1.0 - ref / c) : 1.0;
  }
  r.score = zero ? 0.0 : 100.0 * r.brevity_penalty * std::exp(log_sum / BleuResult::kMaxOrder);
  return r;
}

std::string BleuResult::summary() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "BLEU = %.2f, %.1f/%.1f/%.1f/%.1f (BP=%.3f, hyp_len=%zu, ref_len=%zu)", score,
                100 * precisions[0], 100 * precisions[1], 100 * precisions[2],
                100 * precisions[3], brevity_penalty, hyp_length, ref_length);
  return buf;
}

}  // namespace morphaug
