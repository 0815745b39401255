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

#include "morphaug/lm_filter.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "morphaug/error.h"
#include "morphaug/parallel.h"
#include "morphaug/rng.h"
#include "morphaug/text.h"

namespace morphaug {

ScoreSide parse_score_side(std::string_view name) {
  if (name == "target") return ScoreSide::kTarget;
  if (name == "source") return ScoreSide::kSource;
  if (name == "sum") return ScoreSide::kSum;
  throw ConfigError("unknown scored side '" + std::string(name) + "'");
}

std::string_view to_string(ScoreSide side) {
  switch (side) {
    case ScoreSide::kTarget: return "target";
    case ScoreSide::kSource: return "source";
    case ScoreSide::kSum: return "sum";
  }
  return "?";
}

SelectionMode parse_selection_mode(std::string_view name) {
  if (name == "filtered") return SelectionMode::kFiltered;
  if (name == "random") return SelectionMode::kRandom;
  throw ConfigError("unknown selection mode '" + std::string(name) + "'");
}

std::string_view to_string(SelectionMode mode) {
  return mode == SelectionMode::kFiltered ? "filtered" : "random";
}

double Scorer::score(const SyntheticPair& pair) const {
  const bool need_src = side != ScoreSide::kTarget;
  const bool need_tgt = side != ScoreSide::kSource;
  if ((need_src && !source) || (need_tgt && !target))
    throw ConfigError("no language model for the " + std::string(to_string(side)) + " side");
  switch (side) {
    case ScoreSide::kTarget: return target->perplexity(pair.target);
    case ScoreSide::kSource: return source->perplexity(pair.source);
    case ScoreSide::kSum: {
      if (pair.source.empty() || pair.target.empty())
        throw DomainError("perplexity of an empty sentence");
      double lp = source->log2_prob(pair.source) + target->log2_prob(pair.target);
      double t = static_cast<double>(pair.source.size() + pair.target.size() + 2);
      return std::exp2(-lp / t);
    }
  }
  return 0.0;
}

std::vector<ScoredPair> score_pool(std::vector<SyntheticPair> pool, const Scorer& scorer,
                                   std::size_t workers) {
  std::vector<ScoredPair> out(pool.size());
  parallel_for(pool.size(), workers, [&](std::size_t i) {
    out[i].ppl = scorer.score(pool[i]);
    out[i].pair = std::move(pool[i]);
  });
  return out;
}

std::vector<std::size_t> select_indices(const std::vector<double>& ppls, std::size_t k,
                                        SelectionMode mode, std::uint64_t rng_seed) {
  if (k > ppls.size())
    throw ConfigError("cannot select " + std::to_string(k) + " pairs from a pool of " +
                      std::to_string(ppls.size()));
  std::vector<std::size_t> order(ppls.size());
  std::iota(order.begin(), order.end(), 0);
  if (mode == SelectionMode::kFiltered) {
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) {
                        return ppls[a] < ppls[b] || (ppls[a] == ppls[b] && a < b);
                      });
  } else {
    Rng rng(rng_seed);
    for (std::size_t i = 0; i < k; ++i)
      std::swap(order[i], order[i + rng.below(order.size() - i)]);
  }
  order.resize(k);
  return order;
}

std::vector<ScoredPair> filter_rank(const std::vector<ScoredPair>& pool, std::size_t k,
                                    SelectionMode mode, std::uint64_t rng_seed) {
  std::vector<double> ppls;
  ppls.reserve(pool.size());
  for (const auto& s : pool) ppls.push_back(s.ppl);
  std::vector<ScoredPair> out;
  out.reserve(k);
  for (std::size_t i : select_indices(ppls, k, mode, rng_seed)) out.push_back(pool[i]);
  return out;
}

std::string format_scored_line(const ScoredPair& scored) {
  return format_pool_line(scored.pair) + '\t' + text::format_double(scored.ppl);
}

ScoredPair parse_scored_line(std::string_view line) {
  auto tab = line.rfind('\t');
  if (tab == std::string_view::npos) throw StructuralError("bad scored line: " + std::string(line));
  ScoredPair s;
  s.pair = parse_pool_line(line.substr(0, tab));
  s.ppl = text::parse_double(line.substr(tab + 1), "scored line");
  return s;
}

}  // namespace morphaug
