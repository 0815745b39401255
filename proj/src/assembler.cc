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

#include "morphaug/assembler.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "morphaug/error.h"
#include "morphaug/rng.h"
#include "morphaug/text.h"

namespace morphaug {

namespace {

constexpr std::uint64_t kSelectionStream = 0x73656c656374ULL;
constexpr std::size_t kMaxPerSeed = std::size_t{1} << 24;

}  // namespace

void TierSpec::validate() const {
  std::vector<std::string> problems;
  if (sizes.empty()) problems.push_back("tiers must not be empty");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) problems.push_back("tier sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1])
      problems.push_back("tier sizes must be strictly increasing (" + std::to_string(sizes[i - 1]) +
                         " then " + std::to_string(sizes[i]) + ")");
  }
  for (const auto* tag : {&clean_tag, &noisy_tag})
    if (tag->empty() || text::has_whitespace(*tag))
      problems.push_back("tag '" + *tag + "' must be non-empty and free of whitespace");
  if (!problems.empty()) throw ConfigError(text::join(problems, "; "));
}

TierStrategy parse_tier_strategy(std::string_view name) {
  if (name == "per-delta" || name == "delta") return TierStrategy::kPerDelta;
  if (name == "global") return TierStrategy::kGlobal;
  throw ConfigError("unknown tier strategy '" + std::string(name) + "'");
}

std::string_view to_string(TierStrategy strategy) {
  return strategy == TierStrategy::kPerDelta ? "per-delta" : "global";
}

std::string tier_label(std::size_t size) {
  if (size % 1000 == 0) return std::to_string(size / 1000) + "K";
  return std::to_string(size);
}

std::vector<Round> generate_rounds(const PoolGenerator& generate, std::size_t productive_seeds,
                                   const TierSpec& spec, const RoundOptions& options) {
  spec.validate();
  if (!(options.oversample >= 1.0)) throw ConfigError("oversample must be at least 1");
  std::vector<std::size_t> needs;
  if (options.strategy == TierStrategy::kGlobal) {
    needs.push_back(spec.sizes.back());
  } else {
    for (std::size_t i = 0; i < spec.sizes.size(); ++i)
      needs.push_back(spec.sizes[i] - (i ? spec.sizes[i - 1] : 0));
  }

  std::vector<Round> rounds;
  std::unordered_set<std::string> exclude;
  std::size_t achieved = 0;
  for (std::size_t r = 0; r < needs.size(); ++r) {
    const std::size_t need = needs[r];
    if (productive_seeds == 0)
      throw CapacityError("no seed sentence has a replaceable word", achieved);
    const auto target = std::max(
        need, static_cast<std::size_t>(std::ceil(static_cast<double>(need) * options.oversample)));
    Round round;
    round.index = r;
    round.needed = need;
    round.per_seed = options.per_seed
                         ? options.per_seed
                         : std::max<std::size_t>(1, (target + productive_seeds - 1) / productive_seeds);
    round.pool = generate(r, round.per_seed, exclude);
    if (!options.per_seed) {
      while (round.pool.size() < target && round.per_seed < kMaxPerSeed) {
        auto bigger = generate(r, round.per_seed * 2, exclude);
        if (bigger.size() <= round.pool.size()) break;
        round.pool = std::move(bigger);
        round.per_seed *= 2;
      }
    }
    if (round.pool.size() < need)
      throw CapacityError("round " + std::to_string(r) + " produced " +
                              std::to_string(round.pool.size()) + " unique pairs, " +
                              std::to_string(need) + " needed",
                          achieved + round.pool.size());
    for (const auto& p : round.pool) exclude.insert(p.key());
    achieved += need;
    rounds.push_back(std::move(round));
  }
  return rounds;
}

std::vector<Round> generate_rounds(const ParallelCorpus& seeds, const Resources& res,
                                   const AugmentationConfig& cfg, const TierSpec& spec,
                                   const RoundOptions& options) {
  PoolGenerator gen = [&](std::size_t round, std::size_t per_seed,
                          const std::unordered_set<std::string>& exclude) {
    PoolOptions po;
    po.round = round;
    po.per_seed = per_seed;
    po.exclude = &exclude;
    return generate_pool(seeds, res, cfg, po);
  };
  return generate_rounds(gen, count_productive_seeds(seeds, res, cfg), spec, options);
}

std::vector<std::vector<ScoredPair>> build_tiers(const std::vector<std::vector<ScoredPair>>& rounds,
                                                 const TierSpec& spec, TierStrategy strategy,
                                                 SelectionMode mode, std::uint64_t rng_seed) {
  spec.validate();
  const std::size_t expected = strategy == TierStrategy::kGlobal ? 1 : spec.sizes.size();
  if (rounds.size() != expected)
    throw StructuralError("expected " + std::to_string(expected) + " scored pools, got " +
                          std::to_string(rounds.size()));
  auto select = [&](const std::vector<ScoredPair>& pool, std::size_t k, std::size_t r) {
    std::vector<double> ppls;
    ppls.reserve(pool.size());
    for (const auto& s : pool) ppls.push_back(s.ppl);
    std::uint64_t seed = Rng::stream(rng_seed, {kSelectionStream, r})();
    std::vector<ScoredPair> out;
    out.reserve(k);
    for (std::size_t i : select_indices(ppls, k, mode, seed)) out.push_back(pool[i]);
    return out;
  };

  std::vector<std::vector<ScoredPair>> tiers;
  if (strategy == TierStrategy::kGlobal) {
    auto ranked = select(rounds.front(), spec.sizes.back(), 0);
    for (std::size_t size : spec.sizes)
      tiers.emplace_back(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(size));
    return tiers;
  }
  std::vector<ScoredPair> current;
  for (std::size_t r = 0; r < spec.sizes.size(); ++r) {
    std::size_t need = spec.sizes[r] - (r ? spec.sizes[r - 1] : 0);
    for (auto& s : select(rounds[r], need, r)) current.push_back(std::move(s));
    tiers.push_back(current);
  }
  return tiers;
}

std::vector<ManifestRecord> emit_dataset(const ParallelCorpus& seed,
                                         const std::vector<SyntheticPair>& tier,
                                         const TierSpec& spec, const std::filesystem::path& root,
                                         const std::string& dir, const EmitOptions& options) {
  const bool tagged = options.tagging == Tagging::kTagged;
  std::vector<std::string> src;
  std::vector<std::string> tgt;
  const std::string clean = tagged ? spec.clean_tag + " " : "";
  for (const auto& p : seed.pairs) {
    src.push_back(clean + join_tokens(p.source));
    tgt.push_back(clean + join_tokens(p.target));
  }
  if (tagged) {
    const std::string noisy = spec.noisy_tag + " ";
    for (const auto& p : tier) {
      src.push_back(noisy + p.source_text());
      tgt.push_back(noisy + p.target_text());
    }
  }
  if (options.interleave) {
    std::vector<std::size_t> order(src.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::uint64_t> key(src.size());
    for (std::size_t i = 0; i < key.size(); ++i) key[i] = Rng::mix(options.rng_seed ^ Rng::mix(i));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return key[a] < key[b] || (key[a] == key[b] && a < b);
    });
    std::vector<std::string> s2, t2;
    for (std::size_t i : order) {
      s2.push_back(std::move(src[i]));
      t2.push_back(std::move(tgt[i]));
    }
    src = std::move(s2);
    tgt = std::move(t2);
  }

  std::vector<ManifestRecord> records;
  for (const auto& [name, lines] : {std::pair{"train.src", &src}, std::pair{"train.tgt", &tgt}}) {
    std::string content;
    for (const auto& l : *lines) {
      content += l;
      content.push_back('\n');
    }
    std::string rel = dir + "/" + name;
    text::write_file(root / rel, content);
    records.push_back({rel, lines->size(), text::sha256_hex(content)});
  }
  return records;
}

std::string format_manifest(std::vector<ManifestRecord> records, std::uint64_t rng_seed) {
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });
  std::string out = "# rng_seed\t" + std::to_string(rng_seed) + "\n";
  for (const auto& r : records)
    out += r.path + '\t' + std::to_string(r.lines) + '\t' + r.sha256 + '\n';
  return out;
}

TierStats stats(const std::vector<ScoredPair>& tier, const ParallelCorpus& seed,
                std::string label) {
  TierStats st;
  st.label = std::move(label);
  st.size = tier.size();
  std::set<std::string> seed_src, seed_tgt;
  for (const auto& p : seed.pairs) {
    for (const auto& t : p.source) seed_src.insert(t.surface);
    for (const auto& t : p.target) seed_tgt.insert(t.surface);
  }
  st.seed_source_types = seed_src.size();
  st.seed_target_types = seed_tgt.size();

  std::set<std::uint64_t> seeds;
  std::set<std::string> new_src, new_tgt;
  std::vector<double> ppls;
  for (const auto& s : tier) {
    seeds.insert(s.pair.seed_id);
    for (const auto& w : s.pair.source)
      if (!seed_src.count(w)) new_src.insert(w);
    for (const auto& w : s.pair.target)
      if (!seed_tgt.count(w)) new_tgt.insert(w);
    ppls.push_back(s.ppl);
  }
  st.unique_seeds = seeds.size();
  st.new_source_types = new_src.size();
  st.new_target_types = new_tgt.size();
  if (!ppls.empty()) {
    st.mean_ppl = std::accumulate(ppls.begin(), ppls.end(), 0.0) / static_cast<double>(ppls.size());
    std::sort(ppls.begin(), ppls.end());
    std::size_t n = ppls.size();
    st.median_ppl = n % 2 ? ppls[n / 2] : (ppls[n / 2 - 1] + ppls[n / 2]) / 2.0;
  }
  return st;
}

}  // namespace morphaug
