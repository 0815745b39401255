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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "morphaug/assembler.h"
#include "morphaug/error.h"
#include "morphaug/text.h"
#include "test_util.h"
#include "toy_world.h"

namespace morphaug {
namespace {

using testing_util::TempDir;

// Synthetic pairs "p<round>_<i>" with a perplexity from a seeded stream.
PoolGenerator counting_generator(std::size_t per_round_cap) {
  return [per_round_cap](std::size_t round, std::size_t per_seed,
                         const std::unordered_set<std::string>& exclude) {
    std::vector<SyntheticPair> pool;
    for (std::size_t i = 0; i < std::min(per_seed * 10, per_round_cap); ++i) {
      SyntheticPair sp;
      sp.source = {"p" + std::to_string(i)};
      sp.target = {"t" + std::to_string(i)};
      sp.seed_id = i % 10;
      if (!exclude.count(sp.key())) pool.push_back(sp);
    }
    (void)round;
    return pool;
  };
}

std::vector<std::vector<ScoredPair>> score_rounds(const std::vector<Round>& rounds,
                                                  std::uint64_t seed) {
  std::vector<std::vector<ScoredPair>> out;
  Rng rng(seed);
  for (const auto& r : rounds) {
    std::vector<ScoredPair> scored;
    for (const auto& sp : r.pool) scored.push_back({sp, 1.0 + static_cast<double>(rng.below(50))});
    out.push_back(std::move(scored));
  }
  return out;
}

std::set<std::string> keys(const std::vector<ScoredPair>& tier) {
  std::set<std::string> k;
  for (const auto& s : tier) k.insert(s.pair.key());
  return k;
}

TEST(TierLabel, Format) {
  EXPECT_EQ(tier_label(5000), "5K");
  EXPECT_EQ(tier_label(200000), "200K");
  EXPECT_EQ(tier_label(50), "50");
  EXPECT_EQ(tier_label(1500), "1500");
}

TEST(TierSpec, Validation) {
  TierSpec s;
  EXPECT_NO_THROW(s.validate());
  s.sizes = {10, 5};
  EXPECT_THROW(s.validate(), ConfigError);
  s.sizes = {};
  EXPECT_THROW(s.validate(), ConfigError);
  s.sizes = {5};
  s.noisy_tag = "has space";
  EXPECT_THROW(s.validate(), ConfigError);
}

TEST(Rounds, PerDeltaPoolsAreDisjointAndSized) {
  TierSpec spec;
  spec.sizes = {50, 100, 500};
  auto rounds = generate_rounds(counting_generator(100000), 10, spec, RoundOptions{});
  ASSERT_EQ(rounds.size(), 3u);
  EXPECT_EQ(rounds[0].needed, 50u);
  EXPECT_EQ(rounds[1].needed, 50u);
  EXPECT_EQ(rounds[2].needed, 400u);
  std::set<std::string> all;
  for (const auto& r : rounds) {
    EXPECT_GE(r.pool.size(), r.needed);
    for (const auto& sp : r.pool) EXPECT_TRUE(all.insert(sp.key()).second);
  }
}

TEST(Rounds, AutoPerSeedDoublesUntilTargetReached) {
  TierSpec spec;
  spec.sizes = {100};
  // 10 productive seeds but the generator yields only M pairs per call
  // until M reaches 40.
  PoolGenerator gen = [](std::size_t, std::size_t per_seed, const std::unordered_set<std::string>&) {
    std::vector<SyntheticPair> pool;
    for (std::size_t i = 0; i < (per_seed >= 40 ? 120 : per_seed); ++i) {
      SyntheticPair sp;
      sp.source = {std::to_string(i)};
      pool.push_back(sp);
    }
    return pool;
  };
  auto rounds = generate_rounds(gen, 10, spec, RoundOptions{});
  EXPECT_EQ(rounds[0].per_seed, 40u);
  EXPECT_EQ(rounds[0].pool.size(), 120u);
}

TEST(Rounds, CapacityErrorReportsAchieved) {
  TierSpec spec;
  spec.sizes = {3};
  try {
    generate_rounds(counting_generator(2), 1, spec, RoundOptions{});
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.achieved(), 2u);
  }
  spec.sizes = {5, 10};
  try {
    generate_rounds(counting_generator(8), 1, spec, RoundOptions{});
    FAIL();
  } catch (const CapacityError& e) {
    // Round 0 keeps 8 pairs out of round 1's reach, which then has none.
    EXPECT_EQ(e.achieved(), 5u);
  }
  EXPECT_THROW(generate_rounds(counting_generator(100), 0, spec, RoundOptions{}), CapacityError);
}

TEST(Tiers, SmallSizesNest) {
  TierSpec spec;
  spec.sizes = {5, 10};
  auto rounds = generate_rounds(counting_generator(1000), 10, spec, RoundOptions{});
  auto tiers = build_tiers(score_rounds(rounds, 1), spec, TierStrategy::kPerDelta,
                           SelectionMode::kFiltered, 0);
  ASSERT_EQ(tiers.size(), 2u);
  EXPECT_EQ(tiers[0].size(), 5u);
  EXPECT_EQ(tiers[1].size(), 10u);
  auto a = keys(tiers[0]), b = keys(tiers[1]);
  EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
}

TEST(Tiers, NestingHoldsOverRandomRuns) {
  for (std::uint64_t run = 0; run < 100; ++run) {
    auto world = toy::make_world({20, 10, 10});
    auto seeds = toy::make_seeds(world, 10, run);
    Resources res{world.lexicon, world.src, world.tgt};
    AugmentationConfig cfg;
    cfg.rng_seed = run;
    TierSpec spec;
    spec.sizes = {50, 100, 500};
    auto strategy = run % 2 ? TierStrategy::kGlobal : TierStrategy::kPerDelta;
    auto mode = run % 3 ? SelectionMode::kFiltered : SelectionMode::kRandom;
    RoundOptions ro;
    ro.strategy = strategy;
    auto rounds = generate_rounds(seeds, res, cfg, spec, ro);
    auto tiers = build_tiers(score_rounds(rounds, run), spec, strategy, mode, run);
    ASSERT_EQ(tiers.size(), 3u);
    for (std::size_t t = 0; t < 3; ++t) {
      ASSERT_EQ(tiers[t].size(), spec.sizes[t]);
      ASSERT_EQ(keys(tiers[t]).size(), spec.sizes[t]) << "duplicate pair in tier";
    }
    for (std::size_t t = 1; t < 3; ++t) {
      auto a = keys(tiers[t - 1]), b = keys(tiers[t]);
      ASSERT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end())) << "run " << run;
    }
  }
}

TEST(Tiers, GlobalTiersArePrefixesOfOneRanking) {
  TierSpec spec;
  spec.sizes = {5, 20};
  RoundOptions ro;
  ro.strategy = TierStrategy::kGlobal;
  auto rounds = generate_rounds(counting_generator(1000), 10, spec, ro);
  ASSERT_EQ(rounds.size(), 1u);
  auto scored = score_rounds(rounds, 3);
  auto tiers = build_tiers(scored, spec, TierStrategy::kGlobal, SelectionMode::kFiltered, 0);
  double max_small = 0;
  for (const auto& s : tiers[0]) max_small = std::max(max_small, s.ppl);
  std::set<std::string> small = keys(tiers[0]);
  for (const auto& s : scored[0])
    if (!small.count(s.pair.key())) EXPECT_GE(s.ppl, max_small);
  EXPECT_THROW(build_tiers(scored, spec, TierStrategy::kPerDelta, SelectionMode::kFiltered, 0),
               StructuralError);
}

ParallelCorpus two_seeds() { return make_corpus({{"a b", "x y"}, {"c", "z"}}); }

TEST(Emit, TaggedLines) {
  TempDir dir("emit");
  SyntheticPair sp;
  sp.source = {"a", "q"};
  sp.target = {"x", "w"};
  auto recs = emit_dataset(two_seeds(), {sp}, TierSpec{}, dir.path(), "1", EmitOptions{});
  auto src = text::read_lines(dir / "1/train.src");
  auto tgt = text::read_lines(dir / "1/train.tgt");
  EXPECT_EQ(src, (std::vector<std::string>{"<clean> a b", "<clean> c", "<noisy> a q"}));
  EXPECT_EQ(tgt, (std::vector<std::string>{"<clean> x y", "<clean> z", "<noisy> x w"}));
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].path, "1/train.src");
  EXPECT_EQ(recs[0].lines, 3u);
  EXPECT_EQ(recs[0].sha256, text::sha256_hex(text::read_file(dir / "1/train.src")));
}

TEST(Emit, UntaggedIsTheSeedVerbatim) {
  TempDir dir("emit");
  SyntheticPair sp;
  sp.source = {"q"};
  sp.target = {"w"};
  EmitOptions opts;
  opts.tagging = Tagging::kUntagged;
  emit_dataset(two_seeds(), {sp}, TierSpec{}, dir.path(), "u", opts);
  EXPECT_EQ(text::read_file(dir / "u/train.src"), "a b\nc\n");
  EXPECT_EQ(text::read_file(dir / "u/train.tgt"), "x y\nz\n");
}

TEST(Emit, InterleaveKeepsLinesAligned) {
  TempDir dir("emit");
  std::vector<SyntheticPair> tier;
  for (int i = 0; i < 30; ++i) {
    SyntheticPair sp;
    sp.source = {"s" + std::to_string(i)};
    sp.target = {"t" + std::to_string(i)};
    tier.push_back(sp);
  }
  EmitOptions opts;
  opts.interleave = true;
  opts.rng_seed = 4;
  emit_dataset(two_seeds(), tier, TierSpec{}, dir.path(), "i", opts);
  auto src = text::read_lines(dir / "i/train.src");
  auto tgt = text::read_lines(dir / "i/train.tgt");
  ASSERT_EQ(src.size(), 32u);
  std::size_t moved = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i].rfind("<noisy> s", 0) == 0) {
      EXPECT_EQ(tgt[i], "<noisy> t" + src[i].substr(9));
      moved += i != std::stoul(src[i].substr(9)) + 2;
    }
  }
  EXPECT_GT(moved, 0u);
}

TEST(Manifest, SortedWithCountsThatMatchTheFiles) {
  TempDir dir("emit");
  std::vector<ManifestRecord> recs;
  for (const char* d : {"b", "a"}) {
    auto r = emit_dataset(two_seeds(), {}, TierSpec{}, dir.path(), d, EmitOptions{});
    recs.insert(recs.end(), r.begin(), r.end());
  }
  auto m = format_manifest(recs, 7);
  auto lines = text::split(m, '\n');
  EXPECT_EQ(lines[0], "# rng_seed\t7");
  EXPECT_EQ(lines[1].substr(0, 12), "a/train.src\t");
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    auto cols = text::split(lines[i], '\t');
    auto file = text::read_file(dir / cols[0]);
    EXPECT_EQ(std::to_string(std::count(file.begin(), file.end(), '\n')), cols[1]);
  }
}

TEST(Stats, EmptyTier) {
  auto st = stats({}, two_seeds(), "0K");
  EXPECT_EQ(st.size, 0u);
  EXPECT_EQ(st.unique_seeds, 0u);
  EXPECT_EQ(st.new_source_types, 0u);
  EXPECT_EQ(st.seed_source_types, 3u);
  EXPECT_EQ(st.seed_target_types, 3u);
}

TEST(Stats, HandCountedNewTypes) {
  auto seed = make_corpus({{"He plays the guitar", "Ew gîtarê lê dide"}});
  auto make = [](std::vector<std::string> s, std::vector<std::string> t, double ppl) {
    SyntheticPair sp;
    sp.source = std::move(s);
    sp.target = std::move(t);
    return ScoredPair{sp, ppl};
  };
  std::vector<ScoredPair> tier = {
      make({"He", "plays", "the", "flower"}, {"Ew", "gulê", "lê", "dide"}, 2),
      make({"He", "plays", "the", "drum"}, {"Ew", "daholê", "lê", "dide"}, 4),
      make({"He", "sings", "the", "flower"}, {"Ew", "gulê", "dibêje"}, 9),
  };
  auto st = stats(tier, seed, "3");
  EXPECT_EQ(st.new_source_types, 3u);  // flower, drum, sings
  EXPECT_EQ(st.new_target_types, 3u);  // gulê, daholê, dibêje
  EXPECT_EQ(st.unique_seeds, 1u);
  EXPECT_DOUBLE_EQ(st.mean_ppl, 5.0);
  EXPECT_DOUBLE_EQ(st.median_ppl, 4.0);
}

}  // namespace
}  // namespace morphaug
