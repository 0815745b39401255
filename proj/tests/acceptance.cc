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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. Tolerances are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "morphaug/aligner.h"
#include "morphaug/assembler.h"
#include "morphaug/augmentor.h"
#include "morphaug/error.h"
#include "morphaug/lm_filter.h"
#include "morphaug/metrics.h"
#include "morphaug/ngram_lm.h"
#include "morphaug/text.h"
#include "oracles.h"
#include "test_util.h"
#include "toy_world.h"

namespace {

using namespace morphaug;
using testing_util::run;
using testing_util::TempDir;
namespace fs = std::filesystem;

constexpr double kEmTolerance = 1e-9;
constexpr double kPplRelTolerance = 1e-9;
constexpr double kBleuTolerance = 1e-6;
constexpr double kFixtureSeconds = 1.0;
constexpr double kAlignSeconds = 30.0;
constexpr double kGenerateScoreSeconds = 120.0;

const std::string kCli = MORPHAUG_CLI;
const std::string kFixtures = FIXTURE_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome guitar_fixture() {
  TempDir dir("acc1");
  const std::string conf = kFixtures + "/guitar/guitar.conf";
  auto go = [&](const std::string& strategy, const std::string& out, double& secs) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = run(kCli + " build --config " + conf + " --strategy " + strategy + " --out " +
                     (dir / out).string(),
                 dir.path());
    secs = seconds_since(t0);
    if (r.exit_code != 0) return std::pair<std::string, std::string>{"exit " + std::to_string(r.exit_code), r.err};
    auto src = text::read_lines(dir / (out + "/1/train.src"));
    auto tgt = text::read_lines(dir / (out + "/1/train.tgt"));
    if (src.size() != 2 || tgt.size() != 2) return std::pair<std::string, std::string>{"", ""};
    return std::pair{src[1], tgt[1]};
  };
  double t_inf = 0, t_nai = 0;
  auto inf = go("informed", "inf", t_inf);
  auto nai = go("naive", "nai", t_nai);
  bool ok = inf.first == "<noisy> He plays the flower very well" &&
            inf.second == "<noisy> Ew gulê pir baş lê dide" &&
            nai.first == "<noisy> He plays the flower very well" &&
            nai.second == "<noisy> Ew gul pir baş lê dide" && t_inf < kFixtureSeconds &&
            t_nai < kFixtureSeconds;
  return {ok, "informed '" + inf.second + "', naive '" + nai.second + "', " + fmt(t_inf) + " s / " +
                  fmt(t_nai) + " s"};
}

// ---------------------------------------------------------------------------

std::string joined(const oracle::Sentence& s) {
  std::string out;
  for (const auto& w : s) out += (out.empty() ? "" : " ") + w;
  return out;
}

double em_deviation(const oracle::Bitext& b, bool use_null, double tension) {
  std::vector<std::pair<std::string, std::string>> lines;
  for (const auto& [e, f] : b) lines.emplace_back(joined(e), joined(f));
  AlignerOptions opts;
  opts.iterations = 20;
  opts.use_null = use_null;
  opts.tension = tension;
  auto table = train(make_corpus(lines), opts);
  auto ref = oracle::brute_force_em(b, 20, tension, use_null);
  double worst = 0;
  for (const auto& [key, p] : ref.table)
    worst = std::max(worst, std::fabs(table.stored(key.first, key.second) - p));
  return worst;
}

Outcome em_oracle() {
  double worst = 0;
  std::size_t corpora = 0;
  // Exhaustive: every multiset of 1..3 pairs of sentences of length 1..2 over
  // two words per side.
  std::vector<oracle::Sentence> es, fs_;
  for (std::string a : {"a", "b"}) {
    es.push_back({a});
    for (std::string c : {"a", "b"}) es.push_back({a, c});
  }
  for (const auto& e : es) {
    oracle::Sentence f;
    for (const auto& w : e) f.push_back(w == "a" ? "x" : "y");
    fs_.push_back(f);
  }
  std::vector<std::pair<oracle::Sentence, oracle::Sentence>> pairs;
  for (const auto& e : es)
    for (const auto& f : fs_) pairs.emplace_back(e, f);
  const std::size_t n = pairs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      for (std::size_t k = j; k <= n; ++k) {
        if (j == n && k != n) continue;
        oracle::Bitext b = {pairs[i]};
        if (j < n) b.push_back(pairs[j]);
        if (k < n) b.push_back(pairs[k]);
        for (bool use_null : {true, false}) worst = std::max(worst, em_deviation(b, use_null, 4.0));
        ++corpora;
      }
  // Random: up to three pairs, up to four words per side, lengths up to 3.
  std::mt19937_64 gen(2024);
  auto pick = [&](int m) { return static_cast<int>(gen() % static_cast<unsigned>(m)); };
  auto random_bitext = [&](int max_pairs, int vocab, int max_len) {
    oracle::Bitext b;
    int np = 1 + pick(max_pairs), ve = 1 + pick(vocab), vf = 1 + pick(vocab);
    for (int p = 0; p < np; ++p) {
      oracle::Sentence e, f;
      for (int i = 0, len = 1 + pick(max_len); i < len; ++i) e.push_back("e" + std::to_string(pick(ve)));
      for (int j = 0, len = 1 + pick(max_len); j < len; ++j) f.push_back("f" + std::to_string(pick(vf)));
      b.emplace_back(e, f);
    }
    return b;
  };
  for (int trial = 0; trial < 2000; ++trial, ++corpora)
    worst = std::max(worst, em_deviation(random_bitext(3, 4, 3), trial % 2 == 0,
                                         trial % 4 == 3 ? 0.0 : 4.0));

  std::size_t decreases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto b = random_bitext(8, 6, 6);
    std::vector<std::pair<std::string, std::string>> lines;
    for (const auto& [e, f] : b) lines.emplace_back(joined(e), joined(f));
    AlignerOptions opts;
    opts.iterations = 20;
    opts.use_null = trial % 2 == 0;
    std::vector<double> ll;
    train(make_corpus(lines), opts, &ll);
    for (std::size_t i = 1; i < ll.size(); ++i)
      if (ll[i] < ll[i - 1] - 1e-12 * std::fabs(ll[i - 1])) ++decreases;
  }
  return {worst <= kEmTolerance && decreases == 0,
          std::to_string(corpora) + " corpora, max |dt| " + fmt(worst) + ", " +
              std::to_string(decreases) + " log-likelihood decreases over 200 corpora"};
}

// ---------------------------------------------------------------------------

Outcome perplexity_oracle() {
  double worst = 0;
  auto rel = [&](double got, double want) { worst = std::max(worst, std::fabs(got / want - 1.0)); };
  // Bigram over "a b" x 3, D = 0.75: p(a|<s>) = p(b|a) = p(</s>|b) = 0.828125.
  auto lm = NGramLM::train({{"a", "b"}, {"a", "b"}, {"a", "b"}}, 2, 0.75);
  rel(lm.perplexity({"a", "b"}), 1.0 / 0.828125);
  // Unigram over "a b a b", D = 0: p(a) = p(b) = 0.4, p(</s>) = 0.2.
  auto uni = NGramLM::train({{"a", "b", "a", "b"}}, 1, 0.0);
  rel(uni.perplexity({"a", "b", "b"}), std::exp2(-(3 * std::log2(0.4) + std::log2(0.2)) / 4));
  // Count-table oracle on small corpora (at most ten types).
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    int types = 2 + trial % 8;
    std::vector<std::vector<std::string>> corpus;
    for (int s = 0, ns = 1 + static_cast<int>(gen() % 6); s < ns; ++s) {
      std::vector<std::string> sent;
      for (int i = 0, len = 1 + static_cast<int>(gen() % 6); i < len; ++i)
        sent.push_back("w" + std::to_string(gen() % static_cast<unsigned>(types)));
      corpus.push_back(sent);
    }
    int order = 1 + trial % 2;
    double d = 0.1 + 0.2 * (trial % 4);
    auto model = NGramLM::train(corpus, order, d);
    auto ref = oracle::count_lm(corpus, order, d);
    for (int q = 0; q < 10; ++q) {
      std::vector<std::string> s;
      for (int i = 0, len = 1 + static_cast<int>(gen() % 6); i < len; ++i)
        s.push_back("w" + std::to_string(gen() % static_cast<unsigned>(types + 1)));
      rel(model.perplexity(s), oracle::lm_perplexity(ref, s));
    }
  }
  auto uniform = NGramLM::train({{"a", "b", "c", "d", "e", "f", "g"}}, 1, 0.0);
  double u = uniform.perplexity({"c", "a", "g", "g"});
  return {worst <= kPplRelTolerance && u == 8.0,
          "max rel error " + fmt(worst) + ", uniform ppl " + fmt(u) + " over |V| = 8"};
}

// ---------------------------------------------------------------------------

std::vector<ScoredPair> score_with_target_lm(const std::vector<SyntheticPair>& pool,
                                             const NGramLM& lm) {
  Scorer s{nullptr, &lm, ScoreSide::kTarget};
  return score_pool(pool, s, 1);
}

NGramLM seed_target_lm(const ParallelCorpus& seeds) {
  std::vector<std::vector<std::string>> sents;
  for (const auto& p : seeds.pairs) sents.push_back(surfaces(p.target));
  return NGramLM::train(sents, 3, 0.75);
}

Outcome selection_and_nesting() {
  std::mt19937_64 gen(5);
  std::size_t violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> ppl(20 + gen() % 500);
    for (auto& v : ppl) v = 1.0 + static_cast<double>(gen() % 1000) / 10.0;
    std::size_t k = gen() % (ppl.size() + 1);
    auto sel = select_indices(ppl, k, SelectionMode::kFiltered);
    std::vector<bool> in(ppl.size(), false);
    double max_sel = -INFINITY, min_rej = INFINITY;
    for (auto i : sel) in[i] = true, max_sel = std::max(max_sel, ppl[i]);
    for (std::size_t i = 0; i < ppl.size(); ++i)
      if (!in[i]) min_rej = std::min(min_rej, ppl[i]);
    if (!(max_sel <= min_rej) || sel.size() != k) ++violations;
  }

  std::size_t nesting = 0, sizing = 0, runs = 0;
  auto world = toy::make_world();
  for (std::uint64_t run_seed = 0; run_seed < 20; ++run_seed) {
    auto seeds = toy::make_seeds(world, 40, run_seed);
    Resources res{world.lexicon, world.src, world.tgt};
    auto lm = seed_target_lm(seeds);
    AugmentationConfig cfg;
    cfg.rng_seed = run_seed;
    TierSpec spec;
    spec.sizes = {50, 100, 500};
    for (auto strategy : {TierStrategy::kPerDelta, TierStrategy::kGlobal})
      for (auto mode : {SelectionMode::kFiltered, SelectionMode::kRandom}) {
        RoundOptions ro;
        ro.strategy = strategy;
        std::vector<std::vector<ScoredPair>> scored;
        for (const auto& r : generate_rounds(seeds, res, cfg, spec, ro))
          scored.push_back(score_with_target_lm(r.pool, lm));
        auto tiers = build_tiers(scored, spec, strategy, mode, run_seed);
        ++runs;
        for (std::size_t t = 0; t < tiers.size(); ++t) {
          std::set<std::string> keys;
          for (const auto& s : tiers[t]) keys.insert(s.pair.key());
          if (tiers[t].size() != spec.sizes[t] || keys.size() != spec.sizes[t]) ++sizing;
          if (t == 0) continue;
          std::set<std::string> prev;
          for (const auto& s : tiers[t - 1]) prev.insert(s.pair.key());
          if (!std::includes(keys.begin(), keys.end(), prev.begin(), prev.end())) ++nesting;
        }
      }
  }
  return {violations == 0 && nesting == 0 && sizing == 0,
          "100 pools: " + std::to_string(violations) + " optimality violations; " +
              std::to_string(runs) + " tier builds of [50,100,500]: " + std::to_string(nesting) +
              " nesting and " + std::to_string(sizing) + " size violations"};
}

// ---------------------------------------------------------------------------

Outcome filtered_vs_random() {
  auto world = toy::make_world();
  auto seeds = toy::make_seeds(world, 500, 17);
  Resources res{world.lexicon, world.src, world.tgt};
  AugmentationConfig cfg;
  cfg.per_seed = 12;
  auto pool = generate_pool(seeds, res, cfg);
  if (pool.size() < 5000) return {false, "pool has only " + std::to_string(pool.size())};
  pool.resize(5000);
  auto scored = score_with_target_lm(pool, seed_target_lm(seeds));
  std::vector<double> ppl;
  for (const auto& s : scored) ppl.push_back(s.ppl);
  const std::size_t k = 1000;
  auto mean = [&](const std::vector<std::size_t>& idx) {
    double sum = 0;
    for (auto i : idx) sum += ppl[i];
    return sum / static_cast<double>(idx.size());
  };
  double filtered = mean(select_indices(ppl, k, SelectionMode::kFiltered));
  double best_random = INFINITY;
  std::size_t worse = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    double m = mean(select_indices(ppl, k, SelectionMode::kRandom, s));
    best_random = std::min(best_random, m);
    if (m < filtered) ++worse;
  }
  return {worse == 0, "5000 candidates, k = 1000: filtered mean ppl " + fmt(filtered) +
                          ", lowest of 20 random means " + fmt(best_random)};
}

// ---------------------------------------------------------------------------

Outcome five_seeds() {
  TempDir dir("acc6");
  auto world = toy::make_world({150, 75, 75});
  auto seeds = toy::make_seeds(world, 5, 6);
  toy::write_world(world, seeds, dir.path());
  text::write_lines(dir / "one.conf",
                    {"source = train.src", "target = train.tgt", "seed_alignments = gold.align",
                     "lexicon = lexicon.tsv", "src_paradigms = src.paradigms",
                     "tgt_paradigms = tgt.paradigms", "tiers = 5000"});
  auto out = dir / "out";
  auto r = run(kCli + " build --config " + (dir / "one.conf").string() + " --out " + out.string(),
               dir.path());
  if (r.exit_code != 0) return {false, "build failed: " + r.err};
  auto stats = run(kCli + " stats --config " + (dir / "one.conf").string() + " --out " + out.string(),
                   dir.path());
  if (stats.exit_code != 0) return {false, "stats failed: " + stats.err};
  auto lexicon_size = text::read_lines(dir / "lexicon.tsv").size();

  // Independent count over the emitted files.
  auto src = text::read_lines(out / "5K/train.src");
  auto tgt = text::read_lines(out / "5K/train.tgt");
  std::set<std::string> seed_types, new_types, unique_pairs;
  std::size_t clean = 0;
  auto words = [](const std::string& line) {
    std::vector<std::string> w;
    std::istringstream in(line);
    for (std::string t; in >> t;) w.push_back(t);
    return w;
  };
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    auto w = words(tgt[i]);
    if (w.empty()) continue;
    if (w[0] == "<clean>") {
      ++clean;
      seed_types.insert(w.begin() + 1, w.end());
    }
  }
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    auto w = words(tgt[i]);
    if (w.empty() || w[0] != "<noisy>") continue;
    unique_pairs.insert(src[i] + "\t" + tgt[i]);
    for (std::size_t k = 1; k < w.size(); ++k)
      if (!seed_types.count(w[k])) new_types.insert(w[k]);
  }
  bool reported = stats.out.find("\"new_target_types\": " + std::to_string(new_types.size())) !=
                  std::string::npos;
  bool ok = clean == 5 && lexicon_size == 300 && unique_pairs.size() >= 5000 &&
            new_types.size() >= 150 && reported;
  return {ok, std::to_string(clean) + " seeds, " + std::to_string(lexicon_size) +
                  "-entry lexicon: " + std::to_string(unique_pairs.size()) + " unique pairs, " +
                  std::to_string(new_types.size()) + " new target types (stats " +
                  (reported ? "agree" : "disagree") + ")"};
}

// ---------------------------------------------------------------------------

std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file()) files[fs::relative(e.path(), root).string()] = text::read_file(e.path());
  return files;
}

Outcome determinism() {
  TempDir dir("acc7");
  auto world = toy::make_world();
  auto seeds = toy::make_seeds(world, 200, 7);
  toy::write_world(world, seeds, dir.path());
  text::write_lines(dir / "det.conf",
                    {"source = train.src", "target = train.tgt", "lexicon = lexicon.tsv",
                     "src_paradigms = src.paradigms", "tgt_paradigms = tgt.paradigms",
                     "tiers = 50,100,500", "seed = 31", "lm_side = sum", "interleave = true"});
  const std::string conf = " --config " + (dir / "det.conf").string();
  std::string failure;
  auto build = [&](const std::string& out, const std::string& extra) {
    auto r = run(kCli + " build" + conf + extra + " --out " + (dir / out).string(), dir.path());
    if (r.exit_code != 0) failure = r.err;
  };
  build("a", " --workers 1");
  build("b", " --workers 4");
  for (const char* stage : {"align", "train-lm", "augment", "filter", "emit"}) {
    auto r = run(kCli + " " + stage + conf + " --out " + (dir / "c").string(), dir.path());
    if (r.exit_code != 0) failure = std::string(stage) + ": " + r.err;
  }
  if (!failure.empty()) return {false, failure};
  auto a = snapshot(dir / "a"), b = snapshot(dir / "b"), c = snapshot(dir / "c");
  bool ok = a == b && a == c && a.count("manifest") && a.size() > 10;
  return {ok, std::to_string(a.size()) + " files; two builds " + (a == b ? "identical" : "DIFFER") +
                  "; staged run " + (a == c ? "identical" : "DIFFERS")};
}

// ---------------------------------------------------------------------------

Outcome constraints() {
  auto world = toy::make_world();
  // Long and short seeds; short ones must never be used.
  auto seeds = toy::make_seeds(world, 600, 8);
  auto longer = toy::make_seeds(world, 600, 9, true);
  for (auto& p : longer.pairs) {
    p.id += 600;
    seeds.pairs.push_back(p);
  }
  for (std::size_t i = 0; i < 200; ++i) {
    SentencePair p = seeds.pairs[i];
    p.id = 2000 + i;
    p.source.resize(6);
    p.links->erase(std::remove_if(p.links->begin(), p.links->end(),
                                  [](const AlignmentLink& l) { return l.src >= 6; }),
                   p.links->end());
    seeds.pairs.push_back(p);
  }
  auto eligible = filter_seed_eligible(seeds, 7);
  std::map<std::uint64_t, const SentencePair*> by_id;
  for (const auto& p : eligible.pairs) by_id[p.id] = &p;
  Resources res{world.lexicon, world.src, world.tgt};
  AugmentationConfig cfg;
  cfg.per_seed = 9;
  auto pool = generate_pool(eligible, res, cfg);
  if (pool.size() < 10000) return {false, "pool has only " + std::to_string(pool.size())};
  pool.resize(10000);
  std::size_t bad_count = 0, bad_pos = 0, bad_len = 0, bad_bundle = 0;
  const std::set<Pos> allowed = {Pos::kNoun, Pos::kAdjective, Pos::kVerb};
  for (const auto& sp : pool) {
    const SentencePair& seed = *by_id.at(sp.seed_id);
    if (sp.replacements.empty() || sp.replacements.size() > 2) ++bad_count;
    if (seed.source.size() < 7) ++bad_len;
    for (const auto& r : sp.replacements) {
      auto old_src = world.src.analyze(seed.source[r.src_index].surface);
      auto new_src = world.src.analyze(sp.source[r.src_index]);
      auto old_tgt = world.tgt.analyze(seed.target[r.tgt_index].surface);
      auto new_tgt = world.tgt.analyze(sp.target[r.tgt_index]);
      if (old_src.size() != 1 || !allowed.count(old_src[0].bundle.pos)) ++bad_pos;
      if (new_src.size() != 1 || new_src[0].bundle != old_src[0].bundle ||
          new_tgt.size() != 1 || old_tgt.size() != 1 || new_tgt[0].bundle != old_tgt[0].bundle)
        ++bad_bundle;
    }
  }
  return {bad_count + bad_pos + bad_len + bad_bundle == 0,
          "10000 pairs: " + std::to_string(bad_count) + " bad replacement counts, " +
              std::to_string(bad_pos) + " bad POS, " + std::to_string(bad_len) + " short seeds, " +
              std::to_string(bad_bundle) + " bundle changes"};
}

// ---------------------------------------------------------------------------

Outcome bleu() {
  using C = std::vector<std::vector<std::string>>;
  C ident = {{"the", "cat", "sat", "on", "the", "mat"}, {"a", "b", "c", "d"}};
  double id = corpus_bleu(ident, ident).score;
  double disjoint = corpus_bleu(C{{"a", "b", "c", "d"}}, C{{"w", "x", "y", "z"}}).score;
  C hyp = {{"the", "cat", "is", "on", "the", "mat"}, {"there", "is", "a", "cat", "here"}};
  C ref = {{"the", "cat", "sat", "on", "the", "mat"}, {"there", "is", "a", "cat", "over", "there"}};
  double got = corpus_bleu(hyp, ref).score;
  double want = oracle::bleu(hyp, ref, false).score;
  return {id == 100.0 && disjoint == 0.0 && std::fabs(got - want) <= kBleuTolerance,
          "identity " + fmt(id) + ", disjoint " + fmt(disjoint) + ", two-sentence " + fmt(got) +
              " vs oracle " + fmt(want)};
}

// ---------------------------------------------------------------------------

Outcome throughput() {
  auto world = toy::make_world({300, 100, 100});
  auto corpus = toy::make_seeds(world, 10000, 10, true);
  std::size_t tokens = 0;
  for (auto& p : corpus.pairs) {
    tokens += p.source.size() + p.target.size();
    p.links.reset();
  }
  auto t0 = std::chrono::steady_clock::now();
  Ibm1Aligner aligner(AlignerOptions{}, Symmetrization::kGrowDiag);
  aligner.align(corpus);
  double t_align = seconds_since(t0);

  auto seeds = toy::make_seeds(world, 2000, 11, true);
  Resources res{world.lexicon, world.src, world.tgt};
  AugmentationConfig cfg;
  cfg.per_seed = 100;
  auto lm = seed_target_lm(seeds);
  t0 = std::chrono::steady_clock::now();
  auto pool = generate_pool(seeds, res, cfg);
  auto scored = score_with_target_lm(pool, lm);
  double t_gen = seconds_since(t0);
  bool ok = t_align < kAlignSeconds && t_gen < kGenerateScoreSeconds && pool.size() >= 200000;
  return {ok, "align 10000 pairs (" + fmt(static_cast<double>(tokens) / 20000.0) +
                  " tokens/side avg) in " + fmt(t_align) + " s; " + std::to_string(scored.size()) +
                  " candidates generated and scored in " + fmt(t_gen) + " s (1 core)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"guitar-to-flower end-to-end fixture", guitar_fixture},
      {"EM matches brute-force oracle", em_oracle},
      {"perplexity matches closed form", perplexity_oracle},
      {"selection optimality and tier nesting", selection_and_nesting},
      {"filtered beats random selection", filtered_vs_random},
      {"5K from five seeds", five_seeds},
      {"deterministic builds", determinism},
      {"replacement constraints", constraints},
      {"BLEU scorer", bleu},
      {"throughput (soft)", throughput},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " -- " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
