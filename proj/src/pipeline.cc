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

#include "morphaug/pipeline.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "morphaug/aligner.h"
#include "morphaug/error.h"
#include "morphaug/lexicon.h"
#include "morphaug/lm_filter.h"
#include "morphaug/morphology.h"
#include "morphaug/ngram_lm.h"
#include "morphaug/text.h"

namespace morphaug {

namespace {

namespace fs = std::filesystem;

fs::path pool_path(const RunConfig& cfg, std::size_t r) {
  return cfg.out_dir / ("pool." + std::to_string(r) + ".tsv");
}

fs::path scored_path(const RunConfig& cfg, std::size_t r) {
  return cfg.out_dir / ("scored." + std::to_string(r) + ".tsv");
}

fs::path tier_path(const RunConfig& cfg, std::size_t size) {
  return cfg.out_dir / "tiers" / (tier_label(size) + ".tsv");
}

fs::path lm_path(const RunConfig& cfg, bool source) {
  return cfg.out_dir / (source ? "lm.src.arpa" : "lm.tgt.arpa");
}

std::size_t round_count(const RunConfig& cfg) {
  return cfg.rounds.strategy == TierStrategy::kGlobal ? 1 : cfg.tiers.sizes.size();
}

std::vector<std::string> non_empty_lines(const fs::path& path) {
  std::vector<std::string> out;
  for (auto& l : text::read_lines(path))
    if (!l.empty()) out.push_back(std::move(l));
  return out;
}

std::vector<ScoredPair> read_scored(const fs::path& path) {
  std::vector<ScoredPair> out;
  for (const auto& l : non_empty_lines(path)) out.push_back(parse_scored_line(l));
  return out;
}

void write_scored(const fs::path& path, const std::vector<ScoredPair>& pairs) {
  std::vector<std::string> lines;
  lines.reserve(pairs.size());
  for (const auto& s : pairs) lines.push_back(format_scored_line(s));
  text::write_lines(path, lines);
}

std::vector<std::vector<std::string>> lm_sentences(const RunConfig& cfg, bool source) {
  const fs::path& mono = source ? cfg.monolingual_source : cfg.monolingual_target;
  std::vector<std::vector<std::string>> out;
  if (!mono.empty()) {
    for (const auto& line : text::read_lines(mono)) {
      auto toks = surfaces(tokenize(text::nfc(line)));
      if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
  }
  for (const auto& p : load_seed_corpus(cfg).pairs)
    out.push_back(surfaces(source ? p.source : p.target));
  return out;
}

NGramLM read_lm(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string() + " (run train-lm first)");
  return NGramLM::read_arpa(in);
}

}  // namespace

ParallelCorpus load_seed_corpus(const RunConfig& cfg) {
  if (!cfg.seed_tsv.empty()) return load_parallel_tsv(cfg.seed_tsv);
  return load_parallel(cfg.source, cfg.target);
}

std::string run_align(const RunConfig& cfg) {
  ParallelCorpus corpus = load_seed_corpus(cfg);
  std::string how;
  if (!cfg.seed_alignments.empty()) {
    PharaohFileAligner(text::read_lines(cfg.seed_alignments)).align(corpus);
    how = "read from " + cfg.seed_alignments.string();
  } else {
    Ibm1Aligner aligner(cfg.aligner, cfg.symmetrize);
    aligner.align(corpus);
    for (const auto& [name, table, used] :
         {std::tuple{"ttable.fwd.tsv", &aligner.forward_table(),
                     cfg.symmetrize != Symmetrization::kReverse},
          std::tuple{"ttable.rev.tsv", &aligner.reverse_table(),
                     cfg.symmetrize != Symmetrization::kForward}}) {
      if (!used) continue;
      std::ostringstream out;
      table->write_tsv(out);
      text::write_file(cfg.out_dir / name, out.str());
    }
    how = "IBM-1, " + std::to_string(cfg.aligner.iterations) + " iterations, " +
          std::string(to_string(cfg.symmetrize));
  }
  text::write_lines(cfg.out_dir / "seed.align", alignment_lines(corpus));
  return "align: " + std::to_string(corpus.pairs.size()) + " pairs (" + how + ")";
}

std::string run_train_lm(const RunConfig& cfg) {
  std::string summary = "train-lm:";
  for (bool source : {false, true}) {
    bool needed = source ? cfg.lm_side != ScoreSide::kTarget : cfg.lm_side != ScoreSide::kSource;
    if (!needed) continue;
    NGramLM lm = NGramLM::train(lm_sentences(cfg, source), cfg.lm_order, cfg.lm_discount);
    std::ostringstream out;
    lm.write_arpa(out);
    text::write_file(lm_path(cfg, source), out.str());
    summary += std::string(source ? " source" : " target") + " order " +
               std::to_string(cfg.lm_order) + " vocab " + std::to_string(lm.vocab_size());
  }
  return summary;
}

std::string run_augment(const RunConfig& cfg) {
  ParallelCorpus corpus = load_seed_corpus(cfg);
  fs::path align = cfg.out_dir / "seed.align";
  if (!fs::exists(align)) throw IoError("cannot read " + align.string() + " (run align first)");
  PharaohFileAligner(text::read_lines(align)).align(corpus);
  ParallelCorpus seeds = filter_seed_eligible(corpus, cfg.min_len);

  ParadigmLexicon src = load_paradigms(cfg.src_paradigms, corpus.source_lang);
  ParadigmLexicon tgt = load_paradigms(cfg.tgt_paradigms, corpus.target_lang);
  BilingualLexicon lex = load_lexicon(cfg.lexicon, src, tgt);
  Resources res{lex, src, tgt};

  auto rounds = generate_rounds(seeds, res, cfg.augment, cfg.tiers, cfg.rounds);
  std::string summary = "augment: " + std::to_string(seeds.pairs.size()) + " eligible seeds;";
  for (const auto& r : rounds) {
    std::vector<std::string> lines;
    lines.reserve(r.pool.size());
    for (const auto& p : r.pool) lines.push_back(format_pool_line(p));
    text::write_lines(pool_path(cfg, r.index), lines);
    summary += " round " + std::to_string(r.index) + ": " + std::to_string(r.pool.size()) +
               " pairs (M=" + std::to_string(r.per_seed) + ")";
  }
  return summary;
}

std::string run_filter(const RunConfig& cfg) {
  std::optional<NGramLM> src_lm, tgt_lm;
  if (cfg.lm_side != ScoreSide::kTarget) src_lm = read_lm(lm_path(cfg, true));
  if (cfg.lm_side != ScoreSide::kSource) tgt_lm = read_lm(lm_path(cfg, false));
  Scorer scorer{src_lm ? &*src_lm : nullptr, tgt_lm ? &*tgt_lm : nullptr, cfg.lm_side};

  std::vector<std::vector<ScoredPair>> scored;
  for (std::size_t r = 0; r < round_count(cfg); ++r) {
    fs::path path = pool_path(cfg, r);
    if (!fs::exists(path)) throw IoError("cannot read " + path.string() + " (run augment first)");
    std::vector<SyntheticPair> pool;
    for (const auto& l : non_empty_lines(path)) pool.push_back(parse_pool_line(l));
    scored.push_back(score_pool(std::move(pool), scorer, cfg.workers));
    write_scored(scored_path(cfg, r), scored.back());
  }
  auto tiers = build_tiers(scored, cfg.tiers, cfg.rounds.strategy, cfg.mode, cfg.seed);
  std::string summary = "filter (" + std::string(to_string(cfg.mode)) + "):";
  for (std::size_t i = 0; i < tiers.size(); ++i) {
    write_scored(tier_path(cfg, cfg.tiers.sizes[i]), tiers[i]);
    summary += " " + tier_label(cfg.tiers.sizes[i]);
  }
  return summary;
}

std::string run_emit(const RunConfig& cfg) {
  ParallelCorpus seed = load_seed_corpus(cfg);
  EmitOptions opts;
  opts.interleave = cfg.interleave;
  opts.rng_seed = cfg.seed;
  opts.tagging = Tagging::kUntagged;
  std::vector<ManifestRecord> records = emit_dataset(seed, {}, cfg.tiers, cfg.out_dir, "0K", opts);
  opts.tagging = Tagging::kTagged;
  for (std::size_t size : cfg.tiers.sizes) {
    fs::path path = tier_path(cfg, size);
    if (!fs::exists(path)) throw IoError("cannot read " + path.string() + " (run filter first)");
    std::vector<SyntheticPair> tier;
    for (auto& s : read_scored(path)) tier.push_back(std::move(s.pair));
    auto recs = emit_dataset(seed, tier, cfg.tiers, cfg.out_dir, tier_label(size), opts);
    records.insert(records.end(), recs.begin(), recs.end());
  }
  text::write_file(cfg.out_dir / "manifest", format_manifest(records, cfg.seed));
  return "emit: " + std::to_string(records.size()) + " files, manifest written";
}

std::vector<std::string> run_build(const RunConfig& cfg) {
  return {run_align(cfg), run_train_lm(cfg), run_augment(cfg), run_filter(cfg), run_emit(cfg)};
}

std::vector<TierStats> run_stats(const RunConfig& cfg) {
  ParallelCorpus seed = load_seed_corpus(cfg);
  std::vector<TierStats> rows;
  rows.push_back(stats({}, seed, "0K"));
  for (std::size_t size : cfg.tiers.sizes) {
    fs::path path = tier_path(cfg, size);
    if (!fs::exists(path)) throw IoError("cannot read " + path.string() + " (run filter first)");
    rows.push_back(stats(read_scored(path), seed, tier_label(size)));
  }
  return rows;
}

std::string stats_json(const std::vector<TierStats>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    out.push_back({{"tier", r.label},
                   {"size", r.size},
                   {"unique_seeds", r.unique_seeds},
                   {"seed_source_types", r.seed_source_types},
                   {"seed_target_types", r.seed_target_types},
                   {"new_source_types", r.new_source_types},
                   {"new_target_types", r.new_target_types},
                   {"mean_ppl", r.mean_ppl},
                   {"median_ppl", r.median_ppl}});
  }
  return out.dump(2);
}

}  // namespace morphaug
