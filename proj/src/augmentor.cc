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

#include "morphaug/augmentor.h"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "morphaug/error.h"
#include "morphaug/parallel.h"
#include "morphaug/text.h"

namespace morphaug {

Strategy parse_strategy(std::string_view name) {
  if (name == "informed") return Strategy::kInformed;
  if (name == "naive") return Strategy::kNaive;
  throw ConfigError("unknown strategy '" + std::string(name) + "'");
}

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::kInformed ? "informed" : "naive";
}

void AugmentationConfig::validate() const {
  std::vector<std::string> problems;
  if (per_seed < 1) problems.push_back("per_seed must be at least 1");
  if (max_replacements < 1) problems.push_back("max_replacements must be at least 1");
  if (max_attempts < 1) problems.push_back("max_attempts must be at least 1");
  if (eligible_pos.empty()) problems.push_back("eligible_pos must not be empty");
  if (!problems.empty()) throw ConfigError(text::join(problems, "; "));
}

std::string SyntheticPair::source_text() const { return text::join(source, " "); }
std::string SyntheticPair::target_text() const { return text::join(target, " "); }
std::string SyntheticPair::key() const { return source_text() + '\t' + target_text(); }

std::vector<Slot> select_replaceable(const SentencePair& pair, const ParadigmLexicon& src_lex,
                                     const ParadigmLexicon& tgt_lex,
                                     const AugmentationConfig& cfg) {
  std::vector<Slot> slots;
  if (!pair.links) return slots;
  std::vector<std::size_t> degree(pair.source.size(), 0);
  std::vector<std::size_t> partner(pair.source.size(), 0);
  for (const auto& l : *pair.links) {
    if (l.src >= pair.source.size() || l.tgt >= pair.target.size()) continue;
    ++degree[l.src];
    partner[l.src] = l.tgt;
  }
  for (std::size_t i = 0; i < pair.source.size(); ++i) {
    if (degree[i] != 1) continue;
    auto src = src_lex.analyze(pair.source[i].surface);
    if (src.size() != 1 || !cfg.eligible_pos.count(src.front().bundle.pos)) continue;
    auto tgt = tgt_lex.analyze(pair.target[partner[i]].surface);
    if (tgt.size() != 1) continue;
    slots.push_back({i, partner[i], std::move(src.front()), std::move(tgt.front())});
  }
  return slots;
}

namespace {

struct Realized {
  std::string source;
  std::string target;
};

// Dictionary target words are not always lemmas; reduce to a citation form.
std::string citation_form(const ParadigmLexicon& lex, const std::string& word, Pos pos) {
  std::string key = text::fold(word);
  for (const auto& a : lex.analyze(word))
    if (a.bundle.pos == pos && text::fold(a.lemma) == key) return word;
  FeatureBundle pos_only;
  pos_only.pos = pos;
  if (auto lemma = lex.lemmatize(word, pos_only)) return *lemma;
  return word;
}

std::optional<Realized> realize_informed(const Slot& slot, const LexEntry& entry,
                                         const Resources& res, const AugmentationConfig& cfg) {
  std::optional<std::string> src;
  if (cfg.inflect_source) {
    src = res.src_paradigms.inflect_exact(entry.src_base, slot.src.bundle);
  } else if (entry.src_bundle && *entry.src_bundle == slot.src.bundle) {
    src = entry.src_lemma;
  }
  if (!src) return std::nullopt;
  auto check = res.src_paradigms.analyze(*src);
  if (check.size() != 1 || check.front().bundle != slot.src.bundle) return std::nullopt;

  std::string lemma = citation_form(res.tgt_paradigms, entry.tgt_lemma, entry.pos);
  std::optional<std::string> tgt =
      cfg.inflect_target ? res.tgt_paradigms.inflect(lemma, slot.tgt.bundle) : lemma;
  if (!tgt) return std::nullopt;
  return Realized{*src, *tgt};
}

std::optional<Realized> realize_naive(const Slot&, const LexEntry& entry) {
  return Realized{entry.src_lemma, entry.tgt_lemma};
}

// Picks one candidate index for `slot`, or nullopt when the pool is empty.
std::optional<std::size_t> draw_candidate(const Slot& slot, const Resources& res,
                                          const AugmentationConfig& cfg, CandidateMatch match,
                                          const ConsumedSet* consumed,
                                          const std::vector<std::size_t>& taken, Rng& rng) {
  std::span<const std::size_t> all = res.lexicon.matching(slot.src.bundle, match);
  std::vector<std::size_t> self = res.lexicon.same_lemma(slot.src.lemma);

  if (cfg.restriction == Restriction::kConsumeOnce) {
    std::vector<std::size_t> pool;
    pool.reserve(all.size());
    for (std::size_t e : all) {
      if (std::binary_search(self.begin(), self.end(), e)) continue;
      if (consumed && consumed->contains(e)) continue;
      if (std::find(taken.begin(), taken.end(), e) != taken.end()) continue;
      pool.push_back(e);
    }
    if (pool.empty()) return std::nullopt;
    return pool[rng.below(pool.size())];
  }

  if (cfg.restriction == Restriction::kFirstHalf) all = all.first((all.size() + 1) / 2);
  // Positions of excluded entries inside `all`, ascending.
  std::vector<std::size_t> holes;
  for (std::size_t e : self) {
    auto it = std::lower_bound(all.begin(), all.end(), e);
    if (it != all.end() && *it == e) holes.push_back(static_cast<std::size_t>(it - all.begin()));
  }
  std::size_t n = all.size() - holes.size();
  if (n == 0) return std::nullopt;
  std::size_t r = rng.below(n);
  for (std::size_t h : holes)
    if (r >= h) ++r;
  return all[r];
}

std::optional<SyntheticPair> attempt(const SentencePair& pair, const std::vector<Slot>& slots,
                                     const Resources& res, const AugmentationConfig& cfg,
                                     Strategy strategy, Rng& rng, const ConsumedSet* consumed) {
  const std::size_t n = slots.size();
  if (n == 0) return std::nullopt;
  std::size_t cap = std::min(cfg.max_replacements, n);
  std::size_t k = cap > 1 ? 1 + rng.below(cap) : 1;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < k; ++i) std::swap(order[i], order[i + rng.below(n - i)]);
  std::vector<std::size_t> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(chosen.begin(), chosen.end());

  SyntheticPair out;
  out.source = surfaces(pair.source);
  out.target = surfaces(pair.target);
  out.seed_id = pair.id;
  out.strategy = strategy;
  CandidateMatch match = strategy == Strategy::kNaive ? CandidateMatch::kPosOnly : cfg.match;
  std::vector<std::size_t> taken;
  std::vector<std::size_t> used_tgt;

  for (std::size_t c : chosen) {
    const Slot& slot = slots[c];
    if (std::find(used_tgt.begin(), used_tgt.end(), slot.tgt_index) != used_tgt.end())
      return std::nullopt;
    auto e = draw_candidate(slot, res, cfg, match, consumed, taken, rng);
    if (!e) return std::nullopt;
    const LexEntry& entry = res.lexicon.entries()[*e];
    auto r = strategy == Strategy::kNaive ? realize_naive(slot, entry)
                                          : realize_informed(slot, entry, res, cfg);
    if (!r) return std::nullopt;
    const std::string& old_src = pair.source[slot.src_index].surface;
    const std::string& old_tgt = pair.target[slot.tgt_index].surface;
    std::string new_src = text::match_initial_case(r->source, old_src);
    std::string new_tgt = text::match_initial_case(r->target, old_tgt);
    if (new_src == old_src || new_tgt == old_tgt) return std::nullopt;
    out.source[slot.src_index] = std::move(new_src);
    out.target[slot.tgt_index] = std::move(new_tgt);
    out.replacements.push_back({slot.src_index, slot.tgt_index, slot.src.lemma,
                                strategy == Strategy::kNaive ? entry.src_lemma : entry.src_base,
                                *e});
    taken.push_back(*e);
    used_tgt.push_back(slot.tgt_index);
  }
  return out;
}

}  // namespace

std::optional<SyntheticPair> augment_informed(const SentencePair& pair,
                                              const std::vector<Slot>& slots,
                                              const Resources& res,
                                              const AugmentationConfig& cfg, Rng& rng,
                                              const ConsumedSet* consumed) {
  return attempt(pair, slots, res, cfg, Strategy::kInformed, rng, consumed);
}

std::optional<SyntheticPair> augment_naive(const SentencePair& pair,
                                           const std::vector<Slot>& slots,
                                           const Resources& res, const AugmentationConfig& cfg,
                                           Rng& rng, const ConsumedSet* consumed) {
  return attempt(pair, slots, res, cfg, Strategy::kNaive, rng, consumed);
}

namespace {

// Generates the variants of one seed. `accept` decides whether a candidate
// is new; rejected candidates count as failed attempts.
template <typename Accept>
std::vector<SyntheticPair> generate_for_seed(const SentencePair& pair,
                                             const std::vector<Slot>& slots,
                                             const Resources& res, const AugmentationConfig& cfg,
                                             std::size_t per_seed, Rng& rng,
                                             const ConsumedSet* consumed, Accept&& accept) {
  std::vector<SyntheticPair> out;
  if (slots.empty()) return out;
  for (std::size_t v = 0; v < per_seed; ++v) {
    for (std::size_t a = 0; a < cfg.max_attempts; ++a) {
      auto sp = attempt(pair, slots, res, cfg, cfg.strategy, rng, consumed);
      if (sp && accept(*sp)) {
        out.push_back(std::move(*sp));
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<SyntheticPair> generate_pool(const ParallelCorpus& seeds, const Resources& res,
                                         const AugmentationConfig& cfg,
                                         const PoolOptions& options) {
  cfg.validate();
  const std::size_t per_seed = options.per_seed ? options.per_seed : cfg.per_seed;
  const auto excluded = [&](const std::string& key) {
    return options.exclude && options.exclude->count(key) > 0;
  };
  std::vector<SyntheticPair> pool;
  std::unordered_set<std::string> seen;

  if (cfg.restriction == Restriction::kConsumeOnce) {
    // Candidate draws depend on earlier choices, so seeds run in order.
    ConsumedSet consumed;
    for (const auto& pair : seeds.pairs) {
      auto slots = select_replaceable(pair, res.src_paradigms, res.tgt_paradigms, cfg);
      Rng rng = Rng::stream(cfg.rng_seed, {options.round, pair.id});
      auto accept = [&](const SyntheticPair& sp) {
        std::string key = sp.key();
        if (excluded(key) || !seen.insert(key).second) return false;
        for (const auto& r : sp.replacements) consumed.consume(r.entry);
        return true;
      };
      auto variants = generate_for_seed(pair, slots, res, cfg, per_seed, rng, &consumed, accept);
      for (auto& sp : variants) pool.push_back(std::move(sp));
    }
    return pool;
  }

  std::vector<std::vector<SyntheticPair>> per(seeds.pairs.size());
  parallel_for(seeds.pairs.size(), cfg.workers, [&](std::size_t k) {
    const auto& pair = seeds.pairs[k];
    auto slots = select_replaceable(pair, res.src_paradigms, res.tgt_paradigms, cfg);
    Rng rng = Rng::stream(cfg.rng_seed, {options.round, pair.id});
    std::unordered_set<std::string> local;
    auto accept = [&](const SyntheticPair& sp) {
      std::string key = sp.key();
      return !excluded(key) && local.insert(key).second;
    };
    per[k] = generate_for_seed(pair, slots, res, cfg, per_seed, rng, nullptr, accept);
  });
  for (auto& variants : per)
    for (auto& sp : variants)
      if (seen.insert(sp.key()).second) pool.push_back(std::move(sp));
  return pool;
}

std::size_t count_productive_seeds(const ParallelCorpus& seeds, const Resources& res,
                                   const AugmentationConfig& cfg) {
  std::size_t n = 0;
  for (const auto& pair : seeds.pairs)
    if (!select_replaceable(pair, res.src_paradigms, res.tgt_paradigms, cfg).empty()) ++n;
  return n;
}

std::string format_pool_line(const SyntheticPair& pair) {
  std::string desc;
  for (const auto& r : pair.replacements) {
    if (!desc.empty()) desc.push_back(' ');
    desc += std::to_string(r.src_index) + '-' + std::to_string(r.tgt_index) + ':' + r.old_lemma +
            '>' + r.new_lemma;
  }
  return std::to_string(pair.seed_id) + '\t' + std::string(to_string(pair.strategy)) + '\t' +
         pair.source_text() + '\t' + pair.target_text() + '\t' + desc;
}

namespace {

std::size_t parse_index(std::string_view s, std::string_view line) {
  std::size_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw StructuralError("bad pool line: " + std::string(line));
  return v;
}

}  // namespace

SyntheticPair parse_pool_line(std::string_view line) {
  auto cols = text::split(line, '\t');
  if (cols.size() < 5) throw StructuralError("bad pool line: " + std::string(line));
  SyntheticPair sp;
  sp.seed_id = parse_index(cols[0], line);
  sp.strategy = parse_strategy(cols[1]);
  sp.source = text::split(cols[2], ' ');
  sp.target = text::split(cols[3], ' ');
  if (!cols[4].empty()) {
    for (const auto& d : text::split(cols[4], ' ')) {
      auto dash = d.find('-');
      auto colon = d.find(':');
      auto arrow = d.rfind('>');
      if (dash == std::string::npos || colon == std::string::npos || arrow == std::string::npos ||
          !(dash < colon && colon < arrow))
        throw StructuralError("bad replacement descriptor '" + d + "'");
      Replacement r;
      r.src_index = parse_index(std::string_view(d).substr(0, dash), line);
      r.tgt_index = parse_index(std::string_view(d).substr(dash + 1, colon - dash - 1), line);
      r.old_lemma = d.substr(colon + 1, arrow - colon - 1);
      r.new_lemma = d.substr(arrow + 1);
      sp.replacements.push_back(std::move(r));
    }
  }
  return sp;
}

}  // namespace morphaug
