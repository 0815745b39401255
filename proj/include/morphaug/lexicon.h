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

// Bilingual lemma dictionaries normalized to one translation per source word.

#ifndef MORPHAUG_LEXICON_H_
#define MORPHAUG_LEXICON_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morphaug/morphology.h"

namespace morphaug {

struct LexEntry {
  std::size_t index = 0;  // position in BilingualLexicon::entries()
  std::string src_lemma;  // source word as written in the dictionary
  std::string tgt_lemma;
  Pos pos = Pos::kOther;
  // Unique analysis of src_lemma, or the explicit fourth column. Absent when
  // the source paradigms cannot resolve it (naive augmentation only).
  std::optional<FeatureBundle> src_bundle;
  // Lemma used to inflect the source side: the analysis lemma when unique,
  // otherwise src_lemma itself.
  std::string src_base;
  // Bundles the source base can be inflected for, sorted.
  std::vector<FeatureBundle> src_paradigm;
};

// How a slot's bundle is compared with dictionary entries.
enum class CandidateMatch {
  kExactBundle,  // src_bundle == bundle
  kParadigm,     // bundle is in the source base's paradigm
  kPosOnly,      // same POS (naive augmentation)
};

enum class Restriction {
  kAll,
  kFirstHalf,    // first ceil(n/2) matching entries in lemma order
  kConsumeOnce,  // each entry is handed out at most once per run
};

CandidateMatch parse_candidate_match(std::string_view name);
std::string_view to_string(CandidateMatch match);
Restriction parse_restriction(std::string_view name);
std::string_view to_string(Restriction restriction);

// Per-run state of the consume-once restriction. Owned by one generation
// driver; not thread-safe.
class ConsumedSet {
 public:
  bool contains(std::size_t entry) const {
    return entry < used_.size() && used_[entry];
  }
  void consume(std::size_t entry) {
    if (entry >= used_.size()) used_.resize(entry + 1, false);
    used_[entry] = true;
  }
  std::size_t size() const;

 private:
  std::vector<bool> used_;
};

struct LexiconLoadStats {
  std::size_t rows = 0;
  std::size_t malformed = 0;
  std::size_t pos_mismatch = 0;
  std::size_t duplicate_source = 0;
};

class BilingualLexicon {
 public:
  BilingualLexicon() = default;

  // Entries sorted by source lemma; at most one per (case-folded) source lemma.
  const std::vector<LexEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const LexiconLoadStats& load_stats() const { return stats_; }
  const LexEntry* find(std::string_view src_lemma) const;

  // Indices of matching entries in source-lemma order, restriction applied.
  // `consumed` is consulted only for Restriction::kConsumeOnce.
  std::vector<std::size_t> candidates(const FeatureBundle& bundle, CandidateMatch match,
                                      Restriction restriction,
                                      const ConsumedSet* consumed = nullptr) const;

  // Matching entries before any restriction; no copy.
  std::span<const std::size_t> matching(const FeatureBundle& bundle, CandidateMatch match) const;

  // Sorted indices of entries whose source word or source base folds to
  // `lemma`; these would reproduce the word being replaced.
  std::vector<std::size_t> same_lemma(std::string_view lemma) const;

  // Builds a lexicon from (src, tgt, POS[, features]) rows in file order,
  // applying the same normalization as load_lexicon.
  static BilingualLexicon build(const std::vector<std::vector<std::string>>& rows,
                                const ParadigmLexicon& src_paradigms,
                                const ParadigmLexicon& tgt_paradigms);

 private:
  void index();

  std::vector<LexEntry> entries_;
  LexiconLoadStats stats_;
  std::unordered_map<std::string, std::size_t> by_source_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_base_;
  std::map<FeatureBundle, std::vector<std::size_t>> exact_;
  std::map<FeatureBundle, std::vector<std::size_t>> paradigm_;
  std::map<Pos, std::vector<std::size_t>> by_pos_;
};

// TSV: src_lemma<TAB>tgt_lemma<TAB>POS[<TAB>features]. Rows whose declared POS
// contradicts every analysis of either word are dropped first; then the
// first remaining translation of each source word is kept.
// Throws IoError when unreadable, ConfigError when nothing survives.
BilingualLexicon load_lexicon(const std::filesystem::path& path,
                              const ParadigmLexicon& src_paradigms,
                              const ParadigmLexicon& tgt_paradigms);

}  // namespace morphaug

#endif  // MORPHAUG_LEXICON_H_
