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

// Context-free morphological analysis, lemmatization and inflection backed
// by UniMorph-style paradigm tables (lemma<TAB>form<TAB>N;ACC;SG).

#ifndef MORPHAUG_MORPHOLOGY_H_
#define MORPHAUG_MORPHOLOGY_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morphaug {

enum class Pos { kNoun, kAdjective, kVerb, kOther };

// "N", "ADJ", "V", "_" for kOther.
std::string_view to_string(Pos pos);
// Accepts N/NOUN, ADJ, V/VERB (case-insensitive); anything else is kOther.
Pos parse_pos(std::string_view tag);

// POS plus a set of UniMorph feature tags. Serialized canonically as the
// POS tag followed by the sorted features, joined with ';'.
struct FeatureBundle {
  Pos pos = Pos::kOther;
  std::set<std::string> features;

  std::string to_string() const;
  // The first N/ADJ/V tag found anywhere in the list sets the POS; every
  // other tag becomes a feature. "_" denotes an explicit kOther.
  static FeatureBundle parse(std::string_view tags);

  auto operator<=>(const FeatureBundle&) const = default;
};

// Features on the inflection fallback path: case and number for nouns and
// adjectives, tense for verbs.
FeatureBundle core_features(const FeatureBundle& bundle);

struct Analysis {
  std::string lemma;
  FeatureBundle bundle;

  auto operator<=>(const Analysis&) const = default;
};

// Both directions of a paradigm table. Keys are case-folded; stored lemmas
// and forms keep their original case. Immutable once loaded.
class ParadigmLexicon {
 public:
  ParadigmLexicon() = default;
  explicit ParadigmLexicon(std::string language) : language_(std::move(language)) {}

  // Returns false (and records nothing) for multi-word or empty entries.
  bool add(std::string_view lemma, std::string_view form, const FeatureBundle& bundle);

  // All analyses of `form`, sorted; empty when unknown.
  std::vector<Analysis> analyze(std::string_view form) const;

  // Lemma of the analysis of `form` that matches `bundle` most specifically:
  // an exact bundle match wins, otherwise the same-POS analysis sharing the
  // most features (ties to the smaller lemma). nullopt without a same-POS
  // analysis.
  std::optional<std::string> lemmatize(std::string_view form, const FeatureBundle& bundle) const;

  // Lexicographically smallest form listed for exactly (lemma, bundle).
  std::optional<std::string> inflect_exact(std::string_view lemma,
                                           const FeatureBundle& bundle) const;
  // inflect_exact, falling back to rows of the same POS whose core features
  // equal those of `bundle`.
  std::optional<std::string> inflect(std::string_view lemma, const FeatureBundle& bundle) const;

  // Every bundle the lemma can be inflected for, sorted.
  std::vector<FeatureBundle> paradigm(std::string_view lemma) const;
  bool has_lemma(std::string_view lemma) const;

  const std::string& language() const { return language_; }
  std::size_t size() const { return rows_; }
  std::size_t skipped() const { return skipped_; }

 private:
  friend ParadigmLexicon load_paradigms(const std::filesystem::path&, std::string);

  std::string language_;
  std::size_t rows_ = 0;
  std::size_t skipped_ = 0;
  std::unordered_map<std::string, std::set<Analysis>> by_form_;
  // folded lemma -> bundle -> forms
  std::unordered_map<std::string, std::map<FeatureBundle, std::set<std::string>>> by_lemma_;
};

// Loads a UniMorph TSV. Malformed lines (wrong column count, empty field,
// empty feature column, multi-word lemma or form) are counted in skipped().
// Throws IoError when unreadable and ConfigError when no line is valid.
ParadigmLexicon load_paradigms(const std::filesystem::path& path, std::string language = "");

}  // namespace morphaug

#endif  // MORPHAUG_MORPHOLOGY_H_
