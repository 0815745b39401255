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

// Statistical word alignment: IBM Model 1 trained with EM, an optional
// diagonal alignment prior in the style of fast_align, Viterbi decoding,
// symmetrization and Pharaoh-format I/O.
//
// Alignment prior for target position j (1-based) of m, source length n:
//
//   null:        1 / (n + 1)                          (only with use_null)
//   position i:  n / (n + 1) * exp(-tension * |i/n - j/m|) / Z_j
//
// where Z_j normalizes over i = 1..n. Without the null word the n/(n+1)
// factor is dropped. With tension = 0 the prior is uniform and training is
// plain IBM Model 1. The prior is fixed; only t(target | source) is learned.

#ifndef MORPHAUG_ALIGNER_H_
#define MORPHAUG_ALIGNER_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morphaug/corpus.h"

namespace morphaug {

struct AlignerOptions {
  int iterations = 5;
  double tension = 4.0;
  bool use_null = true;
  std::size_t workers = 1;
};

// t(target word | source word). Source id 0 is the null word when enabled.
class TranslationTable {
 public:
  static constexpr double kFloor = 1e-12;
  static constexpr std::string_view kNullWord = "<null>";

  // Probability with the OOV floor applied to unseen pairs.
  double prob(std::string_view source, std::string_view target) const;
  double null_prob(std::string_view target) const;
  // Exact stored value, 0 for unseen pairs.
  double stored(std::string_view source, std::string_view target) const;

  double tension() const { return tension_; }
  bool use_null() const { return use_null_; }
  const std::vector<std::string>& source_words() const { return src_words_; }
  const std::vector<std::string>& target_words() const { return tgt_words_; }
  // (target word, probability) pairs for one source word, target-sorted.
  std::vector<std::pair<std::string, double>> row(std::string_view source) const;

  // TSV: source<TAB>target<TAB>probability, rows sorted by (source, target).
  // The first line is a `#` header carrying tension and null settings.
  void write_tsv(std::ostream& out) const;
  static TranslationTable read_tsv(std::istream& in);

 private:
  friend class Ibm1Trainer;

  std::uint32_t intern_source(const std::string& w);
  std::uint32_t intern_target(const std::string& w);

  double tension_ = 0.0;
  bool use_null_ = true;
  std::vector<std::string> src_words_;
  std::vector<std::string> tgt_words_;
  std::unordered_map<std::string, std::uint32_t> src_ids_;
  std::unordered_map<std::string, std::uint32_t> tgt_ids_;
  // probs_[source id][target id]
  std::vector<std::unordered_map<std::uint32_t, double>> probs_;
};

// Prior weight of each candidate source position for target position j
// (0-based); index 0 is the null word when use_null is set, then source
// positions 0..n-1. Sums to 1.
std::vector<double> alignment_prior(std::size_t n, std::size_t m, std::size_t j,
                                    double tension, bool use_null);

// Trains t(target | source). `log_likelihood`, when given, receives the
// corpus log-likelihood under the initial uniform table followed by the
// value after each iteration (iterations + 1 entries).
TranslationTable train(const ParallelCorpus& corpus, const AlignerOptions& options,
                       std::vector<double>* log_likelihood = nullptr);

// Each target position links to its argmax source position; a null winner
// yields no link. Ties go to the smallest source index, null counting as -1.
Alignment viterbi_align(const SentencePair& pair, const TranslationTable& table);

enum class Symmetrization { kIntersection, kUnion, kGrowDiag, kForward, kReverse };

Symmetrization parse_symmetrization(std::string_view name);
std::string_view to_string(Symmetrization mode);

// Both inputs use source-target orientation.
Alignment symmetrize(const Alignment& forward, const Alignment& reverse,
                     Symmetrization mode);

// "0-0 1-2 ..." in sorted order.
std::string format_pharaoh(const Alignment& links);
Alignment parse_pharaoh(std::string_view line);

ParallelCorpus reversed(const ParallelCorpus& corpus);
Alignment flip(const Alignment& links);

// Pluggable word aligner: fills `links` of every pair in place.
class WordAligner {
 public:
  virtual ~WordAligner() = default;
  virtual void align(ParallelCorpus& corpus) = 0;
};

// Trains both directions on the corpus itself and symmetrizes.
class Ibm1Aligner : public WordAligner {
 public:
  Ibm1Aligner(AlignerOptions options, Symmetrization mode)
      : options_(options), mode_(mode) {}
  void align(ParallelCorpus& corpus) override;

  const TranslationTable& forward_table() const { return forward_; }
  const TranslationTable& reverse_table() const { return reverse_; }

 private:
  AlignerOptions options_;
  Symmetrization mode_;
  TranslationTable forward_;
  TranslationTable reverse_;
};

// Reads externally produced links: one Pharaoh line per corpus line index.
class PharaohFileAligner : public WordAligner {
 public:
  explicit PharaohFileAligner(std::vector<std::string> lines) : lines_(std::move(lines)) {}
  void align(ParallelCorpus& corpus) override;

 private:
  std::vector<std::string> lines_;
};

// One Pharaoh line per corpus line index (empty for skipped lines).
std::vector<std::string> alignment_lines(const ParallelCorpus& corpus);

}  // namespace morphaug

#endif  // MORPHAUG_ALIGNER_H_
