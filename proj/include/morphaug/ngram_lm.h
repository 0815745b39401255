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

// Word n-gram language model with interpolated absolute discounting.
//
// With c(.) raw counts, D the discount and N1+(h) the number of distinct
// words seen after h:
//
//   p(w | h) = max(c(h w) - D, 0) / c(h) + D N1+(h) / c(h) * p(w | h')
//
// where h' drops the oldest word of h, and p(w | h) = p(w | h') when h was
// never seen. The recursion ends in a uniform 1 / (|V| + 1) over the
// vocabulary (which includes </s>) plus <unk>. A sentence is padded with
// one <s>, which only conditions, and a scored </s>.
//
// The model is stored in backoff form: explicit probabilities for seen
// n-grams and a weight D N1+(h) / c(h) per seen context. This is exactly the
// interpolated model and maps one-to-one onto ARPA files.

#ifndef MORPHAUG_NGRAM_LM_H_
#define MORPHAUG_NGRAM_LM_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace morphaug {

class NGramLM {
 public:
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";
  static constexpr std::string_view kUnk = "<unk>";

  // Throws ConfigError on an empty corpus (no non-empty sentence), order < 1
  // or a discount outside [0, 1).
  static NGramLM train(const std::vector<std::vector<std::string>>& sentences,
                       int order = 3, double discount = 0.75);

  int order() const { return order_; }
  // Vocabulary size including </s>, excluding <s> and <unk>.
  std::size_t vocab_size() const;

  // p(word | history); history is oldest first and may start with <s>.
  // Words outside the vocabulary are scored as <unk>.
  double prob(std::string_view word, const std::vector<std::string>& history) const;

  // Sum of log2 p over the t = |sentence| + 1 scored positions.
  double log2_prob(const std::vector<std::string>& sentence) const;

  // 2^(-log2_prob / t), i.e. exp of the mean negative natural log-probability.
  // Throws DomainError on an empty sentence or a zero-probability token.
  double perplexity(const std::vector<std::string>& sentence) const;

  // Per-position probabilities, for cross-checks.
  std::vector<double> token_probs(const std::vector<std::string>& sentence) const;

  void write_arpa(std::ostream& out) const;
  static NGramLM read_arpa(std::istream& in);

 private:
  struct Entry {
    double prob = 0.0;
    double bow = 1.0;
    bool has_prob = false;
  };

  std::uint32_t id(std::string_view word) const;
  std::uint32_t intern(std::string_view word);
  double prob_ids(const std::uint32_t* context, std::size_t len, std::uint32_t w) const;

  int order_ = 1;
  std::vector<std::string> words_;  // id -> word; 0 <s>, 1 </s>, 2 <unk>
  std::unordered_map<std::string, std::uint32_t> ids_;
  // Key: packed ids of the n-gram, oldest first.
  std::unordered_map<std::string, Entry> table_;
};

}  // namespace morphaug

#endif  // MORPHAUG_NGRAM_LM_H_
