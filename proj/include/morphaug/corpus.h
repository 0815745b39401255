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

// Parallel corpus loading, tokenization and seed eligibility.

#ifndef MORPHAUG_CORPUS_H_
#define MORPHAUG_CORPUS_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morphaug {

struct Token {
  std::string surface;
  std::size_t index = 0;

  bool operator==(const Token&) const = default;
};

// Source position `src` translates target position `tgt` (both 0-based).
struct AlignmentLink {
  std::uint32_t src = 0;
  std::uint32_t tgt = 0;

  auto operator<=>(const AlignmentLink&) const = default;
};

// Sorted, duplicate-free set of links.
using Alignment = std::vector<AlignmentLink>;

struct SentencePair {
  // Line index in the files the pair was read from.
  std::uint64_t id = 0;
  std::vector<Token> source;
  std::vector<Token> target;
  std::optional<Alignment> links;
};

struct ParallelCorpus {
  std::vector<SentencePair> pairs;
  std::string source_lang;
  std::string target_lang;
  // Number of input lines, including blank ones that produced no pair.
  std::size_t line_count = 0;
};

// Whitespace split followed by detaching leading/trailing punctuation runs
// as separate tokens. Input is NFC-normalized first. A token made only of
// punctuation is kept whole, so already tokenized text passes unchanged.
std::vector<Token> tokenize(std::string_view line);

std::vector<std::string> surfaces(const std::vector<Token>& tokens);
std::string join_tokens(const std::vector<Token>& tokens);
std::vector<Token> make_tokens(const std::vector<std::string>& surfaces);

// One pair per line index; lines where either side tokenizes to nothing are
// skipped (their id is not used). Throws StructuralError on line-count
// mismatch, EncodingError on invalid UTF-8, IoError on unreadable files.
ParallelCorpus load_parallel(const std::filesystem::path& source_path,
                             const std::filesystem::path& target_path);

// Single-file form: source<TAB>target per line.
ParallelCorpus load_parallel_tsv(const std::filesystem::path& path);

// Builds a corpus from in-memory line pairs, ids = indices.
ParallelCorpus make_corpus(const std::vector<std::pair<std::string, std::string>>& lines);

// Keeps pairs whose source has at least `min_len` tokens, preserving order.
ParallelCorpus filter_seed_eligible(const ParallelCorpus& corpus,
                                    std::size_t min_len = 7);

// Throws StructuralError if a sequence is empty or a link is out of bounds.
void validate_pair(const SentencePair& pair);

}  // namespace morphaug

#endif  // MORPHAUG_CORPUS_H_
