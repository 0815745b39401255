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

#include "morphaug/corpus.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "morphaug/error.h"
#include "morphaug/text.h"

namespace morphaug {

namespace {

struct CodePoint {
  UChar32 value;
  int32_t begin;
  int32_t end;
};

std::vector<CodePoint> decode(std::string_view s) {
  std::vector<CodePoint> out;
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  int32_t len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < len) {
    int32_t begin = i;
    UChar32 c;
    U8_NEXT(p, i, len, c);
    out.push_back({c, begin, i});
  }
  return out;
}

bool is_space(UChar32 c) { return c < 0 || u_isUWhiteSpace(c); }
bool is_punct(UChar32 c) { return c >= 0 && u_ispunct(c); }

void emit_chunk(std::string_view s, const std::vector<CodePoint>& cps,
                std::size_t first, std::size_t last, std::vector<Token>& out) {
  auto push = [&](std::size_t a, std::size_t b) {
    if (a >= b) return;
    int32_t from = cps[a].begin;
    int32_t to = cps[b - 1].end;
    out.push_back({std::string(s.substr(from, to - from)), out.size()});
  };
  std::size_t lead = first;
  while (lead < last && is_punct(cps[lead].value)) ++lead;
  if (lead == last) {
    push(first, last);
    return;
  }
  std::size_t trail = last;
  while (trail > lead && is_punct(cps[trail - 1].value)) --trail;
  push(first, lead);
  push(lead, trail);
  push(trail, last);
}

}  // namespace

std::vector<Token> tokenize(std::string_view line) {
  std::string normalized = text::nfc(line);
  std::vector<CodePoint> cps = decode(normalized);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_space(cps[i].value)) ++i;
    std::size_t start = i;
    while (i < cps.size() && !is_space(cps[i].value)) ++i;
    if (start < i) emit_chunk(normalized, cps, start, i, tokens);
  }
  return tokens;
}

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::string join_tokens(const std::vector<Token>& tokens) {
  return text::join(surfaces(tokens), " ");
}

std::vector<Token> make_tokens(const std::vector<std::string>& words) {
  std::vector<Token> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out.push_back({words[i], i});
  return out;
}

namespace {

void add_line_pair(ParallelCorpus& corpus, std::size_t index,
                   std::string_view src, std::string_view tgt) {
  SentencePair pair;
  pair.id = index;
  pair.source = tokenize(src);
  pair.target = tokenize(tgt);
  if (pair.source.empty() || pair.target.empty()) return;
  corpus.pairs.push_back(std::move(pair));
}

}  // namespace

ParallelCorpus load_parallel(const std::filesystem::path& source_path,
                             const std::filesystem::path& target_path) {
  std::vector<std::string> src = text::read_lines(source_path);
  std::vector<std::string> tgt = text::read_lines(target_path);
  if (src.size() != tgt.size()) {
    throw StructuralError("line count mismatch: " + source_path.string() + " has " +
                          std::to_string(src.size()) + " lines, " +
                          target_path.string() + " has " +
                          std::to_string(tgt.size()));
  }
  ParallelCorpus corpus;
  corpus.line_count = src.size();
  corpus.source_lang = source_path.extension().string();
  corpus.target_lang = target_path.extension().string();
  if (!corpus.source_lang.empty()) corpus.source_lang.erase(0, 1);
  if (!corpus.target_lang.empty()) corpus.target_lang.erase(0, 1);
  for (std::size_t i = 0; i < src.size(); ++i) add_line_pair(corpus, i, src[i], tgt[i]);
  return corpus;
}

ParallelCorpus load_parallel_tsv(const std::filesystem::path& path) {
  std::vector<std::string> lines = text::read_lines(path);
  ParallelCorpus corpus;
  corpus.line_count = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto tab = lines[i].find('\t');
    if (tab == std::string::npos || lines[i].find('\t', tab + 1) != std::string::npos) {
      throw StructuralError(path.string() + ":" + std::to_string(i + 1) +
                            ": expected exactly two tab-separated columns");
    }
    add_line_pair(corpus, i, std::string_view(lines[i]).substr(0, tab),
                  std::string_view(lines[i]).substr(tab + 1));
  }
  return corpus;
}

ParallelCorpus make_corpus(const std::vector<std::pair<std::string, std::string>>& lines) {
  ParallelCorpus corpus;
  corpus.line_count = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i)
    add_line_pair(corpus, i, lines[i].first, lines[i].second);
  return corpus;
}

ParallelCorpus filter_seed_eligible(const ParallelCorpus& corpus, std::size_t min_len) {
  if (min_len < 1) throw ConfigError("min_len must be at least 1");
  ParallelCorpus out;
  out.source_lang = corpus.source_lang;
  out.target_lang = corpus.target_lang;
  out.line_count = corpus.line_count;
  for (const auto& pair : corpus.pairs)
    if (pair.source.size() >= min_len) out.pairs.push_back(pair);
  return out;
}

void validate_pair(const SentencePair& pair) {
  if (pair.source.empty() || pair.target.empty())
    throw StructuralError("pair " + std::to_string(pair.id) + ": empty side");
  if (!pair.links) return;
  for (const auto& l : *pair.links) {
    if (l.src >= pair.source.size() || l.tgt >= pair.target.size()) {
      throw StructuralError("pair " + std::to_string(pair.id) + ": link " +
                            std::to_string(l.src) + "-" + std::to_string(l.tgt) +
                            " out of bounds");
    }
  }
}

}  // namespace morphaug
