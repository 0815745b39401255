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

#include "morphaug/lexicon.h"

#include <algorithm>
#include <set>

#include "morphaug/error.h"
#include "morphaug/text.h"

namespace morphaug {

CandidateMatch parse_candidate_match(std::string_view name) {
  if (name == "exact") return CandidateMatch::kExactBundle;
  if (name == "paradigm") return CandidateMatch::kParadigm;
  if (name == "pos") return CandidateMatch::kPosOnly;
  throw ConfigError("unknown candidate match '" + std::string(name) + "'");
}

std::string_view to_string(CandidateMatch match) {
  switch (match) {
    case CandidateMatch::kExactBundle: return "exact";
    case CandidateMatch::kParadigm: return "paradigm";
    case CandidateMatch::kPosOnly: return "pos";
  }
  return "?";
}

Restriction parse_restriction(std::string_view name) {
  if (name == "all") return Restriction::kAll;
  if (name == "first-half" || name == "half") return Restriction::kFirstHalf;
  if (name == "consume-once" || name == "remove") return Restriction::kConsumeOnce;
  throw ConfigError("unknown restriction '" + std::string(name) + "'");
}

std::string_view to_string(Restriction restriction) {
  switch (restriction) {
    case Restriction::kAll: return "all";
    case Restriction::kFirstHalf: return "first-half";
    case Restriction::kConsumeOnce: return "consume-once";
  }
  return "?";
}

std::size_t ConsumedSet::size() const {
  return static_cast<std::size_t>(std::count(used_.begin(), used_.end(), true));
}

const LexEntry* BilingualLexicon::find(std::string_view src_lemma) const {
  auto it = by_source_.find(text::fold(text::nfc(src_lemma)));
  return it == by_source_.end() ? nullptr : &entries_[it->second];
}

std::span<const std::size_t> BilingualLexicon::matching(const FeatureBundle& bundle,
                                                        CandidateMatch match) const {
  const std::vector<std::size_t>* list = nullptr;
  switch (match) {
    case CandidateMatch::kExactBundle: {
      auto it = exact_.find(bundle);
      if (it != exact_.end()) list = &it->second;
      break;
    }
    case CandidateMatch::kParadigm: {
      auto it = paradigm_.find(bundle);
      if (it != paradigm_.end()) list = &it->second;
      break;
    }
    case CandidateMatch::kPosOnly: {
      auto it = by_pos_.find(bundle.pos);
      if (it != by_pos_.end()) list = &it->second;
      break;
    }
  }
  if (!list) return {};
  return {list->data(), list->size()};
}

std::vector<std::size_t> BilingualLexicon::same_lemma(std::string_view lemma) const {
  std::string key = text::fold(text::nfc(lemma));
  std::vector<std::size_t> out;
  if (auto it = by_source_.find(key); it != by_source_.end()) out.push_back(it->second);
  if (auto it = by_base_.find(key); it != by_base_.end())
    out.insert(out.end(), it->second.begin(), it->second.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> BilingualLexicon::candidates(const FeatureBundle& bundle,
                                                      CandidateMatch match,
                                                      Restriction restriction,
                                                      const ConsumedSet* consumed) const {
  auto all = matching(bundle, match);
  std::vector<std::size_t> out;
  switch (restriction) {
    case Restriction::kAll:
      out.assign(all.begin(), all.end());
      break;
    case Restriction::kFirstHalf:
      out.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>((all.size() + 1) / 2));
      break;
    case Restriction::kConsumeOnce:
      for (std::size_t i : all)
        if (!consumed || !consumed->contains(i)) out.push_back(i);
      break;
  }
  return out;
}

void BilingualLexicon::index() {
  std::sort(entries_.begin(), entries_.end(),
            [](const LexEntry& a, const LexEntry& b) { return a.src_lemma < b.src_lemma; });
  by_source_.clear();
  by_base_.clear();
  exact_.clear();
  paradigm_.clear();
  by_pos_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    LexEntry& e = entries_[i];
    e.index = i;
    by_source_[text::fold(e.src_lemma)] = i;
    by_base_[text::fold(e.src_base)].push_back(i);
    by_pos_[e.pos].push_back(i);
    if (e.src_bundle) exact_[*e.src_bundle].push_back(i);
    for (const auto& b : e.src_paradigm) paradigm_[b].push_back(i);
  }
}

namespace {

// True when `word` has analyses in `lex` and none of them carries `pos`.
bool contradicts(const ParadigmLexicon& lex, const std::string& word, Pos pos) {
  auto analyses = lex.analyze(word);
  if (analyses.empty()) return false;
  for (const auto& a : analyses)
    if (a.bundle.pos == pos) return false;
  return true;
}

}  // namespace

BilingualLexicon BilingualLexicon::build(const std::vector<std::vector<std::string>>& rows,
                                         const ParadigmLexicon& src_paradigms,
                                         const ParadigmLexicon& tgt_paradigms) {
  BilingualLexicon lex;
  std::set<std::string> seen;
  for (const auto& row : rows) {
    ++lex.stats_.rows;
    if (row.size() < 3 || row.size() > 4 || row[0].empty() || row[1].empty() || row[2].empty() ||
        text::has_whitespace(row[0]) || text::has_whitespace(row[1])) {
      ++lex.stats_.malformed;
      continue;
    }
    LexEntry e;
    e.src_lemma = text::nfc(row[0]);
    e.tgt_lemma = text::nfc(row[1]);
    e.pos = parse_pos(row[2]);
    if (contradicts(src_paradigms, e.src_lemma, e.pos) ||
        contradicts(tgt_paradigms, e.tgt_lemma, e.pos)) {
      ++lex.stats_.pos_mismatch;
      continue;
    }
    if (!seen.insert(text::fold(e.src_lemma)).second) {
      ++lex.stats_.duplicate_source;
      continue;
    }

    std::vector<Analysis> same_pos;
    for (auto& a : src_paradigms.analyze(e.src_lemma))
      if (a.bundle.pos == e.pos) same_pos.push_back(std::move(a));
    if (row.size() == 4 && !row[3].empty()) {
      FeatureBundle b = FeatureBundle::parse(row[3]);
      b.pos = e.pos;
      e.src_bundle = b;
    } else if (same_pos.size() == 1) {
      e.src_bundle = same_pos.front().bundle;
    }
    e.src_base = e.src_lemma;
    if (!same_pos.empty()) {
      bool one_lemma = std::all_of(same_pos.begin(), same_pos.end(), [&](const Analysis& a) {
        return text::fold(a.lemma) == text::fold(same_pos.front().lemma);
      });
      if (one_lemma) e.src_base = same_pos.front().lemma;
    }
    for (const auto& b : src_paradigms.paradigm(e.src_base))
      if (b.pos == e.pos) e.src_paradigm.push_back(b);
    lex.entries_.push_back(std::move(e));
  }
  lex.index();
  return lex;
}

BilingualLexicon load_lexicon(const std::filesystem::path& path,
                              const ParadigmLexicon& src_paradigms,
                              const ParadigmLexicon& tgt_paradigms) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : text::read_lines(path)) {
    if (line.empty()) continue;
    rows.push_back(text::split(line, '\t'));
  }
  BilingualLexicon lex = BilingualLexicon::build(rows, src_paradigms, tgt_paradigms);
  if (lex.size() == 0)
    throw ConfigError("no usable lexicon entries in " + path.string());
  return lex;
}

}  // namespace morphaug
