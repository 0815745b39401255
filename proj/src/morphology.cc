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

#include "morphaug/morphology.h"

#include <algorithm>

#include "morphaug/error.h"
#include "morphaug/text.h"

namespace morphaug {

std::string_view to_string(Pos pos) {
  switch (pos) {
    case Pos::kNoun: return "N";
    case Pos::kAdjective: return "ADJ";
    case Pos::kVerb: return "V";
    case Pos::kOther: return "_";
  }
  return "_";
}

namespace {

std::string upper_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

std::optional<Pos> pos_tag(std::string_view tag) {
  std::string t = upper_ascii(tag);
  if (t == "N" || t == "NOUN") return Pos::kNoun;
  if (t == "ADJ") return Pos::kAdjective;
  if (t == "V" || t == "VERB") return Pos::kVerb;
  return std::nullopt;
}

// UniMorph case, number and tense dimensions.
const std::set<std::string>& case_tags() {
  static const std::set<std::string> tags = {
      "NOM", "ACC", "ERG", "ABS", "NOMS", "DAT", "BEN", "PRP", "GEN", "REL", "PRT",
      "INS", "COM", "VOC", "COMPV", "EQTV", "PRIV", "PROPR", "AVR", "FRML", "TRANS",
      "BYWAY", "INTER", "AT", "POST", "IN", "CIRC", "ANTE", "APUD", "ON", "ONHR",
      "ONVR", "SUB", "REM", "PROXM", "ESS", "ALL", "ABL", "APPRX", "TERM"};
  return tags;
}

const std::set<std::string>& number_tags() {
  static const std::set<std::string> tags = {"SG", "PL", "GRPL", "DU", "TRI", "PAUC", "GRPAUC", "INVN"};
  return tags;
}

const std::set<std::string>& tense_tags() {
  static const std::set<std::string> tags = {"PRS", "PST", "FUT", "IMMED", "HOD", "1DAY", "RCT", "RMT"};
  return tags;
}

bool is_case_tag(const std::string& tag) {
  if (case_tags().count(tag)) return true;
  // Spatial compounds such as IN+ESS.
  if (tag.find('+') == std::string::npos) return false;
  for (const auto& part : text::split(tag, '+'))
    if (!case_tags().count(part)) return false;
  return true;
}

}  // namespace

Pos parse_pos(std::string_view tag) { return pos_tag(tag).value_or(Pos::kOther); }

std::string FeatureBundle::to_string() const {
  std::string out(morphaug::to_string(pos));
  for (const auto& f : features) {
    out.push_back(';');
    out += f;
  }
  return out;
}

FeatureBundle FeatureBundle::parse(std::string_view tags) {
  FeatureBundle b;
  bool have_pos = false;
  for (const auto& raw : text::split(tags, ';')) {
    std::string tag = upper_ascii(trim(raw));
    if (tag.empty()) continue;
    if (!have_pos) {
      if (tag == "_") {
        have_pos = true;
        continue;
      }
      if (auto p = pos_tag(tag)) {
        b.pos = *p;
        have_pos = true;
        continue;
      }
    }
    b.features.insert(tag);
  }
  return b;
}

FeatureBundle core_features(const FeatureBundle& bundle) {
  FeatureBundle core;
  core.pos = bundle.pos;
  for (const auto& f : bundle.features) {
    bool keep = false;
    switch (bundle.pos) {
      case Pos::kNoun:
      case Pos::kAdjective: keep = is_case_tag(f) || number_tags().count(f); break;
      case Pos::kVerb: keep = tense_tags().count(f) > 0; break;
      case Pos::kOther: break;
    }
    if (keep) core.features.insert(f);
  }
  return core;
}

bool ParadigmLexicon::add(std::string_view lemma, std::string_view form,
                          const FeatureBundle& bundle) {
  if (lemma.empty() || form.empty() || text::has_whitespace(lemma) || text::has_whitespace(form))
    return false;
  std::string l = text::nfc(lemma);
  std::string f = text::nfc(form);
  auto inserted = by_form_[text::fold(f)].insert({l, bundle}).second;
  by_lemma_[text::fold(l)][bundle].insert(f);
  if (inserted) ++rows_;
  return true;
}

std::vector<Analysis> ParadigmLexicon::analyze(std::string_view form) const {
  auto it = by_form_.find(text::fold(text::nfc(form)));
  if (it == by_form_.end()) return {};
  return std::vector<Analysis>(it->second.begin(), it->second.end());
}

std::optional<std::string> ParadigmLexicon::lemmatize(std::string_view form,
                                                      const FeatureBundle& bundle) const {
  std::optional<std::string> best;
  long best_score = -1;
  for (const auto& a : analyze(form)) {
    if (a.bundle.pos != bundle.pos) continue;
    long score;
    if (a.bundle == bundle) {
      score = 1L << 30;
    } else {
      score = 0;
      for (const auto& f : a.bundle.features) score += bundle.features.count(f);
    }
    // analyze() is sorted by lemma, so strict comparison keeps the smaller one.
    if (score > best_score) {
      best_score = score;
      best = a.lemma;
    }
  }
  return best;
}

std::optional<std::string> ParadigmLexicon::inflect_exact(std::string_view lemma,
                                                          const FeatureBundle& bundle) const {
  auto it = by_lemma_.find(text::fold(text::nfc(lemma)));
  if (it == by_lemma_.end()) return std::nullopt;
  auto forms = it->second.find(bundle);
  if (forms == it->second.end() || forms->second.empty()) return std::nullopt;
  return *forms->second.begin();
}

std::optional<std::string> ParadigmLexicon::inflect(std::string_view lemma,
                                                    const FeatureBundle& bundle) const {
  if (auto exact = inflect_exact(lemma, bundle)) return exact;
  auto it = by_lemma_.find(text::fold(text::nfc(lemma)));
  if (it == by_lemma_.end()) return std::nullopt;
  FeatureBundle want = core_features(bundle);
  if (want.features.empty()) return std::nullopt;
  std::optional<std::string> best;
  for (const auto& [b, forms] : it->second) {
    if (b.pos != bundle.pos || core_features(b) != want) continue;
    for (const auto& f : forms)
      if (!best || f < *best) best = f;
  }
  return best;
}

std::vector<FeatureBundle> ParadigmLexicon::paradigm(std::string_view lemma) const {
  std::vector<FeatureBundle> out;
  auto it = by_lemma_.find(text::fold(text::nfc(lemma)));
  if (it == by_lemma_.end()) return out;
  for (const auto& [b, forms] : it->second) out.push_back(b);
  return out;
}

bool ParadigmLexicon::has_lemma(std::string_view lemma) const {
  return by_lemma_.count(text::fold(text::nfc(lemma))) > 0;
}

ParadigmLexicon load_paradigms(const std::filesystem::path& path, std::string language) {
  std::vector<std::string> lines = text::read_lines(path);
  ParadigmLexicon lex(std::move(language));
  for (const auto& line : lines) {
    if (line.empty()) continue;
    auto cols = text::split(line, '\t');
    if (cols.size() != 3) {
      ++lex.skipped_;
      continue;
    }
    std::string lemma = trim(cols[0]), form = trim(cols[1]), feats = trim(cols[2]);
    if (feats.empty()) {
      ++lex.skipped_;
      continue;
    }
    if (!lex.add(lemma, form, FeatureBundle::parse(feats))) ++lex.skipped_;
  }
  if (lex.rows_ == 0)
    throw ConfigError("no valid paradigm rows in " + path.string() + " (" +
                      std::to_string(lex.skipped_) + " skipped)");
  return lex;
}

}  // namespace morphaug
