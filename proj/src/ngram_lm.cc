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

#include "morphaug/ngram_lm.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "morphaug/error.h"
#include "morphaug/text.h"

namespace morphaug {

namespace {

constexpr std::uint32_t kBosId = 0;
constexpr std::uint32_t kEosId = 1;
constexpr std::uint32_t kUnkId = 2;

// ARPA convention for log10(0).
constexpr double kLogZero = -99.0;

std::string pack(const std::uint32_t* ids, std::size_t n) {
  std::string key(n * sizeof(std::uint32_t), '\0');
  std::memcpy(key.data(), ids, key.size());
  return key;
}

std::size_t key_order(const std::string& key) { return key.size() / sizeof(std::uint32_t); }

std::uint32_t key_at(const std::string& key, std::size_t i) {
  std::uint32_t v;
  std::memcpy(&v, key.data() + i * sizeof(std::uint32_t), sizeof(v));
  return v;
}

double to_log10(double p) { return p > 0 ? std::log10(p) : kLogZero; }
double from_log10(double x) { return x <= kLogZero ? 0.0 : std::pow(10.0, x); }

}  // namespace

std::uint32_t NGramLM::id(std::string_view word) const {
  auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnkId : it->second;
}

std::uint32_t NGramLM::intern(std::string_view word) {
  auto [it, inserted] = ids_.emplace(std::string(word), static_cast<std::uint32_t>(words_.size()));
  if (inserted) words_.emplace_back(word);
  return it->second;
}

std::size_t NGramLM::vocab_size() const { return words_.size() - 2; }

NGramLM NGramLM::train(const std::vector<std::vector<std::string>>& sentences, int order,
                       double discount) {
  std::vector<std::string> problems;
  if (order < 1) problems.push_back("order must be at least 1");
  if (!(discount >= 0.0 && discount < 1.0)) problems.push_back("discount must be in [0, 1)");
  bool any = std::any_of(sentences.begin(), sentences.end(),
                         [](const auto& s) { return !s.empty(); });
  if (!any) problems.push_back("language model training data is empty");
  if (!problems.empty()) throw ConfigError(text::join(problems, "; "));

  NGramLM lm;
  lm.order_ = order;
  lm.intern(kBos);
  lm.intern(kEos);
  lm.intern(kUnk);

  std::unordered_map<std::string, double> counts;
  std::vector<std::uint32_t> seq;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    seq.assign(1, kBosId);
    for (const auto& w : sentence) seq.push_back(lm.intern(w));
    seq.push_back(kEosId);
    for (std::size_t i = 1; i < seq.size(); ++i) {
      std::size_t max_len = std::min<std::size_t>(static_cast<std::size_t>(order), i + 1);
      for (std::size_t len = 1; len <= max_len; ++len) counts[pack(&seq[i + 1 - len], len)] += 1;
    }
  }

  // Context totals and distinct continuations; the empty context is the
  // unigram level.
  struct ContextStats {
    double total = 0;
    double distinct = 0;
  };
  std::unordered_map<std::string, ContextStats> contexts;
  std::vector<std::vector<const std::string*>> by_order(static_cast<std::size_t>(order) + 1);
  for (const auto& [key, c] : counts) {
    std::size_t n = key_order(key);
    by_order[n].push_back(&key);
    auto& ctx = contexts[key.substr(0, key.size() - sizeof(std::uint32_t))];
    ctx.total += c;
    ctx.distinct += 1;
  }
  for (auto& keys : by_order)
    std::sort(keys.begin(), keys.end(), [](const auto* a, const auto* b) { return *a < *b; });

  const double base = 1.0 / static_cast<double>(lm.vocab_size() + 1);
  const ContextStats& uni = contexts[std::string()];
  const double uni_escape = discount * uni.distinct / uni.total;
  for (std::uint32_t w = 0; w < lm.words_.size(); ++w) {
    if (w == kBosId) continue;
    Entry& e = lm.table_[pack(&w, 1)];
    auto it = counts.find(pack(&w, 1));
    double c = it == counts.end() ? 0.0 : it->second;
    e.prob = std::max(c - discount, 0.0) / uni.total + uni_escape * base;
    e.has_prob = true;
  }

  for (std::size_t n = 2; n <= static_cast<std::size_t>(order); ++n) {
    for (const std::string* key : by_order[n]) {
      std::string ctx_key = key->substr(0, key->size() - sizeof(std::uint32_t));
      const ContextStats& ctx = contexts.at(ctx_key);
      std::vector<std::uint32_t> ids(n);
      std::memcpy(ids.data(), key->data(), key->size());
      double lower = lm.prob_ids(ids.data() + 1, n - 2, ids[n - 1]);
      Entry& e = lm.table_[*key];
      e.prob = (counts.at(*key) - discount) / ctx.total +
               discount * ctx.distinct / ctx.total * lower;
      e.has_prob = true;
    }
  }
  // Every suffix of a seen n-gram is itself seen, so the lower-order lookups
  // above never reach a backoff weight.
  for (const auto& [ctx_key, ctx] : contexts) {
    if (ctx_key.empty()) continue;
    Entry& e = lm.table_[ctx_key];
    e.bow = discount * ctx.distinct / ctx.total;
  }
  return lm;
}

double NGramLM::prob_ids(const std::uint32_t* context, std::size_t len, std::uint32_t w) const {
  len = std::min(len, static_cast<std::size_t>(order_ - 1));
  double weight = 1.0;
  std::vector<std::uint32_t> buf(len + 1);
  for (std::size_t l = len;; --l) {
    const std::uint32_t* h = context + (len - l);
    std::copy(h, h + l, buf.begin());
    buf[l] = w;
    auto it = table_.find(pack(buf.data(), l + 1));
    if (it != table_.end() && it->second.has_prob) return weight * it->second.prob;
    if (l == 0) return 0.0;
    auto c = table_.find(pack(h, l));
    if (c != table_.end()) weight *= c->second.bow;
  }
}

double NGramLM::prob(std::string_view word, const std::vector<std::string>& history) const {
  std::vector<std::uint32_t> ctx;
  ctx.reserve(history.size());
  for (const auto& h : history) ctx.push_back(id(h));
  return prob_ids(ctx.data(), ctx.size(), id(word));
}

std::vector<double> NGramLM::token_probs(const std::vector<std::string>& sentence) const {
  std::vector<std::uint32_t> seq;
  seq.reserve(sentence.size() + 2);
  seq.push_back(kBosId);
  for (const auto& w : sentence) seq.push_back(id(w));
  seq.push_back(kEosId);
  std::vector<double> out;
  out.reserve(seq.size() - 1);
  const std::size_t hist = static_cast<std::size_t>(order_ - 1);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::size_t len = std::min(hist, i);
    out.push_back(prob_ids(&seq[i - len], len, seq[i]));
  }
  return out;
}

double NGramLM::log2_prob(const std::vector<std::string>& sentence) const {
  double sum = 0.0;
  for (double p : token_probs(sentence)) {
    if (!(p > 0.0)) throw DomainError("token has zero probability under the language model");
    sum += std::log2(p);
  }
  return sum;
}

double NGramLM::perplexity(const std::vector<std::string>& sentence) const {
  if (sentence.empty()) throw DomainError("perplexity of an empty sentence");
  double t = static_cast<double>(sentence.size() + 1);
  return std::exp2(-log2_prob(sentence) / t);
}

void NGramLM::write_arpa(std::ostream& out) const {
  std::vector<std::vector<std::pair<std::string, const Entry*>>> rows(
      static_cast<std::size_t>(order_) + 1);
  for (const auto& [key, entry] : table_) {
    std::size_t n = key_order(key);
    std::string words;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) words.push_back(' ');
      words += words_[key_at(key, i)];
    }
    rows[n].emplace_back(std::move(words), &entry);
  }
  // <s> is a context only, but ARPA readers expect it among the unigrams.
  static const Entry kBosEntry{};
  bool has_bos = table_.count(pack(&kBosId, 1)) > 0;
  if (!has_bos) rows[1].emplace_back(std::string(kBos), &kBosEntry);

  out << "\n\\data\\\n";
  for (int n = 1; n <= order_; ++n) out << "ngram " << n << '=' << rows[n].size() << '\n';
  for (int n = 1; n <= order_; ++n) {
    auto& section = rows[n];
    std::sort(section.begin(), section.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out << "\n\\" << n << "-grams:\n";
    for (const auto& [words, e] : section) {
      out << text::format_double(e->has_prob ? to_log10(e->prob) : kLogZero) << '\t' << words;
      if (n < order_ && e->bow != 1.0) out << '\t' << text::format_double(to_log10(e->bow));
      out << '\n';
    }
  }
  out << "\n\\end\\\n";
}

NGramLM NGramLM::read_arpa(std::istream& in) {
  NGramLM lm;
  lm.intern(kBos);
  lm.intern(kEos);
  lm.intern(kUnk);
  std::map<int, std::size_t> declared;
  int section = 0;
  bool in_data = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "\\data\\") {
      in_data = true;
      continue;
    }
    if (line == "\\end\\") break;
    if (line.front() == '\\') {
      int n = 0;
      if (std::sscanf(line.c_str(), "\\%d-grams:", &n) != 1 || n < 1)
        throw StructuralError("ARPA line " + std::to_string(lineno) + ": bad section header");
      section = n;
      lm.order_ = std::max(lm.order_, n);
      continue;
    }
    if (section == 0) {
      int n = 0;
      std::size_t count = 0;
      if (in_data && std::sscanf(line.c_str(), "ngram %d=%zu", &n, &count) == 2) declared[n] = count;
      continue;
    }
    std::istringstream fields(line);
    std::string logp;
    fields >> logp;
    std::vector<std::uint32_t> ids;
    std::string w;
    for (int i = 0; i < section && fields >> w; ++i) ids.push_back(lm.intern(w));
    if (ids.size() != static_cast<std::size_t>(section))
      throw StructuralError("ARPA line " + std::to_string(lineno) + ": too few words");
    std::string context = "ARPA line " + std::to_string(lineno);
    Entry& e = lm.table_[pack(ids.data(), ids.size())];
    double lp = text::parse_double(logp, context);
    bool is_bos = section == 1 && ids[0] == kBosId;
    e.has_prob = !is_bos;
    e.prob = is_bos ? 0.0 : from_log10(lp);
    std::string bow;
    if (fields >> bow) e.bow = from_log10(text::parse_double(bow, context));
  }
  if (lm.order_ < 1 || lm.table_.empty()) throw StructuralError("ARPA file has no n-grams");
  for (const auto& [n, count] : declared) {
    std::size_t seen = 0;
    for (const auto& [key, e] : lm.table_)
      if (key_order(key) == static_cast<std::size_t>(n)) ++seen;
    if (seen != count)
      throw StructuralError("ARPA header declares " + std::to_string(count) + " " +
                            std::to_string(n) + "-grams, file has " + std::to_string(seen));
  }
  return lm;
}

}  // namespace morphaug
