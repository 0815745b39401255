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

#include "morphaug/aligner.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "morphaug/error.h"
#include "morphaug/parallel.h"
#include "morphaug/text.h"

namespace morphaug {

std::uint32_t TranslationTable::intern_source(const std::string& w) {
  auto [it, inserted] = src_ids_.try_emplace(w, static_cast<std::uint32_t>(src_words_.size()));
  if (inserted) {
    src_words_.push_back(w);
    probs_.emplace_back();
  }
  return it->second;
}

std::uint32_t TranslationTable::intern_target(const std::string& w) {
  auto [it, inserted] = tgt_ids_.try_emplace(w, static_cast<std::uint32_t>(tgt_words_.size()));
  if (inserted) tgt_words_.push_back(w);
  return it->second;
}

double TranslationTable::stored(std::string_view source, std::string_view target) const {
  auto s = src_ids_.find(std::string(source));
  auto t = tgt_ids_.find(std::string(target));
  if (s == src_ids_.end() || t == tgt_ids_.end()) return 0.0;
  const auto& row = probs_[s->second];
  auto it = row.find(t->second);
  return it == row.end() ? 0.0 : it->second;
}

double TranslationTable::prob(std::string_view source, std::string_view target) const {
  return std::max(stored(source, target), kFloor);
}

double TranslationTable::null_prob(std::string_view target) const {
  return prob(kNullWord, target);
}

std::vector<std::pair<std::string, double>> TranslationTable::row(std::string_view source) const {
  std::vector<std::pair<std::string, double>> out;
  auto s = src_ids_.find(std::string(source));
  if (s == src_ids_.end()) return out;
  for (const auto& [t, p] : probs_[s->second]) out.emplace_back(tgt_words_[t], p);
  std::sort(out.begin(), out.end());
  return out;
}

void TranslationTable::write_tsv(std::ostream& out) const {
  out << "# tension=" << text::format_double(tension_) << " use_null=" << (use_null_ ? 1 : 0) << '\n';
  std::vector<std::tuple<std::string, std::string, double>> rows;
  for (std::size_t s = 0; s < probs_.size(); ++s)
    for (const auto& [t, p] : probs_[s]) rows.emplace_back(src_words_[s], tgt_words_[t], p);
  std::sort(rows.begin(), rows.end());
  for (const auto& [s, t, p] : rows) out << s << '\t' << t << '\t' << text::format_double(p) << '\n';
}

TranslationTable TranslationTable::read_tsv(std::istream& in) {
  TranslationTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      for (const auto& field : text::split(line.substr(1), ' ')) {
        if (field.rfind("tension=", 0) == 0)
          table.tension_ = text::parse_double(std::string_view(field).substr(8), "table header");
        else if (field.rfind("use_null=", 0) == 0)
          table.use_null_ = field.substr(9) == "1";
      }
      continue;
    }
    auto cols = text::split(line, '\t');
    if (cols.size() != 3)
      throw StructuralError("translation table line " + std::to_string(lineno) +
                            ": expected 3 columns");
    std::uint32_t s = table.intern_source(cols[0]);
    std::uint32_t t = table.intern_target(cols[1]);
    table.probs_[s][t] = text::parse_double(cols[2], "translation table line " + std::to_string(lineno));
  }
  return table;
}

std::vector<double> alignment_prior(std::size_t n, std::size_t m, std::size_t j,
                                    double tension, bool use_null) {
  std::size_t off = use_null ? 1 : 0;
  std::vector<double> w(n + off, 0.0);
  double mass = 1.0;
  if (use_null) {
    w[0] = 1.0 / static_cast<double>(n + 1);
    mass = static_cast<double>(n) / static_cast<double>(n + 1);
  }
  if (n == 0) return w;
  double z = 0.0;
  double jpos = static_cast<double>(j + 1) / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) {
    double ipos = static_cast<double>(i + 1) / static_cast<double>(n);
    double h = tension == 0.0 ? 1.0 : std::exp(-tension * std::abs(ipos - jpos));
    w[off + i] = h;
    z += h;
  }
  for (std::size_t i = 0; i < n; ++i) w[off + i] = mass * w[off + i] / z;
  return w;
}

class Ibm1Trainer {
 public:
  static TranslationTable run(const ParallelCorpus& corpus, const AlignerOptions& options,
                              std::vector<double>* log_likelihood) {
    if (corpus.pairs.empty()) throw ConfigError("cannot train aligner on an empty corpus");
    if (options.iterations < 1) throw ConfigError("aligner iterations must be at least 1");
    if (options.tension < 0.0 || !std::isfinite(options.tension))
      throw ConfigError("aligner tension must be a non-negative real");

    TranslationTable table;
    table.tension_ = options.tension;
    table.use_null_ = options.use_null;
    if (options.use_null) table.intern_source(std::string(TranslationTable::kNullWord));

    const std::size_t off = options.use_null ? 1 : 0;
    const std::size_t num_sents = corpus.pairs.size();
    // Flat layout: sentence k owns [begin[k], begin[k+1]); within it target
    // position j owns (n + off) consecutive cells, null first.
    std::vector<std::size_t> begin(num_sents + 1, 0);
    std::vector<std::uint32_t> cells;
    std::vector<double> prior;
    std::vector<std::uint32_t> cell_src;
    std::unordered_map<std::uint64_t, std::uint32_t> cell_index;
    std::vector<std::size_t> src_len(num_sents), tgt_len(num_sents);

    for (std::size_t k = 0; k < num_sents; ++k) {
      const auto& pair = corpus.pairs[k];
      std::vector<std::uint32_t> s;
      if (options.use_null) s.push_back(0);
      for (const auto& tok : pair.source) s.push_back(table.intern_source(tok.surface));
      std::vector<std::uint32_t> t;
      for (const auto& tok : pair.target) t.push_back(table.intern_target(tok.surface));
      std::size_t n = pair.source.size(), m = pair.target.size();
      src_len[k] = n;
      tgt_len[k] = m;
      begin[k] = cells.size();
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<double> w = alignment_prior(n, m, j, options.tension, options.use_null);
        for (std::size_t i = 0; i < n + off; ++i) {
          std::uint64_t key = (static_cast<std::uint64_t>(s[i]) << 32) | t[j];
          auto [it, inserted] =
              cell_index.try_emplace(key, static_cast<std::uint32_t>(cell_src.size()));
          if (inserted) cell_src.push_back(s[i]);
          cells.push_back(it->second);
          prior.push_back(w[i]);
        }
      }
    }
    begin[num_sents] = cells.size();

    const std::size_t num_cells = cell_src.size();
    std::vector<double> prob(num_cells, 1.0 / static_cast<double>(table.tgt_words_.size()));
    std::vector<double> posterior(cells.size(), 0.0);
    std::vector<double> sent_ll(num_sents, 0.0);

    auto e_step = [&]() {
      parallel_for(num_sents, options.workers, [&](std::size_t k) {
        std::size_t width = src_len[k] + off;
        double ll = 0.0;
        for (std::size_t j = 0; j < tgt_len[k]; ++j) {
          std::size_t base = begin[k] + j * width;
          double denom = 0.0;
          for (std::size_t i = 0; i < width; ++i) {
            double v = prior[base + i] * prob[cells[base + i]];
            posterior[base + i] = v;
            denom += v;
          }
          ll += std::log(denom);
          for (std::size_t i = 0; i < width; ++i) posterior[base + i] /= denom;
        }
        sent_ll[k] = ll;
      });
      double total = 0.0;
      for (double v : sent_ll) total += v;
      return total;
    };

    std::vector<double> counts(num_cells);
    std::vector<double> totals(table.src_words_.size());
    for (int it = 0; it < options.iterations; ++it) {
      double ll = e_step();
      if (log_likelihood) log_likelihood->push_back(ll);
      std::fill(counts.begin(), counts.end(), 0.0);
      for (std::size_t c = 0; c < cells.size(); ++c) counts[cells[c]] += posterior[c];
      std::fill(totals.begin(), totals.end(), 0.0);
      for (std::size_t c = 0; c < num_cells; ++c) totals[cell_src[c]] += counts[c];
      for (std::size_t c = 0; c < num_cells; ++c) {
        double z = totals[cell_src[c]];
        if (z > 0.0) prob[c] = counts[c] / z;
      }
    }
    if (log_likelihood) log_likelihood->push_back(e_step());

    for (const auto& [key, c] : cell_index) {
      auto s = static_cast<std::uint32_t>(key >> 32);
      auto t = static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
      table.probs_[s][t] = prob[c];
    }
    return table;
  }
};

TranslationTable train(const ParallelCorpus& corpus, const AlignerOptions& options,
                       std::vector<double>* log_likelihood) {
  return Ibm1Trainer::run(corpus, options, log_likelihood);
}

Alignment viterbi_align(const SentencePair& pair, const TranslationTable& table) {
  Alignment links;
  const std::size_t n = pair.source.size();
  const std::size_t m = pair.target.size();
  const std::size_t off = table.use_null() ? 1 : 0;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> w = alignment_prior(n, m, j, table.tension(), table.use_null());
    const std::string& f = pair.target[j].surface;
    double best = -1.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < n + off; ++i) {
      std::string_view e = (off && i == 0) ? TranslationTable::kNullWord
                                           : std::string_view(pair.source[i - off].surface);
      double score = w[i] * table.prob(e, f);
      if (score > best) {
        best = score;
        best_i = i;
      }
    }
    if (off && best_i == 0) continue;
    links.push_back({static_cast<std::uint32_t>(best_i - off), static_cast<std::uint32_t>(j)});
  }
  std::sort(links.begin(), links.end());
  return links;
}

Symmetrization parse_symmetrization(std::string_view name) {
  if (name == "intersection") return Symmetrization::kIntersection;
  if (name == "union") return Symmetrization::kUnion;
  if (name == "grow-diag") return Symmetrization::kGrowDiag;
  if (name == "forward") return Symmetrization::kForward;
  if (name == "reverse") return Symmetrization::kReverse;
  throw ConfigError("unknown symmetrization '" + std::string(name) + "'");
}

std::string_view to_string(Symmetrization mode) {
  switch (mode) {
    case Symmetrization::kIntersection: return "intersection";
    case Symmetrization::kUnion: return "union";
    case Symmetrization::kGrowDiag: return "grow-diag";
    case Symmetrization::kForward: return "forward";
    case Symmetrization::kReverse: return "reverse";
  }
  return "?";
}

namespace {

Alignment normalized(Alignment a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

Alignment symmetrize(const Alignment& forward, const Alignment& reverse, Symmetrization mode) {
  Alignment f = normalized(forward);
  Alignment r = normalized(reverse);
  Alignment out;
  switch (mode) {
    case Symmetrization::kForward: return f;
    case Symmetrization::kReverse: return r;
    case Symmetrization::kIntersection:
      std::set_intersection(f.begin(), f.end(), r.begin(), r.end(), std::back_inserter(out));
      return out;
    case Symmetrization::kUnion:
      std::set_union(f.begin(), f.end(), r.begin(), r.end(), std::back_inserter(out));
      return out;
    case Symmetrization::kGrowDiag: break;
  }

  Alignment uni;
  std::set_union(f.begin(), f.end(), r.begin(), r.end(), std::back_inserter(uni));
  std::set<AlignmentLink> in_union(uni.begin(), uni.end());
  std::set<AlignmentLink> current;
  std::set_intersection(f.begin(), f.end(), r.begin(), r.end(),
                        std::inserter(current, current.end()));
  if (uni.empty()) return {};

  std::uint32_t max_src = 0, max_tgt = 0;
  for (const auto& l : uni) {
    max_src = std::max(max_src, l.src);
    max_tgt = std::max(max_tgt, l.tgt);
  }
  std::vector<bool> src_aligned(max_src + 1, false), tgt_aligned(max_tgt + 1, false);
  for (const auto& l : current) {
    src_aligned[l.src] = true;
    tgt_aligned[l.tgt] = true;
  }

  static constexpr int kNeighbors[8][2] = {{-1, 0}, {0, -1}, {1, 0},  {0, 1},
                                           {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  bool added = true;
  while (added) {
    added = false;
    for (std::uint32_t e = 0; e <= max_src; ++e) {
      for (std::uint32_t g = 0; g <= max_tgt; ++g) {
        if (!current.count({e, g})) continue;
        for (const auto& d : kNeighbors) {
          long ne = static_cast<long>(e) + d[0];
          long ng = static_cast<long>(g) + d[1];
          if (ne < 0 || ng < 0 || ne > max_src || ng > max_tgt) continue;
          AlignmentLink cand{static_cast<std::uint32_t>(ne), static_cast<std::uint32_t>(ng)};
          if ((!src_aligned[cand.src] || !tgt_aligned[cand.tgt]) && in_union.count(cand) &&
              !current.count(cand)) {
            current.insert(cand);
            src_aligned[cand.src] = true;
            tgt_aligned[cand.tgt] = true;
            added = true;
          }
        }
      }
    }
  }
  return Alignment(current.begin(), current.end());
}

std::string format_pharaoh(const Alignment& links) {
  std::string out;
  for (const auto& l : normalized(links)) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(l.src);
    out.push_back('-');
    out += std::to_string(l.tgt);
  }
  return out;
}

Alignment parse_pharaoh(std::string_view line) {
  Alignment links;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) break;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    std::string_view item = line.substr(pos, end - pos);
    std::size_t dash = item.find('-');
    AlignmentLink l;
    auto r1 = std::from_chars(item.data(), item.data() + dash, l.src);
    auto r2 = dash == std::string_view::npos
                  ? std::from_chars_result{nullptr, std::errc::invalid_argument}
                  : std::from_chars(item.data() + dash + 1, item.data() + item.size(), l.tgt);
    if (dash == std::string_view::npos || r1.ec != std::errc() || r1.ptr != item.data() + dash ||
        r2.ec != std::errc() || r2.ptr != item.data() + item.size()) {
      throw StructuralError("bad Pharaoh link '" + std::string(item) + "'");
    }
    links.push_back(l);
    pos = end;
  }
  return normalized(std::move(links));
}

Alignment flip(const Alignment& links) {
  Alignment out;
  out.reserve(links.size());
  for (const auto& l : links) out.push_back({l.tgt, l.src});
  return normalized(std::move(out));
}

ParallelCorpus reversed(const ParallelCorpus& corpus) {
  ParallelCorpus out;
  out.source_lang = corpus.target_lang;
  out.target_lang = corpus.source_lang;
  out.line_count = corpus.line_count;
  out.pairs.reserve(corpus.pairs.size());
  for (const auto& p : corpus.pairs) {
    SentencePair q;
    q.id = p.id;
    q.source = p.target;
    q.target = p.source;
    if (p.links) q.links = flip(*p.links);
    out.pairs.push_back(std::move(q));
  }
  return out;
}

void Ibm1Aligner::align(ParallelCorpus& corpus) {
  bool need_forward = mode_ != Symmetrization::kReverse;
  bool need_reverse = mode_ != Symmetrization::kForward;
  ParallelCorpus rev;
  if (need_forward) forward_ = train(corpus, options_);
  if (need_reverse) {
    rev = reversed(corpus);
    reverse_ = train(rev, options_);
  }
  parallel_for(corpus.pairs.size(), options_.workers, [&](std::size_t k) {
    Alignment f, r;
    if (need_forward) f = viterbi_align(corpus.pairs[k], forward_);
    if (need_reverse) r = flip(viterbi_align(rev.pairs[k], reverse_));
    corpus.pairs[k].links = symmetrize(f, r, mode_);
  });
}

void PharaohFileAligner::align(ParallelCorpus& corpus) {
  for (auto& pair : corpus.pairs) {
    if (pair.id >= lines_.size()) {
      throw StructuralError("alignment file has " + std::to_string(lines_.size()) +
                            " lines but corpus line " + std::to_string(pair.id + 1) +
                            " needs one");
    }
    pair.links = parse_pharaoh(lines_[pair.id]);
    validate_pair(pair);
  }
}

std::vector<std::string> alignment_lines(const ParallelCorpus& corpus) {
  std::size_t n = corpus.line_count;
  for (const auto& p : corpus.pairs) n = std::max<std::size_t>(n, p.id + 1);
  std::vector<std::string> lines(n);
  for (const auto& p : corpus.pairs)
    if (p.links) lines[p.id] = format_pharaoh(*p.links);
  return lines;
}

}  // namespace morphaug
