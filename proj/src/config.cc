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

#include "morphaug/config.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "morphaug/error.h"
#include "morphaug/text.h"

namespace morphaug {

namespace {

namespace fs = std::filesystem;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("expected a non-negative integer, got '" + std::string(s) + "'");
  return v;
}

std::size_t parse_positive(std::string_view s) {
  auto v = parse_uint(s);
  if (v < 1) throw ConfigError("must be at least 1");
  return static_cast<std::size_t>(v);
}

double parse_real(std::string_view s) {
  try {
    return text::parse_double(s, "value");
  } catch (const StructuralError&) {
    throw ConfigError("expected a number, got '" + std::string(s) + "'");
  }
}

bool parse_bool(std::string_view s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("expected true or false, got '" + std::string(s) + "'");
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

std::vector<std::size_t> parse_sizes(std::string_view s) {
  std::vector<std::size_t> out;
  for (const auto& part : text::split(s, ',')) {
    std::string item = trim(part);
    std::uint64_t scale = 1;
    if (!item.empty() && (item.back() == 'K' || item.back() == 'k')) {
      scale = 1000;
      item.pop_back();
    }
    out.push_back(static_cast<std::size_t>(parse_uint(item) * scale));
  }
  return out;
}

std::string format_sizes(const std::vector<std::size_t>& sizes) {
  std::vector<std::string> parts;
  for (auto s : sizes) parts.push_back(std::to_string(s));
  return text::join(parts, ",");
}

struct KeyDef {
  std::string_view name;
  std::function<void(RunConfig&, const std::string&, const fs::path&)> set;
  std::function<std::string(const RunConfig&)> get;
};

KeyDef path_key(std::string_view name, fs::path RunConfig::*member) {
  return {name,
          [member](RunConfig& c, const std::string& v, const fs::path& base) {
            fs::path p(v);
            c.*member = (p.is_relative() && !base.empty() && !v.empty()) ? base / p : p;
          },
          [member](const RunConfig& c) { return (c.*member).string(); }};
}

const std::vector<KeyDef>& key_defs() {
  static const std::vector<KeyDef> defs = {
      path_key("source", &RunConfig::source),
      path_key("target", &RunConfig::target),
      path_key("seed_tsv", &RunConfig::seed_tsv),
      path_key("lexicon", &RunConfig::lexicon),
      path_key("src_paradigms", &RunConfig::src_paradigms),
      path_key("tgt_paradigms", &RunConfig::tgt_paradigms),
      path_key("monolingual_source", &RunConfig::monolingual_source),
      path_key("monolingual_target", &RunConfig::monolingual_target),
      path_key("seed_alignments", &RunConfig::seed_alignments),
      path_key("out_dir", &RunConfig::out_dir),
      {"strategy", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.augment.strategy = parse_strategy(v);
       },
       [](const RunConfig& c) { return std::string(to_string(c.augment.strategy)); }},
      {"per_seed", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.rounds.per_seed = v == "auto" ? 0 : parse_positive(v);
       },
       [](const RunConfig& c) {
         return c.rounds.per_seed ? std::to_string(c.rounds.per_seed) : std::string("auto");
       }},
      {"max_replacements", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.augment.max_replacements = parse_positive(v);
       },
       [](const RunConfig& c) { return std::to_string(c.augment.max_replacements); }},
      {"eligible_pos", [](RunConfig& c, const std::string& v, const fs::path&) {
         std::set<Pos> pos;
         for (const auto& p : text::split(v, ',')) pos.insert(parse_pos(trim(p)));
         c.augment.eligible_pos = pos;
       },
       [](const RunConfig& c) {
         std::vector<std::string> parts;
         for (Pos p : c.augment.eligible_pos) parts.emplace_back(to_string(p));
         return text::join(parts, ",");
       }},
      {"restriction", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.augment.restriction = parse_restriction(v);
       },
       [](const RunConfig& c) { return std::string(to_string(c.augment.restriction)); }},
      {"candidate_match", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.augment.match = parse_candidate_match(v);
       },
       [](const RunConfig& c) { return std::string(to_string(c.augment.match)); }},
      {"inflect_source", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.augment.inflect_source = parse_bool(v);
       },
       [](const RunConfig& c) { return format_bool(c.augment.inflect_source); }},
      {"inflect_target", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.augment.inflect_target = parse_bool(v);
       },
       [](const RunConfig& c) { return format_bool(c.augment.inflect_target); }},
      {"max_attempts", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.augment.max_attempts = parse_positive(v);
       },
       [](const RunConfig& c) { return std::to_string(c.augment.max_attempts); }},
      {"oversample", [](RunConfig& c, const std::string& v, const fs::path&) {
         double x = parse_real(v);
         if (!(x >= 1.0)) throw ConfigError("must be at least 1");
         c.rounds.oversample = x;
       },
       [](const RunConfig& c) { return text::format_double(c.rounds.oversample); }},
      {"min_len", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.min_len = parse_positive(v);
       },
       [](const RunConfig& c) { return std::to_string(c.min_len); }},
      {"tiers", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.tiers.sizes = parse_sizes(v);
       },
       [](const RunConfig& c) { return format_sizes(c.tiers.sizes); }},
      {"clean_tag", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.tiers.clean_tag = v;
       },
       [](const RunConfig& c) { return c.tiers.clean_tag; }},
      {"noisy_tag", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.tiers.noisy_tag = v;
       },
       [](const RunConfig& c) { return c.tiers.noisy_tag; }},
      {"tier_strategy", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.rounds.strategy = parse_tier_strategy(v);
       },
       [](const RunConfig& c) { return std::string(to_string(c.rounds.strategy)); }},
      {"interleave", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.interleave = parse_bool(v);
       },
       [](const RunConfig& c) { return format_bool(c.interleave); }},
      {"align_iterations", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.aligner.iterations = static_cast<int>(parse_positive(v));
       },
       [](const RunConfig& c) { return std::to_string(c.aligner.iterations); }},
      {"align_tension", [](RunConfig& c, const std::string& v, const fs::path&) {
         double x = parse_real(v);
         if (!(x >= 0.0)) throw ConfigError("must be non-negative");
         c.aligner.tension = x;
       },
       [](const RunConfig& c) { return text::format_double(c.aligner.tension); }},
      {"align_null", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.aligner.use_null = parse_bool(v);
       },
       [](const RunConfig& c) { return format_bool(c.aligner.use_null); }},
      {"symmetrize", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.symmetrize = parse_symmetrization(v);
       },
       [](const RunConfig& c) { return std::string(to_string(c.symmetrize)); }},
      {"lm_order", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.lm_order = static_cast<int>(parse_positive(v));
       },
       [](const RunConfig& c) { return std::to_string(c.lm_order); }},
      {"lm_discount", [](RunConfig& c, const std::string& v, const fs::path&) {
         double x = parse_real(v);
         if (!(x >= 0.0 && x < 1.0)) throw ConfigError("must be in [0, 1)");
         c.lm_discount = x;
       },
       [](const RunConfig& c) { return text::format_double(c.lm_discount); }},
      {"lm_side", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.lm_side = parse_score_side(v);
       },
       [](const RunConfig& c) { return std::string(to_string(c.lm_side)); }},
      {"mode", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.mode = parse_selection_mode(v);
       },
       [](const RunConfig& c) { return std::string(to_string(c.mode)); }},
      {"seed", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.seed = parse_uint(v);
       },
       [](const RunConfig& c) { return std::to_string(c.seed); }},
      {"workers", [](RunConfig& c, const std::string& v, const fs::path&) {
         c.workers = parse_positive(v);
       },
       [](const RunConfig& c) { return std::to_string(c.workers); }},
  };
  return defs;
}

const KeyDef* find_key(std::string_view name) {
  for (const auto& d : key_defs())
    if (d.name == name) return &d;
  return nullptr;
}

std::string env_name(std::string_view key) {
  std::string out(kEnvPrefix);
  for (char ch : key) out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  return out;
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> k;
    for (const auto& d : key_defs()) k.push_back(d.name);
    return k;
  }();
  return keys;
}

std::vector<Setting> read_config_file(const fs::path& path, std::vector<std::string>& errors) {
  std::vector<Setting> out;
  std::vector<std::string> lines;
  try {
    lines = text::read_lines(path);
  } catch (const Error& e) {
    errors.push_back(e.what());
    return out;
  }
  fs::path base = path.parent_path();
  if (base.empty()) base = ".";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::string stripped = trim(line);
    if (stripped.empty()) continue;
    std::string origin = path.string() + ":" + std::to_string(i + 1);
    auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      errors.push_back(origin + ": expected key = value");
      continue;
    }
    out.push_back({trim(std::string_view(stripped).substr(0, eq)),
                   trim(std::string_view(stripped).substr(eq + 1)), origin, base});
  }
  return out;
}

std::vector<Setting> settings_from_env(const std::vector<std::string>& environment) {
  std::vector<Setting> out;
  for (const auto& entry : environment) {
    if (entry.compare(0, kEnvPrefix.size(), kEnvPrefix) != 0) continue;
    auto eq = entry.find('=');
    if (eq == std::string::npos) continue;
    std::string name = entry.substr(kEnvPrefix.size(), eq - kEnvPrefix.size());
    std::string key;
    for (char ch : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    out.push_back({key, entry.substr(eq + 1), "environment " + entry.substr(0, eq), {}});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

RunConfig resolve_config(const std::optional<fs::path>& file, const std::vector<Setting>& env,
                         const std::vector<Setting>& flags) {
  std::vector<std::string> errors;
  std::vector<Setting> all;
  if (file) all = read_config_file(*file, errors);
  all.insert(all.end(), env.begin(), env.end());
  all.insert(all.end(), flags.begin(), flags.end());

  RunConfig cfg;
  for (const auto& s : all) {
    const KeyDef* def = find_key(s.key);
    if (!def) {
      errors.push_back(s.origin + ": unknown key '" + s.key + "'");
      continue;
    }
    try {
      def->set(cfg, s.value, s.base);
    } catch (const Error& e) {
      errors.push_back(s.origin + ": " + s.key + ": " + e.what());
    }
  }
  cfg.augment.rng_seed = cfg.seed;
  cfg.augment.workers = cfg.workers;
  cfg.aligner.workers = cfg.workers;
  for (const auto& check : std::vector<std::function<void()>>{
           [&] { cfg.tiers.validate(); }, [&] { cfg.augment.validate(); }}) {
    try {
      check();
    } catch (const Error& e) {
      errors.push_back(e.what());
    }
  }
  if (!errors.empty()) throw ConfigError(text::join(errors, "; "));
  return cfg;
}

std::vector<std::string> check_inputs(const RunConfig& cfg, std::string_view command) {
  std::vector<std::string> problems;
  auto require = [&](std::string_view key, const fs::path& p) {
    if (p.empty()) {
      problems.push_back("missing key '" + std::string(key) + "' (or " + env_name(key) + ")");
    } else if (!fs::exists(p)) {
      problems.push_back(std::string(key) + ": no such file " + p.string());
    }
  };
  auto optional = [&](std::string_view key, const fs::path& p) {
    if (!p.empty() && !fs::exists(p))
      problems.push_back(std::string(key) + ": no such file " + p.string());
  };
  auto seeds = [&] {
    if (!cfg.seed_tsv.empty()) {
      require("seed_tsv", cfg.seed_tsv);
    } else {
      require("source", cfg.source);
      require("target", cfg.target);
    }
  };
  const bool build = command == "build";
  if (command == "align" || build) {
    seeds();
    optional("seed_alignments", cfg.seed_alignments);
  }
  if (command == "train-lm" || build) {
    const bool need_src = cfg.lm_side != ScoreSide::kTarget;
    const bool need_tgt = cfg.lm_side != ScoreSide::kSource;
    if ((need_src && cfg.monolingual_source.empty()) ||
        (need_tgt && cfg.monolingual_target.empty()))
      seeds();
    optional("monolingual_source", cfg.monolingual_source);
    optional("monolingual_target", cfg.monolingual_target);
  }
  if (command == "augment" || build) {
    seeds();
    require("lexicon", cfg.lexicon);
    require("src_paradigms", cfg.src_paradigms);
    require("tgt_paradigms", cfg.tgt_paradigms);
  }
  if (command == "emit" || command == "stats" || build) seeds();
  if (cfg.out_dir.empty()) problems.push_back("missing key 'out_dir' (or " + env_name("out_dir") + ")");
  std::sort(problems.begin(), problems.end());
  problems.erase(std::unique(problems.begin(), problems.end()), problems.end());
  return problems;
}

std::string format_config(const RunConfig& cfg) {
  std::string out;
  for (const auto& d : key_defs()) out += std::string(d.name) + " = " + d.get(cfg) + "\n";
  return out;
}

}  // namespace morphaug
