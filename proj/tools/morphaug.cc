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

// morphaug: synthetic parallel data by lexical replacement.
//
// Failures print one line to stderr, `error<TAB>kind<TAB>message`, and exit
// with 2 for configuration problems and 1 for everything else.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morphaug/config.h"
#include "morphaug/corpus.h"
#include "morphaug/error.h"
#include "morphaug/metrics.h"
#include "morphaug/pipeline.h"
#include "morphaug/text.h"

extern char** environ;

namespace {

using namespace morphaug;

struct Flags {
  std::string config;
  std::optional<std::string> seed, workers, strategy, mode, tiers, out;
  std::vector<std::string> sets;
};

std::vector<Setting> flag_settings(const Flags& f) {
  std::vector<Setting> out;
  auto add = [&](const char* key, const std::optional<std::string>& v, const char* flag) {
    if (v) out.push_back({key, *v, std::string("flag ") + flag, {}});
  };
  add("seed", f.seed, "--seed");
  add("workers", f.workers, "--workers");
  add("strategy", f.strategy, "--strategy");
  add("mode", f.mode, "--mode");
  add("tiers", f.tiers, "--tiers");
  add("out_dir", f.out, "--out");
  for (const auto& s : f.sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects KEY=VALUE, got '" + s + "'");
    out.push_back({s.substr(0, eq), s.substr(eq + 1), "flag --set", {}});
  }
  return out;
}

RunConfig load(const Flags& f) {
  std::vector<std::string> env;
  for (char** e = environ; *e; ++e) env.emplace_back(*e);
  std::optional<std::filesystem::path> file;
  if (!f.config.empty()) file = f.config;
  return resolve_config(file, settings_from_env(env), flag_settings(f));
}

void require_inputs(const RunConfig& cfg, const std::string& command) {
  auto problems = check_inputs(cfg, command);
  if (!problems.empty()) throw ConfigError(text::join(problems, "; "));
}

std::vector<std::vector<std::string>> read_token_lines(const std::string& path) {
  std::vector<std::vector<std::string>> out;
  for (const auto& line : text::read_lines(path)) out.push_back(surfaces(tokenize(text::nfc(line))));
  return out;
}

int fail(const char* kind, std::string message, int code) {
  std::replace(message.begin(), message.end(), '\n', ' ');
  std::cerr << "error\t" << kind << '\t' << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthetic parallel data by morphologically informed lexical replacement"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--config", flags.config, "Config file (key = value lines)");
  app.add_option("--seed", flags.seed, "Run seed");
  app.add_option("--workers", flags.workers, "Worker threads");
  app.add_option("--strategy", flags.strategy, "informed or naive");
  app.add_option("--mode", flags.mode, "filtered or random selection");
  app.add_option("--tiers", flags.tiers, "Comma-separated tier sizes, e.g. 5K,10K");
  app.add_option("--out", flags.out, "Output directory");
  app.add_option("--set", flags.sets, "Any config key as KEY=VALUE (repeatable)");

  const std::vector<std::pair<std::string, std::string>> stages = {
      {"align", "Word-align the seed corpus"},
      {"train-lm", "Train the n-gram language model(s)"},
      {"augment", "Generate synthetic pools"},
      {"filter", "Score pools and select tiers"},
      {"emit", "Write tiered training files and the manifest"},
      {"build", "Run align, train-lm, augment, filter and emit"},
      {"stats", "Print per-tier statistics as JSON"},
      {"validate", "Check the configuration and print it"},
  };
  for (const auto& [name, help] : stages) app.add_subcommand(name, help)->fallthrough();

  auto* bleu = app.add_subcommand("bleu", "Corpus BLEU of a hypothesis file against a reference");
  std::string hyp_path, ref_path;
  bool smooth = false;
  bleu->add_option("hypotheses", hyp_path)->required();
  bleu->add_option("references", ref_path)->required();
  bleu->add_flag("--smooth", smooth, "Add-one smoothing for n >= 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("config", e.what(), 2);
  }

  try {
    if (bleu->parsed()) {
      auto r = corpus_bleu(read_token_lines(hyp_path), read_token_lines(ref_path),
                           BleuOptions{smooth});
      std::cout << r.summary() << '\n';
      return 0;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    RunConfig cfg = load(flags);
    if (command == "validate") {
      require_inputs(cfg, "build");
      std::cout << format_config(cfg);
      return 0;
    }
    require_inputs(cfg, command);
    if (command == "stats") {
      std::cout << stats_json(run_stats(cfg)) << '\n';
      return 0;
    }
    std::vector<std::string> summary;
    if (command == "align") summary.push_back(run_align(cfg));
    if (command == "train-lm") summary.push_back(run_train_lm(cfg));
    if (command == "augment") summary.push_back(run_augment(cfg));
    if (command == "filter") summary.push_back(run_filter(cfg));
    if (command == "emit") summary.push_back(run_emit(cfg));
    if (command == "build") summary = run_build(cfg);
    for (const auto& s : summary) std::cerr << s << '\n';
    return 0;
  } catch (const ConfigError& e) {
    return fail(e.kind(), e.what(), 2);
  } catch (const Error& e) {
    return fail(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
}
