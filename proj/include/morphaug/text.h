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

// UTF-8 helpers shared by every module: normalization, case folding,
// character classes and line-oriented file access.

#ifndef MORPHAUG_TEXT_H_
#define MORPHAUG_TEXT_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morphaug::text {

// Byte offset of the first invalid UTF-8 sequence, or nullopt.
std::optional<std::size_t> find_invalid_utf8(std::string_view s);

std::string nfc(std::string_view s);

// Full Unicode case folding; used for every lookup key.
std::string fold(std::string_view s);

// Uppercases the first code point when `model` starts with an uppercase
// letter and `s` does not.
std::string match_initial_case(std::string_view s, std::string_view model);

bool has_whitespace(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Reads a UTF-8 text file into lines. Strips a leading BOM and trailing
// CR characters. Throws IoError / EncodingError (with 1-based line number).
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Writes `lines` newline-terminated; throws IoError naming the path.
void write_lines(const std::filesystem::path& path,
                 const std::vector<std::string>& lines);
void write_file(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

std::string sha256_hex(std::string_view data);

// Shortest representation that parses back to the same double.
std::string format_double(double v);
// Whole-field parse; throws StructuralError mentioning `context`.
double parse_double(std::string_view s, const std::string& context);

}  // namespace morphaug::text

#endif  // MORPHAUG_TEXT_H_
