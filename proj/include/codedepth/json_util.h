// Copyright 2026 The codedepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CODEDEPTH_JSON_UTIL_H
#define CODEDEPTH_JSON_UTIL_H

#include <json.hpp>
#include <string>
#include <utility>

namespace codedepth {

/// Parses JSON, converting syntax errors into ParseError with line/column.
nlohmann::json parse_json_text(const std::string &text);

/// 1-based (line, column) of a byte offset.
std::pair<size_t, size_t> line_column_at(const std::string &text, size_t offset);

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string dump_json(const nlohmann::json &j);

}  // namespace codedepth

#endif
