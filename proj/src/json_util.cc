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

#include "codedepth/json_util.h"

#include <algorithm>

#include "codedepth/errors.h"

namespace codedepth {

nlohmann::json parse_json_text(const std::string &text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        // e.byte is 1-based and points one past the offending character.
        size_t offset = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
        auto [line, column] = line_column_at(text, offset);
        std::string what = e.what();
        auto pos = what.find("syntax error");
        throw ParseError(pos == std::string::npos ? what : what.substr(pos), line, column);
    }
}

std::pair<size_t, size_t> line_column_at(const std::string &text, size_t offset) {
    size_t line = 1;
    size_t column = 1;
    for (size_t i = 0; i < offset && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

std::string dump_json(const nlohmann::json &j) {
    return j.dump(2) + "\n";
}

}  // namespace codedepth
