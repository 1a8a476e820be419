// text_util.h
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
//
// Copyright 2026 The ensdec Authors.

#ifndef ENSDEC_SRC_TEXT_UTIL_H_
#define ENSDEC_SRC_TEXT_UTIL_H_

#include <charconv>
#include <string_view>
#include <system_error>
#include <vector>

namespace ensdec::internal {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r')
      ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

// Whole-field numeric parse; false on trailing garbage or overflow.
template <typename T>
bool parse_number(std::string_view field, T &value) {
  if (field.empty()) return false;
  const char *first = field.data();
  if constexpr (!std::is_floating_point_v<T>) {
    // from_chars rejects a leading '+', accept it for integers too.
    if (*first == '+') ++first;
  }
  auto [ptr, ec] = std::from_chars(first, field.data() + field.size(), value);
  return ec == std::errc() && ptr == field.data() + field.size();
}

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace ensdec::internal

#endif  // ENSDEC_SRC_TEXT_UTIL_H_
