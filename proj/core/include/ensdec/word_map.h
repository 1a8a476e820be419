// word_map.h
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

#ifndef ENSDEC_WORD_MAP_H_
#define ENSDEC_WORD_MAP_H_

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "ensdec/types.h"

namespace ensdec {

// Bidirectional surface form <-> id table read from "<surface> <id>" lines.
class WordMap {
 public:
  WordMap() = default;

  // Throws ParseError on malformed lines or a surface form listed twice.
  static WordMap load(std::istream &in, const std::string &source = "wmap");
  static WordMap load_file(const std::string &path);

  void add(std::string surface, Token id);

  std::optional<Token> find(std::string_view surface) const;
  // Unknown ids render as the surface form of UNK ("<unk>" if unmapped).
  std::string surface(Token id) const;
  std::string unk_surface() const;

  std::size_t size() const { return by_id_.size(); }

 private:
  std::unordered_map<std::string, Token> by_surface_;
  std::map<Token, std::string> by_id_;
};

}  // namespace ensdec

#endif  // ENSDEC_WORD_MAP_H_
