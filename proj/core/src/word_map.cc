// word_map.cc
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

#include "ensdec/word_map.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ensdec/errors.h"

namespace ensdec {

WordMap WordMap::load(std::istream &in, const std::string &source) {
  WordMap wmap;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string surface, id_str, extra;
    if (!(fields >> surface)) continue;  // blank line
    if (!(fields >> id_str) || (fields >> extra))
      throw ParseError(source, lineno, "expected '<surface> <id>'");
    std::uint32_t id = 0;
    auto [ptr, ec] =
        std::from_chars(id_str.data(), id_str.data() + id_str.size(), id);
    if (ec != std::errc() || ptr != id_str.data() + id_str.size())
      throw ParseError(source, lineno, "invalid id '" + id_str + "'");
    if (wmap.by_surface_.count(surface))
      throw ParseError(source, lineno, "duplicate surface form '" + surface + "'");
    wmap.add(std::move(surface), make_token(id));
  }
  return wmap;
}

WordMap WordMap::load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open word map " + path);
  return load(in, path);
}

void WordMap::add(std::string surface, Token id) {
  by_id_.emplace(id, surface);
  by_surface_[std::move(surface)] = id;
}

std::optional<Token> WordMap::find(std::string_view surface) const {
  auto it = by_surface_.find(std::string(surface));
  if (it == by_surface_.end()) return std::nullopt;
  return it->second;
}

std::string WordMap::unk_surface() const {
  auto it = by_id_.find(kUnk);
  return it == by_id_.end() ? "<unk>" : it->second;
}

std::string WordMap::surface(Token id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? unk_surface() : it->second;
}

}  // namespace ensdec
