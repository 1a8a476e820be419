// types.h
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

#ifndef ENSDEC_TYPES_H_
#define ENSDEC_TYPES_H_

#include <cstdint>
#include <limits>
#include <string>

namespace ensdec {

// Target/source vocabulary id. Ids are dense per run; 0..2 are reserved.
enum class Token : std::uint32_t {};

inline constexpr Token kUnk{0};
inline constexpr Token kBos{1};
inline constexpr Token kEos{2};
inline constexpr std::uint32_t kFirstCorpusId = 3;

constexpr std::uint32_t to_int(Token t) { return static_cast<std::uint32_t>(t); }
constexpr Token make_token(std::uint32_t id) { return Token{id}; }

// Negative natural-log probability. Lower is better, +inf means blocked.
using Cost = double;
inline constexpr Cost kInfCost = std::numeric_limits<Cost>::infinity();

using StateId = std::uint32_t;

// Fixed "%.6f" rendering used by every text format.
std::string format_cost(Cost c);

}  // namespace ensdec

#endif  // ENSDEC_TYPES_H_
