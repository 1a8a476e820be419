// word_count_predictor.h
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

#ifndef ENSDEC_WORD_COUNT_PREDICTOR_H_
#define ENSDEC_WORD_COUNT_PREDICTOR_H_

#include "ensdec/predictor.h"

namespace ensdec {

// Charges a constant penalty for every token except EOS.
class WordCountPredictor : public Predictor {
 public:
  explicit WordCountPredictor(Cost penalty) : penalty_(penalty) {}

  std::string kind() const override { return "wc"; }
  bool admissible() const override { return penalty_ >= 0; }

 protected:
  void do_initialize(std::span<const Token>) override {}
  Posterior do_predict_next() const override {
    return Posterior{{{kEos, 0.0}}, penalty_};
  }
  void do_consume(Token) override {}
  std::any do_get_state() const override { return {}; }
  void do_set_state(const std::any &) override {}

 private:
  Cost penalty_;
};

}  // namespace ensdec

#endif  // ENSDEC_WORD_COUNT_PREDICTOR_H_
