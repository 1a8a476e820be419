// arpa_fixtures.h
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

#ifndef ENSDEC_TESTS_ARPA_FIXTURES_H_
#define ENSDEC_TESTS_ARPA_FIXTURES_H_

// Hand-built backoff models over the words 3 ("a") and 4 ("b"). Each one is
// consistent: for every context, the explicit probabilities plus the
// backoff-weighted lower-order remainder sum to one. The values are
// log10 of simple fractions, written with 12 decimals.
//
//   unigram  p(a)=1/2 p(b)=1/4 p(</s>)=1/4
//   bigram   p(a|<s>)=0.6, alpha(<s>)=0.4/(1-1/2)=0.8
//            p(b|a)=1/4,   alpha(a)=(1-1/4)/(1-1/4)=1
//   trigram  p(b|<s> a)=1/2,  alpha(<s> a)=(1/2)/(1-1/4)=2/3
//            p(</s>|a b)=0.9, alpha(a b)=0.1/(1-1/4)=2/15

namespace ensdec::testing {

inline constexpr const char *kArpaOrder1 = R"(\data\
ngram 1=2

\1-grams:
-0.301029995664 3
-0.301029995664 </s>

\end\
)";

inline constexpr const char *kArpaOrder2 = R"(\data\
ngram 1=4
ngram 2=2

\1-grams:
-0.301029995664 3 0.000000000000
-0.602059991328 4
-0.602059991328 </s>
-99 <s> -0.096910013008

\2-grams:
-0.221848749616 <s> 3
-0.602059991328 3 4

\end\
)";

inline constexpr const char *kArpaOrder3 = R"(\data\
ngram 1=4
ngram 2=2
ngram 3=2

\1-grams:
-0.301029995664 3 0.000000000000
-0.602059991328 4
-0.602059991328 </s>
-99 <s> -0.096910013008

\2-grams:
-0.221848749616 <s> 3 -0.176091259056
-0.602059991328 3 4 -0.875061263392

\3-grams:
-0.301029995664 <s> 3 4
-0.045757490561 3 4 </s>

\end\
)";

// p(</s>|a) = 1, written as log10 0.
inline constexpr const char *kArpaEosAfterA = R"(\data\
ngram 1=3
ngram 2=1

\1-grams:
-0.301029995664 3
-0.301029995664 </s>
-99 <s>

\2-grams:
0 3 </s>

\end\
)";

}  // namespace ensdec::testing

#endif  // ENSDEC_TESTS_ARPA_FIXTURES_H_
