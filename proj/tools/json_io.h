// Copyright 2026 The gbm Authors.
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

#ifndef GBM_TOOLS_JSON_IO_H_
#define GBM_TOOLS_JSON_IO_H_

#include <string>

#include "gbm/broken_partition.h"
#include "gbm/pair_partition.h"
#include "gbm/q_product.h"
#include "gbm/word.h"
#include "json.hpp"

namespace gbm::io {

using Json = nlohmann::ordered_json;

// Reads inline JSON when the text starts with '{' or '[', else a file.
Json LoadJson(const std::string& text_or_path);

// {"m", "pairs", "colors" (optional), "num_colors" (optional)}.
ColoredPairPartition PartitionFromJson(const Json& j);
Json PartitionToJson(const ColoredPairPartition& p);

// {"n", "colors", "per_color": [{"pairs", "left_legs", "right_legs"}]}.
BrokenPairPartition BrokenFromJson(const Json& j);
Json BrokenToJson(const BrokenPairPartition& d);

// [{"b": 0, "i": 1, "k": "a*"}, ...].
Word WordFromJson(const Json& j);
Json WordToJson(const Word& w);

// {"q": [[...], ...]} or a bare matrix; entries are numbers or "p/q".
QMatrix QMatrixFromJson(const Json& j);
Rational RationalFromJson(const Json& j);

}  // namespace gbm::io

#endif  // GBM_TOOLS_JSON_IO_H_
