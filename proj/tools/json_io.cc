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

#include "json_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gbm::io {

Json LoadJson(const std::string& text_or_path) {
  const size_t first = text_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos &&
      (text_or_path[first] == '{' || text_or_path[first] == '[')) {
    return Json::parse(text_or_path);
  }
  std::ifstream in(text_or_path);
  if (!in) throw std::invalid_argument("cannot open " + text_or_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return Json::parse(buf.str());
}

ColoredPairPartition PartitionFromJson(const Json& j) {
  std::vector<Pair> pairs;
  for (const Json& p : j.at("pairs")) {
    pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  }
  if (j.contains("m") && j.at("m").get<int>() != static_cast<int>(pairs.size())) {
    throw std::invalid_argument("m does not match the number of pairs");
  }
  std::vector<int> colors(pairs.size(), 0);
  int num_colors = 1;
  if (j.contains("colors")) {
    colors = j.at("colors").get<std::vector<int>>();
    num_colors = 2;
  }
  if (j.contains("num_colors")) num_colors = j.at("num_colors").get<int>();
  return MakeColored(pairs, colors, num_colors);
}

Json PartitionToJson(const ColoredPairPartition& p) {
  Json pairs = Json::array();
  for (const auto& [l, r] : p.base.pairs()) pairs.push_back({l, r});
  return Json{{"m", p.m()},
              {"pairs", pairs},
              {"colors", p.colors},
              {"num_colors", p.num_colors}};
}

BrokenPairPartition BrokenFromJson(const Json& j) {
  const int n = j.at("n").get<int>();
  const int k = j.at("colors").get<int>();
  std::vector<ColorBlock> blocks(k);
  const Json& per = j.at("per_color");
  if (static_cast<int>(per.size()) != k) {
    throw std::invalid_argument("per_color needs one entry per color");
  }
  for (int c = 0; c < k; ++c) {
    const Json& e = per.at(c);
    if (e.contains("pairs")) {
      for (const Json& p : e.at("pairs")) {
        blocks[c].pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
      }
    }
    for (const char* side : {"left_legs", "right_legs"}) {
      if (!e.contains(side)) continue;
      auto& legs = side[0] == 'l' ? blocks[c].left_legs : blocks[c].right_legs;
      for (const auto& [pt, num] : e.at(side).items()) {
        legs[std::stoi(pt)] = num.get<int>();
      }
    }
  }
  return MakeBroken(n, blocks);
}

Json BrokenToJson(const BrokenPairPartition& d) {
  Json per = Json::array();
  for (int c = 0; c < d.num_colors(); ++c) {
    Json pairs = Json::array();
    for (const auto& [l, r] : d.PairsOfColor(c)) pairs.push_back({l, r});
    Json left = Json::object();
    for (const auto& [pt, num] : d.Legs(c, PointKind::kLeftLeg)) {
      left[std::to_string(pt)] = num;
    }
    Json right = Json::object();
    for (const auto& [pt, num] : d.Legs(c, PointKind::kRightLeg)) {
      right[std::to_string(pt)] = num;
    }
    per.push_back({{"pairs", pairs}, {"left_legs", left}, {"right_legs", right}});
  }
  return Json{{"n", d.size()}, {"colors", d.num_colors()}, {"per_color", per}};
}

Word WordFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("word must be a JSON list");
  Word w;
  for (const Json& x : j) {
    const std::string k = x.at("k").get<std::string>();
    if (k != "a" && k != "a*") throw std::invalid_argument("k must be a or a*");
    const int b = x.at("b").get<int>();
    const int i = x.at("i").get<int>();
    if (b != 0 && b != 1) throw std::invalid_argument("b must be 0 or 1");
    if (i < 1) throw std::invalid_argument("i must be >= 1");
    w.push_back(Letter{b, i, k == "a*"});
  }
  return w;
}

Json WordToJson(const Word& w) {
  Json out = Json::array();
  for (const Letter& x : w) {
    out.push_back({{"b", x.b}, {"i", x.i}, {"k", x.create ? "a*" : "a"}});
  }
  return out;
}

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) {
    // Exact binary value of the double.
    return Rational(j.get<double>());
  }
  throw std::invalid_argument("expected a number or a rational string");
}

QMatrix QMatrixFromJson(const Json& j) {
  const Json& rows = j.is_object() ? j.at("q") : j;
  std::vector<std::vector<Rational>> q;
  for (const Json& row : rows) {
    std::vector<Rational> r;
    for (const Json& x : row) r.push_back(RationalFromJson(x));
    q.push_back(std::move(r));
  }
  return QMatrix(std::move(q));
}

}  // namespace gbm::io
