// Copyright 2026 The sicdet developers
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

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sicdet/partition.hpp"

using namespace sicdet;

TEST_CASE("partition expressions round trip") {
  for (const std::string text : {"A|B", "B C|A", "A|(B|C)", "A|B|C",
                                 "A B C|D"}) {
    const Partition p = Partition::parse(text);
    REQUIRE(p.to_string() == text);
    REQUIRE(Partition::parse(p.to_string()).to_string() == text);
  }
  // whitespace and redundant parentheses normalize away
  REQUIRE(Partition::parse("  A |  ( B C )").to_string() == "A|B C");
  REQUIRE(Partition::parse("(A B)|(C D)").to_string() == "A B|C D");
  REQUIRE(Partition::parse("(A|B)|C").to_string() == "A|B|C");
}

TEST_CASE("partition structure") {
  const Partition p = Partition::parse("B C|A");
  const auto& root = p.node(p.root());
  REQUIRE(root.kind == Partition::Kind::Split);
  REQUIRE(p.leaves_under(root.children[0]) == std::vector<int>{1, 2});
  REQUIRE(p.leaves_under(root.children[1]) == std::vector<int>{0});
  REQUIRE(p.leaves() == std::vector<int>{1, 2, 0});

  const Partition q = Partition::parse("(A B)|(C D)");
  const auto& qroot = q.node(q.root());
  REQUIRE(q.leaves_under(qroot.children[0]) == std::vector<int>{0, 1});
  REQUIRE(q.leaves_under(qroot.children[1]) == std::vector<int>{2, 3});
}

TEST_CASE("partition validation") {
  REQUIRE_NOTHROW(Partition::parse("B C|A").validate(3));
  // no cut at the top level
  REQUIRE_THROWS_AS(Partition::parse("A B C").validate(3),
                    std::invalid_argument);
  // duplicate subsystem
  REQUIRE_THROWS_AS(Partition::parse("A A|B").validate(3),
                    std::invalid_argument);
  // wrong count
  REQUIRE_THROWS_AS(Partition::parse("A|B").validate(3),
                    std::invalid_argument);
  // label out of range for the state
  REQUIRE_THROWS_AS(Partition::parse("A|D").validate(3),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(Partition::parse("A B|D").validate(3),
                    std::invalid_argument);
}

TEST_CASE("malformed partition text") {
  for (const std::string text : {"A|(B", "A|B)", "", "|A", "A|", "A||B",
                                 "A-B", "(", "()|A"}) {
    INFO("text = '" << text << "'");
    REQUIRE_THROWS_AS(Partition::parse(text), std::invalid_argument);
  }
}
