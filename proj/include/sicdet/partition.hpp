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

#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sicdet {

// Partition expressions name subsystems by position: A is subsystem 0,
// B is 1, and so on. '|' splits (left associative), juxtaposition with
// spaces groups, parentheses nest: "A|B C", "(A B)|(C D)", "A|(B|C)".
class Partition {
 public:
  enum class Kind { Leaf, Group, Split };

  struct Node {
    Kind kind = Kind::Leaf;
    int subsystem = -1;               // Leaf only
    std::vector<std::size_t> children;  // Group (>= 2) or Split (exactly 2)
  };

  const Node& node(std::size_t i) const { return nodes_.at(i); }
  std::size_t root() const { return root_; }
  bool is_split(std::size_t i) const {
    return nodes_.at(i).kind == Kind::Split;
  }

  // Subsystems under a node, left to right.
  std::vector<int> leaves_under(std::size_t i) const {
    std::vector<int> out;
    collect(i, out);
    return out;
  }
  std::vector<int> leaves() const { return leaves_under(root_); }

  // Every subsystem 0..n-1 exactly once, and the top level must be a cut.
  void validate(std::size_t subsystem_count) const {
    if (nodes_.at(root_).kind != Kind::Split)
      throw std::invalid_argument("partition: no '|' cut at the top level");
    std::vector<int> seen = leaves();
    std::sort(seen.begin(), seen.end());
    if (seen.size() != subsystem_count)
      throw std::invalid_argument(
          "partition: expression names " + std::to_string(seen.size()) +
          " subsystems, state has " + std::to_string(subsystem_count));
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (seen[k] != static_cast<int>(k))
        throw std::invalid_argument(
            "partition: each subsystem must appear exactly once");
  }

  std::string to_string() const { return print(root_, false); }

  static Partition parse(const std::string& text);

 private:
  std::vector<Node> nodes_;
  std::size_t root_ = 0;

  std::size_t add(Node n) {
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
  }

  void collect(std::size_t i, std::vector<int>& out) const {
    const Node& n = nodes_.at(i);
    if (n.kind == Kind::Leaf) {
      out.push_back(n.subsystem);
      return;
    }
    for (std::size_t c : n.children) collect(c, out);
  }

  std::string print(std::size_t i, bool parenthesize_split) const {
    const Node& n = nodes_.at(i);
    if (n.kind == Kind::Leaf)
      return std::string(1, static_cast<char>('A' + n.subsystem));
    std::string out;
    if (n.kind == Kind::Split) {
      // Left-associative, so only a right-hand split needs parentheses.
      out = print(n.children[0], false) + "|" + print(n.children[1], true);
      if (parenthesize_split) out = "(" + out + ")";
      return out;
    }
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      if (k) out += " ";
      const Node& c = nodes_.at(n.children[k]);
      if (c.kind == Kind::Leaf)
        out += print(n.children[k], false);
      else
        out += "(" + print(n.children[k], false) + ")";
    }
    return out;
  }

  // Recursive descent over: expr := term ('|' term)*
  //                         term := atom+
  //                         atom := 'A'..'Z' | '(' expr ')'
  struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    Partition& out;

    void skip_ws() {
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool at_atom() {
      return pos < s.size() && (s[pos] == '(' || (s[pos] >= 'A' && s[pos] <= 'Z'));
    }

    std::size_t expr() {
      std::size_t left = term();
      skip_ws();
      while (pos < s.size() && s[pos] == '|') {
        ++pos;
        std::size_t right = term();
        Node split;
        split.kind = Kind::Split;
        split.children = {left, right};
        left = out.add(std::move(split));
        skip_ws();
      }
      return left;
    }

    std::size_t term() {
      skip_ws();
      if (!at_atom())
        throw std::invalid_argument("partition: expected a subsystem label at position " +
                                    std::to_string(pos));
      std::vector<std::size_t> atoms;
      while (true) {
        atoms.push_back(atom());
        skip_ws();
        if (!at_atom()) break;
      }
      if (atoms.size() == 1) return atoms[0];
      Node group;
      group.kind = Kind::Group;
      group.children = std::move(atoms);
      return out.add(std::move(group));
    }

    std::size_t atom() {
      skip_ws();
      if (s[pos] == '(') {
        ++pos;
        std::size_t inner = expr();
        skip_ws();
        if (pos >= s.size() || s[pos] != ')')
          throw std::invalid_argument("partition: unbalanced parenthesis");
        ++pos;
        return inner;
      }
      Node leaf;
      leaf.kind = Kind::Leaf;
      leaf.subsystem = s[pos] - 'A';
      ++pos;
      return out.add(std::move(leaf));
    }
  };
};

inline Partition Partition::parse(const std::string& text) {
  Partition p;
  Parser parser{text, 0, p};
  p.root_ = parser.expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw std::invalid_argument("partition: trailing characters at position " +
                                std::to_string(parser.pos));
  return p;
}

}  // namespace sicdet
