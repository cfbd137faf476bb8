// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dax/errors.hpp"

namespace dax::detail {

// Minimal s-expression reader with source positions. Atoms are bare
// tokens; comments run from ';' to end of line.
struct SNode {
  bool is_atom = false;
  std::string atom;
  std::vector<SNode> items;
  int line = 1, col = 1;
};

class SexpReader {
public:
  explicit SexpReader(const std::string &text) : text_(text) {}

  // Reads every top-level form.
  std::vector<SNode> read_all() {
    std::vector<SNode> out;
    skip_ws();
    while (!eof()) {
      out.push_back(read());
      skip_ws();
    }
    return out;
  }

  SNode read() {
    skip_ws();
    if (eof())
      throw ParseError(line_, col_, "unexpected end of input");
    if (peek() == ')')
      throw ParseError(line_, col_, "unexpected ')'");
    if (peek() == '(') {
      SNode node;
      node.line = line_;
      node.col = col_;
      advance();
      skip_ws();
      while (!eof() && peek() != ')') {
        node.items.push_back(read());
        skip_ws();
      }
      if (eof())
        throw ParseError(node.line, node.col, "unclosed '('");
      advance(); // ')'
      return node;
    }
    SNode node;
    node.is_atom = true;
    node.line = line_;
    node.col = col_;
    while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) &&
           peek() != '(' && peek() != ')' && peek() != ';')
      node.atom.push_back(take());
    if (node.atom.empty())
      throw ParseError(line_, col_, "empty token");
    return node;
  }

private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() {
    char c = text_[pos_];
    advance();
    return c;
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string &text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

} // namespace dax::detail
