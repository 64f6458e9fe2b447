// Copyright 2026 The catprob Authors
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

#include "catprob/literal.hpp"

#include <cctype>

#include "catprob/error.hpp"

namespace catprob {

namespace {

class LiteralReader {
 public:
  explicit LiteralReader(std::string_view text) : text_(text) {}

  MatrixLiteral read() {
    MatrixLiteral out;
    skip_space();
    expect('[');
    skip_space();
    if (peek() == '[') {
      while (true) {
        out.rows.push_back(read_row());
        skip_space();
        if (peek() == ',') {
          ++pos_;
          skip_space();
          continue;
        }
        break;
      }
      expect(']');
    } else {
      out.flat = true;
      out.rows.push_back(read_items());
      expect(']');
    }
    skip_space();
    if (pos_ != text_.size()) error("trailing characters");
    return out;
  }

 private:
  std::vector<std::string> read_row() {
    expect('[');
    auto items = read_items();
    expect(']');
    return items;
  }

  std::vector<std::string> read_items() {
    std::vector<std::string> items;
    while (true) {
      skip_space();
      std::string item;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' &&
             text_[pos_] != '[') {
        if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          item.push_back(text_[pos_]);
        }
        ++pos_;
      }
      if (item.empty()) error("empty entry");
      items.push_back(std::move(item));
      if (peek() != ',') break;
      ++pos_;
    }
    return items;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kSyntax, "matrix literal at offset " + std::to_string(pos_) +
                                 ": " + what + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MatrixLiteral parse_matrix_literal(std::string_view text) {
  return LiteralReader(text).read();
}

Matrix to_matrix(const Semiring& s, const MatrixLiteral& lit, bool flat_as_column) {
  if (lit.flat && flat_as_column) {
    std::vector<std::vector<std::string>> column;
    for (const auto& e : lit.rows.front()) column.push_back({e});
    return Matrix::from_literals(s, column);
  }
  return Matrix::from_literals(s, lit.rows);
}

}  // namespace catprob
