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

#include "catprob/diagram.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace catprob::diagram {

namespace {

enum class Tok { kName, kNumber, kBraced, kPunct, kMatrix, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t begin;  // byte offsets into the source
  std::size_t end;
  std::size_t line;
  std::size_t col;
  std::size_t end_line;
  std::size_t end_col;
};

const std::set<std::string, std::less<>> kReserved = {
    "sys",  "gen",    "spo",   "semiring", "backend", "theory", "id", "sw",
    "disc", "state",  "effect", "copy",    "random",  "normalised", "I"};

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::kEnd, "", pos_, pos_, line_, col_, line_, col_});
        return out;
      }
      const bool first_on_line = out.empty() || out.back().end_line != line_;
      out.push_back(next());
      // Directive arguments (semiring ids, theory names) are read raw by the
      // parser.
      const std::string& t = out.back().text;
      if (first_on_line && out.back().kind == Tok::kName &&
          (t == "semiring" || t == "theory" || t == "backend")) {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      }
      // A bracketed literal after '=' is a generator matrix, read raw.
      if (out.back().kind == Tok::kPunct && out.back().text == "=") {
        skip_space_and_comments();
        if (pos_ < src_.size() && src_[pos_] == '[') out.push_back(matrix());
      }
    }
  }

 private:
  Token next() {
    const std::size_t begin = pos_, line = line_, col = col_;
    const char c = src_[pos_];
    Tok kind;
    std::string text;
    if (is_name_start(c)) {
      while (pos_ < src_.size() && is_name_char(src_[pos_])) advance();
      kind = Tok::kName;
      text = std::string(src_.substr(begin, pos_ - begin));
    } else if (is_digit(c)) {
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
      if (pos_ + 1 < src_.size() && (src_[pos_] == '/' || src_[pos_] == '.') &&
          is_digit(src_[pos_ + 1])) {
        advance();
        while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
      }
      if (pos_ < src_.size() && (src_[pos_] == 'i' || src_[pos_] == 'j') &&
          !(pos_ + 1 < src_.size() && is_name_char(src_[pos_ + 1]))) {
        advance();
      }
      kind = Tok::kNumber;
      text = std::string(src_.substr(begin, pos_ - begin));
    } else if (c == '{') {
      advance();
      while (pos_ < src_.size() && src_[pos_] != '}') advance();
      if (pos_ >= src_.size()) error(line, col, "unclosed '{'");
      text = std::string(src_.substr(begin + 1, pos_ - begin - 1));
      advance();
      kind = Tok::kBraced;
    } else if (src_.substr(pos_, 3) == "<->") {
      for (int i = 0; i < 3; ++i) advance();
      kind = Tok::kPunct;
      text = "<->";
    } else if (src_.substr(pos_, 2) == "->") {
      advance();
      advance();
      kind = Tok::kPunct;
      text = "->";
    } else if (std::string_view(";*+.()[],:=").find(c) != std::string_view::npos) {
      advance();
      kind = Tok::kPunct;
      text = std::string(1, c);
    } else {
      error(line, col, std::string("unexpected character '") + c + "'");
    }
    return {kind, std::move(text), begin, pos_, line, col, line_, col_};
  }

  Token matrix() {
    const std::size_t begin = pos_, line = line_, col = col_;
    int depth = 0;
    do {
      if (pos_ >= src_.size()) error(line, col, "unclosed '['");
      if (src_[pos_] == '[') ++depth;
      if (src_[pos_] == ']') --depth;
      advance();
    } while (depth > 0);
    return {Tok::kMatrix, std::string(src_.substr(begin, pos_ - begin)), begin, pos_, line, col,
            line_, col_};
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      if (src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void error(std::size_t line, std::size_t col, const std::string& what) {
    fail(ErrorCode::kSyntax,
         "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

Span span_of(const Token& a, const Token& b) {
  return {a.line, a.col, b.end_line, b.end_col};
}

Span join(const Span& a, const Span& b) { return {a.line, a.col, b.end_line, b.end_col}; }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), toks_(Lexer(src).run()) {}

  Program program() {
    Program p;
    while (at_declaration()) declaration(p);
    if (peek().kind != Tok::kEnd) {
      p.term = term();
      expect_end();
    }
    return p;
  }

  Node only_term() {
    Node t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }
  bool is_punct(const Token& t, std::string_view p) const {
    return t.kind == Tok::kPunct && t.text == p;
  }
  bool is_word(const Token& t, std::string_view w) const {
    return t.kind == Tok::kName && t.text == w;
  }

  [[noreturn]] void error(const Token& t, const std::string& what) const {
    const std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    fail(ErrorCode::kSyntax, "line " + std::to_string(t.line) + ", column " +
                                 std::to_string(t.col) + ": " + what + ", found " + found);
  }

  const Token& expect_punct(std::string_view p) {
    if (!is_punct(peek(), p)) error(peek(), "expected '" + std::string(p) + "'");
    return take();
  }

  std::string expect_name(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Tok::kName || kReserved.count(t.text)) error(t, "expected " + what);
    return take().text;
  }

  void expect_end() {
    if (peek().kind != Tok::kEnd) error(peek(), "expected end of input");
  }

  bool at_declaration() const {
    const Token& t = peek();
    if (t.kind != Tok::kName) return false;
    return t.text == "sys" || t.text == "gen" || t.text == "spo" || t.text == "semiring" ||
           t.text == "backend" || t.text == "theory";
  }

  // The rest of the keyword's line as raw text; skips its tokens.
  std::string rest_of_line(const Token& keyword) {
    std::size_t end = src_.find('\n', keyword.end);
    if (end == std::string_view::npos) end = src_.size();
    std::string text(src_.substr(keyword.end, end - keyword.end));
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    const auto first = text.find_first_not_of(" \t\r");
    const auto last = text.find_last_not_of(" \t\r");
    while (peek().kind != Tok::kEnd && peek().line == keyword.line) take();
    if (first == std::string::npos) error(keyword, "expected an argument");
    return text.substr(first, last - first + 1);
  }

  // Names up to the end of the line or a stop token; "I" alone is the unit.
  std::vector<std::string> wire_list(std::size_t line, std::string_view stop) {
    std::vector<std::string> out;
    bool unit = false;
    while (peek().kind == Tok::kName && peek().line == line && !is_word(peek(), stop)) {
      if (peek().text == "I") {
        take();
        unit = true;
        continue;
      }
      out.push_back(expect_name("a system name"));
    }
    if (unit && !out.empty()) error(peek(), "'I' cannot be combined with other wires");
    return out;
  }

  void declaration(Program& p) {
    const Token& kw = take();
    if (kw.text == "semiring") {
      p.semirings.push_back(rest_of_line(kw));
    } else if (kw.text == "theory") {
      p.theories.push_back(rest_of_line(kw));
    } else if (kw.text == "backend") {
      const std::string b = rest_of_line(kw);
      if (b != "classical" && b != "quantum") error(kw, "backend must be classical or quantum");
      p.backend = b;
    } else if (kw.text == "sys") {
      sys_decl(p, kw);
    } else if (kw.text == "gen") {
      gen_decl(p, kw);
    } else {
      spo_decl(p, kw);
    }
  }

  void sys_decl(Program& p, const Token& kw) {
    SysDecl s;
    s.name = expect_name("a system name");
    const Token& kind = peek();
    if (is_word(kind, "classical")) {
      s.kind = WireKind::kClassical;
    } else if (is_word(kind, "quantum")) {
      s.kind = WireKind::kQuantum;
    } else {
      error(kind, "expected 'classical' or 'quantum'");
    }
    take();
    const Token& size = take();
    if (size.kind == Tok::kNumber && size.text.find_first_not_of("0123456789") ==
                                         std::string::npos) {
      const std::size_t n = std::stoul(size.text);
      if (n == 0) error(size, "systems need at least one state");
      s.basis = matcat::ClassicalObject::range(n);
    } else if (size.kind == Tok::kBraced && s.kind == WireKind::kClassical) {
      std::vector<std::string> labels;
      std::string cur;
      for (char c : size.text + " ") {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
          if (!cur.empty()) labels.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      try {
        s.basis = matcat::ClassicalObject(labels);
      } catch (const Error& e) {
        error(size, e.what());
      }
    } else {
      error(size, "expected a size or a label list");
    }
    s.span = span_of(kw, size);
    p.systems.push_back(std::move(s));
  }

  void gen_decl(Program& p, const Token& kw) {
    GenDecl g;
    g.name = expect_name("a generator name");
    expect_punct(":");
    g.dom = wire_list(kw.line, "");
    expect_punct("->");
    g.cod = wire_list(kw.line, "");
    expect_punct("=");
    const Token& src = peek();
    const Token* last = &src;
    if (is_word(src, "random")) {
      take();
      g.source = GenSource::kRandom;
      if (is_word(peek(), "normalised") && peek().line == src.line) {
        last = &take();
        g.source = GenSource::kRandomNormalised;
      }
    } else if (src.kind == Tok::kMatrix) {
      take();
      g.source = GenSource::kMatrix;
      g.matrix = src.text;
      try {
        parse_matrix_literal(g.matrix);
      } catch (const Error& e) {
        error(src, e.what());
      }
    } else {
      error(src, "expected a matrix literal or 'random'");
    }
    g.span = span_of(kw, *last);
    p.gens.push_back(std::move(g));
  }

  void spo_decl(Program& p, const Token& kw) {
    SpoDecl s;
    s.prep = expect_name("a preparation name");
    s.obs = expect_name("an observation name");
    expect_punct(":");
    s.classical = expect_name("a classical system");
    const Token& arrow = expect_punct("<->");
    s.system = wire_list(kw.line, "");
    s.span = span_of(kw, arrow);
    p.spos.push_back(std::move(s));
  }

  Node binary(NodeKind kind, Node l, Node r) {
    Node n;
    n.kind = kind;
    n.span = join(l.span, r.span);
    n.children.push_back(std::move(l));
    n.children.push_back(std::move(r));
    return n;
  }

  Node term() {
    Node left = seq();
    while (is_punct(peek(), "+")) {
      take();
      left = binary(NodeKind::kSum, std::move(left), seq());
    }
    return left;
  }

  Node seq() {
    Node left = par();
    while (is_punct(peek(), ";")) {
      take();
      left = binary(NodeKind::kSeq, std::move(left), par());
    }
    return left;
  }

  Node par() {
    Node left = atom();
    while (is_punct(peek(), "*")) {
      take();
      left = binary(NodeKind::kPar, std::move(left), atom());
    }
    return left;
  }

  std::string wire_arg() { return expect_name("a system name"); }

  std::string label_arg() {
    const Token& t = peek();
    if (t.kind == Tok::kName || t.kind == Tok::kNumber || t.kind == Tok::kBraced) {
      return take().text;
    }
    error(t, "expected a label");
  }

  Node atom() {
    const Token& t = peek();
    if (t.kind == Tok::kNumber || t.kind == Tok::kBraced) {
      take();
      expect_punct(".");
      Node n;
      n.kind = NodeKind::kScale;
      n.scalar = t.text;
      Node child = atom();
      n.span = join(span_of(t, t), child.span);
      n.children.push_back(std::move(child));
      return n;
    }
    if (is_punct(t, "(")) {
      take();
      Node inner = term();
      const Token& close = expect_punct(")");
      inner.span = span_of(t, close);
      return inner;
    }
    if (t.kind != Tok::kName) error(t, "expected a diagram");
    static const std::map<std::string, NodeKind, std::less<>> kPrimitives = {
        {"id", NodeKind::kId},       {"sw", NodeKind::kSwap},     {"disc", NodeKind::kDisc},
        {"state", NodeKind::kState}, {"effect", NodeKind::kEffect}, {"copy", NodeKind::kCopy}};
    const auto prim = kPrimitives.find(t.text);
    if (prim == kPrimitives.end()) {
      Node n;
      n.kind = NodeKind::kGen;
      n.name = expect_name("a generator name");
      n.span = span_of(t, t);
      return n;
    }
    take();
    Node n;
    n.kind = prim->second;
    expect_punct("[");
    switch (n.kind) {
      case NodeKind::kId:
      case NodeKind::kDisc:
        while (peek().kind == Tok::kName) {
          if (peek().text == "I") {
            take();
            continue;
          }
          n.wires.push_back(wire_arg());
          if (is_punct(peek(), ",")) take();
        }
        break;
      case NodeKind::kSwap:
        n.wires.push_back(wire_arg());
        expect_punct(",");
        n.wires.push_back(wire_arg());
        break;
      case NodeKind::kState:
      case NodeKind::kEffect:
        n.wires.push_back(wire_arg());
        expect_punct(",");
        n.label = label_arg();
        break;
      default:
        n.wires.push_back(wire_arg());
        break;
    }
    const Token& close = expect_punct("]");
    n.span = span_of(t, close);
    return n;
  }

  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

bool plain_number(const std::string& s) {
  try {
    const auto toks = Lexer(s).run();
    return toks.size() == 2 && toks[0].kind == Tok::kNumber;
  } catch (const Error&) {
    return false;
  }
}

bool plain_name(const std::string& s) {
  if (s.empty() || !is_name_start(s[0]) || kReserved.count(s)) return false;
  for (char c : s) {
    if (!is_name_char(c)) return false;
  }
  return true;
}

std::string label_text(const std::string& label) {
  return plain_name(label) || plain_number(label) ? label : "{" + label + "}";
}

std::string print(const Node& t, int context) {
  auto wrap = [&](int own, std::string s) {
    return own < context ? "(" + s + ")" : s;
  };
  switch (t.kind) {
    case NodeKind::kSum:
      return wrap(0, print(t.children[0], 0) + " + " + print(t.children[1], 1));
    case NodeKind::kSeq:
      return wrap(1, print(t.children[0], 1) + " ; " + print(t.children[1], 2));
    case NodeKind::kPar:
      return wrap(2, print(t.children[0], 2) + " * " + print(t.children[1], 3));
    case NodeKind::kScale:
      return (plain_number(t.scalar) ? t.scalar : "{" + t.scalar + "}") + " . " +
             print(t.children[0], 3);
    case NodeKind::kGen:
      return t.name;
    case NodeKind::kId: {
      std::string s = "id[";
      for (std::size_t i = 0; i < t.wires.size(); ++i) s += (i ? " " : "") + t.wires[i];
      return s + "]";
    }
    case NodeKind::kSwap:
      return "sw[" + t.wires[0] + ", " + t.wires[1] + "]";
    case NodeKind::kDisc: {
      std::string s = "disc[";
      for (std::size_t i = 0; i < t.wires.size(); ++i) s += (i ? " " : "") + t.wires[i];
      return s + "]";
    }
    case NodeKind::kState:
      return "state[" + t.wires[0] + ", " + label_text(t.label) + "]";
    case NodeKind::kEffect:
      return "effect[" + t.wires[0] + ", " + label_text(t.label) + "]";
    case NodeKind::kCopy:
      return "copy[" + t.wires[0] + "]";
  }
  return "";
}

[[noreturn]] void type_error(const Span& at, const std::string& what) {
  fail(ErrorCode::kType, at.to_string() + ": " + what);
}

std::string signature(const Node& n) {
  return format_wires(n.dom) + " -> " + format_wires(n.cod);
}

const SysDecl& system(const Declarations& d, const std::string& w, const Span& at) {
  const auto it = d.systems.find(w);
  if (it == d.systems.end()) type_error(at, "undeclared system '" + w + "'");
  return it->second;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::string Span::to_string() const {
  return std::to_string(line) + ":" + std::to_string(col) + "-" + std::to_string(end_line) +
         ":" + std::to_string(end_col);
}

bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.name != b.name || a.wires != b.wires || a.label != b.label ||
      a.scalar != b.scalar || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_tree(a.children[i], b.children[i])) return false;
  }
  return true;
}

Program parse(std::string_view source) { return Parser(source).program(); }

Node parse_term(std::string_view source) { return Parser(source).only_term(); }

std::string pretty(const Node& term) { return print(term, 0); }

Program merge(const Program& base, const Program& extra) {
  Program out = base;
  out.semirings.insert(out.semirings.end(), extra.semirings.begin(), extra.semirings.end());
  out.theories.insert(out.theories.end(), extra.theories.begin(), extra.theories.end());
  if (extra.backend) {
    if (out.backend && *out.backend != *extra.backend) {
      fail(ErrorCode::kDuplicateDeclaration, "conflicting backend directives");
    }
    out.backend = extra.backend;
  }
  out.systems.insert(out.systems.end(), extra.systems.begin(), extra.systems.end());
  out.gens.insert(out.gens.end(), extra.gens.begin(), extra.gens.end());
  out.spos.insert(out.spos.end(), extra.spos.begin(), extra.spos.end());
  out.term = extra.term;
  return out;
}

std::string format_wires(const std::vector<std::string>& wires) {
  if (wires.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < wires.size(); ++i) s += (i ? " " : "") + wires[i];
  return s;
}

Declarations declarations(const Program& p) {
  Declarations d;
  std::set<std::string> names;
  auto claim = [&](const std::string& name, const Span& at) {
    if (!names.insert(name).second) {
      fail(ErrorCode::kDuplicateDeclaration, at.to_string() + ": '" + name + "' is declared twice");
    }
  };
  for (const SysDecl& s : p.systems) {
    claim(s.name, s.span);
    d.systems.emplace(s.name, s);
  }
  for (const GenDecl& g : p.gens) {
    claim(g.name, g.span);
    for (const auto& w : concat(g.dom, g.cod)) system(d, w, g.span);
    d.gens.emplace(g.name, g);
  }
  for (const SpoDecl& s : p.spos) {
    claim(s.prep, s.span);
    claim(s.obs, s.span);
    if (system(d, s.classical, s.span).kind != WireKind::kClassical) {
      type_error(s.span, "'" + s.classical + "' must be a classical system");
    }
    for (const auto& w : s.system) system(d, w, s.span);
    GenDecl prep{s.prep, {s.classical}, s.system, GenSource::kRandom, "", s.span};
    GenDecl obs{s.obs, s.system, {s.classical}, GenSource::kRandom, "", s.span};
    d.gens.emplace(s.prep, prep);
    d.gens.emplace(s.obs, obs);
  }
  return d;
}

Node typecheck(const Node& term, const Declarations& d) {
  Node n = term;
  n.children.clear();
  for (const Node& c : term.children) n.children.push_back(typecheck(c, d));
  auto classical = [&](const std::string& w) {
    if (system(d, w, n.span).kind != WireKind::kClassical) {
      type_error(n.span, "'" + w + "' is a quantum system; this needs a classical one");
    }
  };
  switch (n.kind) {
    case NodeKind::kSeq: {
      const Node& l = n.children[0];
      const Node& r = n.children[1];
      if (l.cod != r.dom) {
        type_error(n.span, "cannot compose " + signature(l) + " (at " + l.span.to_string() +
                               ") with " + signature(r) + " (at " + r.span.to_string() + ")");
      }
      n.dom = l.dom;
      n.cod = r.cod;
      break;
    }
    case NodeKind::kPar:
      n.dom = concat(n.children[0].dom, n.children[1].dom);
      n.cod = concat(n.children[0].cod, n.children[1].cod);
      break;
    case NodeKind::kSum: {
      const Node& l = n.children[0];
      const Node& r = n.children[1];
      if (l.dom != r.dom || l.cod != r.cod) {
        type_error(n.span, "cannot add " + signature(l) + " (at " + l.span.to_string() +
                               ") and " + signature(r) + " (at " + r.span.to_string() + ")");
      }
      n.dom = l.dom;
      n.cod = l.cod;
      break;
    }
    case NodeKind::kScale:
      n.dom = n.children[0].dom;
      n.cod = n.children[0].cod;
      break;
    case NodeKind::kGen: {
      const auto it = d.gens.find(n.name);
      if (it == d.gens.end()) {
        fail(ErrorCode::kUnboundGenerator,
             n.span.to_string() + ": undeclared generator '" + n.name + "'");
      }
      n.dom = it->second.dom;
      n.cod = it->second.cod;
      break;
    }
    case NodeKind::kId:
      for (const auto& w : n.wires) system(d, w, n.span);
      n.dom = n.cod = n.wires;
      break;
    case NodeKind::kSwap:
      system(d, n.wires[0], n.span);
      system(d, n.wires[1], n.span);
      n.dom = n.wires;
      n.cod = {n.wires[1], n.wires[0]};
      break;
    case NodeKind::kDisc:
      for (const auto& w : n.wires) system(d, w, n.span);
      n.dom = n.wires;
      n.cod = {};
      break;
    case NodeKind::kState:
    case NodeKind::kEffect: {
      classical(n.wires[0]);
      if (!system(d, n.wires[0], n.span).basis.find(n.label)) {
        type_error(n.span, "'" + n.label + "' is not a label of " + n.wires[0]);
      }
      if (n.kind == NodeKind::kState) {
        n.cod = n.wires;
      } else {
        n.dom = n.wires;
      }
      break;
    }
    case NodeKind::kCopy:
      classical(n.wires[0]);
      n.dom = n.wires;
      n.cod = {n.wires[0], n.wires[0]};
      break;
  }
  return n;
}

bool all_classical(const Declarations& d, const std::vector<std::string>& wires) {
  for (const auto& w : wires) {
    if (d.systems.at(w).kind != WireKind::kClassical) return false;
  }
  return true;
}

matcat::ClassicalObject basis_of(const Declarations& d, const std::vector<std::string>& wires) {
  matcat::ClassicalObject out = matcat::ClassicalObject::unit();
  for (const auto& w : wires) out = matcat::tensor(out, d.systems.at(w).basis);
  return out;
}

matcat::ClassicalObject wire_object(const ClassicalBackend&, const SysDecl& s) {
  if (s.kind != WireKind::kClassical) {
    fail(ErrorCode::kType, s.span.to_string() + ": the classical backend has no quantum system '" +
                               s.name + "'");
  }
  return s.basis;
}

quantum::QSystem wire_object(const quantum::QuantumBackend&, const SysDecl& s) {
  return s.kind == WireKind::kClassical ? quantum::QSystem::classical(s.basis)
                                        : quantum::QSystem::quantum(s.basis.size());
}

matcat::Morphism retype(const ClassicalBackend&, const matcat::Morphism& f,
                        const matcat::ClassicalObject& dom, const matcat::ClassicalObject& cod) {
  return matcat::Morphism(dom, cod, f.matrix());
}

quantum::Superoperator retype(const quantum::QuantumBackend&, const quantum::Superoperator& f,
                              const quantum::QSystem& dom, const quantum::QSystem& cod) {
  return quantum::reinterpret(f, dom, cod);
}

}  // namespace catprob::diagram
