#include "ysc/seedlang.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ysc::seedlang {

namespace {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind = End;
  std::string text;
  int col = 0;
};

/// Tokenizes one logical line. Symbols: == != -> && ( ) , : = - and the
/// Unicode congruence signs (normalised to ==/!=).
std::vector<Token> lex_line(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const int col = static_cast<int>(i) + 1;
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      out.push_back({Token::Ident, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Int, line.substr(i, j - i), col});
      i = j;
      continue;
    }
    // The UTF-8 congruence sign U+2261 and its negation.
    if (line.compare(i, 3, "\xe2\x89\xa1") == 0) {
      out.push_back({Token::Sym, "==", col});
      i += 3;
      continue;
    }
    if (c == '!' && line.compare(i + 1, 3, "\xe2\x89\xa1") == 0) {
      out.push_back({Token::Sym, "!=", col});
      i += 4;
      continue;
    }
    for (const char* two : {"==", "!=", "->", "&&"}) {
      if (line.compare(i, 2, two) == 0) {
        out.push_back({Token::Sym, two, col});
        i += 2;
        goto next;
      }
    }
    if (std::string("(),:=-").find(c) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, c), col});
      ++i;
      continue;
    }
    throw ParseError(line_no, col, "unexpected character '" + std::string(1, c) + "'");
  next:;
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line_no)
      : toks_(std::move(toks)), line_(line_no) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Token::End; }

  Token expect_sym(const std::string& s) {
    if (peek().kind != Token::Sym || peek().text != s)
      throw ParseError(line_, peek().col, "expected '" + s + "'");
    return toks_[pos_++];
  }

  Token expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident)
      throw ParseError(line_, peek().col, "expected " + what);
    return toks_[pos_++];
  }

  std::pair<int, int> expect_int(const std::string& what) {
    if (peek().kind != Token::Int)
      throw ParseError(line_, peek().col, "expected " + what);
    const Token t = toks_[pos_++];
    return {std::stoi(t.text), t.col};
  }

  bool accept_sym(const std::string& s) {
    if (peek().kind == Token::Sym && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_ident(const std::string& s) {
    if (peek().kind == Token::Ident && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end() {
    if (!at_end())
      throw ParseError(line_, peek().col, "unexpected trailing '" + peek().text + "'");
  }

  int line() const { return line_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

/// term := "e" INT | "e" INT "-" "e" INT; entry indices are validated
/// against n.
std::pair<int, int> parse_term(LineParser& p, int n) {
  auto entry = [&]() {
    const Token t = p.expect_ident("an entry reference like e1");
    if (t.text.size() < 2 || t.text[0] != 'e' ||
        !std::all_of(t.text.begin() + 1, t.text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(p.line(), t.col, "expected an entry reference like e1");
    const int idx = std::stoi(t.text.substr(1));
    if (idx < 1 || idx > n)
      throw ParseError(p.line(), t.col,
                       "entry index " + std::to_string(idx) + " outside 1.." +
                           std::to_string(n));
    return idx;
  };
  const int lhs = entry();
  int rhs = 0;
  if (p.accept_sym("-")) rhs = entry();
  return {lhs, rhs};
}

Atom parse_atom(LineParser& p, int n) {
  Atom a;
  std::tie(a.lhs, a.rhs) = parse_term(p, n);
  if (p.accept_sym("==")) {
    a.negated = false;
  } else if (p.accept_sym("!=")) {
    a.negated = true;
  } else {
    throw ParseError(p.line(), p.peek().col, "expected '==' or '!='");
  }
  a.value = p.expect_int("a value").first;
  if (p.accept_ident("mod")) {
    const auto [m, col] = p.expect_int("a modulus");
    if (m < 1) throw ParseError(p.line(), col, "modulus must be at least 1");
    a.modulus = m;
  } else {
    a.modulus = 0;
    if (a.negated)
      throw ParseError(p.line(), p.peek().col, "'!=' requires a modulus");
  }
  return a;
}

Predicate parse_pred(LineParser& p, int n) {
  Predicate pred;
  pred.atoms.push_back(parse_atom(p, n));
  while (p.accept_sym("&&")) pred.atoms.push_back(parse_atom(p, n));
  return pred;
}

std::vector<int> parse_offset(LineParser& p, int n) {
  p.expect_sym("(");
  std::vector<int> v;
  const int first_col = p.peek().col;
  v.push_back(p.expect_int("an offset entry").first);
  while (p.accept_sym(",")) v.push_back(p.expect_int("an offset entry").first);
  p.expect_sym(")");
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  bool perm = static_cast<int>(v.size()) == n;
  for (int j = 0; perm && j < n; ++j) perm = sorted[static_cast<std::size_t>(j)] == j;
  if (!perm)
    throw ParseError(p.line(), first_col,
                     "offset is not a permutation of (0,...," + std::to_string(n - 1) + ")");
  return v;
}

}  // namespace

SeedFile parse(const std::string& text) {
  SeedFile f;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  enum { WantHeader, WantInitial, WantClass } state = WantHeader;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> toks = lex_line(line, line_no);
    if (toks.size() == 1) continue;  // blank or comment-only
    LineParser p(std::move(toks), line_no);
    switch (state) {
      case WantHeader: {
        if (!p.accept_ident("seed"))
          throw ParseError(line_no, p.peek().col, "expected 'seed n = N'");
        if (!p.accept_ident("n"))
          throw ParseError(line_no, p.peek().col, "expected 'n'");
        p.expect_sym("=");
        const auto [n, col] = p.expect_int("the column length n");
        if (n < 1) throw ParseError(line_no, col, "n must be at least 1");
        f.n = n;
        p.expect_end();
        state = WantInitial;
        break;
      }
      case WantInitial: {
        if (!p.accept_ident("initial"))
          throw ParseError(line_no, p.peek().col, "expected 'initial:'");
        p.expect_sym(":");
        f.initial = parse_pred(p, f.n);
        p.expect_end();
        state = WantClass;
        break;
      }
      case WantClass: {
        if (!p.accept_ident("class"))
          throw ParseError(line_no, p.peek().col, "expected 'class'");
        SeedClass cls;
        cls.name = p.expect_ident("a class name").text;
        p.expect_sym(":");
        cls.pred = parse_pred(p, f.n);
        p.expect_sym("->");
        if (!p.accept_ident("offset"))
          throw ParseError(line_no, p.peek().col, "expected 'offset'");
        cls.offset = parse_offset(p, f.n);
        p.expect_end();
        f.classes.push_back(std::move(cls));
        break;
      }
    }
  }
  if (state == WantHeader) throw ParseError(line_no + 1, 1, "missing 'seed n = N' header");
  if (state == WantInitial) throw ParseError(line_no + 1, 1, "missing 'initial:' line");
  if (f.classes.empty()) throw ParseError(line_no + 1, 1, "at least one class is required");
  return f;
}

namespace {

void render_pred(std::ostringstream& os, const Predicate& pred) {
  for (std::size_t i = 0; i < pred.atoms.size(); ++i) {
    const Atom& a = pred.atoms[i];
    if (i) os << " && ";
    os << "e" << a.lhs;
    if (a.rhs != 0) os << " - e" << a.rhs;
    os << (a.negated ? " != " : " == ") << a.value;
    if (a.modulus != 0) os << " mod " << a.modulus;
  }
}

}  // namespace

std::string render(const SeedFile& f) {
  std::ostringstream os;
  os << "seed n = " << f.n << "\n";
  os << "initial: ";
  render_pred(os, f.initial);
  os << "\n";
  for (const SeedClass& cls : f.classes) {
    os << "class " << cls.name << ": ";
    render_pred(os, cls.pred);
    os << " -> offset (";
    for (std::size_t j = 0; j < cls.offset.size(); ++j) {
      if (j) os << ",";
      os << cls.offset[j];
    }
    os << ")\n";
  }
  return os.str();
}

SeedSpec to_seedspec(const SeedFile& f) {
  SeedSpec s;
  s.n = f.n;
  s.initial = f.initial;
  s.classes = f.classes;
  return s;
}

}  // namespace ysc::seedlang
