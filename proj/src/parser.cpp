#include <algorithm>
#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "condis/syntax.hpp"

namespace condis {

namespace {

struct Token {
  enum class Kind { Word, Nat, Letter, Punct, End };
  Kind kind;
  std::string text;
  int value = 0;     // Nat value or Letter index
  std::size_t pos = 0;  // 1-based offset of the first character
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> toks;
  std::size_t k = 0;
  while (k < text.size()) {
    const char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    const std::size_t pos = k + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      std::string word;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
        v = v * 10 + (text[k] - '0');
        if (v > std::numeric_limits<int>::max())
          throw SyntaxError(pos, "syntax error at position " + std::to_string(pos) + ": number too large");
        word += text[k++];
      }
      toks.push_back({Token::Kind::Nat, word, static_cast<int>(v), pos});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (k < text.size() && std::isalnum(static_cast<unsigned char>(text[k]))) word += text[k++];
      if (word.size() > 1 && word[0] == 'p' &&
          std::all_of(word.begin() + 1, word.end(),
                      [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
        long long v = 0;
        for (std::size_t d = 1; d < word.size(); ++d) {
          v = v * 10 + (word[d] - '0');
          if (v > std::numeric_limits<int>::max())
            throw SyntaxError(pos, "syntax error at position " + std::to_string(pos) +
                                       ": letter index out of range in '" + word + "'");
        }
        if (v < 1)
          throw SyntaxError(pos, "syntax error at position " + std::to_string(pos) +
                                     ": letter index out of range in '" + word + "'");
        toks.push_back({Token::Kind::Letter, word, static_cast<int>(v), pos});
      } else {
        toks.push_back({Token::Kind::Word, word, 0, pos});
      }
      continue;
    }
    if (std::string("()[]<>;+*,|").find(c) != std::string::npos) {
      toks.push_back({Token::Kind::Punct, std::string(1, c), 0, pos});
      ++k;
      continue;
    }
    throw SyntaxError(pos, "syntax error at position " + std::to_string(pos) + ": unexpected character '" +
                               std::string(1, c) + "'");
  }
  toks.push_back({Token::Kind::End, "end of input", 0, text.size() + 1});
  return toks;
}

struct TokenStream {
  std::vector<Token> toks;
  std::size_t at = 0;

  const Token& peek(std::size_t ahead = 0) const {
    return toks[std::min(at + ahead, toks.size() - 1)];
  }
  Token take() { return toks[std::min(at++, toks.size() - 1)]; }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    throw SyntaxError(t.pos, "syntax error at position " + std::to_string(t.pos) + ": expected " +
                                 expected + ", found '" + t.text + "'");
  }

  bool at_punct(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == p;
  }
  void expect_punct(const char* p) {
    if (!at_punct(p)) fail(peek(), std::string("'") + p + "'");
    take();
  }
  int expect_nat() {
    if (peek().kind != Token::Kind::Nat) fail(peek(), "a number");
    return take().value;
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) fail(peek(), "end of input");
  }
};

DisjTermPtr parse_disj_term(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == Token::Kind::Word) {
    if (t.text == "id") {
      ts.take();
      return d_id(ts.expect_nat());
    }
    if (t.text == "kappa") {
      ts.take();
      return d_kappa(ts.expect_nat());
    }
    if (t.text == "in1") {
      ts.take();
      int n = ts.expect_nat();
      return d_in1(n, ts.expect_nat());
    }
    if (t.text == "in2") {
      ts.take();
      int n = ts.expect_nat();
      return d_in2(n, ts.expect_nat());
    }
    if (t.text == "fold") {
      ts.take();
      return d_fold(ts.expect_nat());
    }
    ts.fail(t, "a term");
  }
  if (ts.at_punct("(")) {
    ts.take();
    auto lhs = parse_disj_term(ts);
    bool is_seq = ts.at_punct(";");
    if (!is_seq && !ts.at_punct("+")) ts.fail(ts.peek(), "';' or '+'");
    ts.take();
    auto rhs = parse_disj_term(ts);
    ts.expect_punct(")");
    return is_seq ? d_seq(std::move(lhs), std::move(rhs)) : d_sum(std::move(lhs), std::move(rhs));
  }
  if (ts.at_punct("[")) {
    ts.take();
    auto lhs = parse_disj_term(ts);
    ts.expect_punct(",");
    auto rhs = parse_disj_term(ts);
    ts.expect_punct("]");
    return d_case(std::move(lhs), std::move(rhs));
  }
  ts.fail(t, "a term");
}

ConjObj parse_obj(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == Token::Kind::Word && t.text == "I") {
    ts.take();
    return {};
  }
  if (t.kind != Token::Kind::Letter) ts.fail(t, "an object ('I' or letters like p1)");
  ConjObj obj{ts.take().value};
  while (ts.at_punct("*") && ts.peek(1).kind == Token::Kind::Letter) {
    ts.take();
    obj.push_back(ts.take().value);
  }
  return obj;
}

ConjTermPtr parse_conj_term(TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind == Token::Kind::Word) {
    if (t.text == "id") {
      ts.take();
      return c_id(parse_obj(ts));
    }
    if (t.text == "bang") {
      ts.take();
      return c_bang(parse_obj(ts));
    }
    if (t.text == "dup") {
      ts.take();
      return c_dup(parse_obj(ts));
    }
    if (t.text == "pr1" || t.text == "pr2") {
      bool first = t.text == "pr1";
      ts.take();
      auto a = parse_obj(ts);
      ts.expect_punct("|");
      auto b = parse_obj(ts);
      return first ? c_pr1(std::move(a), std::move(b)) : c_pr2(std::move(a), std::move(b));
    }
    ts.fail(t, "a term");
  }
  if (ts.at_punct("(")) {
    ts.take();
    auto lhs = parse_conj_term(ts);
    bool is_seq = ts.at_punct(";");
    if (!is_seq && !ts.at_punct("*")) ts.fail(ts.peek(), "';' or '*'");
    ts.take();
    auto rhs = parse_conj_term(ts);
    ts.expect_punct(")");
    return is_seq ? c_seq(std::move(lhs), std::move(rhs)) : c_prod(std::move(lhs), std::move(rhs));
  }
  if (ts.at_punct("<")) {
    ts.take();
    auto lhs = parse_conj_term(ts);
    ts.expect_punct(",");
    auto rhs = parse_conj_term(ts);
    ts.expect_punct(">");
    return c_pair(std::move(lhs), std::move(rhs));
  }
  ts.fail(t, "a term");
}

}  // namespace

DisjTermPtr parse_disj(std::string_view text) {
  TokenStream ts{tokenize(text)};
  auto t = parse_disj_term(ts);
  ts.expect_end();
  return t;
}

ConjTermPtr parse_conj(std::string_view text) {
  TokenStream ts{tokenize(text)};
  auto t = parse_conj_term(ts);
  ts.expect_end();
  return t;
}

}  // namespace condis
