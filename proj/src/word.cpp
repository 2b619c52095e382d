#include "bikei/word.hpp"

#include <cctype>
#include <vector>

namespace bikei {

Word Word::gen(std::string symbol) {
  Word w;
  w.symbol_ = std::move(symbol);
  return w;
}

Word Word::apply(Op op, Word a, Word b) {
  Word w;
  w.op_ = op;
  w.left_ = std::make_shared<const Word>(std::move(a));
  w.right_ = std::make_shared<const Word>(std::move(b));
  return w;
}

Word Word::under(Word a, Word b) { return apply(Op::under, std::move(a), std::move(b)); }
Word Word::over(Word a, Word b) { return apply(Op::over, std::move(a), std::move(b)); }

int Word::size() const noexcept {
  return is_generator() ? 0 : 1 + left_->size() + right_->size();
}

bool Word::mentions(std::string_view symbol) const {
  if (is_generator()) return symbol_ == symbol;
  return left_->mentions(symbol) || right_->mentions(symbol);
}

void Word::collect_symbols(std::set<std::string>& out) const {
  if (is_generator()) {
    out.insert(symbol_);
    return;
  }
  left_->collect_symbols(out);
  right_->collect_symbols(out);
}

Word Word::substitute(const std::map<std::string, Word>& sub) const {
  if (is_generator()) {
    auto it = sub.find(symbol_);
    return it == sub.end() ? *this : it->second;
  }
  return apply(op_, left_->substitute(sub), right_->substitute(sub));
}

bool operator==(const Word& a, const Word& b) {
  if (a.op_ != b.op_) return false;
  if (a.is_generator()) return a.symbol_ == b.symbol_;
  if (a.left_ == b.left_ && a.right_ == b.right_) return true;
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

bool operator<(const Word& a, const Word& b) {
  if (a.op_ != b.op_) return a.op_ < b.op_;
  if (a.is_generator()) return a.symbol_ < b.symbol_;
  if (*a.left_ == *b.left_) return *a.right_ < *b.right_;
  return *a.left_ < *b.left_;
}

namespace {

void format_into(const Word& w, std::string& out, bool wrap) {
  if (w.is_generator()) {
    out += w.symbol();
    return;
  }
  if (wrap) out += '(';
  format_into(w.left(), out, true);
  out += w.op() == Word::Op::under ? " _* " : " ^* ";
  format_into(w.right(), out, true);
  if (wrap) out += ')';
}

struct Token {
  enum Kind { ident, under, over, lparen, rparen } kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if ((c == '_' || c == '^') && i + 1 < s.size() && s[i + 1] == '*') {
      out.push_back({c == '_' ? Token::under : Token::over, {}});
      i += 2;
    } else if (c == '(') {
      out.push_back({Token::lparen, {}});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::rparen, {}});
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              (s[j] == '_' && !(j + 1 < s.size() && s[j + 1] == '*'))))
        ++j;
      out.push_back({Token::ident, std::string(s.substr(i, j - i))});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in word");
    }
  }
  return out;
}

class WordParser {
 public:
  explicit WordParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Word parse() {
    Word w = chain();
    if (pos_ != toks_.size()) throw ParseError("trailing tokens in word");
    return w;
  }

 private:
  Word chain() {
    Word w = atom();
    while (pos_ < toks_.size() &&
           (toks_[pos_].kind == Token::under || toks_[pos_].kind == Token::over)) {
      const auto op = toks_[pos_++].kind == Token::under ? Word::Op::under : Word::Op::over;
      w = Word::apply(op, std::move(w), atom());
    }
    return w;
  }

  Word atom() {
    if (pos_ >= toks_.size()) throw ParseError("word ends early");
    const Token& t = toks_[pos_++];
    if (t.kind == Token::ident) return Word::gen(t.text);
    if (t.kind == Token::lparen) {
      Word w = chain();
      if (pos_ >= toks_.size() || toks_[pos_].kind != Token::rparen)
        throw ParseError("missing ')' in word");
      ++pos_;
      return w;
    }
    throw ParseError("expected a generator or '(' in word");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format_word(const Word& w) {
  std::string out;
  format_into(w, out, false);
  return out;
}

Word parse_word(std::string_view text) { return WordParser(tokenize(text)).parse(); }

}  // namespace bikei
