#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "bikei/table.hpp"

namespace bikei {

/// Bikei word: a generator symbol or a binary node labeled _* or ^*.
/// Cheap to copy; subtrees are shared.
class Word {
 public:
  enum class Op : std::uint8_t { gen, under, over };

  Word() = default;
  static Word gen(std::string symbol);
  static Word under(Word a, Word b);
  static Word over(Word a, Word b);
  static Word apply(Op op, Word a, Word b);

  Op op() const noexcept { return op_; }
  bool is_generator() const noexcept { return op_ == Op::gen; }
  const std::string& symbol() const noexcept { return symbol_; }
  const Word& left() const noexcept { return *left_; }
  const Word& right() const noexcept { return *right_; }

  /// Number of binary nodes.
  int size() const noexcept;
  bool mentions(std::string_view symbol) const;
  void collect_symbols(std::set<std::string>& out) const;
  Word substitute(const std::map<std::string, Word>& sub) const;

  friend bool operator==(const Word& a, const Word& b);
  friend bool operator<(const Word& a, const Word& b);

 private:
  Op op_ = Op::gen;
  std::string symbol_;
  std::shared_ptr<const Word> left_, right_;
};

/// `x`, `x _* y`, `(x _* y) ^* z`. Compound operands are always
/// parenthesized.
std::string format_word(const Word& w);

/// Accepts identifiers, parentheses and the infix tokens `_*`, `^*`;
/// chains without parentheses associate to the left.
Word parse_word(std::string_view text);

}  // namespace bikei
