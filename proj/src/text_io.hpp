#pragma once

#include <algorithm>
#include <istream>
#include <string>
#include <vector>

#include "eqsched/instance.hpp"

namespace eqsched::text_io {

struct Token {
  std::string text;
  int column;
};

inline std::vector<Token> split(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && blank(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t begin = i;
    while (i < line.size() && !blank(line[i])) ++i;
    out.push_back({line.substr(begin, i - begin), static_cast<int>(begin) + 1});
  }
  return out;
}

// Yields non-comment, non-blank lines together with their 1-based numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<Token>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.front() == '#') continue;
      tokens = split(line);
      if (tokens.empty()) continue;
      return true;
    }
    ++number_;
    return false;
  }

  int number() const { return number_; }

 private:
  std::istream& in_;
  int number_ = 0;
};

inline int parse_count(const Token& tok, int line, const char* what) {
  if (tok.text.empty() || tok.text.size() > 9 ||
      !std::all_of(tok.text.begin(), tok.text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, tok.column, std::string("expected a decimal integer for ") + what +
                                           ", got '" + tok.text + "'");
  }
  return std::stoi(tok.text);
}

inline Rational parse_value(const Token& tok, int line, const char* what) {
  auto value = parse_rational(tok.text);
  if (!value) {
    throw ParseError(line, tok.column, std::string("expected a rational token for ") + what +
                                           ", got '" + tok.text + "'");
  }
  return *value;
}

}  // namespace eqsched::text_io
