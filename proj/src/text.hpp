#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gste {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

inline std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

/// Whitespace tokenization with 1-based columns relative to the line start.
inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

/// Column (1-based) of the first non-space character at or after offset.
inline int column_after(std::string_view line, std::size_t offset) {
  while (offset < line.size() && is_space(line[offset])) ++offset;
  return static_cast<int>(offset) + 1;
}

}  // namespace gste
