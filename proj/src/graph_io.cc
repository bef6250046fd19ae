// Copyright 2026 The cdim Authors.
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

// graph6 and edge-list readers/writers.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cdim/error.h"
#include "cdim/graph.h"

namespace cdim {
namespace {

constexpr int kBias = 63;
constexpr int kMaxPrintable = 126;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view TrimTrailing(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' ||
                        s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

// Reads `count` 6-bit groups starting at `pos` as a big-endian integer.
std::uint64_t ReadSizeGroups(std::string_view s, std::size_t pos, int count,
                             std::size_t base_offset) {
  if (pos + count > s.size()) {
    throw FormatError(base_offset + s.size(), "truncated graph6 size field");
  }
  std::uint64_t value = 0;
  for (int i = 0; i < count; ++i) {
    const int c = static_cast<unsigned char>(s[pos + i]);
    if (c < kBias || c > kMaxPrintable) {
      throw FormatError(base_offset + pos + i,
                        "graph6 character outside the printable range");
    }
    value = (value << 6) | static_cast<std::uint64_t>(c - kBias);
  }
  return value;
}

void AppendSizeGroups(std::string& out, std::uint64_t value, int count) {
  for (int i = count - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + kBias));
  }
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long ParseInteger(std::string_view token, std::size_t line_number) {
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError(line_number,
                      "line " + std::to_string(line_number) +
                          ": expected an integer, got '" + std::string(token) +
                          "'");
  }
  return value;
}

}  // namespace

Graph ParseGraph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    base = kGraph6Header.size();
    text.remove_prefix(kGraph6Header.size());
  }
  text = TrimTrailing(text);
  if (text.empty()) throw FormatError(base, "empty graph6 string");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = ReadSizeGroups(text, 0, 1, base);
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    n = ReadSizeGroups(text, 2, 6, base);
    pos = 8;
  } else {
    n = ReadSizeGroups(text, 1, 3, base);
    pos = 4;
  }
  if (n > (1u << 20)) {
    throw FormatError(base, "graph6 vertex count too large");
  }

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t data_chars = (bit_count + 5) / 6;
  if (text.size() - pos != data_chars) {
    const std::size_t at =
        text.size() - pos < data_chars ? text.size() : pos + data_chars;
    throw FormatError(base + at, "graph6 length does not match vertex count " +
                                     std::to_string(n));
  }

  std::vector<int> values(data_chars);
  for (std::size_t i = 0; i < data_chars; ++i) {
    const int c = static_cast<unsigned char>(text[pos + i]);
    if (c < kBias || c > kMaxPrintable) {
      throw FormatError(base + pos + i,
                        "graph6 character outside the printable range");
    }
    values[i] = c - kBias;
  }
  if (bit_count % 6 != 0) {
    const int padding = static_cast<int>(6 - bit_count % 6);
    if ((values.back() & ((1 << padding) - 1)) != 0) {
      throw FormatError(base + pos + data_chars - 1,
                        "graph6 padding bits are not zero");
    }
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((values[k / 6] >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string ToGraph6(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    AppendSizeGroups(out, n, 3);
  } else {
    out.append("~~");
    AppendSizeGroups(out, n, 6);
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  }
  return out;
}

Graph ParseEdgeList(std::string_view text) {
  const std::vector<std::string_view> lines = SplitLines(text);
  long long n = -1;
  std::vector<Edge> edges;
  for (std::size_t index = 0; index < lines.size(); ++index) {
    const std::size_t line_number = index + 1;
    const std::vector<std::string_view> tokens = Tokens(lines[index]);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw FormatError(line_number, "line " + std::to_string(line_number) +
                                           ": expected header 'n <count>'");
      }
      n = ParseInteger(tokens[1], line_number);
      if (n < 0 || n > (1 << 20)) {
        throw FormatError(line_number, "line " + std::to_string(line_number) +
                                           ": vertex count out of range");
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw FormatError(line_number, "line " + std::to_string(line_number) +
                                         ": expected 'u v'");
    }
    const long long u = ParseInteger(tokens[0], line_number);
    const long long v = ParseInteger(tokens[1], line_number);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw FormatError(line_number, "line " + std::to_string(line_number) +
                                         ": vertex index outside [0, " +
                                         std::to_string(n) + ")");
    }
    if (u == v) {
      throw FormatError(line_number, "line " + std::to_string(line_number) +
                                         ": self-loop at vertex " +
                                         std::to_string(u));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (n < 0) throw FormatError(1, "missing header 'n <count>'");
  return Graph::FromEdges(static_cast<int>(n), edges);
}

std::string ToEdgeList(const Graph& g) {
  std::string out = "n " + std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace cdim
