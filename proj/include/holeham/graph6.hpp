#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "holeham/graph.hpp"

namespace holeham {

/// A graph6 line failed to decode. offset() is the byte position (0-based,
/// counted from the start of the line including any ">>graph6<<" header).
class graph6_error : public std::runtime_error {
public:
  graph6_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

namespace detail {

inline constexpr std::string_view graph6_header = ">>graph6<<";

inline int graph6_digit(std::string_view text, std::size_t pos) {
  const unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw graph6_error("character out of range 63..126", pos);
  return c - 63;
}

}  // namespace detail

/**
 * Decode one graph6 line (no trailing newline; a trailing '\r' is accepted).
 *
 * The bit vector lists x(i,j) for 0 <= i < j < n in column order
 * (0,1) (0,2) (1,2) (0,3) ..., six bits per byte, most significant first,
 * zero padded to a byte boundary.
 */
inline Graph from_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::size_t pos = 0;
  if (line.starts_with(detail::graph6_header)) pos = detail::graph6_header.size();
  if (pos >= line.size()) throw graph6_error("malformed length field: empty input", pos);

  long long n = 0;
  const std::size_t length_start = pos;
  if (line[pos] != '~') {
    n = detail::graph6_digit(line, pos);
    pos += 1;
  } else {
    std::size_t digits = 3;
    pos += 1;
    if (pos < line.size() && line[pos] == '~') {
      digits = 6;
      pos += 1;
    }
    if (pos + digits > line.size())
      throw graph6_error("malformed length field: truncated", line.size());
    for (std::size_t k = 0; k < digits; ++k) n = (n << 6) | detail::graph6_digit(line, pos + k);
    pos += digits;
  }
  if (n > Graph::max_order)
    throw graph6_error("malformed length field: order " + std::to_string(n) + " exceeds supported maximum " +
                           std::to_string(Graph::max_order),
                       length_start);

  const int order = static_cast<int>(n);
  const std::size_t bit_count = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (line.size() - pos < byte_count)
    throw graph6_error("truncated edge data: expected " + std::to_string(byte_count) + " bytes", line.size());
  if (line.size() - pos > byte_count) throw graph6_error("trailing garbage", pos + byte_count);

  GraphBuilder b(order);
  std::size_t bit = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int word = detail::graph6_digit(line, pos + bit / 6);
      if ((word >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const std::size_t last = pos + byte_count - 1;
    const int pad_mask = (1 << (6 - bit_count % 6)) - 1;
    if (detail::graph6_digit(line, last) & pad_mask) throw graph6_error("nonzero padding bits", last);
  }
  return b.build();
}

/// Canonical graph6 encoding, without header or newline.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// One decoded corpus line, or the reason it was rejected.
struct CorpusEntry {
  std::size_t line_number = 0;  // 1-based
  std::string text;
  std::optional<Graph> graph;
  std::string error;
};

/// Read a graph6 corpus: one graph per line, LF or CRLF, blank lines skipped.
/// Malformed lines are returned with their error instead of aborting the read.
inline std::vector<CorpusEntry> read_graph6_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    CorpusEntry entry{number, line, std::nullopt, {}};
    try {
      entry.graph = from_graph6(line);
    } catch (const graph6_error& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace holeham
