#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "lieprobe/error.hpp"
#include "lieprobe/graph.hpp"

// graph6 and sparse6 encodings as defined in the nauty format notes
// (formats.txt): 6-bit groups offset by 63, optional >>graph6<< / >>sparse6<<
// headers, sizes above 62 in the 4-byte or 8-byte long form.

namespace lieprobe {

namespace detail {

inline void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(((n >> s) & 63) + 63);
  }
}

inline std::uint64_t parse_size(std::string_view s, std::size_t& pos) {
  auto byte = [&](std::size_t i) -> std::uint64_t {
    if (i >= s.size()) throw Error(ErrorCode::MalformedInput, "truncated size field");
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw Error(ErrorCode::MalformedInput, "byte outside printable range");
    return static_cast<std::uint64_t>(c - 63);
  };
  if (pos >= s.size()) throw Error(ErrorCode::MalformedInput, "missing size field");
  if (s[pos] != '~') return byte(pos++);
  if (pos + 1 < s.size() && s[pos + 1] == '~') {
    std::uint64_t n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | byte(pos + 2 + i);
    pos += 8;
    return n;
  }
  std::uint64_t n = 0;
  for (int i = 0; i < 3; ++i) n = (n << 6) | byte(pos + 1 + i);
  pos += 4;
  return n;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) s.remove_prefix(1);
  return s;
}

class BitWriter {
 public:
  explicit BitWriter(std::string& out) : out_(out) {}
  void put(bool bit) {
    cur_ = static_cast<std::uint8_t>((cur_ << 1) | (bit ? 1 : 0));
    if (++filled_ == 6) flush_full();
  }
  void put_bits(std::uint64_t value, int k) {
    for (int i = k - 1; i >= 0; --i) put((value >> i) & 1);
  }
  int free_bits() const { return filled_ == 0 ? 6 : 6 - filled_; }
  bool partial() const { return filled_ != 0; }
  void pad_with(bool bit) {
    while (filled_ != 0) put(bit);
  }

 private:
  void flush_full() {
    out_ += static_cast<char>(cur_ + 63);
    cur_ = 0;
    filled_ = 0;
  }
  std::string& out_;
  std::uint8_t cur_ = 0;
  int filled_ = 0;
};

}  // namespace detail

inline std::string to_graph6(const Graph& g, bool header = false) {
  std::string out = header ? ">>graph6<<" : "";
  detail::append_size(out, g.size());
  detail::BitWriter bw(out);
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) bw.put(g.adjacent(static_cast<int>(i), static_cast<int>(j)));
  bw.pad_with(false);
  return out;
}

inline Graph from_graph6(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  std::size_t pos = 0;
  std::uint64_t n = detail::parse_size(s, pos);
  if (n > Graph::kMaxVertices) throw Error(ErrorCode::SizeLimitExceeded, "graph6 input too large");
  std::uint64_t nbits = n * (n - (n ? 1 : 0)) / 2;
  std::uint64_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes) {
    throw Error(ErrorCode::MalformedInput, "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " + std::to_string(nbytes));
  }
  Graph g(n);
  std::uint64_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      int c = static_cast<unsigned char>(s[pos + bit / 6]);
      if (c < 63 || c > 126) throw Error(ErrorCode::MalformedInput, "byte outside printable range");
      if (((c - 63) >> (5 - bit % 6)) & 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

inline int sparse6_width(std::uint64_t n) {
  int k = 0;
  for (std::uint64_t i = n - 1; n > 1 && i > 0; i >>= 1) ++k;
  return k;
}

inline std::string to_sparse6(const Graph& g, bool header = false) {
  std::string out = header ? ">>sparse6<<:" : ":";
  const std::uint64_t n = g.size();
  detail::append_size(out, n);
  const int k = sparse6_width(n);
  detail::BitWriter bw(out);
  std::uint64_t last = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    for (std::uint64_t i = 0; i <= j; ++i) {
      if (i == j || !g.adjacent(static_cast<int>(i), static_cast<int>(j))) continue;
      if (j == last) {
        bw.put(false);
      } else {
        bw.put(true);
        if (j > last + 1) {
          bw.put_bits(j, k);
          bw.put(false);
        }
        last = j;
      }
      bw.put_bits(i, k);
    }
  }
  if (bw.partial()) {
    int free = bw.free_bits();
    // Padding that could decode as a spurious edge (n-1, n-1 ...) starts with 0.
    if (free >= k + 1 && last == n - 2 && n == (std::uint64_t{1} << k)) bw.put(false);
    bw.pad_with(true);
  }
  return out;
}

inline Graph from_sparse6(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.starts_with(">>sparse6<<")) s.remove_prefix(11);
  if (s.empty() || s[0] != ':') throw Error(ErrorCode::MalformedInput, "sparse6 must start with ':'");
  std::size_t pos = 1;
  std::uint64_t n = detail::parse_size(s, pos);
  if (n > Graph::kMaxVertices) throw Error(ErrorCode::SizeLimitExceeded, "sparse6 input too large");
  const int k = sparse6_width(n);
  Graph g(n);
  std::uint64_t total_bits = (s.size() - pos) * 6;
  std::uint64_t cursor = 0;
  auto bit_at = [&](std::uint64_t b) -> int {
    int c = static_cast<unsigned char>(s[pos + b / 6]);
    if (c < 63 || c > 126) throw Error(ErrorCode::MalformedInput, "byte outside printable range");
    return ((c - 63) >> (5 - b % 6)) & 1;
  };
  std::uint64_t v = 0;
  while (cursor + 1 + k <= total_bits) {
    int b = bit_at(cursor++);
    std::uint64_t x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | bit_at(cursor++);
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw Error(ErrorCode::MalformedInput, "sparse6 loop at vertex " + std::to_string(v));
      g.add_edge(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return g;
}

/// Decodes graph6 or sparse6, recognised by the leading ':' or header.
inline Graph parse_graph(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (auto nl = s.find('\n'); nl != std::string_view::npos) s = detail::trim(s.substr(0, nl));
  if (s.empty()) throw Error(ErrorCode::MalformedInput, "empty graph input");
  if (s.starts_with(">>sparse6<<") || s[0] == ':') return from_sparse6(s);
  if (s[0] == ';') throw Error(ErrorCode::MalformedInput, "incremental sparse6 is not supported");
  return from_graph6(s);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
  out << content;
}

}  // namespace lieprobe
