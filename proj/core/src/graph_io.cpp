#include "boxcub/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

namespace boxcub {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view token, long long& value) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::string line_msg(int line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

Graph parse_edge_list(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  Graph g;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    ++line_no;
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto tokens = split_ws(line);
    if (!have_header) {
      long long n = 0;
      if (tokens.size() != 1 || !parse_int(tokens[0], n) || n < 0 ||
          n > (1 << 20)) {
        throw ParseError(line_msg(line_no, "malformed header, expected vertex count"),
                         line_no);
      }
      g = Graph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) ||
        !parse_int(tokens[1], v)) {
      throw ParseError(line_msg(line_no, "expected \"u v\""), line_no);
    }
    const long long n = g.num_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(line_msg(line_no, "vertex id out of range"), line_no);
    }
    if (u == v) throw ParseError(line_msg(line_no, "self-loop"), line_no);
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) {
      throw ParseError(line_msg(line_no, "duplicate edge"), line_no);
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!have_header) throw ParseError("line 1: missing header", 1);
  return g;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  int base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = static_cast<int>(kHeader.size());
  }
  text = text.substr(0, text.find_last_not_of(" \t\r\n") + 1);
  if (text.empty()) throw ParseError("offset 0: empty graph6 string", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      const int at = base + static_cast<int>(i);
      throw ParseError("offset " + std::to_string(at) + ": byte outside 63..126",
                       at);
    }
  }
  auto sextet = [&](std::size_t i) {
    return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - 63);
  };

  std::size_t cursor = 0;
  std::uint64_t n = 0;
  auto need = [&](std::size_t count) {
    if (text.size() < cursor + count) {
      const int at = base + static_cast<int>(text.size());
      throw ParseError("offset " + std::to_string(at) + ": truncated size field",
                       at);
    }
  };
  if (sextet(0) < 63) {
    n = sextet(0);
    cursor = 1;
  } else if (text.size() > 1 && sextet(1) == 63) {
    cursor = 2;
    need(6);
    for (int k = 0; k < 6; ++k) n = (n << 6) | sextet(cursor++);
  } else {
    cursor = 1;
    need(3);
    for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(cursor++);
  }
  if (n > (1u << 20)) {
    throw ParseError("offset " + std::to_string(base) + ": vertex count too large",
                     base);
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - cursor != bytes) {
    const int at = base + static_cast<int>(cursor);
    throw ParseError("offset " + std::to_string(at) + ": expected " +
                         std::to_string(bytes) + " adjacency bytes, found " +
                         std::to_string(text.size() - cursor),
                     at);
  }

  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int v = 1; v < static_cast<int>(n); ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const std::uint64_t byte = sextet(cursor + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) g.add_edge(u, v);
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((sextet(cursor + k / 6) >> (5 - k % 6)) & 1u) {
      const int at = base + static_cast<int>(cursor + k / 6);
      throw ParseError("offset " + std::to_string(at) + ": nonzero padding bits",
                       at);
    }
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  std::string out;
  const std::uint64_t n = g.num_vertices();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < static_cast<int>(n); ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
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

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge-list") return GraphFormat::kEdgeList;
  if (name == "graph6") return GraphFormat::kGraph6;
  throw std::invalid_argument("unknown graph format: " + std::string(name));
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? parse_edge_list(text)
                                          : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::kGraph6) return serialize_graph6(g);
  std::string out = std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace boxcub
