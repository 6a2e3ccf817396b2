#include "grasscode/graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "grasscode/field.hpp"

namespace grasscode {

EdgeList edge_list(const Graph& g) { return {g.vertex_count(), g.edges()}; }

std::string to_graph6(const Graph& g) { return to_graph6(edge_list(g)); }

std::string to_graph6(const EdgeList& list) {
  const std::uint64_t n = list.vertex_count;
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= 68719476735ull) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw Error("graph too large for graph6");
  }

  // bit index of (i, j), i < j, in column-major upper-triangle order
  auto bit_of = [](std::uint64_t i, std::uint64_t j) { return j * (j - 1) / 2 + i; };
  const std::uint64_t total_bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> bits((total_bits + 5) / 6 * 6, 0);
  for (auto [u, v] : list.edges) {
    const auto i = std::min(u, v);
    const auto j = std::max(u, v);
    bits[bit_of(i, j)] = 1;
  }
  for (std::size_t b = 0; b < bits.size(); b += 6) {
    int value = 0;
    for (int t = 0; t < 6; ++t) value = (value << 1) | bits[b + t];
    out.push_back(static_cast<char>(value + 63));
  }
  out.push_back('\n');
  return out;
}

EdgeList parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  auto byte_at = [&](std::size_t pos) -> int {
    if (pos >= text.size()) throw Error("truncated graph6 data");
    const int v = static_cast<unsigned char>(text[pos]) - 63;
    if (v < 0 || v > 63) throw Error("invalid graph6 byte");
    return v;
  };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text.empty()) throw Error("empty graph6 data");
  if (text[0] != 126) {
    n = byte_at(0);
    pos = 1;
  } else if (text.size() > 1 && text[1] != 126) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(i);
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte_at(i);
    pos = 8;
  }
  EdgeList out;
  out.vertex_count = n;
  const std::uint64_t total_bits = n * (n ? n - 1 : 0) / 2;
  if (text.size() - pos != (total_bits + 5) / 6) throw Error("graph6 length mismatch");
  std::uint64_t bit = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++bit) {
      const int byte = byte_at(pos + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1) out.edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

EdgeList parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  EdgeList out;
  bool have_header = false;
  std::uint64_t declared = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      ls >> kind >> out.vertex_count >> declared;
      if (!ls || kind != "edge") throw Error("bad DIMACS header");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw Error("DIMACS edge before header");
      std::uint64_t a = 0, b = 0;
      ls >> a >> b;
      if (!ls || a < 1 || b < 1 || a > out.vertex_count || b > out.vertex_count)
        throw Error("bad DIMACS edge line");
      out.edges.emplace_back(static_cast<VertexId>(std::min(a, b) - 1), static_cast<VertexId>(std::max(a, b) - 1));
    } else {
      throw Error("unknown DIMACS line '" + line + "'");
    }
  }
  if (!have_header) throw Error("missing DIMACS header");
  if (out.edges.size() != declared) throw Error("DIMACS edge count mismatch");
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string vertex_labels(const Graph& g) {
  std::string out;
  for (const auto& v : g.vertices()) {
    out += v.to_string();
    out.push_back('\n');
  }
  return out;
}

}  // namespace grasscode
