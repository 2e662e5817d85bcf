#include "turangap/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace turangap {

namespace {

void append_bit(std::string& out, int& bitpos, int& cur, bool bit) {
  cur = (cur << 1) | (bit ? 1 : 0);
  if (++bitpos == 6) {
    out.push_back(char(cur + 63));
    bitpos = 0;
    cur = 0;
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else {
    // 63 <= n <= 258047: '~' then n in three 6-bit groups, big-endian.
    out.push_back(char(126));
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  }
  int bitpos = 0, cur = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) append_bit(out, bitpos, cur, g.has_edge(u, v));
  if (bitpos > 0) {
    cur <<= (6 - bitpos);
    out.push_back(char(cur + 63));
  }
  return out;
}

Graph from_graph6(std::string_view s) {
  // strip trailing newline/space
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.remove_suffix(1);
  if (s.empty()) throw GraphError("graph6: empty input");
  std::size_t pos = 0;
  int n;
  if (s[0] == 126) {
    if (s.size() >= 2 && s[1] == 126)
      throw GraphError("graph6: n > 258047 unsupported");
    if (s.size() < 4) throw GraphError("graph6: truncated size field");
    n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
    pos = 4;
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  if (n < 0) throw GraphError("graph6: bad size field");
  Graph g(n);
  long long nbits = (long long)n * (n - 1) / 2;
  long long need = (nbits + 5) / 6;
  if ((long long)(s.size() - pos) != need)
    throw GraphError("graph6: adjacency data has the wrong length");
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int c = s[pos + std::size_t(bit / 6)] - 63;
      if (c < 0 || c > 63) throw GraphError("graph6: bad character");
      if ((c >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  int n;
  if (!(is >> n)) throw GraphError("edge list: missing vertex count");
  Graph g(n);
  int u, v;
  while (is >> u) {
    if (!(is >> v)) throw GraphError("edge list: dangling endpoint");
    g.add_edge(u, v);
  }
  if (!is.eof()) {
    is.clear();
    std::string tok;
    if (is >> tok) throw GraphError("edge list: unexpected token " + tok);
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw GraphError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::string data = ss.str();
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
    return from_graph6(data);
  return from_edge_list(data);
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw GraphError("cannot write " + path);
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
    f << to_graph6(g) << "\n";
  else
    f << to_edge_list(g);
}

}  // namespace turangap
