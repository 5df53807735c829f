#include "hitwalk/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace hitwalk {

namespace {

// Reads one int token; distinguishes "nothing left" from garbage.
enum class Token { value, end, garbage };

Token next_int(std::istringstream& in, int& out) {
  std::string tok;
  if (!(in >> tok)) return Token::end;
  try {
    size_t used = 0;
    out = std::stoi(tok, &used);
    if (used != tok.size()) return Token::garbage;
  } catch (const std::exception&) {
    return Token::garbage;
  }
  return Token::value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, m = 0;
  if (next_int(in, n) != Token::value || next_int(in, m) != Token::value)
    fail(ErrorKind::bad_format, "malformed header, expected \"n m\"");
  if (n < 0 || m < 0)
    fail(ErrorKind::bad_format, "header counts must be non-negative");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    Token tu = next_int(in, u);
    if (tu == Token::end)
      fail(ErrorKind::edge_count_mismatch,
           "declared " + std::to_string(m) + " edges, found " + std::to_string(i));
    Token tv = next_int(in, v);
    if (tu == Token::garbage || tv == Token::garbage)
      fail(ErrorKind::bad_format, "edge line " + std::to_string(i + 1) +
                                      " is not a pair of integers");
    if (tv == Token::end)
      fail(ErrorKind::edge_count_mismatch,
           "declared " + std::to_string(m) + " edges, found " + std::to_string(i) +
               " and a dangling endpoint");
    edges.emplace_back(u, v);
  }
  int extra = 0;
  switch (next_int(in, extra)) {
    case Token::end:
      break;
    case Token::value:
      fail(ErrorKind::edge_count_mismatch,
           "declared " + std::to_string(m) + " edges, found more");
    case Token::garbage:
      fail(ErrorKind::bad_format, "trailing garbage after edge list");
  }
  return build_graph(edges, n);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io_error, "cannot open " + path + " for writing");
  out << serialize_graph(g);
  if (!out.flush()) fail(ErrorKind::io_error, "write to " + path + " failed");
}

}  // namespace hitwalk
