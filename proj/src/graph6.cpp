#include "pec/graph6.hpp"

#include <vector>

namespace pec {

namespace {

constexpr int kOffset = 63;

int checked_byte(char ch) {
  unsigned char b = static_cast<unsigned char>(ch);
  require(b >= 63 && b <= 126, Errc::malformed_graph6,
          "byte out of graph6 range");
  return b - kOffset;
}

}  // namespace

Graph parse_graph6(const std::string& line) {
  require(!line.empty(), Errc::malformed_graph6, "empty line");
  size_t pos = 0;
  long long n;
  if (line[0] != '~') {
    n = checked_byte(line[0]);
    pos = 1;
  } else {
    require(line.size() >= 4, Errc::malformed_graph6, "truncated size field");
    require(line[1] != '~', Errc::malformed_graph6,
            "8-byte size fields are not supported");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = n << 6 | checked_byte(line[i]);
    pos = 4;
  }
  require(n <= Graph::kMaxVertices, Errc::too_many_vertices,
          "graph6 vertex count " + std::to_string(n) + " exceeds 64");

  long long nbits = n * (n - 1) / 2;
  size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  require(line.size() == pos + nbytes, Errc::malformed_graph6,
          "body length does not match vertex count");

  // column-major upper triangle: bits run (0,1), (0,2), (1,2), (0,3), ...
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int col = 1, row = 0;
  for (size_t i = 0; i < nbytes; ++i) {
    int b = checked_byte(line[pos + i]);
    for (int k = 5; k >= 0; --k, ++bit) {
      bool set = b >> k & 1;
      if (bit >= nbits) {
        require(!set, Errc::malformed_graph6, "nonzero padding bits");
        continue;
      }
      if (set) edges.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  std::vector<int> ids = g.vertices();
  int n = static_cast<int>(ids.size());
  std::vector<int> newid(Graph::kMaxVertices, -1);
  for (int i = 0; i < n; ++i) newid[ids[i]] = i;

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>((n >> 12 & 63) + kOffset));
    out.push_back(static_cast<char>((n >> 6 & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }

  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  int acc = 0, filled = 0;
  long long bit = 0;
  int col = 1, row = 0;
  while (bit < nbits) {
    bool set = g.has_edge(ids[row], ids[col]);
    acc = acc << 1 | (set ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(acc + kOffset));
      acc = 0;
      filled = 0;
    }
    ++bit;
    if (++row == col) {
      row = 0;
      ++col;
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

}  // namespace pec
