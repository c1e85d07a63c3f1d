#include "negsets/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace negsets {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_count(std::string_view tok, std::size_t line, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

SignedGraph parse_sg(std::string_view text) {
  bool have_header = false;
  long n = 0;
  long m = 0;
  std::vector<SignedEdge> edges;
  std::map<Edge, std::size_t> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "sg") throw ParseError(line_no, "expected 'p sg <n> <m>'");
      n = parse_count(tok[2], line_no, "vertex count");
      m = parse_count(tok[3], line_no, "edge count");
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before problem line");
      if (tok.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> <+|->'");
      long u = parse_count(tok[1], line_no, "vertex");
      long v = parse_count(tok[2], line_no, "vertex");
      if (u >= n || v >= n) throw ParseError(line_no, "vertex out of range");
      if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
      Sign s;
      if (tok[3] == "+") {
        s = Sign::positive;
      } else if (tok[3] == "-") {
        s = Sign::negative;
      } else {
        throw ParseError(line_no, "bad sign '" + std::string(tok[3]) + "'");
      }
      Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
      auto [it, fresh] = seen.emplace(e, line_no);
      if (!fresh) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + "-" +
                                      std::to_string(e.v) + " (first on line " +
                                      std::to_string(it->second) + ")");
      }
      edges.push_back({e, s});
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing problem line");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return SignedGraph(static_cast<int>(n), edges);
}

SignedGraph read_sg_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sg(buf.str());
}

std::string to_sg(const SignedGraph& g) {
  std::ostringstream os;
  os << "p sg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "e " << g.edge(e).u << ' ' << g.edge(e).v << ' ' << sign_char(g.sign(e)) << '\n';
  }
  return os.str();
}

void write_sg_file(const SignedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_sg(g);
}

}  // namespace negsets
