#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qglab/graph.hpp"

namespace qglab {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
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

double parse_length(std::string_view tok, std::size_t line) {
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw ParseError(line, "invalid length '" + std::string(tok) + "'");
  if (!(value > 0.0)) throw ParseError(line, "nonpositive length '" + std::string(tok) + "'");
  return value;
}

}  // namespace

MetricGraph parse_graph(std::string_view text) {
  GraphBuilder builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;

    try {
      if (tok[0] == "vertex") {
        if (tok.size() < 2 || tok.size() > 3) throw ParseError(line_no, "expected 'vertex <id> [dirichlet]'");
        if (!is_valid_id(tok[1])) throw ParseError(line_no, "invalid vertex id '" + std::string(tok[1]) + "'");
        auto cond = VertexCondition::Natural;
        if (tok.size() == 3) {
          if (tok[2] == "dirichlet") cond = VertexCondition::Dirichlet;
          else if (tok[2] != "natural")
            throw ParseError(line_no, "unknown vertex condition '" + std::string(tok[2]) + "'");
        }
        builder.vertex(std::string(tok[1]), cond);
      } else if (tok[0] == "edge") {
        if (tok.size() != 5) throw ParseError(line_no, "expected 'edge <id> <u> <v> <length>'");
        if (!is_valid_id(tok[1])) throw ParseError(line_no, "invalid edge id '" + std::string(tok[1]) + "'");
        const double len = parse_length(tok[4], line_no);
        builder.edge(std::string(tok[1]), tok[2], tok[3], len);
      } else {
        throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const GraphError& e) {
      throw ParseError(line_no, e.what());
    }
    if (end == text.size()) break;
  }
  return builder.build();
}

MetricGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string to_mgf(const MetricGraph& g) {
  std::string out;
  for (const Vertex& v : g.vertices()) {
    out += "vertex " + v.id;
    if (v.condition == VertexCondition::Dirichlet) out += " dirichlet";
    out += '\n';
  }
  char buf[64];
  for (const Edge& e : g.edges()) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.length);
    out += "edge " + e.id + ' ' + g.vertex(e.u).id + ' ' + g.vertex(e.v).id + ' ' + std::string(buf, ptr) + '\n';
  }
  return out;
}

}  // namespace qglab
