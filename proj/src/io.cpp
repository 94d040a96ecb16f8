#include "dpm/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace dpm {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Splits into non-empty, comment-stripped token lines.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

template <typename T>
T number(const Line& line, std::size_t i, const char* what) {
  if (i >= line.tokens.size()) throw ParseError(line.number, std::string("missing ") + what);
  const std::string& s = line.tokens[i];
  T value{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) throw ParseError(line.number, "bad " + std::string(what) + " '" + s + "'");
  return value;
}

void expect_arity(const Line& line, std::size_t lo, std::size_t hi) {
  if (line.tokens.size() < lo || line.tokens.size() > hi)
    throw ParseError(line.number, "wrong number of fields for '" + line.tokens[0] + "'");
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Graph read_graph(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "p") throw ParseError(lines.empty() ? 0 : lines[0].number, "expected 'p dpm <n> <m>'");
  const Line& head = lines[0];
  expect_arity(head, 4, 5);
  if (head.tokens[1] != "dpm") throw ParseError(head.number, "expected format tag 'dpm'");
  const auto n = number<VertexId>(head, 2, "vertex count");
  const auto m = number<std::size_t>(head, 3, "edge count");
  LengthMode mode = LengthMode::exact;
  if (head.tokens.size() == 5) {
    if (head.tokens[4] == "approx")
      mode = LengthMode::approximate;
    else if (head.tokens[4] != "exact")
      throw ParseError(head.number, "unknown length mode '" + head.tokens[4] + "'");
  }
  if (n < 0) throw ParseError(head.number, "negative vertex count");

  std::set<VertexId> declared;
  std::vector<std::pair<VertexId, std::size_t>> terminals;
  struct Pending {
    VertexId u, v;
    Length len;
    std::optional<EdgeIndex> index;
    std::size_t line;
  };
  std::vector<Pending> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& kind = l.tokens[0];
    if (kind == "v") {
      expect_arity(l, 2, 2);
      declared.insert(number<VertexId>(l, 1, "vertex"));
    } else if (kind == "t") {
      expect_arity(l, 2, 2);
      terminals.emplace_back(number<VertexId>(l, 1, "terminal"), l.number);
    } else if (kind == "e") {
      expect_arity(l, 4, 5);
      Pending e{number<VertexId>(l, 1, "endpoint"), number<VertexId>(l, 2, "endpoint"), {}, {}, l.number};
      try {
        e.len = Length::parse(l.tokens[3], mode);
      } catch (const std::exception& ex) {
        throw ParseError(l.number, ex.what());
      }
      if (l.tokens.size() == 5) e.index = number<EdgeIndex>(l, 4, "edge index");
      edges.push_back(std::move(e));
    } else if (kind == "p") {
      throw ParseError(l.number, "duplicate header");
    } else {
      throw ParseError(l.number, "unknown line type '" + kind + "'");
    }
  }
  if (edges.size() != m)
    throw ParseError(head.number, "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

  Graph g(mode);
  if (declared.empty())
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
  else
    for (VertexId v : declared) {
      if (v < 1 || v > n) throw ParseError(head.number, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      g.add_vertex(v);
    }
  for (const auto& [t, line] : terminals) {
    if (!g.has_vertex(t)) throw ParseError(line, "terminal " + std::to_string(t) + " is not a vertex");
    g.set_terminal(t, true);
  }
  const bool indexed = !edges.empty() && edges.front().index.has_value();
  EdgeIndex next = 1;
  for (const Pending& e : edges) {
    if (e.index.has_value() != indexed) throw ParseError(e.line, "edge indices must be given on all edges or none");
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v)) throw ParseError(e.line, "edge endpoint is not a vertex");
    if (e.u == e.v) throw ParseError(e.line, "self-loop");
    if (indexed && *e.index < 1) throw ParseError(e.line, "edge index must be positive");
    g.add_edge(e.u, e.v, e.len, indexed ? *e.index : next++);
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto vs = g.vertices();
  const VertexId n = vs.empty() ? 0 : vs.back();
  const auto es = g.edges();
  out << "p dpm " << n << " " << es.size();
  if (g.mode() == LengthMode::approximate) out << " approx";
  out << "\n";
  if (static_cast<VertexId>(vs.size()) != n)
    for (VertexId v : vs) out << "v " << v << "\n";
  for (VertexId t : g.terminals()) out << "t " << t << "\n";
  bool sequential = true;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i].index != static_cast<EdgeIndex>(i + 1)) sequential = false;
  for (const Edge& e : es) {
    out << "e " << e.u << " " << e.v << " " << e.length.str();
    if (!sequential) out << " " << e.index;
    out << "\n";
  }
}

Witness read_witness(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "w") throw ParseError(lines.empty() ? 0 : lines[0].number, "expected 'w dpm <fingerprint>'");
  const Line& head = lines[0];
  expect_arity(head, 3, 3);
  if (head.tokens[1] != "dpm") throw ParseError(head.number, "expected format tag 'dpm'");
  Witness w;
  const std::string& fp = head.tokens[2];
  auto [end, ec] = std::from_chars(fp.data(), fp.data() + fp.size(), w.fingerprint, 16);
  if (ec != std::errc() || end != fp.data() + fp.size()) throw ParseError(head.number, "bad fingerprint '" + fp + "'");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& kind = l.tokens[0];
    if (kind == "dv") {
      expect_arity(l, 2, 2);
      w.ops.push_back(MinorOp::delete_vertex(number<VertexId>(l, 1, "vertex")));
    } else if (kind == "de") {
      expect_arity(l, 3, 3);
      w.ops.push_back(MinorOp::delete_edge(number<VertexId>(l, 1, "vertex"), number<VertexId>(l, 2, "vertex")));
    } else if (kind == "ce") {
      expect_arity(l, 4, 4);
      w.ops.push_back(MinorOp::contract_edge(number<VertexId>(l, 1, "vertex"), number<VertexId>(l, 2, "vertex"),
                                             number<VertexId>(l, 3, "survivor")));
    } else {
      throw ParseError(l.number, "unknown witness op '" + kind + "'");
    }
  }
  return w;
}

void write_witness(std::ostream& out, const Witness& w) {
  out << "w dpm " << hex(w.fingerprint) << "\n";
  for (const MinorOp& op : w.ops) out << op.str() << "\n";
}

TreeDecomposition read_td(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "s") throw ParseError(lines.empty() ? 0 : lines[0].number, "expected 's td ...'");
  const Line& head = lines[0];
  expect_arity(head, 5, 5);
  if (head.tokens[1] != "td") throw ParseError(head.number, "expected 'td'");
  const auto nb = number<std::size_t>(head, 2, "bag count");
  const auto width = number<std::size_t>(head, 3, "bag size");
  const auto n = number<VertexId>(head, 4, "vertex count");

  TreeDecomposition td;
  td.bags.resize(nb);
  std::vector<bool> seen(nb, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] == "b") {
      const auto id = number<std::size_t>(l, 1, "bag id");
      if (id < 1 || id > nb) throw ParseError(l.number, "bag id out of range");
      if (seen[id - 1]) throw ParseError(l.number, "bag " + std::to_string(id) + " given twice");
      seen[id - 1] = true;
      auto& bag = td.bags[id - 1];
      for (std::size_t j = 2; j < l.tokens.size(); ++j) {
        const auto v = number<VertexId>(l, j, "vertex");
        if (v < 1 || v > n) throw ParseError(l.number, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        bag.push_back(v);
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) throw ParseError(l.number, "repeated vertex in bag");
      if (bag.size() > width) throw ParseError(l.number, "bag larger than declared maximum");
    } else {
      expect_arity(l, 2, 2);
      const auto a = number<std::size_t>(l, 0, "bag id");
      const auto b = number<std::size_t>(l, 1, "bag id");
      if (a < 1 || a > nb || b < 1 || b > nb) throw ParseError(l.number, "tree edge names an unknown bag");
      td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
  }
  for (std::size_t i = 0; i < nb; ++i)
    if (!seen[i]) throw ParseError(head.number, "bag " + std::to_string(i + 1) + " missing");
  return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td, VertexId n) {
  std::size_t widest = 0;
  for (const auto& b : td.bags) widest = std::max(widest, b.size());
  out << "s td " << td.bags.size() << " " << widest << " " << n << "\n";
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (VertexId v : td.bags[i]) out << " " << v;
    out << "\n";
  }
  for (const auto& [a, b] : td.tree_edges) out << a + 1 << " " << b + 1 << "\n";
}

std::string stats_to_json(const RecursionStats& stats) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const RecursionNode& n : stats.nodes) {
    nlohmann::json splits = nlohmann::json::array();
    for (const SplitRecord& s : n.splits)
      splits.push_back({{"weight_set", s.weight_set},
                        {"separator", s.separator},
                        {"side1_weight", s.side1_weight},
                        {"side2_weight", s.side2_weight},
                        {"no_cross_edges", s.no_cross_edges}});
    nodes.push_back({{"terminals", n.terminals},
                     {"boundary", n.boundary},
                     {"required", n.required},
                     {"vertices", n.vertices},
                     {"disjoint", n.disjoint},
                     {"depth", n.depth},
                     {"leaf", n.leaf},
                     {"children", n.children},
                     {"splits", splits}});
  }
  nlohmann::json doc = {{"q", stats.q}, {"nodes", nodes}};
  return doc.dump(2) + "\n";
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

std::string witness_to_string(const Witness& w) {
  std::ostringstream os;
  write_witness(os, w);
  return os.str();
}

std::string td_to_string(const TreeDecomposition& td, VertexId n) {
  std::ostringstream os;
  write_td(os, td, n);
  return os.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::istringstream in(slurp(path));
  return read_graph(in);
}

Witness read_witness_file(const std::filesystem::path& path) {
  std::istringstream in(slurp(path));
  return read_witness(in);
}

TreeDecomposition read_td_file(const std::filesystem::path& path) {
  std::istringstream in(slurp(path));
  return read_td(in);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace dpm
