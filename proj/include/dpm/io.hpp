#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dpm/graph.hpp"
#include "dpm/tree_decomposition.hpp"
#include "dpm/tw_reduce.hpp"

namespace dpm {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Graph files:
//   p dpm <n> <m> [approx]
//   v <id>                 only when the vertex set is not 1..n
//   t <id>
//   e <u> <v> <length> [index]
// Lengths are integers, decimals or a/b. Without index tokens edges are
// numbered 1..m in file order. '#' starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Witness files: "w dpm <fingerprint-hex>" followed by dv / de / ce lines.
Witness read_witness(std::istream& in);
void write_witness(std::ostream& out, const Witness& w);

// PACE-style: "s td <bags> <maxBagSize> <n>", "b <id> <v...>", "<id> <id>".
TreeDecomposition read_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td, VertexId n);

std::string stats_to_json(const RecursionStats& stats);

Graph read_graph_file(const std::filesystem::path& path);
Witness read_witness_file(const std::filesystem::path& path);
TreeDecomposition read_td_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string graph_to_string(const Graph& g);
std::string witness_to_string(const Witness& w);
std::string td_to_string(const TreeDecomposition& td, VertexId n);

}  // namespace dpm
