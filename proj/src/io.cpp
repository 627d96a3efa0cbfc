#include "jp/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace jp::io {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace

WeightedGraph read_wel(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long m = -1;
  long seen = 0;
  std::optional<WeightedGraph> g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag == "c") continue;  // blank or comment
    if (tag == "p") {
      if (n >= 0) fail(lineno, "duplicate header");
      std::string fmt;
      if (!(ss >> fmt >> n >> m) || fmt != "wel" || n < 1 || m < 0)
        fail(lineno, "expected 'p wel <n> <m>'");
      g.emplace(n);
    } else if (tag == "e") {
      if (n < 0) fail(lineno, "edge before header");
      int u, v;
      std::string ws;
      if (!(ss >> u >> v >> ws)) fail(lineno, "expected 'e <u> <v> <weight>'");
      if (u < 0 || u >= n || v < 0 || v >= n)
        fail(lineno, "vertex out of range");
      const auto w = parse_rational(ws);
      if (!w) fail(lineno, "bad weight '" + ws + "'");
      g->add_edge(u, v, *w);
      ++seen;
    } else {
      fail(lineno, "unknown record '" + tag + "'");
    }
  }
  if (n < 0) throw std::runtime_error("missing 'p wel' header");
  if (seen != m)
    throw std::runtime_error("header declares " + std::to_string(m) +
                             " edges, found " + std::to_string(seen));
  return *g;
}

WeightedGraph read_wel_file(const std::string& path) {
  auto in = open_in(path);
  return read_wel(in);
}

void write_wel(std::ostream& out, const WeightedGraph& g) {
  out << "p wel " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [e, w] : g.edges())
    out << "e " << e.first << ' ' << e.second << ' ' << to_string(w) << '\n';
}

void write_wel_file(const std::string& path, const WeightedGraph& g) {
  auto out = open_out(path);
  write_wel(out, g);
}

Partition read_partition(std::istream& in, int n) {
  std::vector<int> assign(n, -1);
  std::map<int, int> label;  // file label -> dense part index
  std::string line;
  int lineno = 0;
  for (; std::getline(in, line); ++lineno) {
    std::istringstream ss(line);
    int v, raw;
    if (!(ss >> v)) continue;
    if (!(ss >> raw)) fail(lineno + 1, "expected '<vertex> <part>'");
    if (v < 0 || v >= n) fail(lineno + 1, "vertex out of range");
    if (assign[v] != -1) fail(lineno + 1, "duplicate vertex");
    auto [it, fresh] = label.try_emplace(raw, static_cast<int>(label.size()));
    (void)fresh;
    assign[v] = it->second;
  }
  for (int v = 0; v < n; ++v)
    if (assign[v] == -1)
      throw std::runtime_error("vertex " + std::to_string(v) + " unassigned");
  return Partition(std::move(assign), static_cast<int>(label.size()));
}

Partition read_partition_file(const std::string& path, int n) {
  auto in = open_in(path);
  return read_partition(in, n);
}

void write_partition(std::ostream& out, const Partition& p) {
  for (int v = 0; v < p.size(); ++v) out << v << ' ' << p.part(v) << '\n';
}

void write_partition_file(const std::string& path, const Partition& p) {
  auto out = open_out(path);
  write_partition(out, p);
}

}  // namespace jp::io
