#pragma once

#include "jp/graph.hpp"

#include <iosfwd>
#include <string>

namespace jp::io {

// Edge-list text format ("wel"):
//   p wel <n> <m>
//   e <u> <v> <weight>        (0-indexed; weight "p/q", integer, or decimal)
// Output is canonical: edges sorted by endpoint pair, weights in lowest terms.
WeightedGraph read_wel(std::istream& in);
WeightedGraph read_wel_file(const std::string& path);
void write_wel(std::ostream& out, const WeightedGraph& g);
void write_wel_file(const std::string& path, const WeightedGraph& g);

// One "<vertex> <part>" line per vertex; k inferred from the labels.
Partition read_partition(std::istream& in, int n);
Partition read_partition_file(const std::string& path, int n);
void write_partition(std::ostream& out, const Partition& p);
void write_partition_file(const std::string& path, const Partition& p);

}  // namespace jp::io
