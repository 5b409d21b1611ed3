#ifndef DIVERSOL_IO_HPP
#define DIVERSOL_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "diversol/graph.hpp"
#include "diversol/matroid.hpp"
#include "diversol/wdb.hpp"
#include "diversol/weights.hpp"

namespace diversol {

// Instance file formats (line oriented):
//
//   matroid uniform          matroid graphic          matroid linear
//   <n> <r>                  <vertices> <edges>       field <p>
//   [weights w0 .. wn-1]     <u> <v>  (edge lines)    rows <r> cols <n>
//                            [weights ...]            <r rows of n integers>
//                                                     [weights ...]
//
//   graph <n> <m>
//   <u> <v>  (m lines)
//
// Witness files hold one set per line as space-separated ids; a blank line is
// the empty set.

enum class MatroidKind { Uniform, Graphic, Linear };

struct ParsedMatroid {
    MatroidKind kind;
    MatroidPtr matroid;
    WeightFunction weights;  // defaults to all ones
    bool weights_given = false;
};

ParsedMatroid parse_matroid(std::istream& in);
ParsedMatroid parse_matroid_file(const std::string& path);
std::string print_matroid(const ParsedMatroid& m);

Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string print_graph(const Graph& g);

std::vector<ElemSet> parse_witness(std::istream& in);
std::vector<ElemSet> parse_witness_file(const std::string& path);
std::string print_witness(const std::vector<ElemSet>& sets);

// Kernel emission: a linear-matroid instance file (weights included).
std::string print_kernel(const WdbKernel& kernel);

}  // namespace diversol

#endif
