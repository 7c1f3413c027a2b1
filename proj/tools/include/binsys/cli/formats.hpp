#ifndef BINSYS_CLI_FORMATS_HPP_
#define BINSYS_CLI_FORMATS_HPP_

#include <iosfwd>       // for istream
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "binsys/graphs.hpp"
#include "binsys/groupoid.hpp"

namespace binsys::cli {

  // Groupoid file:
  //
  //   # comment
  //   elements: a b c
  //   zero: a
  //   table:
  //   a b c
  //   ...
  //
  // Elements written 0 1 ... n-1 in that order mean "unlabeled".
  Groupoid    parse_groupoid(std::string_view text);
  std::string serialize(Groupoid const& g);

  // Reads path, or all of in when path is "-". Throws parse_error when the
  // file cannot be opened.
  std::string read_text(std::string const& path, std::istream& in);

  struct LabelledGraph {
    SimpleGraph              graph;
    std::vector<std::string> labels;
  };

  // DOT subset: `graph { a; b; a -- b; }`. Vertices are numbered in order
  // of first mention.
  std::string   to_dot(SimpleGraph const&              graph,
                       std::vector<std::string> const& labels);
  std::string   to_dot(Digraph const&                  graph,
                       std::vector<std::string> const& labels);
  LabelledGraph parse_dot(std::string_view text);

  // The display labels of g, decimal indices when unlabeled.
  std::vector<std::string> display_labels(Groupoid const& g);

}  // namespace binsys::cli

#endif  // BINSYS_CLI_FORMATS_HPP_
