#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "totalchoose/errors.hpp"
#include "totalchoose/multigraph.hpp"

namespace totalchoose {

/// Unparsable instance or coloring text. line() is 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text instance:
///
///   p tot <n> <m>
///   c seed <s>          optional metadata, in this order
///   c delta <d>
///   c palette <p>
///   e <u> <v>           m lines, 1-indexed, parallel copies repeated
///   l v<i> c1 c2 ...    optional; all elements or none, vertices then edges
///   l e<j> c1 c2 ...
///
/// Other `c` lines are comments and are dropped.
struct InstanceFile {
  Multigraph graph;
  std::optional<ListAssignment> lists;
  std::optional<std::uint64_t> seed;
  std::optional<int> delta;
  std::optional<int> palette;

  /// The file's lists, or {0, ..., 2 Delta - 2} everywhere when it has none.
  ListAssignment lists_or_default() const;
};

InstanceFile parse_instance(std::string_view text);
std::string write_instance(const InstanceFile& file);

InstanceFile read_instance_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

/// One `v<i> <color>` / `e<j> <color>` line per colored element, ascending.
std::string write_coloring(const Multigraph& g, const PartialTotalColoring& coloring);
/// Elements missing from the text stay uncolored.
PartialTotalColoring parse_coloring(const Multigraph& g, std::string_view text);

/// "v3" -> vertex 2, "e1" -> edge 0. nullopt when malformed or out of range.
std::optional<ElementId> parse_element(const Multigraph& g, std::string_view token);

}  // namespace totalchoose
