#include "totalchoose/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace totalchoose {

namespace {

std::vector<std::string_view> split(std::string_view line) {
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

template <class T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

template <class T>
T number_or_throw(std::string_view s, std::size_t line, const char* what) {
  auto v = parse_number<T>(s);
  if (!v) throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return *v;
}

// Calls fn(line_number, tokens) for every non-blank line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t cut = text.find('\n');
    const std::string_view line = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    ++number;
    auto tokens = split(line);
    if (!tokens.empty()) fn(number, tokens);
  }
}

}  // namespace

std::optional<ElementId> parse_element(const Multigraph& g, std::string_view token) {
  if (token.size() < 2 || (token[0] != 'v' && token[0] != 'e')) return std::nullopt;
  auto index = parse_number<int>(token.substr(1));
  if (!index || *index < 1) return std::nullopt;
  const ElementId x = token[0] == 'v' ? ElementId::vertex(*index - 1) : ElementId::edge(*index - 1);
  if (!g.contains(x)) return std::nullopt;
  return x;
}

ListAssignment InstanceFile::lists_or_default() const {
  if (lists) return *lists;
  std::vector<Color> colors;
  for (Color c = 0; c < 2 * graph.max_degree() - 1; ++c) colors.push_back(c);
  return ListAssignment(graph, colors);
}

InstanceFile parse_instance(std::string_view text) {
  InstanceFile out;
  int n = -1, m = -1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> list_lines;
  std::size_t last_line = 0;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    last_line = line;
    const std::string_view tag = t[0];
    if (tag == "p") {
      if (n >= 0) throw ParseError(line, "duplicate header");
      if (t.size() != 4 || t[1] != "tot") throw ParseError(line, "header must be 'p tot <n> <m>'");
      n = number_or_throw<int>(t[2], line, "vertex count");
      m = number_or_throw<int>(t[3], line, "edge count");
      if (n < 0 || m < 0) throw ParseError(line, "negative count");
      return;
    }
    if (n < 0) throw ParseError(line, "expected header 'p tot <n> <m>' first");
    if (tag == "c") {
      if (t.size() == 3 && t[1] == "seed")
        out.seed = number_or_throw<std::uint64_t>(t[2], line, "seed");
      else if (t.size() == 3 && t[1] == "delta")
        out.delta = number_or_throw<int>(t[2], line, "delta");
      else if (t.size() == 3 && t[1] == "palette")
        out.palette = number_or_throw<int>(t[2], line, "palette");
      return;
    }
    if (tag == "e") {
      if (!list_lines.empty()) throw ParseError(line, "edge line after list lines");
      if (t.size() != 3) throw ParseError(line, "edge line must be 'e <u> <v>'");
      const int u = number_or_throw<int>(t[1], line, "endpoint");
      const int v = number_or_throw<int>(t[2], line, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line, "endpoint out of range");
      if (u == v) throw ParseError(line, "loop at vertex " + std::to_string(u));
      if (static_cast<int>(edges.size()) == m) throw ParseError(line, "more edge lines than the header declares");
      edges.emplace_back(u - 1, v - 1);
      return;
    }
    if (tag == "l") {
      if (t.size() < 2) throw ParseError(line, "list line needs an element");
      list_lines.emplace_back(line, t);
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(tag) + "'");
  });

  if (n < 0) throw ParseError(last_line + 1, "missing header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(last_line + 1, "header declares " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
  out.graph = build_multigraph(n, edges);
  const Multigraph& g = out.graph;

  if (!list_lines.empty()) {
    ListAssignment lists(g);
    std::vector<char> seen(g.element_count(), 0);
    for (const auto& [line, t] : list_lines) {
      auto x = parse_element(g, t[1]);
      if (!x) throw ParseError(line, "unknown element '" + std::string(t[1]) + "'");
      if (seen[g.dense(*x)]) throw ParseError(line, "second list for " + std::string(t[1]));
      seen[g.dense(*x)] = 1;
      std::vector<Color> colors;
      for (std::size_t i = 2; i < t.size(); ++i) {
        const Color c = number_or_throw<Color>(t[i], line, "color");
        if (c < 0) throw ParseError(line, "negative color");
        colors.push_back(c);
      }
      lists.set(g, *x, std::move(colors));
    }
    for (int i = 0; i < g.element_count(); ++i)
      if (!seen[i]) throw ParseError(last_line + 1, "no list for " + to_string(g.element_at(i)));
    out.lists = std::move(lists);
  }
  return out;
}

std::string write_instance(const InstanceFile& file) {
  const Multigraph& g = file.graph;
  std::ostringstream out;
  out << "p tot " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  if (file.seed) out << "c seed " << *file.seed << '\n';
  if (file.delta) out << "c delta " << *file.delta << '\n';
  if (file.palette) out << "c palette " << *file.palette << '\n';
  for (auto [u, v] : g.edge_list()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (file.lists) {
    for (int i = 0; i < g.element_count(); ++i) {
      out << "l " << to_string(g.element_at(i));
      for (Color c : file.lists->at_dense(i)) out << ' ' << c;
      out << '\n';
    }
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

InstanceFile read_instance_file(const std::string& path) { return parse_instance(read_text_file(path)); }

std::string write_coloring(const Multigraph& g, const PartialTotalColoring& coloring) {
  std::ostringstream out;
  for (int i = 0; i < g.element_count(); ++i)
    if (coloring.raw(i) != kUncolored) out << to_string(g.element_at(i)) << ' ' << coloring.raw(i) << '\n';
  return out.str();
}

PartialTotalColoring parse_coloring(const Multigraph& g, std::string_view text) {
  PartialTotalColoring coloring(g);
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& t) {
    if (t.size() != 2) throw ParseError(line, "coloring line must be '<element> <color>'");
    auto x = parse_element(g, t[0]);
    if (!x) throw ParseError(line, "unknown element '" + std::string(t[0]) + "'");
    if (coloring.is_colored(g, *x)) throw ParseError(line, "second color for " + std::string(t[0]));
    const Color c = number_or_throw<Color>(t[1], line, "color");
    if (c < 0) throw ParseError(line, "negative color");
    coloring.set(g, *x, c);
  });
  return coloring;
}

}  // namespace totalchoose
