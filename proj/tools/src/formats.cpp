#include "binsys/cli/formats.hpp"

#include <cctype>    // for isspace, isalnum
#include <fstream>   // for ifstream
#include <iterator>  // for istreambuf_iterator
#include <map>       // for map
#include <optional>  // for optional
#include <set>       // for set
#include <sstream>   // for istringstream, ostringstream
#include <utility>   // for move

namespace binsys::cli {

  namespace {
    std::vector<std::string> split(std::string_view line) {
      std::vector<std::string> out;
      std::istringstream       is{std::string(line)};
      std::string              tok;
      while (is >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    [[noreturn]] void parse_fail(std::size_t line, std::string const& what) {
      throw BinsysError(error_kind::parse_error,
                        "line " + std::to_string(line) + ": " + what);
    }

    // Returns the rest of the line after "key:" if it starts that way.
    std::optional<std::string_view> keyed(std::string_view line,
                                          std::string_view key) {
      if (line.substr(0, key.size()) != key
          || line.substr(key.size(), 1) != ":") {
        return std::nullopt;
      }
      return line.substr(key.size() + 1);
    }

    bool is_default_labelling(std::vector<std::string> const& labels) {
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != std::to_string(i)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  std::vector<std::string> display_labels(Groupoid const& g) {
    std::vector<std::string> out;
    out.reserve(g.order());
    for (element_type x = 0; x < g.order(); ++x) {
      out.push_back(g.label(x));
    }
    return out;
  }

  Groupoid parse_groupoid(std::string_view text) {
    std::istringstream       is{std::string(text)};
    std::string              raw;
    std::size_t              lineno = 0;
    std::vector<std::string> labels;
    std::optional<std::string> zero_label;
    bool                     have_elements = false;
    bool                     in_table      = false;
    std::vector<std::vector<std::string>> rows;

    while (std::getline(is, raw)) {
      ++lineno;
      auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos || raw[first] == '#') {
        continue;
      }
      std::string_view line(raw);
      line.remove_prefix(first);
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
        line.remove_suffix(1);
      }
      if (in_table) {
        if (rows.size() == labels.size()) {
          parse_fail(lineno, "unexpected text after the table");
        }
        rows.push_back(split(line));
        continue;
      }
      if (auto rest = keyed(line, "elements")) {
        if (have_elements) {
          parse_fail(lineno, "duplicate elements line");
        }
        labels        = split(*rest);
        have_elements = true;
        if (labels.empty()) {
          parse_fail(lineno, "no elements listed");
        }
      } else if (auto rest = keyed(line, "zero")) {
        auto toks = split(*rest);
        if (toks.size() != 1 || zero_label) {
          parse_fail(lineno, "zero line needs exactly one label");
        }
        zero_label = toks.front();
      } else if (auto rest = keyed(line, "table")) {
        if (!split(*rest).empty()) {
          parse_fail(lineno, "rows start on the line after 'table:'");
        }
        if (!have_elements) {
          parse_fail(lineno, "'table:' before 'elements:'");
        }
        in_table = true;
      } else {
        parse_fail(lineno, "unrecognized line '" + std::string(line) + "'");
      }
    }
    if (!in_table) {
      throw BinsysError(error_kind::parse_error, "missing 'table:' section");
    }

    auto const                             n = labels.size();
    std::map<std::string, element_type>    index;
    for (element_type i = 0; i < n; ++i) {
      if (!index.emplace(labels[i], i).second) {
        throw BinsysError(error_kind::bad_labels,
                          "duplicate element label '" + labels[i] + "'");
      }
    }
    if (rows.size() != n) {
      throw BinsysError(error_kind::bad_shape,
                        "expected " + std::to_string(n) + " table rows, got "
                            + std::to_string(rows.size()));
    }
    std::vector<element_type> cells;
    cells.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) {
        throw BinsysError(error_kind::bad_shape,
                          "table row " + std::to_string(r + 1) + " has "
                              + std::to_string(rows[r].size())
                              + " entries, expected " + std::to_string(n));
      }
      for (auto const& tok : rows[r]) {
        auto it = index.find(tok);
        if (it == index.end()) {
          throw BinsysError(error_kind::parse_error,
                            "unknown label '" + tok + "' in table row "
                                + std::to_string(r + 1));
        }
        cells.push_back(it->second);
      }
    }
    std::optional<element_type> zero;
    if (zero_label) {
      auto it = index.find(*zero_label);
      if (it == index.end()) {
        throw BinsysError(error_kind::bad_zero,
                          "zero '" + *zero_label + "' is not an element");
      }
      zero = it->second;
    }
    if (is_default_labelling(labels)) {
      labels.clear();
    }
    return Groupoid(n, std::move(cells), std::move(labels), zero);
  }

  std::string serialize(Groupoid const& g) {
    auto const         labels = display_labels(g);
    std::ostringstream os;
    os << "elements:";
    for (auto const& l : labels) {
      os << ' ' << l;
    }
    os << '\n';
    if (auto z = g.zero()) {
      os << "zero: " << labels[*z] << '\n';
    }
    os << "table:\n";
    for (element_type x = 0; x < g.order(); ++x) {
      for (element_type y = 0; y < g.order(); ++y) {
        os << (y == 0 ? "" : " ") << labels[g(x, y)];
      }
      os << '\n';
    }
    return os.str();
  }

  std::string read_text(std::string const& path, std::istream& in) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(in),
              std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path);
    if (!file) {
      throw BinsysError(error_kind::parse_error, "cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(file),
            std::istreambuf_iterator<char>()};
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_id_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_'
             || c == '.' || c == '\'';
    }

    std::string quoted(std::string const& id) {
      bool plain = !id.empty();
      for (char c : id) {
        plain = plain && is_id_char(c) && c != '\'';
      }
      if (plain) {
        return id;
      }
      std::string out = "\"";
      for (char c : id) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }

    template <typename Graph>
    std::string emit(char const*                     keyword,
                     char const*                     connector,
                     Graph const&                    graph,
                     std::set<Edge> const&           links,
                     std::vector<std::string> const& labels) {
      std::ostringstream os;
      os << keyword << " {\n";
      for (element_type v = 0; v < graph.order(); ++v) {
        os << "  " << quoted(labels.at(v)) << ";\n";
      }
      for (auto const& [x, y] : links) {
        os << "  " << quoted(labels.at(x)) << ' ' << connector << ' '
           << quoted(labels.at(y)) << ";\n";
      }
      os << "}\n";
      return os.str();
    }

    class DotLexer {
     public:
      explicit DotLexer(std::string_view text) : _text(text), _pos(0) {}

      // Empty at end of input.
      std::string next() {
        skip_blank();
        if (_pos >= _text.size()) {
          return {};
        }
        char const c = _text[_pos];
        if (c == '"') {
          std::string out = "\"";
          ++_pos;
          while (_pos < _text.size() && _text[_pos] != '"') {
            if (_text[_pos] == '\\' && _pos + 1 < _text.size()) {
              ++_pos;
            }
            out += _text[_pos++];
          }
          if (_pos >= _text.size()) {
            throw BinsysError(error_kind::parse_error,
                              "unterminated string in DOT input");
          }
          ++_pos;
          return out;
        }
        if (_text.substr(_pos, 2) == "--" || _text.substr(_pos, 2) == "->") {
          _pos += 2;
          return std::string(_text.substr(_pos - 2, 2));
        }
        if (is_id_char(c)) {
          auto start = _pos;
          while (_pos < _text.size() && is_id_char(_text[_pos])) {
            ++_pos;
          }
          return std::string(_text.substr(start, _pos - start));
        }
        ++_pos;
        return std::string(1, c);
      }

      std::string peek() {
        auto save = _pos;
        auto tok  = next();
        _pos      = save;
        return tok;
      }

     private:
      void skip_blank() {
        while (_pos < _text.size()) {
          if (std::isspace(static_cast<unsigned char>(_text[_pos]))) {
            ++_pos;
          } else if (_text.substr(_pos, 2) == "//" || _text[_pos] == '#') {
            while (_pos < _text.size() && _text[_pos] != '\n') {
              ++_pos;
            }
          } else if (_text.substr(_pos, 2) == "/*") {
            auto end = _text.find("*/", _pos + 2);
            _pos     = end == std::string_view::npos ? _text.size() : end + 2;
          } else {
            return;
          }
        }
      }

      std::string_view _text;
      std::size_t      _pos;
    };

    bool is_identifier(std::string const& tok) {
      return !tok.empty() && (tok[0] == '"' || is_id_char(tok[0]));
    }

    std::string unquote(std::string const& tok) {
      return tok[0] == '"' ? tok.substr(1) : tok;
    }

    void skip_attributes(DotLexer& lex) {
      if (lex.peek() != "[") {
        return;
      }
      lex.next();
      for (auto tok = lex.next(); tok != "]"; tok = lex.next()) {
        if (tok.empty()) {
          throw BinsysError(error_kind::parse_error,
                            "unterminated attribute list in DOT input");
        }
      }
    }
  }  // namespace

  std::string to_dot(SimpleGraph const&              graph,
                     std::vector<std::string> const& labels) {
    return emit("graph", "--", graph, graph.edges(), labels);
  }

  std::string to_dot(Digraph const&                  graph,
                     std::vector<std::string> const& labels) {
    return emit("digraph", "->", graph, graph.arcs(), labels);
  }

  LabelledGraph parse_dot(std::string_view text) {
    DotLexer lex(text);
    auto     tok = lex.next();
    if (tok == "strict") {
      tok = lex.next();
    }
    if (tok != "graph") {
      throw BinsysError(error_kind::parse_error,
                        "expected 'graph', got '" + tok + "'");
    }
    tok = lex.next();
    if (tok != "{") {
      if (!is_identifier(tok) || lex.next() != "{") {
        throw BinsysError(error_kind::parse_error, "expected '{'");
      }
    }

    std::vector<std::string>              labels;
    std::map<std::string, element_type>   index;
    std::vector<std::pair<element_type, element_type>> edges;
    auto vertex = [&](std::string const& id) {
      auto [it, fresh] = index.emplace(id, labels.size());
      if (fresh) {
        labels.push_back(id);
      }
      return it->second;
    };

    for (tok = lex.next(); tok != "}"; tok = lex.next()) {
      if (tok.empty()) {
        throw BinsysError(error_kind::parse_error, "missing '}'");
      }
      if (tok == ";" || tok == ",") {
        continue;
      }
      if (tok == "node" || tok == "edge" || tok == "graph") {
        skip_attributes(lex);
        continue;
      }
      if (tok == "->") {
        throw BinsysError(error_kind::parse_error,
                          "directed edge in an undirected graph");
      }
      if (!is_identifier(tok)) {
        throw BinsysError(error_kind::parse_error,
                          "unexpected '" + tok + "' in DOT input");
      }
      if (lex.peek() == "=") {
        lex.next();
        lex.next();
        continue;
      }
      auto from = vertex(unquote(tok));
      while (lex.peek() == "--") {
        lex.next();
        auto id = lex.next();
        if (!is_identifier(id)) {
          throw BinsysError(error_kind::parse_error,
                            "expected a vertex after '--'");
        }
        auto to = vertex(unquote(id));
        edges.emplace_back(from, to);
        from = to;
      }
      if (lex.peek() == "->") {
        throw BinsysError(error_kind::parse_error,
                          "directed edge in an undirected graph");
      }
      skip_attributes(lex);
    }
    if (!lex.next().empty()) {
      throw BinsysError(error_kind::parse_error, "text after closing '}'");
    }

    SimpleGraph graph(labels.size());
    for (auto [x, y] : edges) {
      graph.add_edge(x, y);
    }
    return {std::move(graph), std::move(labels)};
  }

}  // namespace binsys::cli
