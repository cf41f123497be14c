#include "ordalg/structure_file.hpp"

#include <set>
#include <sstream>
#include <unordered_map>

#include "ordalg/error.hpp"

namespace ordalg {

  namespace {
    struct Token {
      std::string_view text;
      std::size_t      column;
    };

    struct Line {
      std::size_t        number;
      std::vector<Token> tokens;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      while (!text.empty() || number == 0) {
        ++number;
        auto const       eol  = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        Line out{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
          if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
          }
          out.tokens.push_back({line.substr(i, j - i), i + 1});
          i = j;
        }
        if (!out.tokens.empty()) {
          lines.push_back(std::move(out));
        }
        if (text.empty()) {
          break;
        }
      }
      return lines;
    }

    [[noreturn]] void fail(ErrorKind kind, Line const& line, Token const& tok, std::string const& msg) {
      throw ParseError(kind, line.number, tok.column, msg);
    }

    [[noreturn]] void fail(ErrorKind kind, Line const& line, std::string const& msg) {
      throw ParseError(kind, line.number, line.tokens.front().column, msg);
    }

    bool is_section_start(Line const& line) {
      auto const& first = line.tokens.front().text;
      if (first.ends_with(':')) {
        return true;
      }
      return first == "op" && line.tokens.size() == 2 && line.tokens[1].text.ends_with(':');
    }

    bool valid_name(std::string_view name) {
      return !name.empty() && name != "." && name != "?"
             && name.find_first_of("<=:#") == std::string_view::npos;
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : _lines(tokenize(text)) {}

      StructureFile run() {
        if (_lines.empty()) {
          throw ParseError(ErrorKind::Parse, 1, 1, "expected 'elements:'");
        }
        parse_elements(_lines[0]);
        std::set<std::string> sections;
        for (_pos = 1; _pos < _lines.size();) {
          Line const& line  = _lines[_pos];
          auto const  first = line.tokens.front().text;
          if (first == "covers:") {
            once(sections, "covers", line);
            parse_covers(line);
            ++_pos;
          } else if (first == "constants:") {
            once(sections, "constants", line);
            parse_constants(line);
            ++_pos;
          } else if (first == "op") {
            parse_op();
          } else if (first == "elements:") {
            fail(ErrorKind::Parse, line, "'elements:' given twice");
          } else {
            fail(ErrorKind::Parse, line, line.tokens.front(),
                 "unexpected '" + std::string(first) + "'");
          }
        }
        return std::move(_out);
      }

     private:
      static void once(std::set<std::string>& seen, std::string const& name, Line const& line) {
        if (!seen.insert(name).second) {
          fail(ErrorKind::Parse, line, "section '" + name + ":' given twice");
        }
      }

      Elem lookup(Line const& line, Token const& tok, std::string_view name) const {
        auto it = _index.find(std::string(name));
        if (it == _index.end()) {
          fail(ErrorKind::UnknownElement, line, tok, "unknown element '" + std::string(name) + "'");
        }
        return it->second;
      }

      void parse_elements(Line const& line) {
        if (line.tokens.front().text != "elements:") {
          fail(ErrorKind::Parse, line, "expected 'elements:'");
        }
        if (line.tokens.size() == 1) {
          fail(ErrorKind::Parse, line, "no elements declared");
        }
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          auto const& tok = line.tokens[i];
          if (!valid_name(tok.text)) {
            fail(ErrorKind::Parse, line, tok, "invalid element name '" + std::string(tok.text) + "'");
          }
          std::string name(tok.text);
          if (!_index.emplace(name, static_cast<Elem>(_out.elements.size())).second) {
            fail(ErrorKind::DuplicateName, line, tok, "duplicate element '" + name + "'");
          }
          _out.elements.push_back(std::move(name));
        }
      }

      void parse_covers(Line const& line) {
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          auto const& tok = line.tokens[i];
          auto const  lt  = tok.text.find('<');
          if (lt == std::string_view::npos || tok.text.find('<', lt + 1) != std::string_view::npos) {
            fail(ErrorKind::Parse, line, tok, "expected 'lower<upper'");
          }
          auto const lo = tok.text.substr(0, lt);
          auto const hi = tok.text.substr(lt + 1);
          lookup(line, tok, lo);
          lookup(line, Token{hi, tok.column + lt + 1}, hi);
          _out.covers.emplace_back(std::string(lo), std::string(hi));
        }
      }

      void parse_constants(Line const& line) {
        std::set<std::string_view> names;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          auto const& tok = line.tokens[i];
          auto const  eq  = tok.text.find('=');
          if (eq == std::string_view::npos || eq == 0) {
            fail(ErrorKind::Parse, line, tok, "expected 'name=element'");
          }
          auto const name  = tok.text.substr(0, eq);
          auto const value = tok.text.substr(eq + 1);
          if (!names.insert(name).second) {
            fail(ErrorKind::Parse, line, tok, "duplicate constant '" + std::string(name) + "'");
          }
          lookup(line, Token{value, tok.column + eq + 1}, value);
          _out.constants.emplace_back(std::string(name), std::string(value));
        }
      }

      void parse_op() {
        Line const& head = _lines[_pos];
        if (head.tokens.size() != 2 || !head.tokens[1].text.ends_with(':')
            || head.tokens[1].text.size() < 2) {
          fail(ErrorKind::Parse, head, "expected 'op <name>:'");
        }
        std::string name(head.tokens[1].text.substr(0, head.tokens[1].text.size() - 1));
        if (_out.op(name) != nullptr) {
          fail(ErrorKind::Parse, head, head.tokens[1], "operation '" + name + "' given twice");
        }
        std::size_t const n = _out.elements.size();
        ++_pos;
        if (_pos >= _lines.size() || is_section_start(_lines[_pos])) {
          throw ParseError(ErrorKind::RaggedTable, head.number, head.tokens.front().column,
                           "operation '" + name + "' has no table");
        }

        Line const& header = _lines[_pos];
        if (header.tokens.front().text != ".") {
          fail(ErrorKind::Parse, header, "table header must start with '.'");
        }
        if (header.tokens.size() != n + 1) {
          fail(ErrorKind::RaggedTable, header,
               "header has " + std::to_string(header.tokens.size() - 1) + " columns, expected "
                   + std::to_string(n));
        }
        std::vector<Elem> columns;
        ElemSet           seen_cols;
        for (std::size_t i = 1; i <= n; ++i) {
          Elem const e = lookup(header, header.tokens[i], header.tokens[i].text);
          if (seen_cols.contains(e)) {
            fail(ErrorKind::Parse, header, header.tokens[i], "column repeated");
          }
          seen_cols.insert(e);
          columns.push_back(e);
        }
        ++_pos;

        BinOp   table(n);
        ElemSet seen_rows;
        for (std::size_t r = 0; r < n; ++r, ++_pos) {
          if (_pos >= _lines.size() || is_section_start(_lines[_pos])) {
            Line const& last = _lines[_pos - 1];
            throw ParseError(ErrorKind::RaggedTable, last.number + 1, 1,
                             "operation '" + name + "' has " + std::to_string(r)
                                 + " rows, expected " + std::to_string(n));
          }
          Line const& row = _lines[_pos];
          if (row.tokens.size() != n + 1) {
            fail(ErrorKind::RaggedTable, row,
                 "row has " + std::to_string(row.tokens.size() - 1) + " cells, expected "
                     + std::to_string(n));
          }
          Elem const a = lookup(row, row.tokens[0], row.tokens[0].text);
          if (seen_rows.contains(a)) {
            fail(ErrorKind::Parse, row, "row repeated");
          }
          seen_rows.insert(a);
          for (std::size_t i = 1; i <= n; ++i) {
            auto const& cell = row.tokens[i];
            if (cell.text == "?") {
              table.set(a, columns[i - 1], std::nullopt);
            } else {
              table.set(a, columns[i - 1], lookup(row, cell, cell.text));
            }
          }
        }
        _out.ops.push_back({std::move(name), std::move(table)});
      }

      std::vector<Line>                     _lines;
      std::size_t                           _pos = 0;
      StructureFile                         _out;
      std::unordered_map<std::string, Elem> _index;
    };

    void join_line(std::ostringstream& os, std::vector<std::string> const& words) {
      for (auto const& w : words) {
        os << ' ' << w;
      }
      os << '\n';
    }
  }  // namespace

  NamedOp const* StructureFile::op(std::string_view name) const {
    for (auto const& o : ops) {
      if (o.name == name) {
        return &o;
      }
    }
    return nullptr;
  }

  StructureFile parse_structure(std::string_view text) {
    return Parser(text).run();
  }

  std::string render_structure(StructureFile const& s) {
    std::ostringstream os;
    os << "elements:";
    join_line(os, s.elements);
    os << "covers:";
    std::vector<std::string> covers;
    for (auto const& [lo, hi] : s.covers) {
      covers.push_back(lo + "<" + hi);
    }
    join_line(os, covers);
    for (auto const& op : s.ops) {
      os << "op " << op.name << ":\n.";
      join_line(os, s.elements);
      for (Elem a = 0; a < s.elements.size(); ++a) {
        os << s.elements[a];
        for (Elem b = 0; b < s.elements.size(); ++b) {
          auto const cell = op.table.get(a, b);
          os << ' ' << (cell ? s.elements[*cell] : std::string("?"));
        }
        os << '\n';
      }
    }
    if (!s.constants.empty()) {
      os << "constants:";
      std::vector<std::string> constants;
      for (auto const& [name, value] : s.constants) {
        constants.push_back(name + "=" + value);
      }
      join_line(os, constants);
    }
    return os.str();
  }

  Poset to_poset(StructureFile const& s) {
    return make_poset(s.elements, s.covers);
  }

  StructureFile from_poset(Poset const&                                     p,
                           std::vector<NamedOp>                             ops,
                           std::vector<std::pair<std::string, std::string>> constants) {
    StructureFile s;
    s.elements = p.names();
    for (auto const& [lo, hi] : p.covers()) {
      s.covers.emplace_back(p.name(lo), p.name(hi));
    }
    s.ops       = std::move(ops);
    s.constants = std::move(constants);
    return s;
  }

}  // namespace ordalg
