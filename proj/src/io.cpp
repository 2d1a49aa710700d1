#include "vkc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "vkc/error.hpp"

namespace vkc {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    out.push_back(l);
    start = end + 1;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& msg) {
  fail(ErrorCode::ParseError,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::optional<std::size_t> to_number(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

const Subcomplex& ComplexFile::sub(std::string_view name) const {
  for (const auto& [n, s] : subcomplexes) {
    if (n == name) return s;
  }
  fail(ErrorCode::InvalidArgument, "no subcomplex named " + std::string(name));
}

ComplexFile parse_complex(std::string_view text) {
  ComplexFile out;
  TwoComplex& x = out.complex;
  // Subcomplexes are resolved after all cells are known.
  struct PendingSub {
    std::string name;
    std::vector<std::vector<Token>> sections;
    std::size_t line;
  };
  std::vector<PendingSub> subs;
  std::optional<std::pair<Token, std::size_t>> base;

  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t ln = n + 1;
    const std::vector<Token> t = tokenize(lines[n]);
    if (t.empty()) continue;
    const std::string& kw = t[0].text;
    auto need = [&](std::size_t k, const char* what) {
      if (t.size() < k) parse_fail(ln, t.back().column + t.back().text.size(), std::string("expected ") + what);
    };
    auto vertex = [&](const Token& tok) {
      const auto v = x.find_vertex(tok.text);
      if (!v) parse_fail(ln, tok.column, "unknown vertex " + tok.text);
      return *v;
    };
    auto edge = [&](const Token& tok) {
      const auto e = x.find_edge(tok.text);
      if (!e) parse_fail(ln, tok.column, "unknown edge " + tok.text);
      return *e;
    };
    try {
      if (kw == "vertex") {
        need(2, "vertex name");
        for (std::size_t k = 1; k < t.size(); ++k) {
          if (x.find_vertex(t[k].text)) parse_fail(ln, t[k].column, "duplicate vertex " + t[k].text);
          x.add_vertex(t[k].text);
        }
      } else if (kw == "edge") {
        if (t.size() != 4) parse_fail(ln, t[0].column, "expected: edge NAME SRC TGT");
        x.add_edge(t[1].text, vertex(t[2]), vertex(t[3]));
      } else if (kw == "cell") {
        need(3, "cell name and boundary");
        std::vector<EdgeId> boundary;
        for (std::size_t k = 2; k < t.size(); ++k) boundary.push_back(edge(t[k]));
        x.add_cell(t[1].text, std::move(boundary));
      } else if (kw == "sub") {
        need(2, "subcomplex name");
        PendingSub s{t[1].text, {{}}, ln};
        for (std::size_t k = 2; k < t.size(); ++k) {
          if (t[k].text == "/") {
            if (s.sections.size() == 3) parse_fail(ln, t[k].column, "at most three sections");
            s.sections.emplace_back();
          } else {
            s.sections.back().push_back(t[k]);
          }
        }
        subs.push_back(std::move(s));
      } else if (kw == "base") {
        if (t.size() != 2) parse_fail(ln, t[0].column, "expected: base VERTEX");
        if (base) parse_fail(ln, t[0].column, "base given twice");
        base = std::make_pair(t[1], ln);
      } else {
        parse_fail(ln, t[0].column, "unknown directive " + kw);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      parse_fail(ln, t[0].column, e.what());
    }
  }

  const std::vector<std::string> issues = validate_complex(x);
  if (!issues.empty()) fail(ErrorCode::ValidationError, issues.front());

  for (const PendingSub& s : subs) {
    std::vector<VertexId> vs;
    std::vector<EdgeId> es;
    std::vector<CellId> cs;
    for (const Token& tok : s.sections[0]) {
      const auto e = x.find_edge(tok.text);
      if (!e) parse_fail(s.line, tok.column, "unknown edge " + tok.text);
      es.push_back(*e);
    }
    if (s.sections.size() > 1) {
      for (const Token& tok : s.sections[1]) {
        const auto v = x.find_vertex(tok.text);
        if (!v) parse_fail(s.line, tok.column, "unknown vertex " + tok.text);
        vs.push_back(*v);
      }
    }
    if (s.sections.size() > 2) {
      for (const Token& tok : s.sections[2]) {
        const auto c = x.find_cell(tok.text);
        if (!c) parse_fail(s.line, tok.column, "unknown cell " + tok.text);
        cs.push_back(*c);
      }
    }
    for (const auto& [name, _] : out.subcomplexes) {
      if (name == s.name) parse_fail(s.line, 1, "duplicate subcomplex " + s.name);
    }
    out.subcomplexes.emplace_back(s.name, Subcomplex::closure(x, vs, es, cs));
  }
  if (base) {
    const auto v = x.find_vertex(base->first.text);
    if (!v) parse_fail(base->second, base->first.column, "unknown vertex " + base->first.text);
    out.base = *v;
  }
  return out;
}

ComplexFile load_complex(const std::filesystem::path& path) { return parse_complex(read_file(path)); }

std::string emit_complex(const ComplexFile& file) {
  const TwoComplex& x = file.complex;
  std::ostringstream o;
  for (VertexId v = 0; v < x.vertex_count(); ++v) o << "vertex " << x.vertex_name(v) << "\n";
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    o << "edge " << x.edge_pair_name(pair_of(e)) << " " << x.vertex_name(x.src(e)) << " "
      << x.vertex_name(x.tgt(e)) << "\n";
  }
  for (CellId c = 0; c < x.cell_count(); ++c) {
    o << "cell " << x.cell_name(c);
    for (EdgeId e : x.boundary(c)) o << " " << (is_reversed(e) ? "~" : "") << x.edge_pair_name(pair_of(e));
    o << "\n";
  }
  for (const auto& [name, s] : file.subcomplexes) {
    o << "sub " << name;
    for (EdgeId e : s.edges()) o << " " << x.edge_pair_name(pair_of(e));
    o << " /";
    for (VertexId v : s.vertices()) o << " " << x.vertex_name(v);
    o << " /";
    for (CellId c : s.cells()) o << " " << x.cell_name(c);
    o << "\n";
  }
  if (file.base) o << "base " << x.vertex_name(*file.base) << "\n";
  return o.str();
}

FiniteGroup parse_group(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
  const auto raw = split_lines(text);
  for (std::size_t n = 0; n < raw.size(); ++n) {
    auto t = tokenize(raw[n]);
    if (!t.empty()) lines.emplace_back(n + 1, std::move(t));
  }
  if (lines.empty()) fail(ErrorCode::ParseError, "empty group description");
  const auto& [ln, head] = lines.front();
  const std::string& kw = head[0].text;
  if (kw == "cyclic" || kw == "symmetric") {
    if (head.size() != 2 || lines.size() != 1) parse_fail(ln, head[0].column, "expected: " + kw + " N");
    const auto n = to_number(head[1].text);
    if (!n) parse_fail(ln, head[1].column, "not a number: " + head[1].text);
    return kw == "cyclic" ? make_cyclic(*n) : make_symmetric(*n);
  }
  if (kw != "table") parse_fail(ln, head[0].column, "expected cyclic, symmetric or table");
  if (head.size() != 1) parse_fail(ln, head[1].column, "table takes no arguments");
  if (lines.size() < 2) parse_fail(ln, 1, "missing element list");
  std::vector<std::string> names;
  for (const Token& tok : lines[1].second) {
    if (std::find(names.begin(), names.end(), tok.text) != names.end()) {
      parse_fail(lines[1].first, tok.column, "duplicate element " + tok.text);
    }
    names.push_back(tok.text);
  }
  const std::size_t n = names.size();
  if (lines.size() != n + 2) {
    fail(ErrorCode::ParseError, "table needs " + std::to_string(n) + " rows, got " +
                                    std::to_string(lines.size() - 2));
  }
  std::vector<Element> table;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& [rl, row] = lines[r + 2];
    if (row.size() != n) parse_fail(rl, 1, "row needs " + std::to_string(n) + " entries");
    for (const Token& tok : row) {
      const auto it = std::find(names.begin(), names.end(), tok.text);
      if (it == names.end()) parse_fail(rl, tok.column, "unknown element " + tok.text);
      table.push_back(static_cast<Element>(it - names.begin()));
    }
  }
  Element identity = 0;
  for (Element e = 0; e < n; ++e) {
    bool left = true;
    for (Element b = 0; b < n; ++b) left = left && table[e * n + b] == b;
    if (left) {
      identity = e;
      break;
    }
  }
  return FiniteGroup::from_table(std::move(names), std::move(table), identity);
}

FiniteGroup resolve_group(std::string_view ref) {
  const std::string r = trim(ref);
  if (r.size() >= 2 && (r[0] == 'Z' || r[0] == 'S')) {
    if (const auto n = to_number(std::string_view(r).substr(1))) {
      return r[0] == 'Z' ? make_cyclic(*n) : make_symmetric(*n);
    }
  }
  if (r.starts_with("cyclic ") || r.starts_with("symmetric ") || r.starts_with("table")) {
    return parse_group(r);
  }
  if (std::filesystem::exists(r)) return parse_group(read_file(r));
  fail(ErrorCode::ParseError, "unknown group reference: " + r);
}

std::vector<FiniteGroup> parse_battery(std::string_view list) {
  const std::string s = trim(list);
  if (s.empty() || s == "default") return default_battery();
  std::vector<FiniteGroup> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    const std::string part = trim(std::string_view(s).substr(start, end - start));
    if (part.empty()) fail(ErrorCode::ParseError, "empty entry in battery list");
    out.push_back(resolve_group(part));
    start = end + 1;
  }
  return out;
}

Cocycle parse_cocycle(const TwoComplex& x, std::string_view text, BaseSet base) {
  const auto raw = split_lines(text);
  std::optional<FiniteGroup> g;
  std::vector<std::optional<Element>> pairs(x.edge_pair_count());
  for (std::size_t n = 0; n < raw.size(); ++n) {
    const std::size_t ln = n + 1;
    const auto t = tokenize(raw[n]);
    if (t.empty()) continue;
    if (!g) {
      if (t[0].text != "cocycle" || t.size() < 2) parse_fail(ln, t[0].column, "expected: cocycle GROUPREF");
      const std::size_t from = t[1].column - 1;
      const auto hash = raw[n].find('#');
      try {
        g = resolve_group(raw[n].substr(from, hash == std::string_view::npos ? hash : hash - from));
      } catch (const Error& e) {
        parse_fail(ln, t[1].column, e.what());
      }
      continue;
    }
    if (t.size() != 2) parse_fail(ln, t[0].column, "expected: EDGE VALUE");
    const auto e = x.find_edge(t[0].text);
    if (!e) parse_fail(ln, t[0].column, "unknown edge " + t[0].text);
    const auto v = g->find(t[1].text);
    if (!v) parse_fail(ln, t[1].column, "unknown element " + t[1].text);
    if (pairs[pair_of(*e)]) parse_fail(ln, t[0].column, "edge given twice");
    pairs[pair_of(*e)] = is_reversed(*e) ? g->inv(*v) : *v;
  }
  if (!g) fail(ErrorCode::ParseError, "missing cocycle header");
  std::vector<Element> values;
  for (std::uint32_t k = 0; k < pairs.size(); ++k) {
    if (!pairs[k]) fail(ErrorCode::ParseError, "no value for edge " + x.edge_pair_name(k));
    values.push_back(*pairs[k]);
  }
  return cocycle_from_pairs(x, *g, values, std::move(base));
}

std::string emit_cocycle(const TwoComplex& x, const Cocycle& u, std::string_view group_ref) {
  std::ostringstream o;
  o << "cocycle " << group_ref << "\n";
  for (EdgeId e = 0; e < x.edge_count(); e += 2) {
    o << x.edge_pair_name(pair_of(e)) << " " << u.group().name(u[e]) << "\n";
  }
  return o.str();
}

}  // namespace vkc
