#include "dmx/io.hpp"

#include <optional>
#include <set>
#include <vector>

#include "dmx/errors.hpp"

namespace dmx::io {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::string_view text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    std::size_t first = 0;
    while (first < raw.size() && is_space(raw[first])) ++first;
    if (first < raw.size() && raw[first] != '#') out.push_back(Line{number, raw});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<Token> tokenize(std::string_view s, int offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    out.push_back(Token{std::string(s.substr(start, i - start)), offset + static_cast<int>(start) + 1});
  }
  return out;
}

// Splits "key: rest"; the returned offset is the 0-based index where rest begins.
std::pair<std::string, std::size_t> split_key(const Line& line) {
  const std::size_t colon = line.text.find(':');
  std::size_t first = 0;
  while (first < line.text.size() && is_space(line.text[first])) ++first;
  if (colon == std::string_view::npos) {
    throw ParseError(line.number, static_cast<int>(first) + 1, "expected 'key: value'");
  }
  std::size_t last = colon;
  while (last > first && is_space(line.text[last - 1])) --last;
  return {std::string(line.text.substr(first, last - first)), colon + 1};
}

void check_label(const Token& t, int line) {
  for (char c : t.text) {
    if (c == '{' || c == '}' || c == ',' || c == '#') {
      throw ParseError(line, t.column, "label '" + t.text + "' contains a reserved character");
    }
  }
}

SubsetMask parse_braced_set(const Line& line, std::size_t offset, const GroundSet& ground) {
  std::string_view rest = line.text.substr(offset);
  std::size_t i = 0;
  auto column = [&](std::size_t at) { return static_cast<int>(offset + at) + 1; };
  while (i < rest.size() && is_space(rest[i])) ++i;
  if (i >= rest.size() || rest[i] != '{') throw ParseError(line.number, column(i), "expected '{'");
  ++i;
  SubsetMask out;
  bool expect_label = true;
  bool closed = false;
  bool any = false;
  while (i < rest.size()) {
    while (i < rest.size() && is_space(rest[i])) ++i;
    if (i >= rest.size()) break;
    if (rest[i] == '}') {
      if (any && expect_label) throw ParseError(line.number, column(i), "expected a label before '}'");
      closed = true;
      ++i;
      break;
    }
    if (rest[i] == ',') {
      if (expect_label) throw ParseError(line.number, column(i), "unexpected ','");
      expect_label = true;
      ++i;
      continue;
    }
    if (!expect_label) throw ParseError(line.number, column(i), "expected ',' or '}'");
    const std::size_t start = i;
    while (i < rest.size() && !is_space(rest[i]) && rest[i] != ',' && rest[i] != '}' && rest[i] != '{') ++i;
    if (i == start) throw ParseError(line.number, column(i), "unexpected character");
    const std::string label(rest.substr(start, i - start));
    const auto e = ground.index_of(label);
    if (!e) throw ParseError(line.number, column(start), "unknown element '" + label + "'");
    if (out.contains(*e)) throw ParseError(line.number, column(start), "element '" + label + "' repeated");
    out = out.with(*e);
    expect_label = false;
    any = true;
  }
  if (!closed) throw ParseError(line.number, column(rest.size()), "missing '}'");
  while (i < rest.size() && is_space(rest[i])) ++i;
  if (i < rest.size()) throw ParseError(line.number, column(i), "trailing characters after '}'");
  return out;
}

}  // namespace

DmDocument parse_dm(std::string_view text) {
  DmDocument doc;
  std::optional<GroundSet> ground;
  std::vector<SubsetMask> family;
  std::set<std::uint32_t> seen;
  for (const Line& line : meaningful_lines(text)) {
    const auto [key, offset] = split_key(line);
    if (key == "kind") {
      if (doc.explicit_kind || ground) throw ParseError(line.number, 1, "'kind' must come first and only once");
      const auto tokens = tokenize(line.text.substr(offset), static_cast<int>(offset));
      if (tokens.size() != 1) throw ParseError(line.number, static_cast<int>(offset) + 1, "expected one kind");
      if (tokens[0].text == "matroid") {
        doc.kind = DmKind::matroid;
      } else if (tokens[0].text == "delta-matroid") {
        doc.kind = DmKind::delta_matroid;
      } else if (tokens[0].text == "set-system") {
        doc.kind = DmKind::set_system;
      } else {
        throw ParseError(line.number, tokens[0].column, "unknown kind '" + tokens[0].text + "'");
      }
      doc.explicit_kind = true;
    } else if (key == "ground") {
      if (ground) throw ParseError(line.number, 1, "duplicate 'ground' line");
      std::vector<std::string> labels;
      std::set<std::string> unique;
      for (const Token& t : tokenize(line.text.substr(offset), static_cast<int>(offset))) {
        check_label(t, line.number);
        if (!unique.insert(t.text).second) throw ParseError(line.number, t.column, "duplicate label '" + t.text + "'");
        labels.push_back(t.text);
      }
      if (static_cast<int>(labels.size()) > kMaxGroundSize) {
        throw ParseError(line.number, 1, "more than " + std::to_string(kMaxGroundSize) + " ground elements");
      }
      ground = GroundSet(std::move(labels));
    } else if (key == "feasible") {
      if (!ground) throw ParseError(line.number, 1, "'feasible' before 'ground'");
      const SubsetMask s = parse_braced_set(line, offset, *ground);
      if (!seen.insert(s.bits()).second) {
        const auto brace = line.text.find('{', offset);
        throw ParseError(line.number, static_cast<int>(brace) + 1, "duplicate feasible set");
      }
      family.push_back(s);
    } else {
      throw ParseError(line.number, 1, "unknown key '" + key + "'");
    }
  }
  if (!ground) throw ParseError(1, 1, "missing 'ground' line");
  doc.system = SetSystem(std::move(*ground), std::move(family));
  return doc;
}

std::string format_dm(const SetSystem& s) {
  std::string out = "ground:";
  for (const auto& l : s.ground().labels()) out += " " + l;
  out += '\n';
  for (SubsetMask f : s.family()) out += "feasible: " + format_subset(s.ground(), f) + "\n";
  return out;
}

std::string format_matroid(const Matroid& m) { return "kind: matroid\n" + format_dm(m.system()); }

namespace {

std::uint32_t parse_bit_row(const Line& line, int width) {
  const auto tokens = tokenize(line.text, 0);
  if (tokens.size() != 1) throw ParseError(line.number, 1, "expected one row of 0/1 characters");
  const Token& t = tokens[0];
  if (static_cast<int>(t.text.size()) != width) {
    throw ParseError(line.number, t.column, "expected " + std::to_string(width) + " entries, found " + std::to_string(t.text.size()));
  }
  std::uint32_t row = 0;
  for (int c = 0; c < width; ++c) {
    const char ch = t.text[static_cast<std::size_t>(c)];
    if (ch != '0' && ch != '1') throw ParseError(line.number, t.column + c, "entries must be 0 or 1");
    if (ch == '1') row |= std::uint32_t{1} << c;
  }
  return row;
}

int parse_count(const Token& t, int line, int max) {
  int value = 0;
  if (t.text.empty() || t.text.size() > 3) throw ParseError(line, t.column, "expected a count");
  for (char c : t.text) {
    if (c < '0' || c > '9') throw ParseError(line, t.column, "expected a count");
    value = value * 10 + (c - '0');
  }
  if (value > max) throw ParseError(line, t.column, "count exceeds " + std::to_string(max));
  return value;
}

}  // namespace

Gf2Document parse_gf2(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'gf2sym n' or 'gf2 r c' header");
  const auto header = tokenize(lines[0].text, 0);
  const int hl = lines[0].number;
  std::vector<std::uint32_t> rows;
  auto read_rows = [&](int count, int width) {
    if (static_cast<int>(lines.size()) - 1 != count) {
      throw ParseError(lines.back().number, 1, "expected " + std::to_string(count) + " rows, found " + std::to_string(lines.size() - 1));
    }
    for (int r = 0; r < count; ++r) rows.push_back(parse_bit_row(lines[static_cast<std::size_t>(r) + 1], width));
  };
  if (!header.empty() && header[0].text == "gf2sym") {
    if (header.size() != 2) throw ParseError(hl, header[0].column, "expected 'gf2sym n'");
    const int n = parse_count(header[1], hl, kMaxGroundSize);
    read_rows(n, n);
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < v; ++w) {
        const bool vw = ((rows[static_cast<std::size_t>(v)] >> w) & 1U) != 0;
        const bool wv = ((rows[static_cast<std::size_t>(w)] >> v) & 1U) != 0;
        if (vw != wv) {
          throw ParseError(lines[static_cast<std::size_t>(v) + 1].number, w + 1, "matrix is not symmetric");
        }
      }
    }
    return Gf2SymmetricMatrix::from_rows(std::move(rows));
  }
  if (!header.empty() && header[0].text == "gf2") {
    if (header.size() != 3) throw ParseError(hl, header[0].column, "expected 'gf2 r c'");
    const int r = parse_count(header[1], hl, 32);
    const int c = parse_count(header[2], hl, kMaxGroundSize);
    read_rows(r, c);
    return Gf2Matrix(c, std::move(rows));
  }
  throw ParseError(hl, header.empty() ? 1 : header[0].column, "expected 'gf2sym n' or 'gf2 r c'");
}

namespace {

std::string bit_row(std::uint32_t row, int width) {
  std::string out;
  for (int c = 0; c < width; ++c) out += ((row >> c) & 1U) != 0 ? '1' : '0';
  return out;
}

}  // namespace

std::string format_gf2(const Gf2SymmetricMatrix& a) {
  std::string out = "gf2sym " + std::to_string(a.order()) + "\n";
  for (int v = 0; v < a.order(); ++v) out += bit_row(a.row(v), a.order()) + "\n";
  return out;
}

std::string format_gf2(const Gf2Matrix& b) {
  std::string out = "gf2 " + std::to_string(b.rows()) + " " + std::to_string(b.cols()) + "\n";
  for (int r = 0; r < b.rows(); ++r) out += bit_row(b.row(r), b.cols()) + "\n";
  return out;
}

RibbonGraph parse_rg(std::string_view text) {
  std::vector<std::vector<std::string>> rotations;
  std::vector<RibbonGraph::EdgeSpec> edges;
  std::set<std::string> halves;
  std::set<std::string> used_halves;
  std::set<std::string> edge_labels;
  struct Pending {
    int line;
    int column;
    std::string half;
  };
  std::vector<Pending> uses;
  for (const Line& line : meaningful_lines(text)) {
    const auto [key, offset] = split_key(line);
    const auto tokens = tokenize(line.text.substr(offset), static_cast<int>(offset));
    if (key == "vertex") {
      auto& rot = rotations.emplace_back();
      for (const Token& t : tokens) {
        if (!halves.insert(t.text).second) throw ParseError(line.number, t.column, "half-edge '" + t.text + "' placed twice");
        rot.push_back(t.text);
      }
    } else if (key == "edge") {
      if (tokens.size() != 4) throw ParseError(line.number, static_cast<int>(offset) + 1, "expected 'edge: label h1 h2 +|-'");
      check_label(tokens[0], line.number);
      if (!edge_labels.insert(tokens[0].text).second) {
        throw ParseError(line.number, tokens[0].column, "duplicate edge label '" + tokens[0].text + "'");
      }
      for (int i : {1, 2}) {
        const Token& t = tokens[static_cast<std::size_t>(i)];
        if (!used_halves.insert(t.text).second) throw ParseError(line.number, t.column, "half-edge '" + t.text + "' used by two edges");
        uses.push_back(Pending{line.number, t.column, t.text});
      }
      if (tokens[3].text != "+" && tokens[3].text != "-") throw ParseError(line.number, tokens[3].column, "sign must be '+' or '-'");
      edges.push_back(RibbonGraph::EdgeSpec{tokens[0].text, tokens[1].text, tokens[2].text, tokens[3].text == "-"});
    } else {
      throw ParseError(line.number, 1, "unknown key '" + key + "'");
    }
  }
  for (const auto& u : uses) {
    if (!halves.count(u.half)) throw ParseError(u.line, u.column, "half-edge '" + u.half + "' is not placed at a vertex");
  }
  for (const auto& h : halves) {
    if (!used_halves.count(h)) throw ParseError(1, 1, "half-edge '" + h + "' belongs to no edge");
  }
  if (static_cast<int>(edges.size()) > kMaxGroundSize) throw ParseError(1, 1, "too many edges");
  return RibbonGraph::from_labels(rotations, edges);
}

std::string format_rg(const RibbonGraph& g) {
  std::string out;
  for (const auto& rot : g.rotations()) {
    out += "vertex:";
    for (int h : rot) out += " " + g.half_label(h);
    out += '\n';
  }
  for (const auto& e : g.edges()) {
    out += "edge: " + e.label + " " + g.half_label(e.first_half) + " " + g.half_label(e.second_half) +
           (e.twisted ? " -\n" : " +\n");
  }
  return out;
}

FileKind detect_kind(std::string_view path, std::string_view text) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".dm")) return FileKind::dm;
  if (ends_with(".gf2")) return FileKind::gf2;
  if (ends_with(".rg")) return FileKind::rg;
  const auto lines = meaningful_lines(text);
  if (!lines.empty()) {
    const auto tokens = tokenize(lines[0].text, 0);
    if (!tokens.empty() && (tokens[0].text == "gf2sym" || tokens[0].text == "gf2")) return FileKind::gf2;
    if (!tokens.empty() && (tokens[0].text.rfind("vertex:", 0) == 0 || tokens[0].text.rfind("edge:", 0) == 0)) {
      return FileKind::rg;
    }
  }
  return FileKind::dm;
}

}  // namespace dmx::io
