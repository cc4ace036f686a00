#include "crosscut/io.hpp"

#include <map>
#include <sstream>
#include <unordered_map>

#include "crosscut/error.hpp"

namespace crosscut {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    std::size_t end = i;
    if (ch == '{') {
      end = line.find('}', i);
      end = end == std::string_view::npos ? line.size() : end + 1;
    } else {
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    }
    tokens.emplace_back(line.substr(i, end - i));
    i = end;
  }
  return tokens;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return lines;
}

bool is_keyword(const Line& line, std::string_view keyword) {
  return !line.tokens.empty() && line.tokens.front() == keyword;
}

}  // namespace

Poset parse_poset(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty() || !is_keyword(lines.front(), "elements:")) {
    throw ParseError(lines.empty() ? 1 : lines.front().number, "expected 'elements:' line first");
  }
  std::vector<std::string> labels(lines.front().tokens.begin() + 1, lines.front().tokens.end());
  std::unordered_map<std::string, Element> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!ids.emplace(labels[i], static_cast<Element>(i)).second) {
      throw ParseError(lines.front().number, "duplicate label '" + labels[i] + "'");
    }
  }
  if (static_cast<int>(labels.size()) > Poset::kMaxElements) {
    throw ParseError(lines.front().number, "more than " + std::to_string(Poset::kMaxElements) + " elements");
  }
  std::vector<Cover> covers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (is_keyword(line, "side:")) continue;
    if (line.tokens.size() != 3 || line.tokens[1] != "<") {
      throw ParseError(line.number, "expected 'x < y'");
    }
    const auto lower = ids.find(line.tokens[0]);
    const auto upper = ids.find(line.tokens[2]);
    if (lower == ids.end()) throw ParseError(line.number, "unknown element '" + line.tokens[0] + "'");
    if (upper == ids.end()) throw ParseError(line.number, "unknown element '" + line.tokens[2] + "'");
    covers.emplace_back(lower->second, upper->second);
  }
  return from_covers(std::move(labels), covers);
}

std::optional<std::vector<Side>> parse_sides(std::string_view text) {
  for (const Line& line : significant_lines(text)) {
    if (!is_keyword(line, "side:")) continue;
    std::vector<Side> sides;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      if (line.tokens[i] == "D") {
        sides.push_back(Side::D);
      } else if (line.tokens[i] == "U") {
        sides.push_back(Side::U);
      } else {
        throw ParseError(line.number, "side tags are D or U");
      }
    }
    return sides;
  }
  return std::nullopt;
}

namespace {

void emit_elements(std::ostringstream& out, const Poset& p) {
  out << "elements:";
  for (const auto& label : p.labels()) out << ' ' << label;
  out << '\n';
}

void emit_covers(std::ostringstream& out, const Poset& p) {
  for (auto [x, y] : hasse_covers(p)) out << p.label(x) << " < " << p.label(y) << '\n';
}

}  // namespace

std::string emit_poset(const Poset& p) {
  std::ostringstream out;
  emit_elements(out, p);
  emit_covers(out, p);
  return out.str();
}

std::string emit_crosscut(const CrosscutPoset& cc) {
  std::ostringstream out;
  emit_elements(out, *cc.order);
  out << "side:";
  for (Side side : cc.sides) out << ' ' << side_letter(side);
  out << '\n';
  emit_covers(out, *cc.order);
  return out.str();
}

OrderMap parse_map(std::string_view text, const Poset& source, const Poset& target) {
  std::vector<Element> values(source.size(), -1);
  std::size_t last_line = 1;
  for (const Line& line : significant_lines(text)) {
    last_line = line.number;
    if (line.tokens.size() != 3 || line.tokens[1] != "->") throw ParseError(line.number, "expected 'x -> y'");
    const auto x = source.find_label(line.tokens[0]);
    const auto y = target.find_label(line.tokens[2]);
    if (!x) throw ParseError(line.number, "unknown source element '" + line.tokens[0] + "'");
    if (!y) throw ParseError(line.number, "unknown target element '" + line.tokens[2] + "'");
    if (values[*x] != -1) throw ParseError(line.number, "element '" + line.tokens[0] + "' mapped twice");
    values[*x] = *y;
  }
  for (Element x = 0; x < source.size(); ++x) {
    if (values[x] == -1) throw ParseError(last_line, "no image given for '" + source.label(x) + "'");
  }
  return make_map(source, target, std::move(values));
}

std::string emit_map(const OrderMap& f) {
  std::ostringstream out;
  for (Element x = 0; x < f.source().size(); ++x) {
    out << f.source().label(x) << " -> " << f.target().label(f(x)) << '\n';
  }
  return out.str();
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

std::string dot_body(const Poset& p, const DotOptions& options, const std::vector<std::string>& node_attrs,
                     const std::vector<Side>* sides) {
  std::ostringstream out;
  out << "digraph " << quoted(options.graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=" << (sides ? "box" : "plaintext") << "];\n";
  for (Element x = 0; x < p.size(); ++x) {
    out << "  n" << x << " [label=" << quoted(p.label(x)) << node_attrs[x] << "];\n";
  }
  if (options.rank_by_height) {
    std::map<int, std::vector<Element>> levels;
    const auto h = heights(p);
    for (Element x = 0; x < p.size(); ++x) levels[h[x]].push_back(x);
    for (const auto& [height, members] : levels) {
      out << "  { rank=same;";
      for (Element x : members) out << " n" << x << ';';
      out << " }\n";
    }
  }
  for (auto [x, y] : hasse_covers(p)) {
    out << "  n" << x << " -> n" << y;
    if (sides && (*sides)[x] != (*sides)[y]) out << " [style=dashed, color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string emit_dot(const Poset& p, const DotOptions& options) {
  return dot_body(p, options, std::vector<std::string>(p.size()), nullptr);
}

std::string emit_dot(const CrosscutPoset& cc, const DotOptions& options) {
  std::vector<std::string> attrs;
  for (Side side : cc.sides) attrs.push_back(side == Side::D ? "" : ", style=rounded");
  return dot_body(*cc.order, options, attrs, &cc.sides);
}

std::string format_verdict(const FppVerdict& verdict) {
  std::ostringstream out;
  out << "FPP: " << (verdict.has_fpp ? "true" : "false") << " (method=" << to_string(verdict.method) << ")\n";
  if (verdict.method == FppMethod::Pipeline && !verdict.detail.empty()) out << "route: " << verdict.detail << '\n';
  if (verdict.witness) {
    out << "witness:\n" << emit_map(*verdict.witness);
  }
  return out.str();
}

std::string format_trace(const Poset& p, const DismantlingTrace& trace) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    out << "remove " << p.label(step.removed) << " (" << to_string(step.reason) << ", onto "
        << p.label(step.onto) << ")\n";
  }
  out << "core: " << trace.core.size() << " element(s) " << node_label(p, trace.core_members) << '\n';
  out << "dismantlable: " << (trace.dismantlable() ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace crosscut
