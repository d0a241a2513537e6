#include "strandalg/qz_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "strandalg/errors.hpp"

namespace strandalg {

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "quiver", "vertices", "arrows", "relations", "param", "model"};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_name_char);
}

// A token and its 1-based column.
struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> split_ws(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::size_t parse_count(const Token& t, std::size_t line, const char* what) {
  auto v = parse_int(t.text);
  if (!v || *v < 0) {
    throw InputError(std::string("expected a non-negative integer for ") + what,
                     line, t.column);
  }
  return static_cast<std::size_t>(*v);
}

struct RawLine {
  std::size_t number;
  std::string text;  // comment stripped
};

struct PendingRelation {
  std::size_t line;
  std::size_t column;
  std::string word;
};

ModelSpec parse_model(const std::vector<Token>& tokens, std::size_t line) {
  ModelSpec spec;
  bool have_char = false;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    const auto eq = t.text.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InputError("expected key=value in model line", line, t.column);
    }
    const std::string key = t.text.substr(0, eq);
    const Token value{t.text.substr(eq + 1), t.column + eq + 1};
    if (key == "kind") {
      if (value.text == "mixed") {
        spec.kind = ModelKind::Mixed;
      } else if (value.text == "equi") {
        spec.kind = ModelKind::Equicharacteristic;
      } else {
        throw InputError("model kind must be 'mixed' or 'equi'", line, value.column);
      }
    } else if (key == "char") {
      spec.characteristic = parse_count(value, line, "char");
      have_char = true;
    } else if (key == "s") {
      spec.names.clear();
      std::size_t start = 0;
      while (start <= value.text.size()) {
        auto comma = value.text.find(',', start);
        if (comma == std::string::npos) comma = value.text.size();
        const std::string name = value.text.substr(start, comma - start);
        if (!is_name(name)) {
          throw InputError("bad generator name '" + name + "'", line,
                           value.column + start);
        }
        spec.names.push_back(name);
        start = comma + 1;
      }
    } else if (key == "L") {
      spec.length_cap = parse_count(value, line, "L");
    } else if (key == "D") {
      spec.degree_cap = parse_count(value, line, "D");
    } else {
      throw InputError("unknown model key '" + key + "'", line, t.column);
    }
  }
  if (spec.kind == ModelKind::Mixed && !have_char) {
    throw InputError("mixed model needs char=<prime>", line, 1);
  }
  return spec;
}

}  // namespace

Path parse_word(const Quiver& q, std::string_view word,
                const std::map<std::string, long long>& params,
                std::size_t line, std::size_t column) {
  std::vector<ArrowId> arrows;
  std::optional<VertexId> trivial_at;
  std::optional<ArrowId> previous;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos]))) ++pos;
  };
  auto col = [&](std::size_t p) { return column + p; };
  skip_ws();
  if (pos >= word.size()) throw InputError("empty word", line, col(pos));
  for (;;) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < word.size() && is_name_char(word[pos])) ++pos;
    const std::string name(word.substr(start, pos - start));
    if (name.empty()) throw InputError("expected an arrow name", line, col(start));
    if (name == "e" && pos < word.size() && word[pos] == '(') {
      const auto close = word.find(')', pos);
      if (close == std::string_view::npos) {
        throw InputError("missing ')'", line, col(pos));
      }
      const std::string vname(word.substr(pos + 1, close - pos - 1));
      auto v = q.find_vertex(vname);
      if (!v) throw InputError("unknown vertex '" + vname + "'", line, col(pos + 1));
      pos = close + 1;
      const bool fits = arrows.empty() ? (!trivial_at || *trivial_at == *v)
                                       : q.tail(arrows.back()) == *v;
      if (!fits) throw InputError("e(" + vname + ") does not compose here", line, col(start));
      if (arrows.empty()) trivial_at = v;
    } else {
      auto a = q.find_arrow(name);
      if (!a) throw InputError("unknown arrow '" + name + "'", line, col(start));
      std::size_t exponent = 1;
      skip_ws();
      if (pos < word.size() && word[pos] == '^') {
        ++pos;
        skip_ws();
        const std::size_t estart = pos;
        while (pos < word.size() && is_name_char(word[pos])) ++pos;
        const std::string etext(word.substr(estart, pos - estart));
        long long e = 0;
        if (auto v = parse_int(etext)) {
          e = *v;
        } else if (auto it = params.find(etext); it != params.end()) {
          e = it->second;
        } else {
          throw InputError("unknown exponent '" + etext + "'", line, col(estart));
        }
        if (e < 1) throw InputError("exponent must be at least 1", line, col(estart));
        exponent = static_cast<std::size_t>(e);
      }
      for (std::size_t k = 0; k < exponent; ++k) {
        const bool fits = previous ? q.tail(*previous) == q.head(*a)
                                   : (!trivial_at || *trivial_at == q.head(*a));
        if (!fits) {
          throw InputError("'" + name + "' is not consecutive with the arrow before it",
                           line, col(start));
        }
        arrows.push_back(*a);
        previous = a;
      }
    }
    skip_ws();
    if (pos >= word.size()) break;
    if (word[pos] != '*') throw InputError("expected '*'", line, col(pos));
    ++pos;
  }
  if (arrows.empty()) return Path::trivial(*trivial_at);
  return q.path(arrows);
}

QzFile parse_qz(std::string_view text) {
  std::vector<RawLine> lines;
  {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back({number, line});
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  QzFile out;
  bool have_name = false;
  enum class Block { None, Arrows, Relations } block = Block::None;
  std::vector<PendingRelation> relations;
  for (const RawLine& raw : lines) {
    const auto tokens = split_ws(raw.text);
    if (tokens.empty()) continue;
    const std::string& head = tokens.front().text;
    const std::size_t ln = raw.number;
    if (kKeywords.contains(head)) {
      block = Block::None;
      if (head == "quiver") {
        if (tokens.size() != 2) throw InputError("expected 'quiver <name>'", ln, 1);
        if (have_name) throw InputError("duplicate quiver line", ln, 1);
        out.name = tokens[1].text;
        have_name = true;
      } else if (head == "vertices") {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          const Token& t = tokens[i];
          if (!is_name(t.text) || kKeywords.contains(t.text)) {
            throw InputError("bad vertex name '" + t.text + "'", ln, t.column);
          }
          if (out.quiver.find_vertex(t.text)) {
            throw InputError("duplicate vertex '" + t.text + "'", ln, t.column);
          }
          out.quiver.add_vertex(t.text);
        }
      } else if (head == "arrows") {
        if (tokens.size() != 1) throw InputError("'arrows' takes no arguments", ln, tokens[1].column);
        block = Block::Arrows;
      } else if (head == "relations") {
        if (tokens.size() != 1) throw InputError("'relations' takes no arguments", ln, tokens[1].column);
        block = Block::Relations;
      } else if (head == "param") {
        // param <name> = <int>, spacing around '=' optional.
        std::string rest;
        const std::size_t rest_col = tokens[1 % tokens.size()].column;
        for (std::size_t i = 1; i < tokens.size(); ++i) rest += tokens[i].text;
        const auto eq = rest.find('=');
        if (tokens.size() < 2 || eq == std::string::npos) {
          throw InputError("expected 'param <name> = <int>'", ln, 1);
        }
        const std::string name = rest.substr(0, eq);
        auto value = parse_int(rest.substr(eq + 1));
        if (!is_name(name)) throw InputError("bad parameter name", ln, rest_col);
        if (!value) throw InputError("parameter value must be an integer", ln, rest_col);
        if (out.params.contains(name)) {
          throw InputError("duplicate parameter '" + name + "'", ln, rest_col);
        }
        out.params.emplace(name, *value);
      } else if (head == "model") {
        if (out.model) throw InputError("duplicate model line", ln, 1);
        out.model = parse_model(tokens, ln);
      }
      continue;
    }
    if (block == Block::Arrows) {
      // a: u -> w
      const std::string& line = raw.text;
      const auto colon = line.find(':');
      const auto arrow = line.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
        throw InputError("expected '<arrow>: <tail> -> <head>'", ln, tokens.front().column);
      }
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      const std::string name = trim(line.substr(0, colon));
      const std::string tail = trim(line.substr(colon + 1, arrow - colon - 1));
      const std::string headv = trim(line.substr(arrow + 2));
      const std::size_t name_col = line.find_first_not_of(" \t") + 1;
      if (!is_name(name) || kKeywords.contains(name)) {
        throw InputError("bad arrow name '" + name + "'", ln, name_col);
      }
      if (out.quiver.find_arrow(name)) {
        throw InputError("duplicate arrow '" + name + "'", ln, name_col);
      }
      auto t = out.quiver.find_vertex(tail);
      if (!t) throw InputError("unknown vertex '" + tail + "'", ln, line.find(tail, colon) + 1);
      auto h = out.quiver.find_vertex(headv);
      if (!h) throw InputError("unknown vertex '" + headv + "'", ln, line.find(headv, arrow) + 1);
      out.quiver.add_arrow(name, *t, *h);
      continue;
    }
    if (block == Block::Relations) {
      const std::size_t first = raw.text.find_first_not_of(" \t");
      relations.push_back({ln, first + 1, raw.text.substr(first)});
      continue;
    }
    throw InputError("unexpected '" + head + "'", ln, tokens.front().column);
  }
  if (!have_name) throw InputError("missing 'quiver <name>' line", 1, 1);

  std::vector<Path> z;
  for (const auto& r : relations) {
    Path p = parse_word(out.quiver, r.word, out.params, r.line, r.column);
    if (p.is_trivial()) throw InputError("a relation must be a non-trivial path", r.line, r.column);
    z.push_back(std::move(p));
  }
  out.z = ZSet(std::move(z));
  return out;
}

QzFile load_qz(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open '" + file.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_qz(buffer.str());
}

std::string serialize_qz(const QzFile& file) {
  std::ostringstream out;
  const Quiver& q = file.quiver;
  out << "quiver " << file.name << "\n";
  out << "vertices";
  for (VertexId v : q.vertices()) out << ' ' << q.name(v);
  out << "\n";
  for (const auto& [name, value] : file.params) {
    out << "param " << name << " = " << value << "\n";
  }
  out << "arrows\n";
  for (ArrowId a : q.arrows()) {
    out << "  " << q.name(a) << ": " << q.name(q.tail(a)) << " -> "
        << q.name(q.head(a)) << "\n";
  }
  out << "relations\n";
  for (const Path& r : file.z.relations()) out << "  " << q.format(r) << "\n";
  if (file.model) {
    const ModelSpec& m = *file.model;
    out << "model kind="
        << (m.kind == ModelKind::Mixed ? "mixed" : "equi")
        << " char=" << m.characteristic;
    if (!m.names.empty()) {
      out << " s=";
      for (std::size_t i = 0; i < m.names.size(); ++i) {
        out << (i ? "," : "") << m.names[i];
      }
    }
    if (m.length_cap) out << " L=" << *m.length_cap;
    if (m.degree_cap) out << " D=" << *m.degree_cap;
    out << "\n";
  }
  return out.str();
}

bool equivalent(const QzFile& lhs, const QzFile& rhs) {
  const Quiver& a = lhs.quiver;
  const Quiver& b = rhs.quiver;
  if (lhs.name != rhs.name || lhs.params != rhs.params || lhs.model != rhs.model) {
    return false;
  }
  if (a.vertex_count() != b.vertex_count() || a.arrow_count() != b.arrow_count()) {
    return false;
  }
  for (VertexId v : a.vertices()) {
    if (a.name(v) != b.name(v)) return false;
  }
  for (ArrowId x : a.arrows()) {
    if (a.name(x) != b.name(x) || a.name(a.head(x)) != b.name(b.head(x)) ||
        a.name(a.tail(x)) != b.name(b.tail(x))) {
      return false;
    }
  }
  return lhs.z == rhs.z;
}

}  // namespace strandalg
