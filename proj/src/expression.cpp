#include "strandalg/expression.hpp"

#include <cctype>
#include <string>

#include "strandalg/errors.hpp"
#include "strandalg/qz_format.hpp"

namespace strandalg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Quiver& q, const IdealPresentation& ideal,
         std::size_t length_cap)
      : text_(text), q_(q), ideal_(ideal), model_(ideal.model), cap_(length_cap) {}

  AlgebraElement parse() {
    AlgebraElement x = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw InputError(message, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  AlgebraElement unit() const {
    AlgebraElement x(model_, cap_);
    for (VertexId v : q_.vertices()) x.add_term(Path::trivial(v), model_.one());
    return x;
  }

  AlgebraElement expr() {
    AlgebraElement x(model_, cap_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      AlgebraElement t = term();
      x += negate ? -t : t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else return x;
    }
  }

  AlgebraElement term() {
    AlgebraElement x = factor();
    while (accept('*')) x = x * factor();
    return x;
  }

  std::size_t integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  AlgebraElement factor() {
    AlgebraElement x = atom();
    if (accept('^')) {
      const std::size_t k = integer();
      AlgebraElement base = x;
      x = unit();
      for (std::size_t j = 0; j < k; ++j) x = x * base;
    }
    return x;
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '\'')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  // Raw text up to the matching ')'.
  std::string_view inner(std::size_t& column) {
    expect('(');
    const std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')' && --depth == 0) break;
      ++pos_;
    }
    if (pos_ == text_.size()) fail("missing ')'");
    column = start + 1;
    std::string_view out = text_.substr(start, pos_ - start);
    ++pos_;
    return out;
  }

  VertexId vertex(std::string_view raw, std::size_t column) {
    std::string v(raw);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.pop_back();
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(0, 1);
    auto found = q_.find_vertex(v);
    if (!found) throw InputError("unknown vertex '" + v + "'", 1, column);
    return *found;
  }

  AlgebraElement atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraElement x = expr();
      expect(')');
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t k = integer();
      return model_.constant(Scalar(k)) * unit();
    }
    const std::size_t start = pos_;
    const std::string word = name();
    skip_space();
    const bool call = pos_ < text_.size() && text_[pos_] == '(';
    if (call && (word == "e" || word == "sigma" || word == "path")) {
      std::size_t column = 0;
      std::string_view raw = inner(column);
      if (word == "path") {
        return AlgebraElement::from_path(model_, cap_, parse_word(q_, raw, {}, 1, column));
      }
      const VertexId v = vertex(raw, column);
      if (word == "e") return AlgebraElement::from_path(model_, cap_, Path::trivial(v));
      AlgebraElement s(model_, cap_);
      auto it = ideal_.cycles_at.find(v);
      if (it != ideal_.cycles_at.end()) {
        for (const Path& cyc : it->second) s.add_term(cyc, model_.one());
      }
      return s;
    }
    const auto arrow = q_.find_arrow(word);
    const auto gen = model_.find_generator(word);
    if (arrow && gen) {
      throw InputError("'" + word + "' names both an arrow and a generator", 1, start + 1);
    }
    if (arrow) return AlgebraElement::from_path(model_, cap_, q_.arrow_path(*arrow));
    if (gen) return model_.generator(*gen) * unit();
    throw InputError("unknown name '" + word + "'", 1, start + 1);
  }

  std::string_view text_;
  const Quiver& q_;
  const IdealPresentation& ideal_;
  const CoefficientModel& model_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_element(std::string_view text, const Quiver& q,
                             const IdealPresentation& ideal, std::size_t length_cap) {
  return Parser(text, q, ideal, length_cap).parse();
}

}  // namespace strandalg
