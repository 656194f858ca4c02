#include "sgfr/text.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "sgfr/error.hpp"

namespace sgfr {

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(Errc::ParseError, "'" + std::string(text) + "': " + why);
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  Int integer() {
    skip_space();
    Int v = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }
  std::size_t pos() const noexcept { return pos_; }
  void rewind(std::size_t p) noexcept { pos_ = p; }
  [[noreturn]] void fail(const std::string& why) const {
    parse_fail(text_, why + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Int> integer_list(Cursor& in) {
  std::vector<Int> out{in.integer()};
  while (in.accept(',')) out.push_back(in.integer());
  return out;
}

Gluing gluing_expr(Cursor& in);

Tower factor(Cursor& in) {
  in.expect('(');
  const std::size_t start = in.pos();
  in.integer();
  const bool nested = in.peek() == '*';
  in.rewind(start);
  Tower out = nested ? Tower(gluing_expr(in)) : Tower(NumericalSemigroup(integer_list(in)));
  in.expect(')');
  return out;
}

Gluing gluing_expr(Cursor& in) {
  const Int a1 = in.integer();
  in.expect('*');
  Tower first = factor(in);
  in.expect('+');
  const Int a2 = in.integer();
  in.expect('*');
  Tower second = factor(in);
  return Gluing(a1, std::move(first), a2, std::move(second));
}

}  // namespace

std::vector<Int> parse_generator_list(std::string_view text) {
  Cursor in(text);
  if (in.done()) parse_fail(text, "empty generator list");
  auto out = integer_list(in);
  if (!in.done()) in.fail("trailing characters");
  return out;
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) parse_fail(text, "expected 'family:key=value,...'");
  const std::string_view name = text.substr(0, colon);
  std::map<std::string, Int> params;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) parse_fail(text, "expected key=value");
    Cursor value(item.substr(eq + 1));
    params[std::string(item.substr(0, eq))] = value.integer();
    if (!value.done()) parse_fail(text, "bad value for " + std::string(item.substr(0, eq)));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  auto take = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) parse_fail(text, std::string("missing parameter ") + key);
    const Int v = it->second;
    params.erase(it);
    return v;
  };
  auto finish = [&](FamilySpec f) {
    if (!params.empty()) parse_fail(text, "unknown parameter " + params.begin()->first);
    return f;
  };
  if (name == "hermitian") {
    const Int q = take("q");
    const Int r = take("r");
    return finish(hermitian(q, r));
  }
  if (name == "suzuki") {
    const Int p = take("p");
    const Int n = take("n");
    return finish(suzuki(p, n));
  }
  if (name == "suzuki-gamma1") {
    const Int p = take("p");
    const Int n = take("n");
    return finish(suzuki_gamma1(p, n));
  }
  parse_fail(text, "unknown family '" + std::string(name) + "'");
}

Gluing parse_gluing(std::string_view text) {
  Cursor in(text);
  Gluing out = gluing_expr(in);
  if (!in.done()) in.fail("trailing characters");
  return out;
}

SemigroupSpec parse_semigroup_spec(std::string_view text) {
  SemigroupSpec out;
  out.text = std::string(text);
  if (text.find(':') != std::string_view::npos) {
    out.kind = SemigroupSpec::Kind::Family;
    out.family = parse_family(text);
    out.semigroup = out.family->expanded;
  } else if (text.find('*') != std::string_view::npos) {
    out.kind = SemigroupSpec::Kind::Gluing;
    out.gluing = std::make_shared<const Gluing>(parse_gluing(text));
    out.semigroup = out.gluing->expanded();
  } else {
    out.kind = SemigroupSpec::Kind::Generators;
    out.semigroup = NumericalSemigroup(parse_generator_list(text));
  }
  return out;
}

}  // namespace sgfr
