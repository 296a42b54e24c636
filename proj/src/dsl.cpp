#include "arthur/dsl.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <vector>

namespace arthur::dsl {

ParseError::ParseError(SourceSpan span, std::string message, std::set<std::string> expected)
    : std::runtime_error(std::move(message)), span_(span), expected_(std::move(expected)) {}

std::string ParseError::render(std::string_view input) const {
  std::string out = "parse error at " + std::to_string(span_.start) + ".." +
                    std::to_string(span_.end) + ": " + what();
  if (!expected_.empty()) {
    out += " (expected ";
    bool first = true;
    for (const auto& e : expected_) {
      if (!first) out += ", ";
      out += e;
      first = false;
    }
    out += ")";
  }
  out += "\n  " + std::string(input) + "\n  " + std::string(span_.start, ' ');
  out += std::string(std::max<std::size_t>(1, span_.end - span_.start), '^');
  return out;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// One parsed summand before unitarity is enforced.
struct Item {
  std::variant<SpehDatum, SegmentRep> value;
  SourceSpan span;
};

class Parser {
public:
  explicit Parser(std::string_view input) : in_(input) {}

  std::vector<Item> expr() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (!at_end()) {
        // "0" must stand alone; anything else starting with a digit is not a term.
        fail(start, pos_, "expr: the empty parameter 0 must stand alone", {"end of input"});
      }
      return {};
    }
    std::vector<Item> items;
    items.push_back(term());
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() == '+') {
        ++pos_;
      } else if (peek_ident() == "x") {
        pos_ += 1;
      } else {
        fail(pos_, pos_ + 1, "expr: unexpected input after term", {"+", "x", "end of input"});
      }
      items.push_back(term());
    }
    return items;
  }

  Segment segment_only() {
    skip_ws();
    Segment s = segment_body("segment");
    finish("segment");
    return s;
  }

  TwistedCuspidal twisted_only() {
    TwistedCuspidal t = twisted();
    finish("twisted");
    return t;
  }

  CuspidalMultiset multiset() {
    CuspidalMultiset out;
    expect('{', "multiset");
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      finish("multiset");
      return out;
    }
    while (true) {
      TwistedCuspidal t = twisted();
      std::int64_t mult = 1;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        const std::size_t at = skip_ws_pos();
        mult = integer("multiset");
        if (mult < 1) fail(at, pos_, "multiset: multiplicity must be positive", {"positive integer"});
      }
      out.add(t, mult);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}', "multiset", {",", "*", "}"});
      break;
    }
    finish("multiset");
    return out;
  }

  void finish(const char* rule) {
    skip_ws();
    if (!at_end()) fail(pos_, pos_ + 1, std::string(rule) + ": trailing input", {"end of input"});
  }

private:
  Item term() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string_view word = peek_ident();
    if (word.empty()) {
      fail(pos_, pos_ + (at_end() ? 0 : 1), "term: expected a term",
           {"u(", "Z[", "Q[", "triv(", "st(", "symbol"});
    }
    const char after = peek_after_ident_ws(word.size());
    if (word == "u" && after == '(') {
      pos_ += word.size();
      expect('(', "speh");
      CuspidalSymbol rho = symbol();
      expect(';', "speh");
      const int a = positive("speh", "Deligne dimension");
      expect(',', "speh");
      const int b = positive("speh", "Arthur dimension");
      expect(')', "speh");
      return {SpehDatum{rho, a, b}, {start, pos_}};
    }
    if ((word == "triv" || word == "st") && after == '(') {
      pos_ += word.size();
      expect('(', word == "triv" ? "triv" : "st");
      const int n = positive(word == "triv" ? "triv" : "st", "rank");
      expect(')', word == "triv" ? "triv" : "st");
      CuspidalSymbol one{kTrivialLine};
      SpehDatum s = word == "triv" ? SpehDatum{one, 1, n} : SpehDatum{one, n, 1};
      return {s, {start, pos_}};
    }
    if ((word == "Z" || word == "Q") && after == '[') {
      pos_ += word.size();
      const SegmentKind kind = word == "Z" ? SegmentKind::Z : SegmentKind::Q;
      Segment seg = segment_body("segment");
      return {SegmentRep{kind, seg}, {start, pos_}};
    }
    CuspidalSymbol rho = symbol();
    return {SpehDatum{rho, 1, 1}, {start, pos_}};
  }

  Segment segment_body(const char* rule) {
    const std::size_t start = skip_ws_pos();
    expect('[', rule);
    const HalfInt a = half(rule);
    expect_text("..", rule);
    const HalfInt b = half(rule);
    expect(']', rule);
    const std::size_t bracket_end = pos_;
    expect('{', rule);
    CuspidalSymbol rho = symbol();
    expect('}', rule);
    const HalfInt gap = b - a;
    if (!gap.is_integer() || gap.doubled() < 0)
      fail(start, bracket_end, std::string(rule) + ": endpoints need b - a in Z>=0",
           {"endpoints with b - a a non-negative integer"});
    return Segment{rho, a, b};
  }

  TwistedCuspidal twisted() {
    skip_ws();
    HalfInt exponent;
    if (peek_ident() == "nu" && peek_after_ident_ws(2) == '^') {
      pos_ += 2;
      expect('^', "twisted");
      expect('(', "twisted");
      exponent = half("twisted");
      expect(')', "twisted");
    }
    return TwistedCuspidal{symbol(), exponent};
  }

  CuspidalSymbol symbol() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string_view word = peek_ident();
    if (word.empty()) fail(pos_, pos_ + (at_end() ? 0 : 1), "symbol: expected an identifier", {"identifier"});
    if (word == "x") fail(start, start + 1, "symbol: 'x' is reserved for products", {"identifier"});
    pos_ += word.size();
    int degree = 1;
    skip_ws();
    if (peek() == ':') {
      ++pos_;
      const std::size_t at = skip_ws_pos();
      const std::int64_t d = integer("symbol");
      if (d < 1 || d > std::numeric_limits<int>::max())
        fail(at, pos_, "symbol: degree must be a positive integer", {"positive integer"});
      degree = static_cast<int>(d);
    }
    return CuspidalSymbol{std::string(word), degree};
  }

  int positive(const char* rule, const char* what) {
    const std::size_t at = skip_ws_pos();
    const std::int64_t v = integer(rule);
    if (v < 1 || v > std::numeric_limits<int>::max())
      fail(at, pos_, std::string(rule) + ": " + what + " must be a positive integer",
           {"positive integer"});
    return static_cast<int>(v);
  }

  HalfInt half(const char* rule) {
    const std::int64_t numerator = integer(rule);
    skip_ws();
    if (peek() != '/') return HalfInt::from_int(numerator);
    ++pos_;
    const std::size_t at = skip_ws_pos();
    const std::int64_t den = integer(rule);
    if (den != 2) fail(at, pos_, std::string(rule) + ": only the denominator 2 is allowed", {"2"});
    return HalfInt::from_doubled(numerator);
  }

  std::int64_t integer(const char* rule) {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < in_.size() && in_[end] == '-') ++end;
    const std::size_t digits = end;
    while (end < in_.size() && std::isdigit(static_cast<unsigned char>(in_[end]))) ++end;
    if (end == digits) fail(start, start + (at_end() ? 0 : 1), std::string(rule) + ": expected an integer", {"integer"});
    std::int64_t value = 0;
    // Keep numbers small enough that degree * a * b stays in range.
    constexpr std::int64_t kLimit = 1'000'000;
    const auto [p, ec] = std::from_chars(in_.data() + start, in_.data() + end, value);
    if (ec != std::errc{} || p != in_.data() + end || value > kLimit || value < -kLimit)
      fail(start, end, std::string(rule) + ": integer out of range", {"integer"});
    pos_ = end;
    return value;
  }

  void expect(char c, const char* rule, std::set<std::string> expected = {}) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return;
    }
    if (expected.empty()) expected = {std::string(1, c)};
    fail(pos_, pos_ + (at_end() ? 0 : 1), std::string(rule) + ": expected '" + c + "'",
         std::move(expected));
  }

  void expect_text(std::string_view t, const char* rule) {
    skip_ws();
    if (in_.substr(pos_, t.size()) == t) {
      pos_ += t.size();
      return;
    }
    fail(pos_, std::min(in_.size(), pos_ + 1), std::string(rule) + ": expected '" + std::string(t) + "'",
         {std::string(t)});
  }

  [[noreturn]] void fail(std::size_t start, std::size_t end, std::string message,
                         std::set<std::string> expected) const {
    start = std::min(start, in_.size());
    end = std::min(std::max(end, start), in_.size());
    throw ParseError({start, end}, std::move(message), std::move(expected));
  }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }
  std::size_t skip_ws_pos() {
    skip_ws();
    return pos_;
  }
  bool at_end() const { return pos_ >= in_.size(); }
  char peek() const { return at_end() ? '\0' : in_[pos_]; }

  std::string_view peek_ident() const {
    if (at_end() || !ident_start(in_[pos_])) return {};
    std::size_t end = pos_ + 1;
    while (end < in_.size() && ident_char(in_[end])) ++end;
    return in_.substr(pos_, end - pos_);
  }

  char peek_after_ident_ws(std::size_t len) const {
    std::size_t p = pos_ + len;
    while (p < in_.size() && std::isspace(static_cast<unsigned char>(in_[p]))) ++p;
    return p < in_.size() ? in_[p] : '\0';
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

ArthurParameter to_param(const std::vector<Item>& items) {
  std::vector<SpehDatum> terms;
  terms.reserve(items.size());
  for (const auto& item : items) {
    if (const auto* s = std::get_if<SpehDatum>(&item.value)) {
      terms.push_back(*s);
      continue;
    }
    const auto& rep = std::get<SegmentRep>(item.value);
    if (!rep.is_unitary())
      throw ParseError(item.span, "segment: non-centered Z/Q is not a unitary Arthur term",
                       {"centered segment [-k..k]"});
    const int len = static_cast<int>(rep.segment.length());
    terms.push_back(rep.kind == SegmentKind::Z ? SpehDatum{rep.segment.rho, 1, len}
                                               : SpehDatum{rep.segment.rho, len, 1});
  }
  return ArthurParameter(std::move(terms));
}

}  // namespace

ArthurParameter parse_param(std::string_view text) {
  Parser p(text);
  return to_param(p.expr());
}

Rep parse_rep(std::string_view text) {
  Parser p(text);
  auto items = p.expr();
  if (items.size() == 1)
    if (const auto* rep = std::get_if<SegmentRep>(&items.front().value)) return *rep;
  return to_param(items);
}

Segment parse_segment(std::string_view text) { return Parser(text).segment_only(); }

TwistedCuspidal parse_twisted(std::string_view text) { return Parser(text).twisted_only(); }

CuspidalMultiset parse_multiset(std::string_view text) { return Parser(text).multiset(); }

std::string format(HalfInt x) {
  if (x.is_integer()) return std::to_string(x.as_int());
  return std::to_string(x.doubled()) + "/2";
}

std::string format(const CuspidalSymbol& s) {
  if (s.degree == 1) return s.id;
  return s.id + ":" + std::to_string(s.degree);
}

std::string format(const TwistedCuspidal& t) {
  if (t.exponent == HalfInt{}) return format(t.symbol);
  return "nu^(" + format(t.exponent) + ") " + format(t.symbol);
}

std::string format(const CuspidalMultiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [t, mult] : m.counts()) {
    if (!first) out += ", ";
    out += format(t);
    if (mult > 1) out += "*" + std::to_string(mult);
    first = false;
  }
  return out + "}";
}

std::string format(const SpehDatum& s) {
  if (s.deligne == 1 && s.arthur == 1) return format(s.rho);
  return "u(" + format(s.rho) + ";" + std::to_string(s.deligne) + "," + std::to_string(s.arthur) +
         ")";
}

std::string format(const ArthurParameter& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& s : a.terms()) {
    if (!out.empty()) out += " + ";
    out += format(s);
  }
  return out;
}

std::string format(const Segment& s) {
  return "[" + format(s.a) + ".." + format(s.b) + "]{" + format(s.rho) + "}";
}

std::string format(const SegmentRep& r) {
  return (r.kind == SegmentKind::Z ? "Z" : "Q") + format(r.segment);
}

std::string format(const Rep& r) {
  return std::visit([](const auto& v) { return format(v); }, r);
}

}  // namespace arthur::dsl
