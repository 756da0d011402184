#include "castella/text.hpp"

#include <cctype>
#include <charconv>
#include <functional>

namespace castella {

namespace {

struct Term {
  char symbol = 0;
  Index index = 0;
  Exponent exponent = 1;
};

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  bool at_end() const { return pos_ == s_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void advance() { ++pos_; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::uint64_t digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc{}) throw ParseError("number out of range", start);
    return v;
  }

  // Reads "sym digits? (^ digits)?" for one of the allowed symbols.
  Term term(std::string_view symbols, bool indexed) {
    std::size_t start = pos_;
    char c = peek();
    if (c == '\0' || symbols.find(c) == std::string_view::npos) throw ParseError("expected term", start);
    ++pos_;
    Term t{c, 0, 1};
    if (indexed) t.index = digits();
    if (peek() == '^') {
      ++pos_;
      std::size_t at = pos_;
      t.exponent = digits();
      if (t.exponent == 0) throw ParseError("exponent must be positive", at);
    }
    return t;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// Drives the shared "1" | term (sep term)* shape.
void parse_terms(std::string_view text, std::string_view symbols, bool indexed,
                 const std::function<void(const Term&)>& sink) {
  Scanner sc(text);
  sc.skip_space();
  if (sc.peek() == '1') {
    std::size_t at = sc.pos();
    Scanner probe = sc;
    probe.advance();
    probe.skip_space();
    if (probe.at_end()) return;
    throw ParseError("unexpected input after identity", at + 1);
  }
  sink(sc.term(symbols, indexed));
  for (;;) {
    std::size_t before = sc.pos();
    sc.skip_space();
    bool star = sc.peek() == '*';
    if (star) {
      sc.advance();
      sc.skip_space();
    }
    if (sc.at_end()) {
      if (star) throw ParseError("expected term", sc.pos());
      return;
    }
    if (sc.pos() == before) throw ParseError("expected separator", sc.pos());
    sink(sc.term(symbols, indexed));
  }
}

}  // namespace

Element parse_element(std::string_view text) {
  Element u;
  parse_terms(text, "p", true, [&](const Term& t) { u.append(t.index, t.exponent); });
  return u;
}

std::string render(const Element& u) {
  if (u.is_identity()) return "1";
  std::string out;
  for (const auto& r : u.runs()) {
    if (!out.empty()) out += ' ';
    out += 'p' + std::to_string(r.index);
    if (r.exponent > 1) out += '^' + std::to_string(r.exponent);
  }
  return out;
}

std::string render_word(const Word& w) {
  std::string out = "[";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w[k]);
  }
  return out + "]";
}

AbelianElement parse_abelian(std::string_view text, const FreeAbelianMonoid& m) {
  std::size_t a = 0;
  while (a < text.size() && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  std::size_t b = a;
  while (b < text.size() && std::isdigit(static_cast<unsigned char>(text[b]))) ++b;
  std::size_t c = b;
  while (c < text.size() && std::isspace(static_cast<unsigned char>(text[c]))) ++c;
  if (b > a && c == text.size()) {
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(text.data() + a, text.data() + b, n);
    if (ec != std::errc{} || n == 0 || n > kNaturalLimit)
      throw ParseError("natural number must lie in [1, 10^12]", a);
    AbelianElement u = parse_natural(n);
    m.check(u);
    return u;
  }
  AbelianElement u;
  parse_terms(text, "p", true, [&](const Term& t) { u = m.multiply(u, m.generator(t.index, t.exponent)); });
  return u;
}

UVElement parse_uv(std::string_view text) {
  UVElement u;
  parse_terms(text, "UV", false, [&](const Term& t) {
    UVElement f = t.symbol == 'U' ? UVElement{t.exponent, 0} : UVElement{0, t.exponent};
    u = uv_multiply(u, f);
  });
  return u;
}

std::string render_uv(const UVElement& u) {
  if (u.m == 0 && u.n == 0) return "1";
  std::string out;
  auto put = [&](char s, std::uint64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += s;
    if (e > 1) out += '^' + std::to_string(e);
  };
  put('U', u.m);
  put('V', u.n);
  return out;
}

}  // namespace castella
