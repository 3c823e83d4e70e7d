#include "jslope/laurent_poly.hpp"

#include <cctype>
#include <sstream>

#include "jslope/error.hpp"

namespace jslope {

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, Key quarter_exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(quarter_exponent, c);
  return p;
}

Integer LaurentPoly::coefficient(Key quarter_exponent) const {
  auto it = terms_.find(quarter_exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(Key quarter_exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(quarter_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_integral() const {
  for (const auto& [k, c] : terms_) {
    if (k % 4 != 0) return false;
  }
  return true;
}

LaurentPoly::Key LaurentPoly::max_key() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial (empty state sum)");
  return terms_.rbegin()->first;
}

LaurentPoly::Key LaurentPoly::min_key() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial (empty state sum)");
  return terms_.begin()->first;
}

Rational LaurentPoly::deg() const { return make_rational(max_key(), 4); }
Rational LaurentPoly::mindeg() const { return make_rational(min_key(), 4); }

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.begin(), -k, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(Key quarter_shift) const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + quarter_shift, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  Integer prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ka + kb, prod);
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    bool negative = c < 0;
    Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str();
    out << 'q';
    if (k != 4) out << '^' << jslope::to_string(make_rational(k, 4));
  }
  return out.str();
}

namespace {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  Integer digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why + " in '" +
                     std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

LaurentPoly::Key parse_exponent(PolyLexer& lx) {
  bool paren = lx.accept('(');
  bool negative = false;
  if (lx.accept('-')) {
    negative = true;
  } else {
    lx.accept('+');
  }
  Integer num = lx.digits();
  Integer den = 1;
  if (lx.accept('/')) den = lx.digits();
  if (paren && !lx.accept(')')) lx.fail("expected ')'");
  if (den == 0) lx.fail("zero denominator in exponent");
  Integer scaled = num * 4;
  if (scaled % den != 0) lx.fail("exponent denominator must divide 4");
  Integer key = scaled / den;
  if (negative) key = -key;
  if (!key.fits_slong_p()) lx.fail("exponent out of range");
  return key.get_si();
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  PolyLexer lx(text);
  LaurentPoly result;
  if (lx.done()) lx.fail("empty input");
  bool first = true;
  while (!lx.done()) {
    bool negative = false;
    if (lx.accept('-')) {
      negative = true;
    } else if (lx.accept('+')) {
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    Integer coeff = 1;
    bool have_coeff = false;
    if (lx.at_digit()) {
      coeff = lx.digits();
      have_coeff = true;
      lx.accept('*');
    }
    Key key = 0;
    if (lx.accept('q')) {
      key = 4;
      if (lx.accept('^')) key = parse_exponent(lx);
    } else if (!have_coeff) {
      lx.fail("expected a term");
    }
    result.add_term(key, negative ? Integer(-coeff) : coeff);
  }
  return result;
}

}  // namespace jslope
