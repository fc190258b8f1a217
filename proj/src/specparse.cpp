#include "qseries/specparse.hpp"

#include <cctype>

namespace qseries {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  EtaQuotient run() {
    EtaQuotient q = expr();
    skip_ws();
    if (i_ < s_.size()) fail("unexpected trailing input");
    if (q.factors.empty() && s_.find('E') == std::string::npos) fail("empty spec");
    return q;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i_); }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  Int integer() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == digits) {
      i_ = start;
      fail("expected an integer");
    }
    return Int(s_.substr(start, i_ - start));
  }

  long scale() {
    Int v = integer();
    if (v < 1 || !v.fits_slong_p()) fail("eta scale must be a positive integer");
    return v.get_si();
  }

  // integer | (p/q) | (integer)
  Rat exponent() {
    if (eat('(')) {
      Int p = integer();
      Rat e(p);
      if (eat('/')) {
        Int q = integer();
        if (q == 0) fail("zero exponent denominator");
        e = make_rat(p, q);
      }
      if (!eat(')')) fail("expected ')' after exponent");
      return e;
    }
    return Rat(integer());
  }

  EtaQuotient factor() {
    if (eat('(')) {
      EtaQuotient q = expr();
      if (!eat(')')) fail("expected ')'");
      return q;
    }
    skip_ws();
    if (peek() != 'E') fail("expected 'E<m>' or '('");
    ++i_;
    return EtaQuotient::single(scale());
  }

  EtaQuotient term() {
    EtaQuotient q = factor();
    if (eat('^')) q = q.pow(exponent());
    return q;
  }

  EtaQuotient expr() {
    EtaQuotient q = term();
    while (true) {
      if (eat('*'))
        q = q.times(term());
      else if (eat('/'))
        q = q.times(term().pow(Rat(-1)));
      else
        return q;
    }
  }
};

}  // namespace

EtaQuotient parse_eta_spec(const std::string& text) { return Parser(text).run(); }

std::string caret_diagnostic(const std::string& text, std::size_t pos) {
  if (pos > text.size()) pos = text.size();
  return text + "\n" + std::string(pos, ' ') + "^";
}

}  // namespace qseries
