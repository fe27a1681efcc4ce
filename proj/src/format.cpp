#include "format.hpp"

namespace capelli::detail {

namespace {
const char* minus_sign(bool unicode) { return unicode ? "−" : "-"; }
}  // namespace

void append_term(std::string& out, const Rat& c, const std::string& mono, bool unicode,
                 bool spaced) {
  bool neg = sgn(c) < 0;
  Rat a = abs(c);
  if (out.empty()) {
    if (neg) out += minus_sign(unicode);
  } else {
    if (spaced) out += " ";
    out += neg ? minus_sign(unicode) : "+";
    if (spaced) out += " ";
  }
  if (mono.empty()) {
    out += to_string(a);
  } else if (a == 1) {
    out += mono;
  } else {
    out += is_integer(a) ? to_string(a) : "(" + to_string(a) + ")";
    if (!unicode) out += "*";
    out += mono;
  }
}

void append_raw_term(std::string& out, const std::string& body, const std::string& mono,
                     bool unicode, bool spaced) {
  if (!out.empty()) out += spaced ? " + " : "+";
  out += "(" + body + ")";
  if (!mono.empty()) {
    if (!unicode) out += "*";
    out += mono;
  }
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace capelli::detail
