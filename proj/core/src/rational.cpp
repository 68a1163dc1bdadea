#include <liegrad/rational.hpp>

#include <liegrad/errors.hpp>

#include <cctype>

namespace liegrad {

namespace {

bool all_digits(const std::string& s, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  const std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!ok) {
    throw InputError("bad rational '" + text + "': expected \"n\" or \"n/d\"");
  }
  Rational value(text, 10);
  if (value.get_den() == 0) {
    throw InputError("bad rational '" + text + "': zero denominator");
  }
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  return value.get_str();
}

} // namespace liegrad
