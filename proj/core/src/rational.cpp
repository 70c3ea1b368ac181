#include "crystden/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace crystden {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

// Census keys format millions of small rationals; bypass cpp_int::str() when
// the value fits a machine word.
void append_int_text(std::string& out, const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max()) {
    char buf[24];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v.convert_to<long long>());
    out.append(buf, ptr);
  } else {
    out += v.str();
  }
}

Rat parse_rational(const std::string& text) {
  const auto bad = [&] {
    throw InvalidRational("not an exact rational: \"" + text + "\"");
  };
  size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  const size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(text, start, text.size())) bad();
    return Rat(Int(text));
  }
  if (!all_digits(text, start, slash)) bad();
  if (!all_digits(text, slash + 1, text.size())) bad();
  Int num(text.substr(0, slash));
  Int den(text.substr(slash + 1));
  if (den == 0) bad();
  return Rat(num, den);
}

std::string format_rational(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  std::string out;
  append_int_text(out, num);
  if (den != 1) {
    out += '/';
    append_int_text(out, den);
  }
  return out;
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

std::vector<Rat> parse_rational_list(const std::vector<std::string>& texts) {
  std::vector<Rat> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

}  // namespace crystden
