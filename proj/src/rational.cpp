#include "helly/rational.hpp"

#include "helly/errors.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace helly {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto fail = [&]() -> InputError {
    return InputError("not an exact rational: \"" + std::string(text) + "\"");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rat value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class n(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw fail();
    value = Rat(n, q);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) throw fail();
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class n(digits.empty() ? std::string("0") : digits, 10);
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), 10, frac.size());
    value = Rat(n, q);
    value.canonicalize();
  } else {
    if (!all_digits(body)) throw fail();
    value = Rat(mpz_class(std::string(body), 10));
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rat& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value.get_d());
  return buf;
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

Guards Guards::from_env() {
  Guards g;
  auto read = [](const char* name, std::size_t& slot) {
    if (const char* v = std::getenv(name); v && *v) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(v, &end, 10);
      if (end && *end == '\0' && parsed > 0) slot = static_cast<std::size_t>(parsed);
    }
  };
  read("HELLY_NERVE_GUARD", g.nerve_sets);
  read("HELLY_COLLAPSE_GUARD", g.collapse_faces);
  read("HELLY_PIERCE_GUARD", g.pierce_sets);
  read("HELLY_RADON_GUARD", g.radon_points);
  return g;
}

}  // namespace helly
