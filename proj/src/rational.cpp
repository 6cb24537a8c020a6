#include "gnc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gnc {

Rat rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den)) return std::nullopt;
  Rat q;
  if (q.set_str(num + "/" + den, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) {
  return r.get_str();
}

}  // namespace gnc
