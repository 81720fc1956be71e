#include "pec/rational.hpp"

#include <cstdlib>

namespace pec {

Rational Rational::parse(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(std::stoll(text));
    long long num = std::stoll(text.substr(0, slash));
    long long den = std::stoll(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::exception&) {
    fail(Errc::bad_cli_usage, "cannot parse rational '" + text + "'");
  }
}

}  // namespace pec
