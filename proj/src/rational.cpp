#include "chered/rational.hpp"

#include "chered/error.hpp"

#include <cctype>

namespace chered {

Rational rational(long num, long den) {
  if (den == 0) throw Error("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> parse_rational(const std::string& text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string body = text.substr(a, b - a);
  if (body.empty()) return std::nullopt;
  std::size_t digits = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ++digits;
      continue;
    }
    if (c == '-' && (i == 0 || body[i - 1] == '/')) continue;
    if (c == '/' && i > 0 && i + 1 < body.size()) continue;
    return std::nullopt;
  }
  if (digits == 0) return std::nullopt;
  if (body.find('/') != std::string::npos &&
      body.find('/', body.find('/') + 1) != std::string::npos)
    return std::nullopt;
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), body.c_str(), 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

std::size_t hash_value(const Rational& q) {
  constexpr unsigned long kMod = 0xfffffffbUL;
  unsigned long hn = mpz_fdiv_ui(mpq_numref(q.get_mpq_t()), kMod);
  unsigned long hd = mpz_fdiv_ui(mpq_denref(q.get_mpq_t()), kMod);
  int sgn = mpq_sgn(q.get_mpq_t());
  std::size_t h = hn * 0x9e3779b97f4a7c15ULL;
  h = hash_combine(h, hd);
  return hash_combine(h, static_cast<std::size_t>(sgn + 1));
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace chered
