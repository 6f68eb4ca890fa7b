#include "spinforge/coeff/cyclo8.hpp"
#include "spinforge/coeff/number_theory.hpp"
#include "spinforge/coeff/prime_field.hpp"
#include "spinforge/coeff/rational.hpp"
#include "spinforge/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <random>
#include <string>

namespace spinforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty integer");
  std::uint64_t v = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad integer '" + std::string(text) + "'");
    std::uint64_t next = v * 10 + static_cast<std::uint64_t>(ch - '0');
    if (next / 10 != v) throw ParseError("integer overflow '" + std::string(text) + "'");
    v = next;
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------- rationals

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("bad integer literal");
  BigInt v{std::string(text)};
  return negative ? BigInt(-v) : v;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator");
  return Rational(num) / Rational(den);
}

// ---------------------------------------------------------- number theory

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return detail::mul_mod(a, b, m); }
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  return detail::pow_mod(base, exp, m);
}

std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) {
  __int128 r = static_cast<__int128>(a) % static_cast<__int128>(m);
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce_mod(const BigInt& a, std::uint64_t m) {
  BigInt r = a % BigInt(m);
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto w : witnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : witnesses) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 0) return false;
  if (n <= BigInt(std::numeric_limits<std::uint64_t>::max())) return is_prime(n.convert_to<std::uint64_t>());
  // Fixed seed keeps the answer reproducible run to run.
  std::mt19937_64 rng(0x5eed5eedULL);
  return boost::multiprecision::miller_rabin_test(n, 64, rng);
}

namespace {
void require_odd_prime(std::uint64_t p) {
  if (p < 3 || (p & 1) == 0 || !is_prime(p))
    throw InvalidModulus("modulus " + std::to_string(p) + " is not an odd prime");
}
}  // namespace

int legendre(const BigInt& a, std::uint64_t p) {
  require_odd_prime(p);
  std::uint64_t r = reduce_mod(a, p);
  if (r == 0) return 0;
  return detail::pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(std::int64_t a, std::uint64_t p) { return legendre(BigInt(a), p); }

std::optional<FpElem> sqrt_mod(const FpElem& a) {
  const std::uint64_t p = a.modulus;
  require_odd_prime(p);
  if (a.residue == 0) return FpElem{0, p};
  if (detail::pow_mod(a.residue, (p - 1) / 2, p) != 1) return std::nullopt;

  std::uint64_t root = 0;
  if (p % 4 == 3) {
    root = detail::pow_mod(a.residue, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (detail::pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t c = detail::pow_mod(z, q, p);
    std::uint64_t x = detail::pow_mod(a.residue, (q + 1) / 2, p);
    std::uint64_t t = detail::pow_mod(a.residue, q, p);
    int m = s;
    while (t != 1) {
      int i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = detail::mul_mod(t2, t2, p);
        ++i;
      }
      std::uint64_t b = c;
      for (int j = 0; j < m - i - 1; ++j) b = detail::mul_mod(b, b, p);
      x = detail::mul_mod(x, b, p);
      c = detail::mul_mod(b, b, p);
      t = detail::mul_mod(t, c, p);
      m = i;
    }
    root = x;
  }
  return FpElem{std::min(root, p - root), p};
}

std::uint64_t mu_l_exponent(std::uint64_t p, std::uint64_t l) {
  require_odd_prime(p);
  if (l < 3 || !is_prime(l)) throw PreconditionError("l must be an odd prime");
  if ((p - 1) % l != 0) throw PreconditionError("l does not divide p-1");
  const std::uint64_t cofactor = (p - 1) / l;
  if (cofactor % l == 0) throw PreconditionError("l^2 divides p-1");
  // c = k * cofactor with k * cofactor = 1 mod l
  std::uint64_t k = *inv_mod(cofactor % l, l);
  return k * cofactor;
}

FpElem mu_l_projection(const FpElem& x, std::uint64_t l) {
  std::uint64_t c = mu_l_exponent(x.modulus, l);
  if (x.residue == 0) throw PreconditionError("projection of zero");
  return {detail::pow_mod(x.residue, c, x.modulus), x.modulus};
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw PreconditionError("order of zero");
  std::uint64_t order = p - 1;
  // strip prime factors of p-1 while a^(order/q) stays 1
  std::uint64_t rest = p - 1;
  for (std::uint64_t q = 2; q * q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    while (order % q == 0 && detail::pow_mod(a, order / q, p) == 1) order /= q;
  }
  if (rest > 1) {
    while (order % rest == 0 && detail::pow_mod(a, order / rest, p) == 1) order /= rest;
  }
  return order;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

// ------------------------------------------------------------ prime fields

FpElem pow(const FpElem& a, std::uint64_t e) { return {detail::pow_mod(a.residue, e, a.modulus), a.modulus}; }

PrimeField::PrimeField(std::uint64_t p) : p_(p) { require_odd_prime(p); }

FpElem PrimeField::from_int(std::int64_t k) const { return {reduce_mod(k, p_), p_}; }

std::optional<FpElem> PrimeField::inv(const FpElem& a) const {
  detail::require_same_modulus(a.modulus, p_);
  if (a.residue == 0) return std::nullopt;
  return FpElem{*inv_mod(a.residue, p_), p_};
}

std::optional<FpElem> PrimeField::sqrt(const FpElem& a) const {
  detail::require_same_modulus(a.modulus, p_);
  return sqrt_mod(a);
}

std::string PrimeField::to_string(const FpElem& a) const {
  return std::to_string(a.residue) + " mod " + std::to_string(p_);
}

FpElem PrimeField::parse(std::string_view text) const {
  text = trim(text);
  // "<r> mod <p>", or a bare integer reduced mod p
  auto pos = text.find(" mod ");
  auto body = text;
  if (pos != std::string_view::npos) {
    if (parse_u64(text.substr(pos + 5)) != p_) throw ParseError("modulus mismatch in '" + std::string(text) + "'");
    body = trim(text.substr(0, pos));
  }
  bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);
  FpElem value{0, p_};
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto den = inv(FpElem{parse_u64(body.substr(slash + 1)), p_});
    if (!den) throw ParseError("denominator divisible by " + std::to_string(p_));
    value = FpElem{parse_u64(body.substr(0, slash)), p_} * *den;
  } else {
    value = FpElem{parse_u64(body), p_};
  }
  return negative ? -value : value;
}

std::string PrimeField::name() const { return "F_" + std::to_string(p_); }

namespace {
void require_same_ext(const Fp2Elem& x, const Fp2Elem& y) {
  if (x.modulus != y.modulus || x.nonresidue != y.nonresidue)
    throw InvalidModulus("F_p^2 elements from different fields combined");
}
}  // namespace

Fp2Elem operator+(const Fp2Elem& x, const Fp2Elem& y) {
  require_same_ext(x, y);
  const auto p = x.modulus;
  return {detail::add_mod(x.a, y.a, p), detail::add_mod(x.b, y.b, p), p, x.nonresidue};
}

Fp2Elem operator-(const Fp2Elem& x, const Fp2Elem& y) {
  require_same_ext(x, y);
  const auto p = x.modulus;
  return {detail::sub_mod(x.a, y.a, p), detail::sub_mod(x.b, y.b, p), p, x.nonresidue};
}

Fp2Elem operator-(const Fp2Elem& x) {
  const auto p = x.modulus;
  return {detail::sub_mod(0, x.a, p), detail::sub_mod(0, x.b, p), p, x.nonresidue};
}

Fp2Elem operator*(const Fp2Elem& x, const Fp2Elem& y) {
  require_same_ext(x, y);
  using detail::add_mod;
  using detail::mul_mod;
  const auto p = x.modulus;
  std::uint64_t a = add_mod(mul_mod(x.a, y.a, p), mul_mod(x.nonresidue, mul_mod(x.b, y.b, p), p), p);
  std::uint64_t b = add_mod(mul_mod(x.a, y.b, p), mul_mod(x.b, y.a, p), p);
  return {a, b, p, x.nonresidue};
}

PrimeField2::PrimeField2(std::uint64_t p) : p_(p), d_(2) {
  require_odd_prime(p);
  while (legendre(static_cast<std::int64_t>(d_), p) != -1) ++d_;
}

Fp2Elem PrimeField2::from_int(std::int64_t k) const { return {reduce_mod(k, p_), 0, p_, d_}; }

std::optional<Fp2Elem> PrimeField2::inv(const Fp2Elem& x) const {
  using detail::mul_mod;
  using detail::sub_mod;
  if (x.is_zero()) return std::nullopt;
  // (a + bt)^-1 = (a - bt) / (a^2 - d b^2)
  std::uint64_t norm = sub_mod(mul_mod(x.a, x.a, p_), mul_mod(d_, mul_mod(x.b, x.b, p_), p_), p_);
  std::uint64_t ninv = *inv_mod(norm, p_);
  return Fp2Elem{mul_mod(x.a, ninv, p_), mul_mod(sub_mod(0, x.b, p_), ninv, p_), p_, d_};
}

std::optional<Fp2Elem> PrimeField2::sqrt(const Fp2Elem& x) const {
  using detail::mul_mod;
  if (x.is_zero()) return zero();
  std::optional<Fp2Elem> root;
  if (x.b == 0) {
    if (auto r = sqrt_mod(FpElem{x.a, p_})) {
      root = make(r->residue, 0);
    } else {
      // a is a nonresidue, so a/d is a residue: sqrt(a) = sqrt(a/d) * t
      std::uint64_t q = mul_mod(x.a, *inv_mod(d_, p_), p_);
      root = make(0, sqrt_mod(FpElem{q, p_})->residue);
    }
  } else {
    // y = c + e t with c^2 + d e^2 = a, 2ce = b; c^2 = (a +- sqrt(N)) / 2
    std::uint64_t norm = detail::sub_mod(mul_mod(x.a, x.a, p_), mul_mod(d_, mul_mod(x.b, x.b, p_), p_), p_);
    auto sn = sqrt_mod(FpElem{norm, p_});
    if (!sn) return std::nullopt;
    const std::uint64_t half = *inv_mod(2, p_);
    for (std::uint64_t s : {sn->residue, detail::sub_mod(0, sn->residue, p_)}) {
      std::uint64_t c2 = mul_mod(detail::add_mod(x.a, s, p_), half, p_);
      auto c = sqrt_mod(FpElem{c2, p_});
      if (!c || c->residue == 0) continue;
      std::uint64_t e = mul_mod(x.b, *inv_mod(mul_mod(2, c->residue, p_), p_), p_);
      root = make(c->residue, e);
      break;
    }
    if (!root) return std::nullopt;
  }
  Fp2Elem other = -*root;
  if (std::pair(other.a, other.b) < std::pair(root->a, root->b)) return other;
  return root;
}

std::string PrimeField2::to_string(const Fp2Elem& x) const {
  std::string body;
  if (x.b == 0) {
    body = std::to_string(x.a);
  } else if (x.a == 0) {
    body = std::to_string(x.b) + "*t";
  } else {
    body = std::to_string(x.a) + "+" + std::to_string(x.b) + "*t";
  }
  return body + " mod " + std::to_string(p_);
}

Fp2Elem PrimeField2::parse(std::string_view text) const {
  text = trim(text);
  auto pos = text.find(" mod ");
  if (pos == std::string_view::npos) throw ParseError("expected '<a>+<b>*t mod <p>'");
  if (parse_u64(text.substr(pos + 5)) != p_) throw ParseError("modulus mismatch");
  auto body = trim(text.substr(0, pos));
  std::uint64_t a = 0, b = 0;
  auto plus = body.find('+');
  auto take_t = [&](std::string_view part) {
    if (part.size() < 2 || part.substr(part.size() - 2) != "*t") throw ParseError("expected '<b>*t'");
    return parse_u64(part.substr(0, part.size() - 2));
  };
  if (plus != std::string_view::npos) {
    a = parse_u64(body.substr(0, plus));
    b = take_t(body.substr(plus + 1));
  } else if (body.find('t') != std::string_view::npos) {
    b = take_t(body);
  } else {
    a = parse_u64(body);
  }
  return make(a, b);
}

std::string PrimeField2::name() const {
  return "F_" + std::to_string(p_) + "^2[t^2=" + std::to_string(d_) + "]";
}

// --------------------------------------------------------------- Q(zeta_8)

bool Cyclo8::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Cyclo8 operator+(const Cyclo8& a, const Cyclo8& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

Cyclo8 operator-(const Cyclo8& a, const Cyclo8& b) {
  return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}

Cyclo8 operator-(const Cyclo8& a) { return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}; }

Cyclo8 operator*(const Cyclo8& a, const Cyclo8& b) {
  std::array<Rational, 4> out{};
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c_[j] == 0) continue;
      Rational prod = a.c_[i] * b.c_[j];
      int k = i + j;
      if (k >= 4) out[k - 4] -= prod;  // z^4 = -1
      else out[k] += prod;
    }
  }
  return {out[0], out[1], out[2], out[3]};
}

Cyclo8 Cyclo8::galois(int k) const {
  std::array<Rational, 4> out{};
  for (int j = 0; j < 4; ++j) {
    int e = (j * k) % 8;
    if (e >= 4) out[e - 4] -= c_[j];
    else out[e] += c_[j];
  }
  return {out[0], out[1], out[2], out[3]};
}

std::optional<Rational> RationalField::inv(const Rational& a) const {
  if (a == 0) return std::nullopt;
  return Rational(1) / a;
}

std::optional<Rational> RationalField::sqrt(const Rational& a) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (a < 0) return std::nullopt;
  BigInt n = numerator(a), d = denominator(a);
  BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn) / Rational(rd);
}

std::optional<Cyclo8> Cyclo8Field::inv(const Cyclo8& a) const {
  if (a.is_zero()) return std::nullopt;
  Cyclo8 conj = a.galois(3) * a.galois(5) * a.galois(7);
  Cyclo8 norm = a * conj;
  // the norm is fixed by the Galois group, hence rational
  return conj * Cyclo8(Rational(1) / norm[0]);
}

std::optional<Cyclo8> Cyclo8Field::sqrt(const Cyclo8& a) const {
  if (!a.is_rational()) throw UnsupportedRing("square roots in Q(zeta8) are only implemented for rational arguments");
  const Rational& r = a[0];
  if (r == 0) return zero();
  RationalField q;
  Rational mag = r < 0 ? Rational(-r) : r;
  if (auto s = q.sqrt(mag)) {
    return r > 0 ? Cyclo8(*s) : Cyclo8(*s) * Cyclo8::imag();
  }
  if (auto s = q.sqrt(mag / 2)) {
    // s*sqrt(2) = s z - s z^3 ; s*sqrt(-2) = s z + s z^3
    return r > 0 ? Cyclo8(0, *s, 0, -*s) : Cyclo8(0, *s, 0, *s);
  }
  return std::nullopt;
}

std::string Cyclo8Field::to_string(const Cyclo8& a) const {
  static constexpr std::array<const char*, 4> powers{"", "z", "z^2", "z^3"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const Rational& c = a[k];
    if (c == 0) continue;
    std::string coeff;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (k == 0) {
      coeff = spinforge::to_string(mag);
    } else if (mag == 1) {
      coeff = powers[k];
    } else {
      coeff = spinforge::to_string(mag) + "*" + powers[k];
    }
    if (out.empty()) out = negative ? "-" + coeff : coeff;
    else out += (negative ? "-" : "+") + coeff;
  }
  return out.empty() ? "0" : out;
}

Cyclo8 Cyclo8Field::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw ParseError("empty Q(zeta8) literal");
  std::array<Rational, 4> c{};
  std::size_t i = 0;
  while (i < text.size()) {
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    std::string_view term = trim(text.substr(i, j - i));
    if (term.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
    int power = 0;
    Rational coeff = 1;
    auto zpos = term.find('z');
    if (zpos == std::string_view::npos) {
      coeff = parse_rational(term);
    } else {
      std::string_view zpart = term.substr(zpos);
      if (zpart == "z") power = 1;
      else if (zpart == "z^2") power = 2;
      else if (zpart == "z^3") power = 3;
      else throw ParseError("bad power of z in '" + std::string(term) + "'");
      std::string_view cpart = term.substr(0, zpos);
      if (!cpart.empty()) {
        if (cpart.back() != '*') throw ParseError("expected '*' before z in '" + std::string(term) + "'");
        coeff = parse_rational(cpart.substr(0, cpart.size() - 1));
      }
    }
    c[power] += negative ? Rational(-coeff) : coeff;
    i = j;
  }
  return {c[0], c[1], c[2], c[3]};
}

}  // namespace spinforge
