#include "spinforge/clifford.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace spinforge {

void check_dimension(int m) {
  if (m < 1 || m > kMaxDimension) throw PreconditionError("ambient dimension m must lie in [1, 31]");
}

int position(Generator g, int m) {
  const int n = m / 2;
  switch (g.kind) {
    case GenKind::E:
      if (g.index < 1 || g.index > n) throw PreconditionError("generator index out of range");
      return g.index - 1;
    case GenKind::F:
      if (g.index < 1 || g.index > n) throw PreconditionError("generator index out of range");
      return m - g.index;
    case GenKind::U0:
      if (m % 2 == 0) throw PreconditionError("u0 exists only for odd m");
      return n;
  }
  return -1;
}

Generator generator_at(int pos, int m) {
  const int n = m / 2;
  if (pos < 0 || pos >= m) throw PreconditionError("basis position out of range");
  if (pos < n) return Generator::e(pos + 1);
  if (m % 2 == 1 && pos == n) return Generator::u0();
  return Generator::f(m - pos);
}

std::string generator_name(Generator g) {
  switch (g.kind) {
    case GenKind::E:
      return "e" + std::to_string(g.index);
    case GenKind::F:
      return "f" + std::to_string(g.index);
    case GenKind::U0:
      return "u0";
  }
  return "?";
}

std::string to_string(GradeParity p) {
  switch (p) {
    case GradeParity::Even:
      return "even";
    case GradeParity::Odd:
      return "odd";
    case GradeParity::Mixed:
      return "mixed";
    case GradeParity::Zero:
      return "zero";
  }
  return "?";
}

std::string monomial_to_string(Mask mask, int m) {
  std::string out;
  for (int k = 0; k < m; ++k) {
    if (!(mask >> k & 1)) continue;
    if (!out.empty()) out += ' ';
    out += generator_name(generator_at(k, m));
  }
  return out;
}

namespace detail {

namespace {

// Right multiplication of a canonical monomial by the generator at position g.
// Moving g leftwards past a larger generator a uses a g = -g a + 2 (a, g); at
// most one such a (the partner of g) has nonzero pairing.
void mul_generator(int m, Mask a, int g, std::int64_t coeff, TermList& out) {
  const int partner = m - 1 - g;
  std::int64_t sign = coeff;
  for (int k = m - 1; k > g; --k) {
    if (!(a >> k & 1)) continue;
    if (k == partner) out.push_back({a & ~(Mask{1} << k), 2 * sign});
    sign = -sign;
  }
  if (a >> g & 1) {
    // g^2 = Q(b_g): 1 for u0, 0 for isotropic e_i / f_i
    if (partner == g) out.push_back({a & ~(Mask{1} << g), sign});
  } else {
    out.push_back({a | (Mask{1} << g), sign});
  }
}

TermList combine(TermList terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mask < y.mask; });
  TermList out;
  for (const auto& t : terms) {
    if (!out.empty() && out.back().mask == t.mask) out.back().coeff += t.coeff;
    else out.push_back(t);
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  return out;
}

TermList right_multiply(int m, const TermList& terms, int g) {
  TermList next;
  for (const auto& t : terms) mul_generator(m, t.mask, g, t.coeff, next);
  return combine(std::move(next));
}

struct PairKey {
  int m;
  Mask a;
  Mask b;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::uint64_t h = (static_cast<std::uint64_t>(k.a) << 32) ^ k.b;
    h ^= static_cast<std::uint64_t>(k.m) * 0x9e3779b97f4a7c15ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ULL);
  }
};

}  // namespace

const TermList& monomial_product(int m, Mask a, Mask b) {
  // Caches are per thread, so concurrent callers never share mutable state.
  thread_local std::unordered_map<PairKey, TermList, PairKeyHash> cache;
  PairKey key{m, a, b};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  TermList terms{{a, 1}};
  for (int k = 0; k < m; ++k) {
    if (b >> k & 1) terms = right_multiply(m, terms, k);
  }
  return cache.emplace(key, std::move(terms)).first->second;
}

const TermList& monomial_star(int m, Mask a) {
  thread_local std::unordered_map<PairKey, TermList, PairKeyHash> cache;
  PairKey key{m, a, 0};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const std::int64_t sign = std::popcount(a) % 2 == 0 ? 1 : -1;
  TermList terms{{0, sign}};
  for (int k = m - 1; k >= 0; --k) {
    if (a >> k & 1) terms = right_multiply(m, terms, k);
  }
  return cache.emplace(key, std::move(terms)).first->second;
}

std::vector<std::string> split_terms(std::string_view text) {
  std::vector<std::string> out;
  std::string s(text);
  auto is_blank = [](const std::string& x) {
    return std::all_of(x.begin(), x.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  };
  if (is_blank(s)) throw ParseError("empty multivector text");
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(" + ", start);
    std::string piece = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (is_blank(piece)) throw ParseError("empty term in multivector text");
    out.push_back(piece);
    if (pos == std::string::npos) break;
    start = pos + 3;
  }
  return out;
}

std::pair<std::string, std::vector<Generator>> split_term(std::string_view term, int m) {
  // The coefficient ends at the first '*' that is followed by a generator letter.
  std::size_t cut = std::string_view::npos;
  for (std::size_t i = 0; i + 1 < term.size(); ++i) {
    if (term[i] == '*' && (term[i + 1] == 'e' || term[i + 1] == 'f' || term[i + 1] == 'u')) {
      cut = i;
      break;
    }
  }
  std::string coeff(term.substr(0, cut));
  std::vector<Generator> gens;
  if (cut == std::string_view::npos) {
    if (coeff == "0") return {coeff, gens};
    // A bare generator word such as "e1 f1" has implicit coefficient 1.
    std::string_view t = term;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    if (!t.empty() && (t.front() == 'e' || t.front() == 'f' || t.front() == 'u')) {
      cut = static_cast<std::size_t>(t.data() - term.data()) - 1;
      coeff = "1";
    } else {
      return {coeff, gens};
    }
  }
  std::string_view rest = term.substr(cut + 1);
  const int n = m / 2;
  std::size_t i = 0;
  while (i < rest.size()) {
    if (std::isspace(static_cast<unsigned char>(rest[i]))) {
      ++i;
      continue;
    }
    char letter = rest[i++];
    std::size_t j = i;
    while (j < rest.size() && std::isdigit(static_cast<unsigned char>(rest[j]))) ++j;
    if (j == i) throw ParseError("generator '" + std::string(1, letter) + "' lacks an index");
    int index = std::stoi(std::string(rest.substr(i, j - i)));
    i = j;
    if (letter == 'u') {
      if (index != 0 || m % 2 == 0) throw ParseError("u0 is the only u-generator and needs odd m");
      gens.push_back(Generator::u0());
    } else if (letter == 'e' || letter == 'f') {
      if (index < 1 || index > n) throw ParseError("generator index out of range for m");
      gens.push_back(letter == 'e' ? Generator::e(index) : Generator::f(index));
    } else {
      throw ParseError(std::string("unknown generator letter '") + letter + "'");
    }
  }
  if (gens.empty()) throw ParseError("empty monomial after '*'");
  return {coeff, gens};
}

}  // namespace detail

}  // namespace spinforge
