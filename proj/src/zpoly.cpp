#include "nevgcd/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace nevgcd::zpoly {

namespace {

constexpr std::size_t kKroneckerThreshold = 24;

using Word = std::uint64_t;
using ModPoly = std::vector<Word>;

Word mul_mod(Word a, Word b, Word p) {
  return static_cast<Word>((static_cast<unsigned __int128>(a) * b) % p);
}

Word pow_mod(Word base, Word exp, Word p) {
  Word result = 1;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

Word inv_mod(Word a, Word p) { return pow_mod(a, p - 2, p); }

Word reduce(const Integer& x, Word p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const ZPoly& a, Word p) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = reduce(a[i], p);
  trim_mod(out);
  return out;
}

// In-place a mod b over F_p; b is monic.
void rem_mod(ModPoly& a, const ModPoly& b, Word p) {
  const std::size_t nb = b.size();
  while (a.size() >= nb) {
    const Word lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - nb;
      const Word neg = p - lead;
      for (std::size_t j = 0; j + 1 < nb; ++j) {
        if (b[j] == 0) continue;
        Word& t = a[shift + j];
        t = static_cast<Word>((static_cast<unsigned __int128>(neg) * b[j] + t) % p);
      }
    }
    a.pop_back();
    trim_mod(a);
  }
}

void make_monic(ModPoly& a, Word p) {
  if (a.empty()) return;
  const Word inv = inv_mod(a.back(), p);
  for (Word& c : a) c = mul_mod(c, inv, p);
}

ModPoly gcd_mod(ModPoly a, ModPoly b, Word p) {
  make_monic(a, p);
  make_monic(b, p);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    rem_mod(a, b, p);
    make_monic(a, p);
    std::swap(a, b);
  }
  return a;
}

class PrimeSource {
 public:
  Word next() {
    Integer candidate(static_cast<unsigned long>(current_));
    do {
      candidate -= 2;
    } while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0);
    current_ = candidate.get_ui();
    return current_;
  }

 private:
  // 2^62 + 1: the first candidate tried is 2^62 - 1.
  Word current_ = (Word{1} << 62U) + 1;
};

std::size_t max_bits(const ZPoly& a) {
  std::size_t bits = 0;
  for (const Integer& c : a) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

Integer pack(const ZPoly& a, std::size_t slot_words) {
  std::vector<Word> pos(a.size() * slot_words, 0);
  std::vector<Word> neg(a.size() * slot_words, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int s = sgn(a[i]);
    if (s == 0) continue;
    std::vector<Word>& dst = s > 0 ? pos : neg;
    any_neg = any_neg || s < 0;
    std::size_t count = 0;
    mpz_export(dst.data() + i * slot_words, &count, -1, sizeof(Word), 0, 0, a[i].get_mpz_t());
  }
  Integer out;
  mpz_import(out.get_mpz_t(), pos.size(), -1, sizeof(Word), 0, 0, pos.data());
  if (any_neg) {
    Integer n;
    mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(Word), 0, 0, neg.data());
    out -= n;
  }
  return out;
}

}  // namespace

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const Integer& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return a;
  Integer g = content(a);
  if (sgn(a.back()) < 0) g = -g;
  if (g == 1) return a;
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(out[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

ZPoly multiply_schoolbook(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

ZPoly multiply_kronecker(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t shorter = std::min(a.size(), b.size());
  std::size_t len_bits = 1;
  while ((std::size_t{1} << len_bits) < shorter + 1) ++len_bits;
  // |product coefficient| < 2^(need - 1) with one spare bit for balanced digits.
  const std::size_t need = max_bits(a) + max_bits(b) + len_bits + 2;
  const std::size_t slot_words = (need + 63) / 64;

  Integer product = pack(a, slot_words) * pack(b, slot_words);
  const int product_sign = sgn(product);
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<Word> words(n * slot_words + 1, 0);
  if (product_sign != 0) {
    product = abs(product);
    std::size_t count = 0;
    mpz_export(words.data(), &count, -1, sizeof(Word), 0, 0, product.get_mpz_t());
  }

  ZPoly out(n);
  Integer half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, 64 * slot_words - 1);
  const Integer base = 2 * half;
  int carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer digit;
    mpz_import(digit.get_mpz_t(), slot_words, -1, sizeof(Word), 0, 0, words.data() + i * slot_words);
    digit += carry;
    if (digit >= half) {
      digit -= base;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = product_sign < 0 ? Integer(-digit) : digit;
  }
  trim(out);
  return out;
}

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (std::min(a.size(), b.size()) >= kKroneckerThreshold) return multiply_kronecker(a, b);
  return multiply_schoolbook(a, b);
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("pseudo-remainder by the zero polynomial");
  const std::size_t nb = b.size();
  const Integer& lb = b.back();
  Integer g, sa, sb;
  while (a.size() >= nb) {
    const std::size_t shift = a.size() - nb;
    mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    mpz_divexact(sa.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(sb.get_mpz_t(), a.back().get_mpz_t(), g.get_mpz_t());
    if (sa != 1) {
      for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] *= sa;
    }
    for (std::size_t j = 0; j + 1 < nb; ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), sb.get_mpz_t(), b[j].get_mpz_t());
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("division by the zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly rem = a;
  const std::size_t nb = b.size();
  ZPoly quotient(a.size() - nb + 1);
  const Integer& lb = b.back();
  for (std::size_t k = quotient.size(); k-- > 0;) {
    Integer& top = rem[k + nb - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(quotient[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < nb; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quotient[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (const Integer& c : rem) {
    if (sgn(c) != 0) return std::nullopt;
  }
  trim(quotient);
  return quotient;
}

ZPoly gcd_prs(const ZPoly& a_in, const ZPoly& b_in) {
  if (a_in.empty()) return primitive_part(b_in);
  if (b_in.empty()) return primitive_part(a_in);
  Integer c;
  const Integer ca = content(a_in);
  const Integer cb = content(b_in);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZPoly a = primitive_part(a_in);
  ZPoly b = primitive_part(b_in);
  if (a.size() < b.size()) std::swap(a, b);
  ZPoly result;
  while (true) {
    ZPoly r = pseudo_remainder(std::move(a), b);
    if (r.empty()) {
      result = std::move(b);
      break;
    }
    if (r.size() == 1) {
      result = ZPoly{1};
      break;
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  result = primitive_part(result);
  for (Integer& x : result) x *= c;
  return result;
}

long gcd_degree_mod(const ZPoly& a, const ZPoly& b, std::uint64_t p) {
  const ModPoly g = gcd_mod(reduce(a, p), reduce(b, p), p);
  return static_cast<long>(g.size()) - 1;
}

ZPoly gcd_modular(const ZPoly& a_in, const ZPoly& b_in) {
  if (a_in.empty()) return primitive_part(b_in);
  if (b_in.empty()) return primitive_part(a_in);
  Integer c;
  const Integer ca = content(a_in);
  const Integer cb = content(b_in);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const ZPoly a = primitive_part(a_in);
  const ZPoly b = primitive_part(b_in);
  auto scaled = [&c](ZPoly g) {
    for (Integer& x : g) x *= c;
    return g;
  };
  if (a.size() == 1 || b.size() == 1) return scaled(ZPoly{1});

  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  PrimeSource primes;
  long best_degree = -1;
  ZPoly image;  // gamma * gcd, coefficients mod `modulus`
  Integer modulus = 0;
  ZPoly previous_candidate;
  while (true) {
    const Word p = primes.next();
    if (reduce(a.back(), p) == 0 || reduce(b.back(), p) == 0) continue;
    ModPoly g = gcd_mod(reduce(a, p), reduce(b, p), p);
    const long e = static_cast<long>(g.size()) - 1;
    if (e == 0) return scaled(ZPoly{1});
    const Word gamma_p = reduce(gamma, p);
    for (Word& x : g) x = mul_mod(x, gamma_p, p);

    if (best_degree < 0 || e < best_degree) {
      best_degree = e;
      modulus = static_cast<unsigned long>(p);
      image.assign(g.size(), 0);
      for (std::size_t i = 0; i < g.size(); ++i) image[i] = static_cast<unsigned long>(g[i]);
      previous_candidate.clear();
    } else if (e > best_degree) {
      continue;  // unlucky prime
    } else {
      // CRT: x = image + modulus * t with t = (g - image) / modulus mod p.
      const Word m_inv = inv_mod(reduce(modulus, p), p);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const Word diff = (g[i] + p - reduce(image[i], p)) % p;
        const Word t = mul_mod(diff, m_inv, p);
        image[i] += modulus * static_cast<unsigned long>(t);
      }
      modulus *= static_cast<unsigned long>(p);
    }

    const Integer half = modulus / 2;
    ZPoly candidate = image;
    for (Integer& x : candidate) {
      if (x > half) x -= modulus;
    }
    candidate = primitive_part(candidate);
    if (candidate == previous_candidate) {
      if (divide_exact(a, candidate) && divide_exact(b, candidate)) return scaled(candidate);
    }
    previous_candidate = std::move(candidate);
  }
}

}  // namespace nevgcd::zpoly
