#include "saxl/field.hpp"

#include <string>

#include "saxl/error.hpp"

namespace saxl {
namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) inverts a.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = inverse_mod_p(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + (p - factor) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_index(std::uint64_t index, std::uint32_t p, std::size_t len) {
  Poly out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::size_t e = f.size() - 1;
  // Any factorization has a monic factor of degree <= e/2.
  for (std::size_t d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t tail = 0; tail < count; ++tail) {
      Poly g = poly_from_index(tail, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p) ++p;
  if (q % p) p = q;  // q itself is prime
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field Field::make(std::uint64_t p, std::uint32_t e, std::uint64_t max_order) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Errc::NotPrimePower, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order) {
      throw Error(Errc::FieldTooLarge, std::to_string(p) + "^" + std::to_string(e) +
                                           " exceeds the field size cap " +
                                           std::to_string(max_order));
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = static_cast<std::uint32_t>(p);
  t->e = e;
  t->q = static_cast<std::uint32_t>(q);
  // Monic candidates in lexicographic order: the lower coefficients read as a
  // base-p number with x^(e-1) most significant.
  for (std::uint64_t tail = 0; tail < q; ++tail) {
    Poly f = poly_from_index(tail, t->p, e);
    f.push_back(1);
    if (is_irreducible(f, t->p)) {
      t->modulus = std::move(f);
      break;
    }
  }

  auto slow_mul = [&](Elem a, Elem b) {
    Poly pa = poly_from_index(a, t->p, e), pb = poly_from_index(b, t->p, e);
    Poly prod(2 * e, 0);
    for (std::size_t i = 0; i < e; ++i) {
      for (std::size_t j = 0; j < e; ++j) {
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % t->p);
      }
    }
    Poly r = poly_mod(std::move(prod), t->modulus, t->p);
    Elem out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * t->p + r[i];
    return out;
  };
  auto slow_pow = [&](Elem a, std::uint64_t k) {
    Elem result = 1;
    while (k) {
      if (k & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return result;
  };

  std::uint64_t group_order = q - 1;
  auto divisors = prime_divisors(group_order);
  for (Elem a = 1; a < q; ++a) {
    bool generates = true;
    for (auto r : divisors) {
      if (slow_pow(a, group_order / r) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) {
      t->zeta = a;
      break;
    }
  }

  t->exp.resize(group_order);
  t->log.assign(q, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < group_order; ++i) {
    t->exp[i] = x;
    t->log[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, t->zeta);
  }
  return Field(std::move(t));
}

Field Field::of_order(std::uint64_t q, std::uint64_t max_order) {
  auto pe = prime_power(q);
  if (!pe) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return make(pe->first, pe->second, max_order);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  return poly_from_index(a, t_->p, t_->e);
}

Field::Elem Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  Elem out = 0;
  for (std::size_t i = t_->e; i-- > 0;) {
    std::uint32_t c = i < coeffs.size() ? coeffs[i] % t_->p : 0;
    out = out * t_->p + c;
  }
  return out;
}

Field::Elem Field::add(Elem a, Elem b) const {
  std::uint32_t p = t_->p;
  if (p == 2) return a ^ b;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < t_->e; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

Field::Elem Field::neg(Elem a) const {
  std::uint32_t p = t_->p;
  if (p == 2) return a;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < t_->e; ++i) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

Field::Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t k = std::uint64_t{t_->log[a]} + t_->log[b];
  return t_->exp[k % (t_->q - 1)];
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "zero has no inverse");
  std::uint32_t n = t_->q - 1;
  return t_->exp[(n - t_->log[a]) % n];
}

Field::Elem Field::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
    return k == 0 ? 1 : 0;
  }
  std::int64_t n = t_->q - 1;
  std::int64_t r = (static_cast<std::int64_t>(t_->log[a]) * (k % n)) % n;
  if (r < 0) r += n;
  return t_->exp[static_cast<std::size_t>(r)];
}

std::string ProjectiveLine::label(std::uint32_t point) const {
  if (is_infinity(point)) return "inf";
  return field_.label(point);
}

}  // namespace saxl
