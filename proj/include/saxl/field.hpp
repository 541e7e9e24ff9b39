#ifndef SAXL_FIELD_HPP
#define SAXL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace saxl {

bool is_prime(std::uint64_t n);

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// GF(p^e). Elements are indices 0..q-1: the coefficient vector
/// (c_0, ..., c_{e-1}) of c_0 + c_1 x + ... read as a base-p integer, so 0 and
/// 1 are the field's zero and one. The modulus is the lexicographically
/// smallest monic irreducible of degree e (leading coefficients compared
/// first). Copies share their lookup tables.
class Field {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

  /// Throws NotPrime or FieldTooLarge.
  static Field make(std::uint64_t p, std::uint32_t e,
                    std::uint64_t max_order = kDefaultMaxOrder);

  /// Field of order q; throws NotPrimePower.
  static Field of_order(std::uint64_t q, std::uint64_t max_order = kDefaultMaxOrder);

  std::uint32_t characteristic() const { return t_->p; }
  std::uint32_t degree() const { return t_->e; }
  std::uint32_t order() const { return t_->q; }

  /// Monic modulus, coefficients from x^0 up to x^e.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^k for any integer k; negative k requires a != 0.
  Elem pow(Elem a, std::int64_t k) const;
  Elem frobenius(Elem a) const { return pow(a, t_->p); }

  /// Smallest index of multiplicative order q-1.
  Elem primitive_element() const { return t_->zeta; }

  /// Base-p integer label of an element (its index in decimal).
  std::string label(Elem a) const { return std::to_string(a); }

 private:
  struct Tables {
    std::uint32_t p = 0, e = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    Elem zeta = 1;
    std::vector<Elem> exp;            // exp[i] = zeta^i, i < q-1
    std::vector<std::uint32_t> log;   // log[a] for a != 0
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

/// F_q together with a point at infinity. Indices 0..q-1 are field
/// elements, index q is infinity.
class ProjectiveLine {
 public:
  explicit ProjectiveLine(Field field) : field_(std::move(field)) {}

  const Field& field() const { return field_; }
  std::uint32_t size() const { return field_.order() + 1; }
  std::uint32_t infinity() const { return field_.order(); }
  bool is_infinity(std::uint32_t point) const { return point == infinity(); }

  /// "inf" or the element's label.
  std::string label(std::uint32_t point) const;

 private:
  Field field_;
};

}  // namespace saxl

#endif  // SAXL_FIELD_HPP
