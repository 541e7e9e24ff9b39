#include "saxl/constructions.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_map>

#include "saxl/error.hpp"
#include "saxl/perm_io.hpp"

namespace saxl {
namespace {

constexpr std::size_t kDefaultDegreeCap = 10000;

Permutation from_function(std::size_t n, const std::function<Point(Point)>& f) {
  std::vector<Point> images(n);
  for (Point p = 0; p < n; ++p) images[p] = f(p);
  return Permutation(std::move(images));
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Builds the group and insists that the chain order matches the closed form.
PermGroup with_order(std::vector<Permutation> gens, std::size_t degree,
                     const BigInt& expected, const std::string& what) {
  auto group = PermGroup::from_generators(std::move(gens), degree);
  if (group.order() != expected) {
    throw Error(Errc::InvariantViolation, what + ": chain order " + group.order().str() +
                                              " differs from closed form " + expected.str());
  }
  return group;
}

// x -> (a x + b) / (c x + d) on the projective line.
Permutation mobius(const ProjectiveLine& line, Field::Elem a, Field::Elem b, Field::Elem c,
                   Field::Elem d) {
  const Field& f = line.field();
  const Point inf = line.infinity();
  return from_function(line.size(), [&](Point x) -> Point {
    if (x == inf) return c == 0 ? inf : f.div(a, c);
    Field::Elem den = f.add(f.mul(c, x), d);
    Field::Elem num = f.add(f.mul(a, x), b);
    return den == 0 ? inf : f.div(num, den);
  });
}

Permutation projective_frobenius(const ProjectiveLine& line) {
  return from_function(line.size(), [&](Point x) -> Point {
    return line.is_infinity(x) ? x : line.field().frobenius(x);
  });
}

// F_p-basis of F_q: the elements x^j, whose indices are p^j.
std::vector<Field::Elem> additive_basis(const Field& f) {
  std::vector<Field::Elem> basis;
  Field::Elem b = 1;
  for (std::uint32_t j = 0; j < f.degree(); ++j, b *= f.characteristic()) basis.push_back(b);
  return basis;
}

Field field_of_order(std::uint64_t q) {
  if (!prime_power(q)) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return Field::of_order(q);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

std::size_t degree_cap() {
  if (const char* env = std::getenv("SAXL_MAX_DEGREE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultDegreeCap;
}

void check_degree(std::uint64_t degree, const std::string& what) {
  if (degree > degree_cap()) {
    throw Error(Errc::DegreeCapExceeded, what + " has degree " + std::to_string(degree) +
                                             ", above the cap " +
                                             std::to_string(degree_cap()));
  }
}

PermGroup natural_group(NaturalKind kind, std::size_t n) {
  std::size_t min_n = kind == NaturalKind::Sym ? 1 : 3;
  if (n < min_n) {
    throw Error(Errc::DegreeTooSmall,
                std::string(kind == NaturalKind::Sym ? "Sym" : "Alt") + "(" +
                    std::to_string(n) + ") needs degree >= " + std::to_string(min_n));
  }
  check_degree(n, "natural action");
  std::vector<Permutation> gens;
  std::vector<Point> cycle;
  if (kind == NaturalKind::Sym) {
    if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    for (Point i = 0; i < n; ++i) cycle.push_back(i);
  } else {
    gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
    // Alt(n) = <(0 1 2), (0 1 ... n-1)> for odd n, <(0 1 2), (1 2 ... n-1)> for even n.
    for (Point i = n % 2 ? 0 : 1; i < n; ++i) cycle.push_back(i);
  }
  if (cycle.size() >= 2) gens.push_back(Permutation::from_cycles(n, {cycle}));
  BigInt order = factorial(n);
  if (kind == NaturalKind::Alt) order /= 2;
  return with_order(std::move(gens), n, order, "natural group");
}

PermGroup projective_group(ProjectiveKind kind, std::uint64_t q, std::string* note) {
  Field f = field_of_order(q);
  check_degree(q + 1, "projective line");
  ProjectiveLine line(f);
  if (kind == ProjectiveKind::PSL && f.characteristic() == 2) {
    kind = ProjectiveKind::PGL;
    if (note) *note = "PSL(2," + std::to_string(q) + ") = PGL(2," + std::to_string(q) + ")";
  }
  const Field::Elem zeta = f.primitive_element();
  const Field::Elem minus_one = f.neg(1);
  std::vector<Permutation> gens{mobius(line, 1, 1, 0, 1)};
  BigInt order = BigInt(q) * (q * q - 1);
  if (kind == ProjectiveKind::PSL) {
    std::uint64_t s = f.characteristic() == 2 ? 1 : 2;
    gens.push_back(mobius(line, f.pow(zeta, static_cast<std::int64_t>(s)), 0, 0, 1));
    gens.push_back(mobius(line, 0, minus_one, 1, 0));
    order /= gcd_u64(2, q - 1);
  } else {
    gens.push_back(mobius(line, zeta, 0, 0, 1));
    gens.push_back(mobius(line, 0, 1, 1, 0));
    if (kind == ProjectiveKind::PGammaL) {
      if (f.degree() > 1) gens.push_back(projective_frobenius(line));
      order *= f.degree();
    }
  }
  return with_order(std::move(gens), line.size(), order, "projective group");
}

PermGroup agl1_subgroup(std::uint64_t q, std::uint64_t d) {
  Field f = field_of_order(q);
  if (d == 0 || (q - 1) % d != 0) {
    throw Error(Errc::NotDivisor, std::to_string(d) + " does not divide " + std::to_string(q - 1));
  }
  check_degree(q, "affine line");
  std::vector<Permutation> gens;
  for (Field::Elem b : additive_basis(f)) {
    gens.push_back(from_function(q, [&](Point x) { return f.add(x, b); }));
  }
  Field::Elem m = f.pow(f.primitive_element(), static_cast<std::int64_t>((q - 1) / d));
  gens.push_back(from_function(q, [&](Point x) { return f.mul(m, x); }));
  return with_order(std::move(gens), q, BigInt(q) * d, "affine subgroup");
}

PermGroup deleted_module_action(const Field& f, std::size_t n,
                                const std::vector<Permutation>& coordinate_perms) {
  if (n < 2) throw Error(Errc::DegreeTooSmall, "deleted module needs n >= 2");
  const std::uint64_t q = f.order();
  std::uint64_t degree = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    degree *= q;
    check_degree(degree, "deleted permutation module");
  }
  auto decode = [&](Point index) {
    std::vector<Field::Elem> v(n);
    Field::Elem last = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      v[i] = index % q;
      index /= static_cast<Point>(q);
      last = f.sub(last, v[i]);
    }
    v[n - 1] = last;
    return v;
  };
  auto encode = [&](const std::vector<Field::Elem>& v) {
    Point index = 0;
    for (std::size_t i = n - 1; i-- > 0;) index = index * static_cast<Point>(q) + v[i];
    return index;
  };
  std::vector<Permutation> gens;
  // Translations by b (e_0 - e_1); the coordinate permutations move them
  // around to span the whole module when they act transitively.
  for (Field::Elem b : additive_basis(f)) {
    gens.push_back(from_function(degree, [&](Point x) {
      auto v = decode(x);
      v[0] = f.add(v[0], b);
      v[1] = f.sub(v[1], b);
      return encode(v);
    }));
  }
  for (const auto& sigma : coordinate_perms) {
    if (sigma.degree() != n) throw Error(Errc::MixedDegree, "coordinate permutation degree");
    gens.push_back(from_function(degree, [&](Point x) {
      auto v = decode(x);
      std::vector<Field::Elem> w(n);
      for (Point i = 0; i < n; ++i) w[sigma[i]] = v[i];
      return encode(w);
    }));
  }
  return PermGroup::from_generators(std::move(gens), degree);
}

PermGroup affine_deleted_module(std::uint64_t q, std::uint64_t k, bool allow_even) {
  Field f = field_of_order(q);
  if (k == 0) throw Error(Errc::DegreeTooSmall, "k must be >= 1");
  if (q % 2 == 0 && !allow_even) {
    throw Error(Errc::NotPrimePower, "even q needs the explicit 'even' override");
  }
  // n = q^k - 1; the degree q^(n-1) must be checked before anything is built.
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    n *= q;
    if (n > 64) throw Error(Errc::DegreeCapExceeded, "deleted module dimension too large");
  }
  n -= 1;
  if (n < 2) throw Error(Errc::DegreeTooSmall, "deleted module needs q^k - 1 >= 2");
  std::uint64_t degree = 1;
  for (std::uint64_t i = 0; i + 1 < n; ++i) {
    degree *= q;
    check_degree(degree, "deleted permutation module");
  }
  std::vector<Point> cycle(n);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  std::vector<Permutation> perms{Permutation::from_cycles(n, {{0, 1}}),
                                 Permutation::from_cycles(n, {cycle})};
  auto group = deleted_module_action(f, n, perms);
  BigInt expected = BigInt(degree) * factorial(n);
  if (group.order() != expected) {
    throw Error(Errc::InvariantViolation, "deleted module order " + group.order().str() +
                                              " differs from " + expected.str());
  }
  return group;
}

Point deleted_module_point(const Field& f, const std::vector<Field::Elem>& v) {
  Field::Elem sum = 0;
  for (auto x : v) sum = f.add(sum, x);
  if (v.size() < 2 || sum != 0) {
    throw Error(Errc::InvariantViolation, "deleted module vectors have coordinate sum zero");
  }
  Point index = 0;
  for (std::size_t i = v.size() - 1; i-- > 0;) index = index * static_cast<Point>(f.order()) + v[i];
  return index;
}

PermGroup coset_action(const PermGroup& g, const std::vector<Permutation>& h_gens) {
  const std::size_t n = g.degree();
  for (const auto& h : h_gens) {
    if (h.degree() != n || !g.contains(h)) {
      throw Error(Errc::NotSubgroup, "subgroup generator " + format_cycles(h) +
                                         " is not in the group");
    }
  }
  PermGroup h_group = PermGroup::from_generators(h_gens, n);
  BigInt index = g.order() / h_group.order();
  check_degree(index > BigInt(degree_cap()) ? degree_cap() + 1 : index.convert_to<std::uint64_t>(),
               "coset action");

  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  StabChain chain = h_group.chain_with_prefix(all);

  // Lexicographically least element of the coset H x.
  auto canonical = [&](Permutation x) {
    for (const auto& level : chain.levels()) {
      if (level.orbit_size() == 1) continue;
      std::size_t best = 0;
      for (std::size_t i = 1; i < level.orbit.size(); ++i) {
        if (x[level.orbit[i]] < x[level.orbit[best]]) best = i;
      }
      if (best == 0) continue;
      Permutation u = level.inv_transversal[best].inverse();  // base -> orbit[best]
      x = u * x;
    }
    return x;
  };

  std::unordered_map<Permutation, Point> label;
  std::vector<Permutation> reps{canonical(Permutation(n))};
  label.emplace(reps.front(), 0);
  const auto& gens = g.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation next = canonical(reps[i] * gens[s]);
      auto [it, inserted] = label.emplace(next, static_cast<Point>(reps.size()));
      if (inserted) {
        reps.push_back(std::move(next));
        check_degree(reps.size(), "coset action");
      }
      images[s].push_back(it->second);
    }
  }
  std::vector<Permutation> action;
  for (auto& img : images) action.emplace_back(std::move(img));
  if (BigInt(reps.size()) != index) {
    throw Error(Errc::InvariantViolation, "coset count differs from the index");
  }
  return PermGroup::from_generators(std::move(action), reps.size());
}

PermGroup wreath_product_action(const PermGroup& l, std::size_t k, const PermGroup& p) {
  if (p.degree() != k) throw Error(Errc::MixedDegree, "top group degree must equal k");
  const std::uint64_t m = l.degree();
  std::uint64_t degree = 1;
  for (std::size_t i = 0; i < k; ++i) {
    degree *= m;
    check_degree(degree, "product action");
  }
  std::vector<std::uint64_t> weight(k, 1);
  for (std::size_t i = 1; i < k; ++i) weight[i] = weight[i - 1] * m;
  auto digit = [&](Point x, std::size_t i) { return static_cast<Point>(x / weight[i] % m); };
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& g : l.generators()) {
      gens.push_back(from_function(degree, [&](Point x) {
        Point d = digit(x, i);
        return static_cast<Point>(x + (static_cast<std::int64_t>(g[d]) - d) *
                                          static_cast<std::int64_t>(weight[i]));
      }));
    }
  }
  for (const auto& sigma : p.generators()) {
    gens.push_back(from_function(degree, [&](Point x) {
      std::uint64_t y = 0;
      for (std::size_t i = 0; i < k; ++i) y += digit(x, i) * weight[sigma[i]];
      return static_cast<Point>(y);
    }));
  }
  BigInt order = p.order();
  for (std::size_t i = 0; i < k; ++i) order *= l.order();
  return with_order(std::move(gens), degree, order, "product action");
}

}  // namespace saxl
