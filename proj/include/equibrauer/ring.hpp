// Coefficient rings: GF(p), Z/n and Q.
//
// A ring object carries the runtime parameters (the modulus) and performs all
// arithmetic on plain value types, so every algorithm in the library is a
// template over the ring class rather than over a boxed scalar.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

namespace equibrauer {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input (bad scenario block, inconsistent shapes, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// Z/n, with a flag recording whether n is prime (then the ring is GF(n)).
class ModRing {
 public:
  using value_type = std::int64_t;

  static ModRing prime_field(std::int64_t p) {
    if (!detail::is_prime(p)) throw InputError("GF(" + std::to_string(p) + "): modulus is not prime");
    return ModRing(p, true);
  }
  static ModRing residue_ring(std::int64_t n) {
    if (n < 2) throw InputError("Z/" + std::to_string(n) + ": modulus must be >= 2");
    // Primes must be written GF(p); keep the flag honest either way.
    return ModRing(n, detail::is_prime(n));
  }

  std::int64_t modulus() const { return n_; }
  bool is_field() const { return prime_; }
  bool is_prime_field() const { return prime_; }
  bool is_rational() const { return false; }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % n_; }
  value_type from_int(long long v) const {
    long long r = v % n_;
    return r < 0 ? r + n_ : r;
  }
  value_type from_mpz(const mpz_class& v) const {
    mpz_class r = v % n_;
    if (r < 0) r += n_;
    return r.get_si();
  }
  mpz_class to_mpz(value_type a) const { return mpz_class(static_cast<long>(a)); }

  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  value_type sub(value_type a, value_type b) const {
    value_type s = a - b;
    return s < 0 ? s + n_ : s;
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : n_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<__int128>(a) * b) % n_);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == one(); }
  bool equal(value_type a, value_type b) const { return a == b; }

  bool is_unit(value_type a) const { return std::gcd(a, n_) == 1; }
  value_type inv(value_type a) const {
    // extended Euclid; throws on non-units
    std::int64_t r0 = n_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    if (r0 != 1) throw Error(std::to_string(a) + " is not a unit in " + name());
    return from_int(s0);
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Cardinality of the ring.
  std::int64_t size() const { return n_; }

  std::string name() const { return (prime_ ? "GF(" : "Z/") + std::to_string(n_) + (prime_ ? ")" : ""); }
  std::string to_string(value_type a) const { return std::to_string(a); }
  nlohmann::json to_json(value_type a) const { return a; }
  value_type from_json(const nlohmann::json& j) const {
    if (j.is_number_integer()) return from_int(j.get<long long>());
    if (j.is_string()) return from_mpz(mpz_class(j.get<std::string>()));
    throw InputError("expected an integer scalar for " + name() + ", got " + j.dump());
  }

  bool operator==(const ModRing& o) const { return n_ == o.n_; }

 private:
  ModRing(std::int64_t n, bool prime) : n_(n), prime_(prime) {}
  std::int64_t n_;
  bool prime_;
};

/// The rational numbers, exact (GMP fractions kept in canonical form).
class Rationals {
 public:
  using value_type = mpq_class;

  bool is_field() const { return true; }
  bool is_prime_field() const { return false; }
  bool is_rational() const { return true; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  value_type from_mpz(const mpz_class& v) const { return mpq_class(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool is_unit(const value_type& a) const { return !is_zero(a); }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw Error("0 is not a unit in Q");
    return 1 / a;
  }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r *= a;
      a *= a;
      e >>= 1;
    }
    return r;
  }

  std::string name() const { return "Q"; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  nlohmann::json to_json(value_type a) const {
    a.canonicalize();
    if (a.get_den() == 1 && a.get_num().fits_slong_p()) return a.get_num().get_si();
    return a.get_str();
  }
  value_type from_json(const nlohmann::json& j) const {
    if (j.is_number_integer()) return from_int(j.get<long long>());
    if (j.is_string()) {
      mpq_class q;
      if (q.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad rational literal " + j.dump());
      if (q.get_den() == 0) throw InputError("zero denominator in " + j.dump());
      q.canonicalize();
      return q;
    }
    throw InputError("expected an integer or \"p/q\" scalar for Q, got " + j.dump());
  }

  bool operator==(const Rationals&) const { return true; }
};

using AnyRing = std::variant<ModRing, Rationals>;

/// Parses the ring literals "GF(p)", "Z/n" and "Q".
inline AnyRing parse_ring(const std::string& s) {
  auto parse_int = [&](const std::string& digits) -> std::int64_t {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad ring literal \"" + s + "\"");
    return std::stoll(digits);
  };
  if (s == "Q") return Rationals{};
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') return ModRing::prime_field(parse_int(s.substr(3, s.size() - 4)));
  if (s.rfind("Z/", 0) == 0) return ModRing::residue_ring(parse_int(s.substr(2)));
  throw InputError("unknown ring literal \"" + s + "\" (expected GF(p), Z/n or Q)");
}

template <class R>
std::string ring_name(const R& r) {
  return r.name();
}

}  // namespace equibrauer
