#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "quivalg/errors.hpp"

namespace quivalg {

template <class F>
concept FieldType = requires(const F f, const typename F::Elem a, const typename F::Elem b) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.eq(a, b) } -> std::convertible_to<bool>;
  { f.str(a) } -> std::convertible_to<std::string>;
};

// The rational numbers with exact GMP arithmetic. All verification in this
// library is linear algebra over the prime field of the coefficient field,
// so Q stands in for any field of characteristic zero.
class Rationals {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw DivisionByZero();
    return Elem(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_long(long n) const { return Elem(n); }
  Elem from_ratio(long num, long den) const {
    if (den == 0) throw DivisionByZero();
    Elem r(num, den);
    r.canonicalize();
    return r;
  }
  std::string str(const Elem& a) const { return a.get_str(); }
  std::string describe() const { return "Q"; }
  unsigned long characteristic() const { return 0; }

  // Accepts "n" or "n/d" with optional sign.
  std::optional<Elem> parse(const std::string& text) const {
    if (text.empty()) return std::nullopt;
    mpq_class v;
    if (v.set_str(text, 10) != 0) return std::nullopt;
    if (v.get_den() == 0) return std::nullopt;
    v.canonicalize();
    return v;
  }
};

// Prime field F_p with residues 0..p-1. p must be an odd-or-even prime
// below 2^31 so products fit comfortably in 64 bits.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(unsigned long p) : p_(p) {
    if (!is_prime(p)) throw Error("PrimeField modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ul << 31)) throw Error("PrimeField modulus too large");
  }

  unsigned long modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b % p_) % p_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return (p_ - a % p_) % p_; }
  Elem inv(Elem a) const {
    a %= p_;
    if (a == 0) throw DivisionByZero();
    // extended Euclid on (a, p)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
    while (new_r != 0) {
      long long q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    long long res = t % static_cast<long long>(p_);
    if (res < 0) res += static_cast<long long>(p_);
    return static_cast<Elem>(res);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a % p_ == 0; }
  bool eq(Elem a, Elem b) const { return a % p_ == b % p_; }
  Elem from_long(long n) const {
    long long m = n % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<Elem>(m);
  }
  Elem from_ratio(long num, long den) const { return div(from_long(num), from_long(den)); }
  std::string str(Elem a) const { return std::to_string(a % p_); }
  std::string describe() const { return "F" + std::to_string(p_); }
  unsigned long characteristic() const { return p_; }

  std::optional<Elem> parse(const std::string& text) const {
    // integer or integer/integer, reduced mod p
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        size_t pos = 0;
        long v = std::stol(text, &pos);
        if (pos != text.size()) return std::nullopt;
        return from_long(v);
      }
      size_t p1 = 0, p2 = 0;
      long num = std::stol(text.substr(0, slash), &p1);
      long den = std::stol(text.substr(slash + 1), &p2);
      if (p1 != slash || p2 != text.size() - slash - 1) return std::nullopt;
      if (from_long(den) == 0) return std::nullopt;
      return from_ratio(num, den);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  static bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  unsigned long p_;
};

enum class ScalarOp { add, mul, inv, neg };

// Exact scalar arithmetic entry point; op == inv takes a single operand.
template <FieldType F>
typename F::Elem scalar_arith(const F& f, ScalarOp op, const typename F::Elem& a,
                              const typename F::Elem* b = nullptr) {
  switch (op) {
    case ScalarOp::add:
      if (!b) throw Error("add requires two operands");
      return f.add(a, *b);
    case ScalarOp::mul:
      if (!b) throw Error("mul requires two operands");
      return f.mul(a, *b);
    case ScalarOp::inv:
      if (b) throw Error("inv takes a single operand");
      return f.inv(a);
    case ScalarOp::neg:
      return f.neg(a);
  }
  throw Error("unknown scalar op");
}

// Runtime description of the coefficient field and the distinguished
// nonzero parameter lambda, as given on a command line.
struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  unsigned long p = 0;
  std::string lambda = "1";

  // "Q" or "Fp:<p>"
  static FieldSpec parse(const std::string& field_text, const std::string& lambda_text) {
    FieldSpec spec;
    spec.lambda = lambda_text;
    if (field_text == "Q" || field_text == "q") {
      spec.kind = Kind::rationals;
      return spec;
    }
    if (field_text.rfind("Fp:", 0) == 0 || field_text.rfind("fp:", 0) == 0) {
      spec.kind = Kind::prime;
      spec.p = std::stoul(field_text.substr(3));
      if (!PrimeField::is_prime(spec.p)) throw Error("field modulus must be prime: " + field_text);
      return spec;
    }
    throw Error("unknown field spec (expected Q or Fp:<p>): " + field_text);
  }

  std::string describe() const {
    return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
  }
};

}  // namespace quivalg
