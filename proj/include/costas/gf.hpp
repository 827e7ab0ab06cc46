#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace costas::gf {

/// Element of GF(p^m) encoded as sum c_t p^t, where c_t is the coefficient of
/// x^t in the polynomial representative.
struct FieldElement {
  std::uint32_t value = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Largest field order accepted by anything that scans the whole field.
inline constexpr std::uint32_t kFieldOrderGuard = 1u << 20;

/// GF(p^m) = GF(p)[x] / <modulus>, modulus given in ascending coefficients.
/// Immutable after construction; multiplication goes through internal
/// exp/log tables built once from the smallest primitive element.
class Field {
public:
  /// Validates p prime, m >= 1, deg(modulus) = m and modulus irreducible.
  /// The modulus is normalized to be monic. For m = 1 the modulus may be empty.
  Field(int p, int m, std::vector<int> modulus = {});

  static Field prime(int p) { return Field(p, 1); }
  /// "p^m:c0,c1,...,cm" or a bare prime "p".
  static Field parse(std::string_view spec);
  /// Field of order q using the configured default modulus for prime powers.
  static Field standard(int q);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  int order() const { return static_cast<int>(q_); }
  const std::vector<int>& modulus() const { return modulus_; }
  /// Spec string that round-trips through parse().
  std::string spec() const;

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// The class of x (equal to the constant 0 when m = 1).
  FieldElement x() const;
  FieldElement element(std::uint32_t encoding) const;
  /// Integer encoding ("14") or polynomial ("x+x^2+x^3", "2+2x", "1+2*x^2").
  FieldElement parse_element(std::string_view text) const;
  std::string format(FieldElement e) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  /// Negative exponents go through inv(); 0^0 = 1, 0^e = 0 for e > 0.
  FieldElement pow(FieldElement a, long long e) const;

  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(FieldElement a) const;
  /// Throws std::domain_error on zero.
  bool is_primitive(FieldElement a) const;
  /// Ascending by encoding. Throws std::length_error past the guard.
  std::vector<FieldElement> primitive_elements() const;

  /// Schoolbook polynomial product reduced by the modulus; independent of the
  /// internal tables.
  FieldElement mul_polynomial(FieldElement a, FieldElement b) const;

  /// Distinct prime factors of q - 1 by trial division.
  const std::vector<std::uint32_t>& group_order_factors() const { return factors_; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

private:
  std::vector<int> digits(FieldElement e) const;
  FieldElement from_digits(const std::vector<int>& d) const;

  int p_;
  int m_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> factors_;
  std::vector<std::uint32_t> exp_; // exp_[t] = g^t, t in [0, q-1)
  std::vector<std::uint32_t> log_; // log_[e] for e != 0
};

bool is_prime(long long n);

/// Irreducibility of a monic-normalizable polynomial over GF(p) by exhaustive
/// trial division by monic polynomials of degree <= deg/2.
bool is_irreducible(int p, const std::vector<int>& ascending_coefficients);

/// Exponent/element correspondence for a fixed primitive generator.
class LogTable {
public:
  /// Throws std::invalid_argument if the generator is not primitive.
  LogTable(const Field& field, FieldElement generator);

  FieldElement generator() const { return generator_; }
  /// generator^e for any integer e.
  FieldElement exp(long long e) const;
  /// Exponent in [1, q-1]; q-1 exactly for the element 1. Throws on zero.
  int dlog(FieldElement e) const;

private:
  FieldElement generator_;
  int q_;
  std::vector<std::uint32_t> exp_; // exp_[t] = g^t, t in [0, q-1)
  std::vector<int> log_;
};

/// Primitive phi with 1 - phi primitive.
std::vector<FieldElement> g3_admissible(const Field& field);

/// Primitive phi with 1 - phi and 1 - phi^{-1} both primitive.
std::vector<FieldElement> g3_cube_admissible(const Field& field);

/// Prime powers q in [lo, hi], ascending.
std::vector<int> prime_powers(int lo, int hi);

} // namespace costas::gf
