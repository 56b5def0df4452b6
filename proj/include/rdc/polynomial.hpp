#pragma once

// Variable contexts and multivariate polynomials over Scalar.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rdc/scalar.hpp"

namespace rdc {

inline constexpr int kMaxVariables = 16;

/// Exponent vector over the context's variables.
using Monomial = std::array<std::uint8_t, kMaxVariables>;

/// Named positive quadratics whose half-integer powers may appear in coefficients.
enum class Quadratic : std::uint8_t {
  NormZ = 0,           // sum z_i zbar_i
  NormZminusZbar = 1,  // sum -(z_i - zbar_i)^2
  NormX = 2,           // sum x_i^2
};
inline constexpr int kQuadraticCount = 3;

std::string quadratic_name(Quadratic q);

class Polynomial;

/// n holomorphic coordinates (with independent antiholomorphic partners) and l real ones.
/// Variable order: z_1..z_n, zbar_1..zbar_n, x_1..x_l. Basis 1-forms use the same order.
class VariableContext {
 public:
  VariableContext() = default;
  VariableContext(int n, int l = 0);

  static VariableContext complex(int n) { return {n, 0}; }
  static VariableContext real(int l) { return {0, l}; }

  int n() const { return n_; }
  int l() const { return l_; }
  int variable_count() const { return 2 * n_ + l_; }

  int z(int i) const { return i - 1; }            // 1-based index
  int zbar(int i) const { return n_ + i - 1; }
  int x(int i) const { return 2 * n_ + i - 1; }
  bool is_holomorphic(int var) const { return var < n_; }
  bool is_antiholomorphic(int var) const { return var >= n_ && var < 2 * n_; }
  bool is_real(int var) const { return var >= 2 * n_; }
  /// Conjugate partner of a complex variable; real variables map to themselves.
  int conjugate(int var) const;

  bool has_quadratic(Quadratic q) const;
  Polynomial expansion(Quadratic q) const;

  std::string variable_name(int var) const;
  std::string differential_name(int var) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.n_ == b.n_ && a.l_ == b.l_;
  }

 private:
  int n_ = 0;
  int l_ = 0;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Polynomial() = default;
  Polynomial(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(int var, int power = 1);
  static Polynomial monomial(const Monomial& m, const Scalar& c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  const Terms& terms() const { return terms_; }
  int total_degree() const;
  /// Lowest exponent of var over all terms (0 for the zero polynomial).
  int min_exponent(int var) const;
  bool uses_variable(int var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(int e) const;
  Polynomial derivative(int var) const;
  /// Multiply by x^m (m may have negative entries as long as the result stays polynomial).
  Polynomial shifted(const std::array<int, kMaxVariables>& m) const;
  /// Substitute polynomials (in another context) for each variable.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Conjugation under the Wirtinger convention: swap z_i and zbar_i, conjugate scalars.
  Polynomial conjugate(const VariableContext& ctx) const;

  std::string str(const VariableContext& ctx) const;

  void add_term(const Monomial& m, const Scalar& c);

 private:
  Terms terms_;
};

Monomial monomial_product(const Monomial& a, const Monomial& b);

}  // namespace rdc
