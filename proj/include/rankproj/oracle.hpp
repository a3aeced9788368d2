#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "rankproj/basis.hpp"
#include "rankproj/bigint.hpp"
#include "rankproj/classes.hpp"

namespace rankproj::oracle {

/// Formal polynomial in the symbols s_1..s_k (for c_i(S^dual)) and q_1..q_{n-k}
/// (for c_j(Q^dual)).  s_0 = q_0 = 1; out-of-range symbols are zero.
class SpecialPolynomial {
 public:
  /// Monomial: sorted s-indices and sorted q-indices, each >= 1.
  struct Monomial {
    std::vector<int> s;
    std::vector<int> q;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    int weight() const;
  };

  SpecialPolynomial() = default;
  static SpecialPolynomial constant(const BigInt& c);
  static SpecialPolynomial s(const GrassmannContext& ctx, int i);
  static SpecialPolynomial q(const GrassmannContext& ctx, int j);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SpecialPolynomial& operator+=(const SpecialPolynomial& other);
  SpecialPolynomial& operator-=(const SpecialPolynomial& other);
  friend SpecialPolynomial operator+(SpecialPolynomial a, const SpecialPolynomial& b) { return a += b; }
  friend SpecialPolynomial operator-(SpecialPolynomial a, const SpecialPolynomial& b) { return a -= b; }
  friend SpecialPolynomial operator*(const SpecialPolynomial& a, const SpecialPolynomial& b);
  friend SpecialPolynomial operator*(SpecialPolynomial a, const BigInt& c);

  /// Drops monomials whose weight (sum of indices) exceeds `max_weight`.
  SpecialPolynomial truncated(int max_weight) const;

  std::string to_string() const;

 private:
  void add(const Monomial& m, const BigInt& c);
  std::map<Monomial, BigInt> terms_;
};

/// Dense polynomial in x_1..x_k with exact coefficients, keyed by exponent vector.
using SymmetricPoly = std::map<std::vector<int>, BigInt>;

/// Substitutes s_i -> e_i(x), q_j -> (-1)^j h_j(x), truncating to the
/// monomials that can still reach the integration target.
SymmetricPoly to_symmetric(const GrassmannContext& ctx, const SpecialPolynomial& p);
/// Product of two substituted polynomials with the same truncation.
SymmetricPoly multiply(const GrassmannContext& ctx, const SymmetricPoly& a, const SymmetricPoly& b);
/// Coefficient of x_1^{n-1} ... x_k^{n-k} in f times the Vandermonde product.
BigInt extract_integral(const GrassmannContext& ctx, const SymmetricPoly& f);

/// Grassmannian integral of the class represented by `p`.
BigInt oracle_integral(const GrassmannContext& ctx, const SpecialPolynomial& p);

/// Sigma formulas rewritten as special polynomials (divisions by c(S^dual)
/// become multiplication by sum_j q_j).
SpecialPolynomial sigma_polynomial(const GrassmannContext& ctx, const BlockShape& shape);
/// c(S^dual) = s_0 + ... + s_k.
SpecialPolynomial total_s_polynomial(const GrassmannContext& ctx);

/// d_{n,r,S} for the given blocks, by the oracle route only.
BigInt oracle_degree(int n, int r, std::span<const BlockShape> shapes);

}  // namespace rankproj::oracle
