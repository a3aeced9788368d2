#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rankproj/basis.hpp"
#include "rankproj/bigint.hpp"
#include "rankproj/partition.hpp"

namespace rankproj {

/// Exact element of the Chow ring of G(k, n), written in the Schubert basis.
///
/// Coefficients are stored densely against the shared SchubertBasis of the
/// context; the logical view (`terms()`) lists only nonzero coefficients, in
/// GradedLess order.  Classes outside the k x (n-k) box are zero in the ring
/// and are dropped by every operation.
class ChowElement {
 public:
  explicit ChowElement(const GrassmannContext& ctx);

  static ChowElement zero(const GrassmannContext& ctx) { return ChowElement(ctx); }
  static ChowElement one(const GrassmannContext& ctx);
  /// coefficient * sigma_lambda; zero if lambda does not fit in the box.
  static ChowElement schubert(const GrassmannContext& ctx, const Partition& lambda,
                              const BigInt& coefficient = 1);

  const GrassmannContext& context() const { return basis_->context(); }
  const SchubertBasis& basis() const { return *basis_; }

  BigInt coefficient(const Partition& lambda) const;
  BigInt constant_term() const { return coeffs_.front(); }
  /// Nonzero terms in canonical order.
  std::vector<std::pair<Partition, BigInt>> terms() const;
  std::size_t term_count() const;
  bool is_zero() const;
  /// Largest |lambda| with nonzero coefficient, -1 for the zero element.
  int top_degree() const;
  /// The graded piece of codimension `degree`.
  ChowElement homogeneous_part(int degree) const;

  /// Adds `coefficient * sigma_lambda`; ignored if lambda is outside the box.
  void add_term(const Partition& lambda, const BigInt& coefficient);

  ChowElement& operator+=(const ChowElement& other);
  ChowElement& operator-=(const ChowElement& other);
  ChowElement& operator*=(const BigInt& scalar);
  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator*(ChowElement a, const BigInt& s) { return a *= s; }
  friend ChowElement operator*(const BigInt& s, ChowElement a) { return a *= s; }
  ChowElement operator-() const;

  friend bool operator==(const ChowElement& a, const ChowElement& b);

  /// E.g. "3·σ[1,1]", "σ[1] - σ[2]", "0".
  std::string to_string() const;

  std::vector<BigInt>& raw() { return coeffs_; }
  const std::vector<BigInt>& raw() const { return coeffs_; }

 private:
  void require_same(const ChowElement& other) const;

  std::shared_ptr<const SchubertBasis> basis_;
  std::vector<BigInt> coeffs_;
};

/// c_i(S^dual) = sigma_(1^i); zero outside 0 <= i <= k.
ChowElement special_s(const GrassmannContext& ctx, int i);
/// c_j(Q^dual) = (-1)^j sigma_(j); zero outside 0 <= j <= n-k.
ChowElement special_q(const GrassmannContext& ctx, int j);
/// c(S^dual) = sum_{i=0..k} c_i(S^dual).
ChowElement total_s(const GrassmannContext& ctx);
/// c(Q^dual) = sum_{j=0..n-k} c_j(Q^dual).
ChowElement total_q(const GrassmannContext& ctx);

/// Pieri rule for sigma_(j): partitions mu with mu/lambda a horizontal j-strip.
std::vector<Partition> pieri_row(const GrassmannContext& ctx, const Partition& lambda, int j);
/// Dual Pieri rule for sigma_(1^i): mu/lambda a vertical i-strip.
std::vector<Partition> pieri_col(const GrassmannContext& ctx, const Partition& lambda, int i);

/// a * c_i(S^dual).
ChowElement mul_special_s(const ChowElement& a, int i);
/// a * c_j(Q^dual).
ChowElement mul_special_q(const ChowElement& a, int j);
/// a * c(S^dual).
ChowElement mul_total_s(const ChowElement& a);

/// Ring product.  One factor is rewritten through the Jacobi-Trudi
/// determinant as a polynomial in special classes and applied by Pieri strips.
ChowElement mul(const ChowElement& a, const ChowElement& b);
ChowElement power(const ChowElement& a, int exponent);
/// c(S^dual)^e, computed by repeated strips.
ChowElement total_s_power(const GrassmannContext& ctx, int exponent);

/// Multiplicative inverse via the finite Neumann series.
/// Throws NotInvertible unless the constant term is +1 or -1.
ChowElement inverse(const ChowElement& a);

/// Degree of the zero-cycle part: the coefficient of the full box.
BigInt integral(const ChowElement& a);

/// deg of the locus of n x n matrices of corank >= k:
/// prod_{i<k} C(n+i, k) / C(k+i, k).
BigInt deg_sigma(int n, int k);

/// One term of a Jacobi-Trudi expansion.  Factor codes: +j is sigma_(j)
/// (j >= 1) and -i is sigma_(1^i) (i >= 1); codes are sorted ascending.
struct SpecialMonomial {
  std::vector<int> factors;
  long coefficient = 0;
};

enum class JacobiTrudiForm {
  Smaller,     ///< whichever determinant has fewer rows
  Complete,    ///< det(h_{lambda_i - i + j}), size length(lambda)
  Elementary,  ///< det(e_{lambda'_i - i + j}), size lambda_1
};

/// sigma_lambda as a polynomial in special classes.  Factors that vanish in
/// G(k, n) are pruned, so the result is only valid inside that ring.
std::vector<SpecialMonomial> jacobi_trudi(const GrassmannContext& ctx, const Partition& lambda,
                                          JacobiTrudiForm form = JacobiTrudiForm::Smaller);

}  // namespace rankproj
