#include "rankproj/chow.hpp"

#include <algorithm>
#include <map>
#include <span>

#include "rankproj/errors.hpp"
#include "rankproj/kernels.hpp"

namespace rankproj {

ChowElement::ChowElement(const GrassmannContext& ctx)
    : basis_(SchubertBasis::get(ctx)), coeffs_(basis_->size()) {}

ChowElement ChowElement::one(const GrassmannContext& ctx) {
  ChowElement out(ctx);
  out.coeffs_.front() = 1;
  return out;
}

ChowElement ChowElement::schubert(const GrassmannContext& ctx, const Partition& lambda,
                                  const BigInt& coefficient) {
  ChowElement out(ctx);
  out.add_term(lambda, coefficient);
  return out;
}

BigInt ChowElement::coefficient(const Partition& lambda) const {
  auto idx = basis_->index_of(lambda);
  return idx ? coeffs_[*idx] : BigInt(0);
}

std::vector<std::pair<Partition, BigInt>> ChowElement::terms() const {
  std::vector<std::pair<Partition, BigInt>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) out.emplace_back(basis_->partition(i), coeffs_[i]);
  }
  return out;
}

std::size_t ChowElement::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) != 0; }));
}

bool ChowElement::is_zero() const { return term_count() == 0; }

int ChowElement::top_degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (sgn(coeffs_[i]) != 0) return basis_->partition(i).size();
  }
  return -1;
}

ChowElement ChowElement::homogeneous_part(int degree) const {
  ChowElement out(context());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (basis_->partition(i).size() == degree) out.coeffs_[i] = coeffs_[i];
  }
  return out;
}

void ChowElement::add_term(const Partition& lambda, const BigInt& coefficient) {
  if (auto idx = basis_->index_of(lambda)) coeffs_[*idx] += coefficient;
}

void ChowElement::require_same(const ChowElement& other) const {
  if (!(context() == other.context())) {
    throw ContextMismatch("Chow elements live in G(" + std::to_string(context().k) + "," +
                          std::to_string(context().n) + ") and G(" +
                          std::to_string(other.context().k) + "," +
                          std::to_string(other.context().n) + ")");
  }
}

ChowElement& ChowElement::operator+=(const ChowElement& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ChowElement& ChowElement::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

ChowElement ChowElement::operator-() const {
  ChowElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const ChowElement& a, const ChowElement& b) {
  return a.context() == b.context() && a.coeffs_ == b.coeffs_;
}

std::string ChowElement::to_string() const {
  std::string out;
  for (const auto& [lambda, c] : terms()) {
    BigInt mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_decimal(mag) + "·";
    out += "σ" + lambda.to_string();
  }
  return out.empty() ? "0" : out;
}

ChowElement special_s(const GrassmannContext& ctx, int i) {
  if (i < 0 || i > ctx.k) return ChowElement::zero(ctx);
  return ChowElement::schubert(ctx, Partition(std::vector<int>(static_cast<std::size_t>(i), 1)));
}

ChowElement special_q(const GrassmannContext& ctx, int j) {
  if (j < 0 || j > ctx.cols()) return ChowElement::zero(ctx);
  if (j == 0) return ChowElement::one(ctx);
  return ChowElement::schubert(ctx, Partition({j}), j % 2 == 0 ? 1 : -1);
}

ChowElement total_s(const GrassmannContext& ctx) {
  ChowElement out(ctx);
  for (int i = 0; i <= ctx.k; ++i) out += special_s(ctx, i);
  return out;
}

ChowElement total_q(const GrassmannContext& ctx) {
  ChowElement out(ctx);
  for (int j = 0; j <= ctx.cols(); ++j) out += special_q(ctx, j);
  return out;
}

std::vector<Partition> pieri_row(const GrassmannContext& ctx, const Partition& lambda, int j) {
  return horizontal_strips(ctx, lambda, j);
}

std::vector<Partition> pieri_col(const GrassmannContext& ctx, const Partition& lambda, int i) {
  return vertical_strips(ctx, lambda, i);
}

namespace {

ChowElement apply(const ChowElement& a, const StripTable& table) {
  ChowElement out(a.context());
  kernels::apply_strip(table, std::span<const BigInt>(a.raw()), std::span<BigInt>(out.raw()));
  return out;
}

// Multiplication by one special class given as a factor code (see SpecialMonomial).
ChowElement apply_code(const ChowElement& a, int code) {
  return code > 0 ? apply(a, a.basis().row_strip(code)) : apply(a, a.basis().col_strip(-code));
}

struct Term {
  std::vector<int> factors;
  BigInt coefficient;
};

// Evaluates sum_t coeff_t * partial * prod(factors_t[depth..]) for terms sharing
// the first `depth` factors; `terms` is sorted so such groups are contiguous.
void evaluate_trie(const ChowElement& partial, std::span<const Term> terms, std::size_t depth,
                   ChowElement& acc) {
  std::size_t i = 0;
  BigInt here = 0;
  while (i < terms.size() && terms[i].factors.size() == depth) here += terms[i++].coefficient;
  if (sgn(here) != 0) acc += partial * here;
  while (i < terms.size()) {
    int code = terms[i].factors[depth];
    std::size_t j = i;
    while (j < terms.size() && terms[j].factors[depth] == code) ++j;
    ChowElement next = apply_code(partial, code);
    if (!next.is_zero()) evaluate_trie(next, terms.subspan(i, j - i), depth + 1, acc);
    i = j;
  }
}

}  // namespace

ChowElement mul_special_s(const ChowElement& a, int i) {
  if (i < 0 || i > a.context().k) return ChowElement::zero(a.context());
  return apply(a, a.basis().col_strip(i));
}

ChowElement mul_special_q(const ChowElement& a, int j) {
  if (j < 0 || j > a.context().cols()) return ChowElement::zero(a.context());
  ChowElement out = apply(a, a.basis().row_strip(j));
  if (j % 2 != 0) out *= BigInt(-1);
  return out;
}

ChowElement mul_total_s(const ChowElement& a) {
  ChowElement out(a.context());
  for (int i = 0; i <= a.context().k; ++i) out += mul_special_s(a, i);
  return out;
}

std::vector<SpecialMonomial> jacobi_trudi(const GrassmannContext& ctx, const Partition& lambda,
                                          JacobiTrudiForm form) {
  if (lambda.empty()) return {SpecialMonomial{{}, 1}};
  bool complete = form == JacobiTrudiForm::Complete ||
                  (form == JacobiTrudiForm::Smaller && lambda.length() <= lambda.part(0));
  const Partition shape = complete ? lambda : lambda.conjugate();
  const int m = shape.length();
  const int bound = complete ? ctx.cols() : ctx.k;

  // Entry (row, col) of the determinant is the special class of index
  // shape_row - row + col; indices < 0 or above the rank bound vanish.
  std::map<std::vector<int>, long> acc;
  std::vector<int> factors;
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  auto recurse = [&](auto&& self, int row, int sign) -> void {
    if (row == m) {
      std::vector<int> key = factors;
      std::sort(key.begin(), key.end());
      acc[key] += sign;
      return;
    }
    // Sign of the permutation built so far changes by the number of used
    // columns to the right of the chosen one.
    int larger_used = 0;
    for (int col = m - 1; col >= 0; --col) {
      if (used[static_cast<std::size_t>(col)]) {
        ++larger_used;
        continue;
      }
      int index = shape.part(row) - row + col;
      if (index < 0 || index > bound) continue;
      used[static_cast<std::size_t>(col)] = true;
      if (index > 0) factors.push_back(complete ? index : -index);
      self(self, row + 1, larger_used % 2 == 0 ? sign : -sign);
      if (index > 0) factors.pop_back();
      used[static_cast<std::size_t>(col)] = false;
    }
  };
  recurse(recurse, 0, 1);

  std::vector<SpecialMonomial> out;
  for (auto& [key, c] : acc) {
    if (c != 0) out.push_back(SpecialMonomial{key, c});
  }
  return out;
}

ChowElement mul(const ChowElement& a, const ChowElement& b) {
  if (!(a.context() == b.context())) {
    throw ContextMismatch("cannot multiply elements of different Grassmannians");
  }
  const GrassmannContext& ctx = a.context();
  // Expand the factor with fewer terms.
  const bool swap = b.term_count() > a.term_count();
  const ChowElement& base = swap ? b : a;
  const ChowElement& expanded = swap ? a : b;

  std::map<std::vector<int>, BigInt> poly;
  for (const auto& [lambda, c] : expanded.terms()) {
    for (const auto& mono : jacobi_trudi(ctx, lambda)) {
      poly[mono.factors] += c * mono.coefficient;
    }
  }
  std::vector<Term> terms;
  for (auto& [key, c] : poly) {
    if (sgn(c) != 0) terms.push_back(Term{key, c});
  }
  ChowElement acc(ctx);
  evaluate_trie(base, std::span<const Term>(terms), 0, acc);
  return acc;
}

ChowElement power(const ChowElement& a, int exponent) {
  if (exponent < 0) throw PreconditionError("negative exponent");
  ChowElement out = ChowElement::one(a.context());
  ChowElement sq = a;
  while (exponent > 0) {
    if (exponent & 1) out = mul(out, sq);
    exponent >>= 1;
    if (exponent > 0) sq = mul(sq, sq);
  }
  return out;
}

ChowElement total_s_power(const GrassmannContext& ctx, int exponent) {
  if (exponent < 0) throw PreconditionError("negative exponent");
  ChowElement out = ChowElement::one(ctx);
  for (int e = 0; e < exponent; ++e) out = mul_total_s(out);
  return out;
}

ChowElement inverse(const ChowElement& a) {
  const BigInt unit = a.constant_term();
  if (unit != 1 && unit != -1) {
    throw NotInvertible("constant term " + to_decimal(unit) + " is not a unit");
  }
  // a = u(1 + x) with x nilpotent; a^{-1} = u * sum_m (-x)^m.
  ChowElement x = a * unit;
  x.raw().front() = 0;
  ChowElement minus_x = -x;
  ChowElement sum = ChowElement::one(a.context());
  ChowElement term = ChowElement::one(a.context());
  for (int m = 1; m <= a.context().dimension(); ++m) {
    term = mul(term, minus_x);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * unit;
}

BigInt integral(const ChowElement& a) { return a.raw()[a.basis().top_index()]; }

BigInt deg_sigma(int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("deg_sigma requires 0 <= k <= n");
  BigRational product = 1;
  for (int i = 0; i < k; ++i) {
    product *= BigRational(binomial(n + i, k), binomial(k + i, k));
  }
  product.canonicalize();
  if (product.get_den() != 1) throw ConsistencyError("rank-locus degree is not an integer");
  return product.get_num();
}

}  // namespace rankproj
