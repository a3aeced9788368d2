#include "rankproj/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "rankproj/errors.hpp"

namespace rankproj::oracle {

int SpecialPolynomial::Monomial::weight() const {
  return std::accumulate(s.begin(), s.end(), 0) + std::accumulate(q.begin(), q.end(), 0);
}

void SpecialPolynomial::add(const Monomial& m, const BigInt& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SpecialPolynomial SpecialPolynomial::constant(const BigInt& c) {
  SpecialPolynomial p;
  p.add(Monomial{}, c);
  return p;
}

SpecialPolynomial SpecialPolynomial::s(const GrassmannContext& ctx, int i) {
  if (i < 0 || i > ctx.k) return {};
  if (i == 0) return constant(1);
  SpecialPolynomial p;
  p.add(Monomial{{i}, {}}, 1);
  return p;
}

SpecialPolynomial SpecialPolynomial::q(const GrassmannContext& ctx, int j) {
  if (j < 0 || j > ctx.n - ctx.k) return {};
  if (j == 0) return constant(1);
  SpecialPolynomial p;
  p.add(Monomial{{}, {j}}, 1);
  return p;
}

SpecialPolynomial& SpecialPolynomial::operator+=(const SpecialPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

SpecialPolynomial& SpecialPolynomial::operator-=(const SpecialPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

SpecialPolynomial operator*(const SpecialPolynomial& a, const SpecialPolynomial& b) {
  SpecialPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      SpecialPolynomial::Monomial m;
      std::merge(ma.s.begin(), ma.s.end(), mb.s.begin(), mb.s.end(), std::back_inserter(m.s));
      std::merge(ma.q.begin(), ma.q.end(), mb.q.begin(), mb.q.end(), std::back_inserter(m.q));
      out.add(m, ca * cb);
    }
  }
  return out;
}

SpecialPolynomial operator*(SpecialPolynomial a, const BigInt& c) {
  if (sgn(c) == 0) return {};
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

SpecialPolynomial SpecialPolynomial::truncated(int max_weight) const {
  SpecialPolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.weight() <= max_weight) out.add(m, c);
  }
  return out;
}

std::string SpecialPolynomial::to_string() const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += to_decimal(c);
    for (int i : m.s) out += "*s" + std::to_string(i);
    for (int j : m.q) out += "*q" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

namespace {

// Keep only monomials that can still contribute to x^{(n-1, ..., n-k)}
// after multiplication by the Vandermonde product and further factors.
void keep(const GrassmannContext& ctx, SymmetricPoly& p, const std::vector<int>& e,
          const BigInt& c) {
  if (sgn(c) == 0) return;
  int total = 0;
  for (int x : e) {
    if (x > ctx.n - 1) return;
    total += x;
  }
  if (total > ctx.dimension()) return;
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

// All exponent vectors of length k with entries in {0,1} summing to i.
SymmetricPoly elementary(const GrassmannContext& ctx, int i) {
  SymmetricPoly p;
  const int k = ctx.k;
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (left == 0) {
      keep(ctx, p, e, 1);
      return;
    }
    if (pos == k || k - pos < left) return;
    e[static_cast<std::size_t>(pos)] = 1;
    self(self, pos + 1, left - 1);
    e[static_cast<std::size_t>(pos)] = 0;
    self(self, pos + 1, left);
  };
  rec(rec, 0, i);
  return p;
}

// All exponent vectors of length k summing to j, each with coefficient sign.
SymmetricPoly complete(const GrassmannContext& ctx, int j, int sign) {
  SymmetricPoly p;
  const int k = ctx.k;
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      keep(ctx, p, e, sign);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, left - a);
    }
  };
  if (k == 0) {
    if (j == 0) keep(ctx, p, e, sign);
    return p;
  }
  rec(rec, 0, j);
  return p;
}

SymmetricPoly unit(const GrassmannContext& ctx) {
  SymmetricPoly p;
  p.emplace(std::vector<int>(static_cast<std::size_t>(ctx.k), 0), 1);
  return p;
}

}  // namespace

SymmetricPoly multiply(const GrassmannContext& ctx, const SymmetricPoly& a,
                       const SymmetricPoly& b) {
  SymmetricPoly out;
  std::vector<int> e(static_cast<std::size_t>(ctx.k));
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      for (std::size_t t = 0; t < e.size(); ++t) e[t] = ea[t] + eb[t];
      keep(ctx, out, e, ca * cb);
    }
  }
  return out;
}

SymmetricPoly to_symmetric(const GrassmannContext& ctx, const SpecialPolynomial& p) {
  std::map<int, SymmetricPoly> e_cache, h_cache;
  auto e_of = [&](int i) -> const SymmetricPoly& {
    auto it = e_cache.find(i);
    if (it == e_cache.end()) it = e_cache.emplace(i, elementary(ctx, i)).first;
    return it->second;
  };
  auto h_of = [&](int j) -> const SymmetricPoly& {
    auto it = h_cache.find(j);
    if (it == h_cache.end()) it = h_cache.emplace(j, complete(ctx, j, j % 2 ? -1 : 1)).first;
    return it->second;
  };
  SymmetricPoly out;
  for (const auto& [m, c] : p.terms()) {
    SymmetricPoly f = unit(ctx);
    for (int i : m.s) f = multiply(ctx, f, e_of(i));
    for (int j : m.q) f = multiply(ctx, f, h_of(j));
    for (const auto& [e, v] : f) keep(ctx, out, e, v * c);
  }
  return out;
}

BigInt extract_integral(const GrassmannContext& ctx, const SymmetricPoly& f) {
  const int k = ctx.k;
  // Vandermonde prod_{i<j} (x_i - x_j) = sum_perm sign(perm) x^{perm(delta)},
  // delta = (k-1, ..., 0); target exponent is (n-1, ..., n-k).
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
      }
    }
    std::vector<int> need(static_cast<std::size_t>(k));
    bool ok = true;
    for (int a = 0; a < k; ++a) {
      int delta = k - 1 - perm[static_cast<std::size_t>(a)];
      need[static_cast<std::size_t>(a)] = (ctx.n - 1 - a) - delta;
      if (need[static_cast<std::size_t>(a)] < 0) ok = false;
    }
    if (!ok) continue;
    auto it = f.find(need);
    if (it == f.end()) continue;
    if (inversions % 2) total -= it->second;
    else total += it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

BigInt oracle_integral(const GrassmannContext& ctx, const SpecialPolynomial& p) {
  if (ctx.k == 0) {
    auto it = p.terms().find(SpecialPolynomial::Monomial{});
    return it == p.terms().end() ? BigInt(0) : it->second;
  }
  return extract_integral(ctx, to_symmetric(ctx, p));
}

SpecialPolynomial total_s_polynomial(const GrassmannContext& ctx) {
  SpecialPolynomial c;
  for (int i = 0; i <= ctx.k; ++i) c += SpecialPolynomial::s(ctx, i);
  return c;
}

SpecialPolynomial sigma_polynomial(const GrassmannContext& ctx, const BlockShape& shape) {
  using P = SpecialPolynomial;
  const int k = ctx.k;
  const int r = ctx.n - ctx.k;
  const int top = ctx.dimension();
  auto s = [&](int i) { return P::s(ctx, i); };
  auto q = [&](int j) { return P::q(ctx, j); };
  P c_q;  // c(Q^dual) = 1 / c(S^dual)
  for (int j = 0; j <= r; ++j) c_q += q(j);

  switch (shape.kind()) {
    case BlockShape::Kind::Row: {
      P sum;
      for (int i = k - shape.length() + 1; i <= k; ++i) sum += s(i);
      return (c_q * sum).truncated(top);
    }
    case BlockShape::Kind::Col: {
      const int m = shape.length();
      P sum;
      for (int i = 0; i <= r; ++i) sum += q(i) * binomial(m - 1 + k + i, m - 1);
      return (sum * s(k)).truncated(top);
    }
    case BlockShape::Kind::Corner: {
      P num1 = s(k) * BigInt(k) + s(k - 1);
      P num2 = s(k) * s(k);
      for (int i = 0; i <= k; ++i) num2 -= s(i) * s(k) * BigInt(i);
      P c_q2 = (c_q * c_q).truncated(top);
      return (num1 * c_q + num2 * c_q2).truncated(top);
    }
    case BlockShape::Kind::Square: {
      P out;
      P ck2 = s(k) * s(k);
      for (int i = 0; i <= r; ++i) {
        for (int j = 0; j <= r; ++j) {
          out -= q(i) * q(j) * ck2 * binomial(2 * k + i + j + 3, 3);
        }
      }
      for (int j = 0; j <= r; ++j) {
        out += q(j) * (s(k) * BigInt(2) + s(k - 1) * BigInt(k + j));
      }
      for (int i = 0; i <= k; ++i) {
        for (int u = 0; u <= r; ++u) {
          for (int v = 0; v <= r; ++v) {
            for (int w = 0; w <= r; ++w) {
              BigInt coeff = 2 * binomial(i, 3) - 2 * BigInt(k - u + v + w + 1) * binomial(i, 2) +
                             BigInt(k - u + v + w + 2) * BigInt(2 * k + v + w + 1) * binomial(i, 1);
              if (sgn(coeff) == 0) continue;
              out += q(u) * q(v) * q(w) * s(k - i) * ck2 * coeff;
            }
          }
        }
      }
      return out.truncated(top);
    }
  }
  throw UnsupportedShape("oracle: unsupported block shape " + shape.to_string());
}

BigInt oracle_degree(int n, int r, std::span<const BlockShape> shapes) {
  if (n < 1 || r < 1 || r > n) throw PreconditionError("oracle_degree: r must lie in [1, n]");
  const auto ctx = GrassmannContext::for_rank(n, r);
  if (ctx.k == 0) {
    // Point ring: every polynomial reduces to its constant term.
    BigInt product = 1;
    for (const auto& shape : shapes) {
      auto sigma = sigma_polynomial(ctx, shape);
      auto it = sigma.terms().find(SpecialPolynomial::Monomial{});
      product *= 1 - (it == sigma.terms().end() ? BigInt(0) : it->second);
    }
    return product;
  }
  SymmetricPoly acc = to_symmetric(ctx, total_s_polynomial(ctx));
  SymmetricPoly c = acc;
  for (int e = 1; e < n; ++e) acc = multiply(ctx, acc, c);
  for (const auto& shape : shapes) {
    auto factor = SpecialPolynomial::constant(1) - sigma_polynomial(ctx, shape);
    acc = multiply(ctx, acc, to_symmetric(ctx, factor));
  }
  return extract_integral(ctx, acc);
}

}  // namespace rankproj::oracle
