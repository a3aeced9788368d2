#include "rankproj/classes.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "rankproj/errors.hpp"

namespace rankproj {

BlockShape BlockShape::row(int length) {
  if (length < 1) throw PreconditionError("row block needs at least one entry");
  return BlockShape(Kind::Row, length);
}

BlockShape BlockShape::col(int length) {
  if (length < 1) throw PreconditionError("column block needs at least one entry");
  if (length == 1) return row(1);
  return BlockShape(Kind::Col, length);
}

int BlockShape::cell_count() const { return length_; }

int BlockShape::row_count() const {
  switch (kind_) {
    case Kind::Row: return 1;
    case Kind::Col: return length_;
    default: return 2;
  }
}

int BlockShape::col_count() const {
  switch (kind_) {
    case Kind::Row: return length_;
    case Kind::Col: return 1;
    default: return 2;
  }
}

BlockShape BlockShape::transposed() const {
  switch (kind_) {
    case Kind::Row: return col(length_);
    case Kind::Col: return row(length_);
    default: return *this;
  }
}

std::string BlockShape::to_string() const {
  switch (kind_) {
    case Kind::Row: return "Row(" + std::to_string(length_) + ")";
    case Kind::Col: return "Col(" + std::to_string(length_) + ")";
    case Kind::Corner: return "Corner";
    case Kind::Square: return "Square";
  }
  return "?";
}

GrassmannClass sigma_row(const GrassmannContext& ctx, int length) {
  if (length < 1) throw PreconditionError("sigma_row: length must be >= 1");
  const int k = ctx.k;
  ChowElement tail(ctx);
  for (int i = k - length + 1; i <= k; ++i) tail += special_s(ctx, i);
  return {mul(total_q(ctx), tail), "row(" + std::to_string(length) + ")"};
}

GrassmannClass sigma_col(const GrassmannContext& ctx, int length) {
  if (length < 1) throw PreconditionError("sigma_col: length must be >= 1");
  const int k = ctx.k;
  const int r = ctx.rank();
  ChowElement weighted(ctx);
  for (int i = 0; i <= r; ++i) {
    weighted += special_q(ctx, i) * binomial(length - 1 + k + i, length - 1);
  }
  return {mul_special_s(weighted, k), "col(" + std::to_string(length) + ")"};
}

GrassmannClass sigma_corner(const GrassmannContext& ctx) {
  const int k = ctx.k;
  const ChowElement ck = special_s(ctx, k);
  const ChowElement c_inv = inverse(total_s(ctx));
  const ChowElement c_inv2 = mul(c_inv, c_inv);

  ChowElement linear = ck * BigInt(k) + special_s(ctx, k - 1);
  ChowElement quadratic = mul_special_s(ck, k);
  for (int i = 0; i <= k; ++i) quadratic -= mul_special_s(ck, i) * BigInt(i);

  return {mul(linear, c_inv) + mul(quadratic, c_inv2), "corner"};
}

GrassmannClass sigma_square(const GrassmannContext& ctx) {
  const int k = ctx.k;
  const int r = ctx.rank();
  auto q = [&](int j) { return special_q(ctx, j); };

  // -sum_{i,j} C(2k+i+j+3, 3) c_i(Q^) c_j(Q^) c_k(S^)^2
  ChowElement first(ctx);
  for (int i = 0; i <= r; ++i) {
    ChowElement inner(ctx);
    for (int j = 0; j <= r; ++j) inner += q(j) * binomial(2 * k + i + j + 3, 3);
    first -= mul_special_q(inner, i);
  }
  first = mul_special_s(mul_special_s(first, k), k);

  // sum_j c_j(Q^) (2 c_k(S^) + (k+j) c_{k-1}(S^))
  ChowElement second(ctx);
  for (int j = 0; j <= r; ++j) {
    ChowElement inner = special_s(ctx, k) * BigInt(2) + special_s(ctx, k - 1) * BigInt(k + j);
    second += mul_special_q(inner, j);
  }

  // sum_{i,u,v,w} (2C(i,3) - 2(k-u+v+w+1)C(i,2) + (k-u+v+w+2)(2k+v+w+1)C(i,1))
  //   c_u(Q^) c_v(Q^) c_w(Q^) c_{k-i}(S^) c_k(S^)^2
  ChowElement third(ctx);
  for (int i = 0; i <= k; ++i) {
    ChowElement over_u(ctx);
    for (int u = 0; u <= r; ++u) {
      ChowElement over_v(ctx);
      for (int v = 0; v <= r; ++v) {
        ChowElement over_w(ctx);
        for (int w = 0; w <= r; ++w) {
          BigInt coeff = 2 * binomial(i, 3) - 2 * BigInt(k - u + v + w + 1) * binomial(i, 2) +
                         BigInt(k - u + v + w + 2) * BigInt(2 * k + v + w + 1) * binomial(i, 1);
          if (sgn(coeff) != 0) over_w += q(w) * coeff;
        }
        over_v += mul_special_q(over_w, v);
      }
      over_u += mul_special_q(over_v, u);
    }
    third += mul_special_s(over_u, k - i);
  }
  third = mul_special_s(mul_special_s(third, k), k);

  return {first + second + third, "square"};
}

GrassmannClass sigma_block(const GrassmannContext& ctx, const BlockShape& shape) {
  using Key = std::tuple<int, int, BlockShape>;
  static std::mutex mutex;
  static std::map<Key, GrassmannClass> cache;
  const Key key{ctx.k, ctx.n, shape};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  GrassmannClass value = [&] {
    switch (shape.kind()) {
      case BlockShape::Kind::Row: return sigma_row(ctx, shape.length());
      case BlockShape::Kind::Col: return sigma_col(ctx, shape.length());
      case BlockShape::Kind::Corner: return sigma_corner(ctx);
      case BlockShape::Kind::Square: return sigma_square(ctx);
    }
    throw UnsupportedShape("unsupported block shape " + shape.to_string());
  }();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

ChowElement one_minus_sigma_blocks(const GrassmannContext& ctx,
                                   std::span<const BlockShape> shapes) {
  ChowElement product = ChowElement::one(ctx);
  for (const auto& shape : shapes) {
    product = mul(product, ChowElement::one(ctx) - sigma_block(ctx, shape).value);
  }
  return product;
}

GrassmannClass grassmann_class(const GrassmannContext& ctx, std::span<const BlockShape> shapes) {
  std::string tag;
  for (const auto& s : shapes) tag += (tag.empty() ? "" : "+") + s.to_string();
  return {ChowElement::one(ctx) - one_minus_sigma_blocks(ctx, shapes), tag.empty() ? "empty" : tag};
}

}  // namespace rankproj
