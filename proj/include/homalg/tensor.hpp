#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "homalg/matrix.hpp"

namespace homalg {

/// Sparse rank-3 tensor of structure constants: e_i o e_j = sum_k value * e_k.
class StructureTensor {
 public:
  struct Entry {
    std::size_t i, j, k;
    Rational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  struct Term {
    std::size_t k;
    Rational value;
  };

  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : dim_(dim), offsets_(dim * dim + 1, 0) {}

  /// Entries with equal (i, j, k) are summed; zeros are dropped.
  StructureTensor(std::size_t dim, std::vector<Entry> entries) : dim_(dim) {
    for (const auto& e : entries)
      if (e.i >= dim || e.j >= dim || e.k >= dim)
        throw Error(ErrorKind::DimensionMismatch, "tensor index out of range for dim " + std::to_string(dim));
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k); });
    std::vector<Entry> merged;
    for (auto& e : entries) {
      if (!merged.empty() && merged.back().i == e.i && merged.back().j == e.j && merged.back().k == e.k)
        merged.back().value += e.value;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return e.value.is_zero(); });
    build_(std::move(merged));
  }

  /// Tensor whose (i, j) slice is f(i, j).
  static StructureTensor from_products(std::size_t dim, const std::function<Vec(std::size_t, std::size_t)>& f) {
    std::vector<Entry> es;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Vec v = f(i, j);
        for (std::size_t k = 0; k < dim; ++k)
          if (!v[k].is_zero()) es.push_back({i, j, k, v[k]});
      }
    return StructureTensor(dim, std::move(es));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::span<const Term> slice(std::size_t i, std::size_t j) const {
    std::size_t s = i * dim_ + j;
    return {terms_.data() + offsets_[s], offsets_[s + 1] - offsets_[s]};
  }

  Vec basis_product(std::size_t i, std::size_t j) const {
    Vec v(dim_);
    for (const auto& t : slice(i, j)) v[t.k] = t.value;
    return v;
  }

  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& t : slice(i, j))
      if (t.k == k) return t.value;
    return Rational();
  }

  /// Bilinear evaluation, skipping zero coordinates.
  Vec eval(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw Error(ErrorKind::DimensionMismatch, "product_eval on vectors of length " + std::to_string(x.size()) +
                                                    ", " + std::to_string(y.size()) + " with dim " +
                                                    std::to_string(dim_));
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        auto sl = slice(i, j);
        if (sl.empty()) continue;
        Rational c = x[i] * y[j];
        for (const auto& t : sl) out[t.k].add_product(c, t.value);
      }
    }
    return out;
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  void build_(std::vector<Entry> sorted) {
    entries_ = std::move(sorted);
    offsets_.assign(dim_ * dim_ + 1, 0);
    terms_.clear();
    terms_.reserve(entries_.size());
    for (const auto& e : entries_) {
      ++offsets_[e.i * dim_ + e.j + 1];
      terms_.push_back({e.k, e.value});
    }
    for (std::size_t s = 0; s < dim_ * dim_; ++s) offsets_[s + 1] += offsets_[s];
  }

  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<Term> terms_;
};

inline Vec product_eval(const StructureTensor& p, const Vec& x, const Vec& y) { return p.eval(x, y); }

/// x o' y = f(x o y)
inline StructureTensor push_product(const StructureTensor& p, const Matrix& f) {
  if (!f.is_square() || f.rows() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "push_product");
  return StructureTensor::from_products(p.dim(), [&](std::size_t i, std::size_t j) {
    return f.apply(p.basis_product(i, j));
  });
}

/// x o' y = g(x) o g(y)
inline StructureTensor conjugate_product(const StructureTensor& p, const Matrix& g) {
  if (!g.is_square() || g.rows() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "conjugate_product");
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < p.dim(); ++i) cols.push_back(g.column(i));
  return StructureTensor::from_products(p.dim(), [&](std::size_t i, std::size_t j) {
    return p.eval(cols[i], cols[j]);
  });
}

/// a*p + b*q, entrywise.
inline StructureTensor combine(const Rational& a, const StructureTensor& p, const Rational& b,
                               const StructureTensor& q) {
  if (p.dim() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "tensor combination");
  std::vector<StructureTensor::Entry> es;
  for (const auto& e : p.entries()) es.push_back({e.i, e.j, e.k, a * e.value});
  for (const auto& e : q.entries()) es.push_back({e.i, e.j, e.k, b * e.value});
  return StructureTensor(p.dim(), std::move(es));
}

inline StructureTensor operator+(const StructureTensor& p, const StructureTensor& q) { return combine(1, p, 1, q); }
inline StructureTensor operator-(const StructureTensor& p, const StructureTensor& q) { return combine(1, p, -1, q); }

/// x o^op y = y o x
inline StructureTensor opposite(const StructureTensor& p) {
  std::vector<StructureTensor::Entry> es;
  for (const auto& e : p.entries()) es.push_back({e.j, e.i, e.k, e.value});
  return StructureTensor(p.dim(), std::move(es));
}

}  // namespace homalg
