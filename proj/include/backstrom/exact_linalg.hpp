#pragma once

// Exact dense linear algebra over F_p or Q.
//
// Matrices are templated on a field policy (PrimeField or RationalField).
// The policy owns the arithmetic; the matrix is a plain row-major value.
// GroundField selects the policy at run time and visit_field() dispatches
// generic code onto it.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "backstrom/errors.hpp"

namespace backstrom {

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using value_type = std::uint32_t;

  /// Throws InvalidInput unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const;

  value_type add(value_type a, value_type b) const;
  value_type sub(value_type a, value_type b) const;
  value_type mul(value_type a, value_type b) const;
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return value_type(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const;
  bool is_zero(const value_type& a) const { return a == 0; }

  bool operator==(const RationalField&) const = default;
};

using GroundField = std::variant<PrimeField, RationalField>;

std::string describe(const GroundField& field);

template <class Fn>
decltype(auto) visit_field(const GroundField& field, Fn&& fn) {
  return std::visit(std::forward<Fn>(fn), field);
}

template <class Field>
class ExactMatrix {
 public:
  using Scalar = typename Field::value_type;

  ExactMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        entries_(rows * cols, field_.zero()) {}

  static ExactMatrix identity(const Field& field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static ExactMatrix from_rows(
      const Field& field,
      std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ExactMatrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw InvalidInput("ragged matrix rows");
      std::size_t j = 0;
      for (std::int64_t v : row) m(i, j++) = field.from_int(v);
      ++i;
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool operator==(const ExactMatrix&) const = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

namespace detail {

// Reduced row echelon form in place; returns the pivot columns.
template <class Field>
std::vector<std::size_t> rref(ExactMatrix<Field>& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && f.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    }
    const auto scale = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class Field>
std::size_t rank(const ExactMatrix<Field>& m) {
  ExactMatrix<Field> work = m;
  return detail::rref(work).size();
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
template <class Field>
std::vector<std::vector<typename Field::value_type>> kernel_basis(
    const ExactMatrix<Field>& m) {
  const Field& f = m.field();
  ExactMatrix<Field> work = m;
  const auto pivots = detail::rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<typename Field::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f.neg(work(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Field>
ExactMatrix<Field> block_diag_embed(const Field& field,
                                    std::span<const ExactMatrix<Field>> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == field)) throw InvalidInput("block_diag_embed: field mismatch");
    rows += b.rows();
    cols += b.cols();
  }
  ExactMatrix<Field> out(field, rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

}  // namespace backstrom
