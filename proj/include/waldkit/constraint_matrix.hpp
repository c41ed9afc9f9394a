#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace waldkit {

/// Dense row-major 0/1 matrix.
class ConstraintMatrix {
public:
  ConstraintMatrix() = default;
  ConstraintMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  ConstraintMatrix(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, bool value) { data_[i * cols_ + j] = value ? 1 : 0; }
  std::span<const std::uint8_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  ConstraintMatrix transposed() const;
  /// (J - M), J the all-ones matrix of the same shape.
  ConstraintMatrix complemented() const;

  std::string to_string() const;

  friend bool operator==(const ConstraintMatrix&, const ConstraintMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

inline ConstraintMatrix::ConstraintMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (int v : r) data_.push_back(v ? 1 : 0);
  }
}

inline ConstraintMatrix ConstraintMatrix::transposed() const {
  ConstraintMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

inline ConstraintMatrix ConstraintMatrix::complemented() const {
  ConstraintMatrix c(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) c.set(i, j, at(i, j) == 0);
  return c;
}

inline std::string ConstraintMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += at(i, j) ? '1' : '0';
    }
    out += "]\n";
  }
  return out;
}

} // namespace waldkit
