#ifndef SL2IDEM_ECHELON_HPP
#define SL2IDEM_ECHELON_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sl2idem/modp.hpp"

namespace sl2idem {

/// Sparse vector over F_p: (index, value) pairs, indices strictly
/// increasing, values nonzero.
using SparseVec = std::vector<std::pair<std::uint64_t, Word>>;

/// Row-echelon basis of a subspace of F_p^N. Each row is monic at its pivot,
/// which is its lowest index; pivots are distinct.
class EchelonBasis {
 public:
  explicit EchelonBasis(Word p) : p_(p) {}

  Word modulus() const { return p_; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::uint64_t, SparseVec>& rows() const { return rows_; }

  // Remainder of v modulo the span; zero iff v lies in it.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Adds v to the span; true when the rank grew.
  bool insert(const SparseVec& v);

 private:
  Word p_;
  std::map<std::uint64_t, SparseVec> rows_;
};

/// Dense matrix over F_p, row-major.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, Word p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n, Word p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Word modulus() const { return p_; }
  Word& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Word at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator*(const FpMatrix& o) const;
  std::size_t rank() const;
  bool is_zero() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Word p_;
  std::vector<Word> data_;
};

}  // namespace sl2idem

#endif  // SL2IDEM_ECHELON_HPP
