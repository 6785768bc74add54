#include "sl2idem/echelon.hpp"

#include <stdexcept>

namespace sl2idem {

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  std::map<std::uint64_t, Word> acc;
  for (const auto& [i, x] : v) {
    const Word r = x % p_;
    if (r != 0) acc[i] = r;
  }
  auto it = acc.begin();
  while (it != acc.end()) {
    const std::uint64_t key = it->first;
    const auto row = rows_.find(key);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Word factor = p_ - it->second;
    for (const auto& [j, y] : row->second) {
      Word& slot = acc[j];
      slot = static_cast<Word>((slot + static_cast<std::uint64_t>(factor) * y) % p_);
      if (slot == 0) acc.erase(j);
    }
    it = acc.upper_bound(key);
  }
  return SparseVec(acc.begin(), acc.end());
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const Word inv = inv_mod(r.front().second, p_);
  for (auto& entry : r) entry.second = mul_mod(entry.second, inv, p_);
  rows_.emplace(r.front().first, std::move(r));
  return true;
}

FpMatrix FpMatrix::identity(std::size_t n, Word p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix out(rows_, cols_, p_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = (data_[k] + o.data_[k]) % p_;
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix out(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Word a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) = static_cast<Word>((out.at(i, j) + static_cast<std::uint64_t>(a) * o.at(k, j)) % p_);
    }
  return out;
}

std::size_t FpMatrix::rank() const {
  std::vector<Word> m = data_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && m[piv * cols_ + col] == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m[piv * cols_ + j], m[rank * cols_ + j]);
    const Word inv = inv_mod(m[rank * cols_ + col], p_);
    for (std::size_t j = 0; j < cols_; ++j) m[rank * cols_ + j] = mul_mod(m[rank * cols_ + j], inv, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank || m[i * cols_ + col] == 0) continue;
      const Word f = p_ - m[i * cols_ + col];
      for (std::size_t j = 0; j < cols_; ++j)
        m[i * cols_ + j] = static_cast<Word>((m[i * cols_ + j] + static_cast<std::uint64_t>(f) * m[rank * cols_ + j]) % p_);
    }
    ++rank;
  }
  return rank;
}

bool FpMatrix::is_zero() const {
  for (Word x : data_)
    if (x != 0) return false;
  return true;
}

}  // namespace sl2idem
