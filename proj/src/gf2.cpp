#include "skelex/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "skelex/error.hpp"

namespace skelex {

namespace {

std::uint64_t mask_for(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

void require_same_length(const ColorVector& a, const ColorVector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("color vectors of length " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
}

}  // namespace

ColorVector::ColorVector(int length, std::uint64_t bits) : bits_(bits), length_(length) {
  if (length < 0 || length > kMaxAmbient) {
    throw DimensionMismatch("color length " + std::to_string(length) + " outside 0.." +
                            std::to_string(kMaxAmbient));
  }
  if ((bits & ~mask_for(length)) != 0) {
    throw DimensionMismatch("color bits exceed length " + std::to_string(length));
  }
}

ColorVector ColorVector::unit(int length, int index) {
  if (index < 0 || index >= length) {
    throw DimensionMismatch("unit index " + std::to_string(index) + " outside length " +
                            std::to_string(length));
  }
  return ColorVector(length, std::uint64_t{1} << index);
}

ColorVector ColorVector::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxAmbient)) {
    throw DimensionMismatch("color string longer than " + std::to_string(kMaxAmbient));
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("color string '" + std::string(text) +
                                  "' contains a character other than 0/1");
    }
  }
  return ColorVector(static_cast<int>(text.size()), bits);
}

bool ColorVector::operator[](int index) const {
  if (index < 0 || index >= length_) {
    throw DimensionMismatch("coordinate " + std::to_string(index) + " outside length " +
                            std::to_string(length_));
  }
  return (bits_ >> index) & 1U;
}

int ColorVector::weight() const noexcept { return std::popcount(bits_); }

int ColorVector::leading() const noexcept {
  return bits_ == 0 ? -1 : std::countr_zero(bits_);
}

std::string ColorVector::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

ColorVector& ColorVector::operator+=(const ColorVector& other) {
  require_same_length(*this, other);
  bits_ ^= other.bits_;
  return *this;
}

bool ColorVector::pair(const ColorVector& other) const {
  require_same_length(*this, other);
  return std::popcount(bits_ & other.bits_) & 1;
}

std::strong_ordering operator<=>(const ColorVector& a, const ColorVector& b) {
  if (a.length_ != b.length_) return a.length_ <=> b.length_;
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // The first differing coordinate decides; the vector holding a 1 there is larger.
  const int i = std::countr_zero(diff);
  return ((a.bits_ >> i) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(int ambient) : ambient_(ambient) {
  if (ambient < 0 || ambient > kMaxAmbient) {
    throw DimensionMismatch("ambient dimension " + std::to_string(ambient) + " outside 0.." +
                            std::to_string(kMaxAmbient));
  }
}

Subspace Subspace::span(int ambient, std::span<const ColorVector> vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

ColorVector Subspace::reduce(ColorVector v) const {
  if (v.size() != ambient_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " against subspace of ambient " + std::to_string(ambient_));
  }
  for (const auto& row : basis_) {
    if (v[row.leading()]) v += row;
  }
  return v;
}

bool Subspace::insert(ColorVector v) {
  v = reduce(v);
  if (v.is_zero()) return false;
  const int pivot = v.leading();
  for (auto& row : basis_) {
    if (row[pivot]) row += v;
  }
  auto pos = std::find_if(basis_.begin(), basis_.end(),
                          [pivot](const ColorVector& r) { return r.leading() > pivot; });
  basis_.insert(pos, v);
  return true;
}

bool Subspace::contains(const ColorVector& v) const { return reduce(v).is_zero(); }

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw DimensionMismatch("subspaces of ambient " + std::to_string(ambient_) + " and " +
                            std::to_string(other.ambient_));
  }
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const ColorVector& v) { return other.contains(v); });
}

Subspace Subspace::annihilator() const {
  std::uint64_t pivots = 0;
  for (const auto& row : basis_) pivots |= std::uint64_t{1} << row.leading();
  Subspace out(ambient_);
  for (int free = 0; free < ambient_; ++free) {
    if ((pivots >> free) & 1U) continue;
    ColorVector t = ColorVector::unit(ambient_, free);
    for (const auto& row : basis_) {
      if (row[free]) t += ColorVector::unit(ambient_, row.leading());
    }
    out.insert(t);
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) {
    throw DimensionMismatch("subspaces of ambient " + std::to_string(a.ambient()) + " and " +
                            std::to_string(b.ambient()));
  }
  Subspace out = a;
  for (const auto& v : b.basis()) out.insert(v);
  return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // (A ∩ B)^⊥ = A^⊥ + B^⊥
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

bool congruent_mod(const ColorVector& a, const ColorVector& b, const ColorVector& m) {
  require_same_length(a, b);
  require_same_length(a, m);
  if (m.is_zero()) throw std::invalid_argument("congruence modulo the zero vector");
  const ColorVector d = a + b;
  return d.is_zero() || d == m;
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("ragged matrix: row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " entries, expected " +
                              std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const int e = rows[r][c];
      if (e != 0 && e != 1) {
        throw std::invalid_argument("matrix entry " + std::to_string(e) + " is not 0 or 1");
      }
      if (e) m.set(r, c);
    }
  }
  return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix index");
  return (row(r)[c / 64] >> (c % 64)) & 1U;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix index");
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (value) {
    row(r)[c / 64] |= bit;
  } else {
    row(r)[c / 64] &= ~bit;
  }
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r);
    }
  }
  return t;
}

bool BitMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::uint64_t> m = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m[pivot * words_ + w] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * words_),
                       m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words_),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * words_));
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m[r * words_ + w] & bit) {
        for (std::size_t k = w; k < words_; ++k) m[r * words_ + k] ^= m[rank * words_ + k];
      }
    }
    ++rank;
  }
  return rank;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("matrix product of " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " and " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  }
  BitMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::uint64_t* out = c.row(i);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a.get(i, k)) continue;
      const std::uint64_t* in = b.row(k);
      for (std::size_t w = 0; w < c.words_; ++w) out[w] ^= in[w];
    }
  }
  return c;
}

std::size_t rank_gf2(const std::vector<std::vector<int>>& matrix) {
  return BitMatrix::from_rows(matrix).rank();
}

}  // namespace skelex
