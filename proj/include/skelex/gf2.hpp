#pragma once

// Linear algebra over GF(2).
//
// Colors live in Hom(G, Z2) = GF(2)^(n+1). A ColorVector stores coordinate i
// (the coefficient of x_i) in bit i, and renders x_0 leftmost, so "0110" is
// x_1 + x_2. Every vector carries its ambient length and mixing lengths is an
// error.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skelex {

inline constexpr int kMaxAmbient = 64;

class ColorVector {
 public:
  ColorVector() = default;
  explicit ColorVector(int length, std::uint64_t bits = 0);

  static ColorVector unit(int length, int index);
  /// Parses a '0'/'1' string, leftmost character is the x_0 coefficient.
  static ColorVector parse(std::string_view text);

  int size() const noexcept { return length_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool operator[](int index) const;
  bool is_zero() const noexcept { return bits_ == 0; }
  int weight() const noexcept;
  /// Index of the first nonzero coordinate, -1 for the zero vector.
  int leading() const noexcept;

  std::string str() const;

  ColorVector& operator+=(const ColorVector& other);
  friend ColorVector operator+(ColorVector a, const ColorVector& b) { return a += b; }

  /// Pairing x(t) between a functional and a group element in the dual basis.
  bool pair(const ColorVector& other) const;

  friend bool operator==(const ColorVector&, const ColorVector&) = default;
  /// Lexicographic on the rendered string; shorter vectors first.
  friend std::strong_ordering operator<=>(const ColorVector& a, const ColorVector& b);

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// A linear subspace of GF(2)^ambient held in reduced row echelon form with
/// ascending pivot columns. Equal subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(int ambient = 0);

  static Subspace span(int ambient, std::span<const ColorVector> vectors);
  static Subspace span(int ambient, std::initializer_list<ColorVector> vectors) {
    return span(ambient, std::span<const ColorVector>(vectors.begin(), vectors.size()));
  }

  int ambient() const noexcept { return ambient_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<ColorVector>& basis() const noexcept { return basis_; }

  /// Adds `v` to the span. Returns false when `v` was already inside.
  bool insert(ColorVector v);
  ColorVector reduce(ColorVector v) const;
  bool contains(const ColorVector& v) const;
  bool is_subspace_of(const Subspace& other) const;

  /// Vectors t with x(t) = 0 for every x in this subspace.
  Subspace annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_;
  std::vector<ColorVector> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// a == b modulo m, i.e. a + b is 0 or m. Throws for m == 0.
bool congruent_mod(const ColorVector& a, const ColorVector& b, const ColorVector& m);

/// Dense GF(2) matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  /// Entries must be 0 or 1; ragged input throws.
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);

  BitMatrix transpose() const;
  bool is_zero() const noexcept;
  std::size_t rank() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Rank over GF(2) of a matrix given as rows of 0/1 entries.
std::size_t rank_gf2(const std::vector<std::vector<int>>& matrix);

}  // namespace skelex
