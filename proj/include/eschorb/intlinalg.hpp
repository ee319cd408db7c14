#ifndef ESCHORB_INTLINALG_HPP
#define ESCHORB_INTLINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eschorb {

using Integer = mpz_class;

Integer gcd_list(const std::vector<Integer>& xs);

// Returns (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g.
struct Bezout {
  Integer g, x, y;
};
Bezout ext_gcd(const Integer& a, const Integer& b);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transpose() const;
  IntMatrix submatrix(const std::vector<std::size_t>& rs,
                      const std::vector<std::size_t>& cs) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, const Integer& k);
  // col i += k * col j
  void add_col(std::size_t i, std::size_t j, const Integer& k);
  void negate_row(std::size_t i);

  bool operator==(const IntMatrix& o) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk in invariant
// factor form: 1 < d1 | d2 | ... | dk.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  // Canonicalizes an arbitrary list of cyclic orders; 0 stands for Z and
  // +-1 for the trivial group.
  static AbelianGroup from_cyclic_orders(std::size_t free_rank,
                                         const std::vector<Integer>& orders);
  static AbelianGroup trivial() { return AbelianGroup(); }
  static AbelianGroup free(std::size_t rank);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  // Order of the torsion part (1 if torsion-free).
  Integer torsion_order() const;

  // "0", "Z", "Z^2 + Z/3", "Z/2 + Z/8"
  std::string to_string() const;
  // Compact form for graph labels: "1", "Z3", "Z2xZ8", "Z^1xZ2"
  std::string label() const;

  bool operator==(const AbelianGroup& o) const = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

struct SmithForm {
  std::vector<Integer> diagonal;  // min(rows, cols) entries, d_i | d_{i+1}, >= 0
  IntMatrix left;                 // U, rows x rows, unimodular
  IntMatrix right;                // V, cols x cols, unimodular
};

// U * m * V = diag. Transforms are accumulated only when requested.
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = true);
std::vector<Integer> smith_diagonal(const IntMatrix& m);

// gcd of all k x k minors; used as an independent check of the SNF.
// Refuses matrices with more than 10 rows or columns.
Integer minor_gcd(const IntMatrix& m, std::size_t k);

// Z^rows / (column span of m)
AbelianGroup cokernel(const IntMatrix& m);

}  // namespace eschorb

#endif
