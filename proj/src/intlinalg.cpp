#include "eschorb/intlinalg.hpp"

#include <algorithm>
#include <sstream>

#include "eschorb/error.hpp"

namespace eschorb {

Integer gcd_list(const std::vector<Integer>& xs) {
  Integer g = 0;
  for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Bezout ext_gcd(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::OutOfRange, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& rs,
                               const std::vector<std::size_t>& cs) const {
  IntMatrix s(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
  return s;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::OutOfRange, "matrix shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Integer determinant(const IntMatrix& m0) {
  if (m0.rows() != m0.cols()) throw Error(ErrorKind::OutOfRange, "determinant of non-square matrix");
  const std::size_t n = m0.rows();
  if (n == 0) return 1;
  IntMatrix m = m0;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

AbelianGroup AbelianGroup::free(std::size_t rank) {
  AbelianGroup g;
  g.free_rank_ = rank;
  return g;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t free_rank,
                                              const std::vector<Integer>& orders) {
  AbelianGroup g;
  g.free_rank_ = free_rank;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (o == 0)
      ++g.free_rank_;
    else if (abs(o) > 1)
      finite.push_back(abs(o));
  }
  if (finite.empty()) return g;
  IntMatrix d(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i) d(i, i) = finite[i];
  for (const auto& x : smith_diagonal(d))
    if (x > 1) g.torsion_.push_back(x);
  return g;
}

Integer AbelianGroup::torsion_order() const {
  Integer o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ == 1) {
    os << "Z";
    first = false;
  } else if (free_rank_ > 1) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

std::string AbelianGroup::label() const {
  if (is_trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z^" << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    os << (first ? "" : "x") << "Z" << d;
    first = false;
  }
  return os.str();
}

namespace {

struct SnfWork {
  IntMatrix a, u, v;
  bool track;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (track) u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (track) v.swap_cols(i, j);
  }
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    a.add_row(i, j, k);
    if (track) u.add_row(i, j, k);
  }
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    a.add_col(i, j, k);
    if (track) v.add_col(i, j, k);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    if (track) u.negate_row(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  const std::size_t R = m.rows(), C = m.cols(), n = std::min(R, C);
  SnfWork w{m, with_transforms ? IntMatrix::identity(R) : IntMatrix(),
            with_transforms ? IntMatrix::identity(C) : IntMatrix(), with_transforms};
  IntMatrix& a = w.a;

  for (std::size_t t = 0; t < n; ++t) {
    bool zero_rest = false;
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (a(i, j) != 0 && (pi == R || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == R) {
        zero_rest = true;
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == R) break;
      w.add_row(t, bad, 1);
    }
    if (zero_rest) break;
    if (a(t, t) < 0) w.negate_row(t);
  }

  SmithForm out;
  out.diagonal.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.diagonal.push_back(a(t, t));
  if (with_transforms) {
    out.left = std::move(w.u);
    out.right = std::move(w.v);
  }
  return out;
}

std::vector<Integer> smith_diagonal(const IntMatrix& m) {
  return smith_normal_form(m, false).diagonal;
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Integer minor_gcd(const IntMatrix& m, std::size_t k) {
  if (m.rows() > 10 || m.cols() > 10)
    throw Error(ErrorKind::OutOfRange, "minor_gcd limited to matrices up to 10x10");
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw Error(ErrorKind::OutOfRange, "minor size out of range");
  Integer g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  for (std::size_t i = 0; i < k; ++i) rs[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cs[i] = i;
    do {
      Integer d = determinant(m.submatrix(rs, cs));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (next_combination(cs, m.cols()));
  } while (next_combination(rs, m.rows()));
  return g;
}

AbelianGroup cokernel(const IntMatrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return AbelianGroup::free(m.rows());
  std::size_t rank = 0;
  std::vector<Integer> orders;
  for (const auto& d : smith_diagonal(m)) {
    if (d == 0) continue;
    ++rank;
    orders.push_back(d);
  }
  return AbelianGroup::from_cyclic_orders(m.rows() - rank, orders);
}

}  // namespace eschorb
