// Dense row-major matrices over a ring value type, plus vector helpers.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ring.hpp"

namespace equibrauer {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<T> row(std::size_t r) const { return Vec<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  Vec<T> col(std::size_t c) const {
    Vec<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  void set_col(std::size_t c, const Vec<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  void set_row(std::size_t r, const Vec<T>& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }

  const std::vector<T>& data() const { return data_; }

  bool operator==(const Mat& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class R>
using RMat = Mat<typename R::value_type>;
template <class R>
using RVec = Vec<typename R::value_type>;

template <class R>
RMat<R> zero_mat(const R& k, std::size_t rows, std::size_t cols) {
  return RMat<R>(rows, cols, k.zero());
}

template <class R>
RMat<R> identity_mat(const R& k, std::size_t n) {
  RMat<R> m(n, n, k.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

template <class R>
RVec<R> zero_vec(const R& k, std::size_t n) {
  return RVec<R>(n, k.zero());
}

template <class R>
RVec<R> unit_vec(const R& k, std::size_t n, std::size_t i) {
  RVec<R> v(n, k.zero());
  v[i] = k.one();
  return v;
}

template <class R>
RMat<R> mat_mul(const R& k, const RMat<R>& a, const RMat<R>& b) {
  if (a.cols() != b.rows()) throw Error("mat_mul: shape mismatch");
  RMat<R> c(a.rows(), b.cols(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const auto& x = a(i, l);
      if (k.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!k.is_zero(b(l, j))) c(i, j) = k.add(c(i, j), k.mul(x, b(l, j)));
    }
  return c;
}

template <class R>
RVec<R> mat_vec(const R& k, const RMat<R>& a, const RVec<R>& v) {
  if (a.cols() != v.size()) throw Error("mat_vec: shape mismatch");
  RVec<R> out(a.rows(), k.zero());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (k.is_zero(v[j])) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!k.is_zero(a(i, j))) out[i] = k.add(out[i], k.mul(a(i, j), v[j]));
  }
  return out;
}

template <class R>
RMat<R> transpose(const RMat<R>& a) {
  RMat<R> t(a.cols(), a.rows(), typename R::value_type{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class R>
RMat<R> mat_add(const R& k, const RMat<R>& a, const RMat<R>& b) {
  RMat<R> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.add(a(i, j), b(i, j));
  return c;
}

template <class R>
RMat<R> mat_scale(const R& k, const typename R::value_type& s, const RMat<R>& a) {
  RMat<R> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.mul(s, a(i, j));
  return c;
}

/// Kronecker product; index (i*b.rows()+k, j*b.cols()+l).
template <class R>
RMat<R> kron(const R& k, const RMat<R>& a, const RMat<R>& b) {
  RMat<R> c(a.rows() * b.rows(), a.cols() * b.cols(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (k.is_zero(a(i, j))) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          c(i * b.rows() + r, j * b.cols() + s) = k.mul(a(i, j), b(r, s));
    }
  return c;
}

template <class R>
RVec<R> vec_add(const R& k, const RVec<R>& a, const RVec<R>& b) {
  RVec<R> c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = k.add(a[i], b[i]);
  return c;
}

template <class R>
RVec<R> vec_sub(const R& k, const RVec<R>& a, const RVec<R>& b) {
  RVec<R> c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = k.sub(a[i], b[i]);
  return c;
}

template <class R>
RVec<R> vec_scale(const R& k, const typename R::value_type& s, const RVec<R>& a) {
  RVec<R> c = a;
  for (auto& x : c) x = k.mul(s, x);
  return c;
}

/// c += s * a
template <class R>
void vec_axpy(const R& k, RVec<R>& c, const typename R::value_type& s, const RVec<R>& a) {
  if (k.is_zero(s)) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!k.is_zero(a[i])) c[i] = k.add(c[i], k.mul(s, a[i]));
}

template <class R>
bool vec_is_zero(const R& k, const RVec<R>& a) {
  for (const auto& x : a)
    if (!k.is_zero(x)) return false;
  return true;
}

template <class R>
bool mat_is_zero(const R& k, const RMat<R>& a) {
  for (const auto& x : a.data())
    if (!k.is_zero(x)) return false;
  return true;
}

template <class R>
RMat<R> mat_from_cols(const R& k, std::size_t rows, const std::vector<RVec<R>>& cols) {
  RMat<R> m(rows, cols.size(), k.zero());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

template <class R>
RMat<R> mat_from_rows(const R& k, std::size_t cols, const std::vector<RVec<R>>& rows) {
  RMat<R> m(rows.size(), cols, k.zero());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

template <class R>
nlohmann::json mat_to_json(const R& k, const RMat<R>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(k.to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class R>
nlohmann::json vec_to_json(const R& k, const RVec<R>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(k.to_json(x));
  return out;
}

template <class R>
RMat<R> mat_from_json(const R& k, const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows ? j[0].size() : 0;
  RMat<R> m(rows, cols, k.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError("matrix rows must all have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = k.from_json(j[i][c]);
  }
  return m;
}

}  // namespace equibrauer
