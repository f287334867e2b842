// Copyright 2026 The hamca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact Gaussian-integer scalars and the dense Eigen types built on them.
//
// GaussInt is registered with Eigen as a complex scalar whose Real type is
// BigInt, so adjoint(), dot() and friends conjugate correctly. Every
// operation is exact; nothing here ever rounds.

#include <complex>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "hamca/errors.hpp"

// Eigen matrix types declare `const_iterator = void`. Boost 1.74 probes every
// argument of cpp_int's converting constructors for a byte-container
// const_iterator and hard-errors on void, which breaks overload resolution
// for any Eigen expression over cpp_int.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace hamca {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class GaussInt {
 public:
  GaussInt() = default;
  template <std::integral T>
  GaussInt(T re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussInt(BigInt re) : re_(std::move(re)) {}  // NOLINT
  GaussInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}

  const BigInt& real() const { return re_; }
  const BigInt& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussInt& operator+=(const GaussInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o) {
    BigInt re = re_ * o.re_ - im_ * o.im_;
    BigInt im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend GaussInt operator-(const GaussInt& a) { return {BigInt(-a.re_), BigInt(-a.im_)}; }

  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigInt re_;
  BigInt im_;
};

inline GaussInt conj(const GaussInt& z) { return {z.real(), BigInt(-z.imag())}; }
inline const BigInt& real(const GaussInt& z) { return z.real(); }
inline const BigInt& imag(const GaussInt& z) { return z.imag(); }
// |z|^2.
inline BigInt norm(const GaussInt& z) {
  return BigInt(z.real() * z.real() + z.imag() * z.imag());
}

// (-i) z without a full multiplication.
inline GaussInt times_minus_i(const GaussInt& z) { return {z.imag(), BigInt(-z.real())}; }
inline std::complex<double> times_minus_i(const std::complex<double>& z) {
  return {z.imag(), -z.real()};
}

// Largest bit length of the real or imaginary part.
std::size_t bit_length(const GaussInt& z);

std::string to_string(const GaussInt& z);
std::ostream& operator<<(std::ostream& os, const GaussInt& z);

// Accepts "3", "-i", "2-3i", "1+i", "4i", "+7" and whitespace around them.
GaussInt parse_gauss_int(std::string_view text);

}  // namespace hamca

namespace Eigen {

template <>
struct NumTraits<hamca::GaussInt> {
  using Real = hamca::BigInt;
  using NonInteger = hamca::GaussInt;
  using Literal = hamca::GaussInt;
  using Nested = hamca::GaussInt;
  enum {
    IsComplex = 1,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32,
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace hamca {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using GaussVector = Vector<GaussInt>;
using GaussMatrix = Matrix<GaussInt>;
using IntVector = Vector<BigInt>;
using IntMatrix = Matrix<BigInt>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

namespace detail {
[[noreturn]] void throw_dimension(const char* op, Eigen::Index a, Eigen::Index b);
}  // namespace detail

// <v, w> = sum_a conj(v_a) w_a, conjugate-linear in v.
template <typename Scalar>
Scalar inner_product(const Vector<Scalar>& v, const Vector<Scalar>& w) {
  if (v.size() != w.size()) detail::throw_dimension("inner_product", v.size(), w.size());
  return v.dot(w);
}

template <typename Scalar>
Vector<Scalar> mat_vec(const Matrix<Scalar>& m, const Vector<Scalar>& v) {
  if (m.cols() != v.size()) detail::throw_dimension("mat_vec", m.cols(), v.size());
  return m * v;
}

template <typename Scalar>
Matrix<Scalar> mat_mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows()) detail::throw_dimension("mat_mul", a.cols(), b.rows());
  return a * b;
}

template <typename Scalar>
bool is_hermitian(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) return false;
  return m == m.adjoint();
}

template <typename Derived>
auto times_minus_i(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  return v.unaryExpr([](const Scalar& z) { return times_minus_i(z); });
}

// Shape-checked entrywise equality.
template <typename A, typename B>
bool equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.cwiseEqual(b).all();
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  return v.unaryExpr([](const Scalar& z) { return z.is_zero(); }).all();
}

GaussVector combine(const IntVector& x, const IntVector& p);
IntVector real_part(const GaussVector& v);
IntVector imag_part(const GaussVector& v);

GaussMatrix to_gauss(const IntMatrix& m);
ComplexVector to_complex(const GaussVector& v);
ComplexMatrix to_complex(const GaussMatrix& m);

std::size_t bit_length(const GaussVector& v);

}  // namespace hamca
