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

#include "hamca/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace hamca {

namespace detail {

void throw_dimension(const char* op, Eigen::Index a, Eigen::Index b) {
  throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                       " vs " + std::to_string(b) + ")");
}

}  // namespace detail

namespace {

std::size_t bits(const BigInt& v) {
  if (v.is_zero()) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw ParseError("gaussian integer", "cannot parse '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits);
}

}  // namespace

std::size_t bit_length(const GaussInt& z) { return std::max(bits(z.real()), bits(z.imag())); }

std::size_t bit_length(const GaussVector& v) {
  std::size_t out = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) out = std::max(out, bit_length(v[i]));
  return out;
}

std::string to_string(const GaussInt& z) {
  const BigInt& re = z.real();
  const BigInt& im = z.imag();
  if (im.is_zero()) return re.str();
  std::string imag_part;
  if (im == 1) {
    imag_part = "i";
  } else if (im == -1) {
    imag_part = "-i";
  } else {
    imag_part = im.str() + "i";
  }
  if (re.is_zero()) return imag_part;
  if (imag_part[0] != '-') imag_part.insert(imag_part.begin(), '+');
  return re.str() + imag_part;
}

std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << to_string(z); }

GaussInt parse_gauss_int(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("gaussian integer", "empty literal");
  if (s.back() != 'i') return GaussInt(parse_integer(s, text));

  // Imaginary part present: split at the last sign that is not leading.
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  BigInt re = re_text.empty() ? BigInt(0) : parse_integer(re_text, text);
  return {std::move(re), parse_integer(im_text, text)};
}

GaussVector combine(const IntVector& x, const IntVector& p) {
  if (x.size() != p.size()) detail::throw_dimension("combine", x.size(), p.size());
  GaussVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = GaussInt(x[i], p[i]);
  return out;
}

IntVector real_part(const GaussVector& v) {
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].real();
  return out;
}

IntVector imag_part(const GaussVector& v) {
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i].imag();
  return out;
}

GaussMatrix to_gauss(const IntMatrix& m) {
  return m.unaryExpr([](const BigInt& v) { return GaussInt(v); });
}

ComplexVector to_complex(const GaussVector& v) {
  ComplexVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[i] = {v[i].real().convert_to<double>(), v[i].imag().convert_to<double>()};
  }
  return out;
}

ComplexMatrix to_complex(const GaussMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out(r, c) = {m(r, c).real().convert_to<double>(), m(r, c).imag().convert_to<double>()};
    }
  }
  return out;
}

}  // namespace hamca
