// Copyright 2026 The Latroid Authors
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

#include "latroid/scalar.hpp"

#include "latroid/errors.hpp"

namespace latroid {
namespace {

void same_width(const Scalar& a, const Scalar& b) {
  if (a.u() != b.u()) throw InputError("scalar widths differ");
}

}  // namespace

Scalar::Scalar(std::initializer_list<std::int64_t> ints) {
  for (auto x : ints) c_.emplace_back(x);
}

Scalar Scalar::from_ints(const std::vector<std::int64_t>& xs) {
  std::vector<Rational> c;
  for (auto x : xs) c.emplace_back(x);
  return Scalar(std::move(c));
}

bool Scalar::is_zero() const {
  for (const auto& x : c_) {
    if (x.numerator() != 0) return false;
  }
  return true;
}

Rational Scalar::value() const {
  if (c_.size() != 1) throw HypothesisError("scalar has more than one coordinate");
  return c_[0];
}

Rational Scalar::norm1() const {
  Rational s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  same_width(*this, o);
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] + o.c_[i];
  return Scalar(std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const {
  same_width(*this, o);
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] - o.c_[i];
  return Scalar(std::move(c));
}

Scalar Scalar::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
  return Scalar(std::move(c));
}

Scalar Scalar::operator*(std::int64_t k) const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * k;
  return Scalar(std::move(c));
}

bool leq(const Scalar& a, const Scalar& b) {
  same_width(a, b);
  for (int i = 0; i < a.u(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string Scalar::to_string() const {
  if (c_.size() == 1) return latroid::to_string(c_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += latroid::to_string(c_[i]);
  }
  return s + ")";
}

}  // namespace latroid
