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

#pragma once

// Latroid scalars: tuples of exact rationals under the product order.

#include <boost/rational.hpp>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace latroid {

using Rational = boost::rational<std::int64_t>;

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::vector<Rational> coords) : c_(std::move(coords)) {}
  Scalar(std::initializer_list<std::int64_t> ints);
  static Scalar zero(int u) { return Scalar(std::vector<Rational>(static_cast<std::size_t>(u))); }
  static Scalar of(std::int64_t x) { return Scalar({x}); }
  static Scalar from_ints(const std::vector<std::int64_t>& xs);

  int u() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  // The single coordinate of a u = 1 scalar.
  Rational value() const;
  Rational norm1() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(std::int64_t k) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// Product order.
bool leq(const Scalar& a, const Scalar& b);
inline bool less(const Scalar& a, const Scalar& b) { return leq(a, b) && !(a == b); }
std::string to_string(const Rational& r);

}  // namespace latroid
