// Copyright 2026 The qgraph Authors
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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qgraph {

/// An element of GF(p^n), identified by its canonical index
/// e = sum_i a_i p^i where a = sum_i a_i alpha^i.
struct Element {
  std::uint32_t index = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t e) : index(e) {}

  constexpr bool is_zero() const { return index == 0; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Largest field order supported.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;
/// Fields up to this order carry precomputed add/mul tables.
inline constexpr std::uint32_t kTableThreshold = 256;

bool is_prime(std::uint64_t v);

/// The finite field GF(p^n) realised as Z_p[x] / (poly).
///
/// Immutable after construction and cheap to copy; copies share the
/// arithmetic tables.
class Field {
 public:
  /// Builds GF(p^n). `poly` lists the coefficients of a monic degree-n
  /// polynomial from x^0 up to x^n. When omitted the monic irreducible
  /// polynomial with the smallest `poly_index` is used.
  ///
  /// Throws std::invalid_argument for a non-prime p, n == 0, an order above
  /// kMaxFieldOrder, or a polynomial that is not monic of degree n or is
  /// reducible.
  static Field make(int p, int n,
                    std::optional<std::vector<int>> poly = std::nullopt);

  /// Builds the field from the textual descriptor triple `p n poly_index`.
  static Field from_descriptor(int p, int n, std::uint64_t poly_index);

  /// Parses "p n poly_index" (whitespace or comma separated).
  static Field parse_descriptor(const std::string& text);

  int p() const { return impl_->p; }
  int n() const { return impl_->n; }
  std::uint32_t order() const { return impl_->d; }

  /// Monic modulus, coefficients low to high, length n + 1.
  const std::vector<int>& poly() const { return impl_->poly; }
  /// Non-leading modulus coefficients read as a base-p integer.
  std::uint64_t poly_index() const;
  /// "p n poly_index".
  std::string descriptor() const;

  bool has_tables() const { return !impl_->add_table.empty(); }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element element(std::uint32_t index) const;

  std::vector<int> coeffs(Element a) const;
  Element from_coeffs(std::span<const int> coeffs) const;

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  /// Throws std::domain_error for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// Coefficient reversal: coefficient k moves to position n - 1 - k.
  Element reverse(Element a) const;
  /// sum_i a_i b_i mod p over the coefficient vectors.
  int dot(Element a, Element b) const;

  /// Table-free arithmetic, used to build and to cross-check the tables.
  Element add_direct(Element a, Element b) const;
  Element mul_direct(Element a, Element b) const;

  std::vector<Element> elements() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->poly == b.impl_->poly);
  }

 private:
  struct Impl {
    int p = 0;
    int n = 0;
    std::uint32_t d = 0;
    std::vector<int> poly;
    std::vector<std::uint32_t> pow_p;
    std::vector<std::uint32_t> add_table;
    std::vector<std::uint32_t> mul_table;
    std::vector<std::uint32_t> neg_table;
    std::vector<std::uint32_t> inv_table;
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check(Element a) const;

  std::shared_ptr<const Impl> impl_;
};

/// Polynomial helpers over Z_p, coefficients low to high.
namespace poly {

/// True when the monic polynomial has no monic factor of degree 1..deg/2.
bool is_irreducible(int p, std::span<const int> monic);

/// All monic irreducible polynomials of degree n over Z_p, ordered by
/// poly_index.
std::vector<std::vector<int>> irreducible_polynomials(int p, int n);

/// Monic degree-n polynomial whose non-leading coefficients are the base-p
/// digits of `index`.
std::vector<int> from_index(int p, int n, std::uint64_t index);
std::uint64_t to_index(int p, std::span<const int> monic);

std::string to_string(std::span<const int> coeffs);

}  // namespace poly

}  // namespace qgraph
