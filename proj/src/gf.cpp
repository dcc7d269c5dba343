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

#include "qgraph/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgraph {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t q = 2; q * q <= v; ++q) {
    if (v % q == 0) return false;
  }
  return true;
}

namespace poly {
namespace {

int mod(int v, int p) {
  int r = v % p;
  return r < 0 ? r + p : r;
}

// Remainder of num modulo the monic divisor, both low to high.
std::vector<int> remainder(int p, std::vector<int> num, std::span<const int> div) {
  const std::size_t dd = div.size() - 1;
  for (std::size_t k = num.size(); k-- > dd;) {
    const int c = num[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      num[k - dd + i] = mod(num[k - dd + i] - c * div[i], p);
    }
  }
  num.resize(std::min(num.size(), dd));
  return num;
}

}  // namespace

std::vector<int> from_index(int p, int n, std::uint64_t index) {
  std::vector<int> out(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<int>(index % p);
    index /= p;
  }
  if (index != 0) throw std::invalid_argument("polynomial index out of range");
  out[n] = 1;
  return out;
}

std::uint64_t to_index(int p, std::span<const int> monic) {
  std::uint64_t idx = 0;
  for (std::size_t i = monic.size() - 1; i-- > 0;) idx = idx * p + monic[i];
  return idx;
}

bool is_irreducible(int p, std::span<const int> monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  if (n < 1) return false;
  std::vector<int> num(monic.begin(), monic.end());
  for (int deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const auto div = from_index(p, deg, idx);
      const auto rem = remainder(p, num, div);
      if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> irreducible_polynomials(int p, int n) {
  std::vector<std::vector<int>> out;
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto f = from_index(p, n, idx);
    if (is_irreducible(p, f)) out.push_back(std::move(f));
  }
  return out;
}

std::string to_string(std::span<const int> coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || coeffs[k] != 1) os << coeffs[k];
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace poly

Field Field::make(int p, int n, std::optional<std::vector<int>> modulus) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("field characteristic must be prime, got " +
                                std::to_string(p));
  }
  if (n < 1) throw std::invalid_argument("field degree must be >= 1");
  std::uint64_t d = 1;
  for (int i = 0; i < n; ++i) {
    d *= static_cast<std::uint64_t>(p);
    if (d > kMaxFieldOrder) {
      throw std::invalid_argument("field order exceeds 2^16");
    }
  }

  std::vector<int> f;
  if (modulus) {
    f = *modulus;
    if (static_cast<int>(f.size()) != n + 1 || f.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree n");
    }
    for (int c : f) {
      if (c < 0 || c >= p) {
        throw std::invalid_argument("modulus coefficient outside [0, p)");
      }
    }
    if (!poly::is_irreducible(p, f)) {
      throw std::invalid_argument("modulus " + poly::to_string(f) +
                                  " is reducible over Z_" + std::to_string(p));
    }
  } else {
    std::uint64_t count = d;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      auto cand = poly::from_index(p, n, idx);
      if (poly::is_irreducible(p, cand)) {
        f = std::move(cand);
        break;
      }
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->n = n;
  impl->d = static_cast<std::uint32_t>(d);
  impl->poly = std::move(f);
  impl->pow_p.resize(n + 1);
  impl->pow_p[0] = 1;
  for (int i = 1; i <= n; ++i) impl->pow_p[i] = impl->pow_p[i - 1] * p;

  Field field{impl};
  if (d <= kTableThreshold) {
    const auto dd = impl->d;
    impl->add_table.resize(dd * dd);
    impl->mul_table.resize(dd * dd);
    impl->neg_table.resize(dd);
    impl->inv_table.assign(dd, 0);
    for (std::uint32_t a = 0; a < dd; ++a) {
      for (std::uint32_t b = 0; b < dd; ++b) {
        const auto s = field.add_direct(Element{a}, Element{b}).index;
        const auto m = field.mul_direct(Element{a}, Element{b}).index;
        impl->add_table[a * dd + b] = s;
        impl->mul_table[a * dd + b] = m;
        if (s == 0) impl->neg_table[a] = b;
        if (m == 1) impl->inv_table[a] = b;
      }
    }
  }
  return field;
}

Field Field::from_descriptor(int p, int n, std::uint64_t poly_index) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("field characteristic must be prime, got " +
                                std::to_string(p));
  }
  if (n < 1) throw std::invalid_argument("field degree must be >= 1");
  return make(p, n, poly::from_index(p, n, poly_index));
}

Field Field::parse_descriptor(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  long long p = 0, n = 0;
  if (!(is >> p >> n)) {
    throw std::invalid_argument("field descriptor must be 'p n [poly_index]'");
  }
  long long idx = -1;
  if (!(is >> idx)) idx = -1;
  std::string rest;
  if (is >> rest) throw std::invalid_argument("trailing text in field descriptor");
  if (idx < 0) return make(static_cast<int>(p), static_cast<int>(n));
  return from_descriptor(static_cast<int>(p), static_cast<int>(n),
                         static_cast<std::uint64_t>(idx));
}

std::uint64_t Field::poly_index() const {
  return poly::to_index(impl_->p, impl_->poly);
}

std::string Field::descriptor() const {
  return std::to_string(p()) + " " + std::to_string(n()) + " " +
         std::to_string(poly_index());
}

void Field::check(Element a) const {
  if (a.index >= impl_->d) {
    throw std::out_of_range("element index " + std::to_string(a.index) +
                            " not in GF(" + std::to_string(impl_->d) + ")");
  }
}

Element Field::element(std::uint32_t index) const {
  Element e{index};
  check(e);
  return e;
}

std::vector<int> Field::coeffs(Element a) const {
  check(a);
  std::vector<int> c(impl_->n);
  std::uint32_t e = a.index;
  for (int i = 0; i < impl_->n; ++i) {
    c[i] = static_cast<int>(e % impl_->p);
    e /= impl_->p;
  }
  return c;
}

Element Field::from_coeffs(std::span<const int> c) const {
  if (static_cast<int>(c.size()) != impl_->n) {
    throw std::invalid_argument("coefficient vector has wrong length");
  }
  std::uint32_t e = 0;
  for (int i = impl_->n; i-- > 0;) {
    if (c[i] < 0 || c[i] >= impl_->p) {
      throw std::invalid_argument("coefficient outside [0, p)");
    }
    e = e * impl_->p + static_cast<std::uint32_t>(c[i]);
  }
  return Element{e};
}

Element Field::add_direct(Element a, Element b) const {
  check(a);
  check(b);
  const auto& im = *impl_;
  std::uint32_t out = 0;
  for (int i = 0; i < im.n; ++i) {
    const auto ai = (a.index / im.pow_p[i]) % im.p;
    const auto bi = (b.index / im.pow_p[i]) % im.p;
    out += ((ai + bi) % im.p) * im.pow_p[i];
  }
  return Element{out};
}

Element Field::mul_direct(Element a, Element b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  const int p = impl_->p;
  const int n = impl_->n;
  std::vector<int> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  }
  const auto& f = impl_->poly;
  for (int k = 2 * n - 2; k >= n; --k) {
    const int c = prod[k];
    if (c == 0) continue;
    for (int i = 0; i <= n; ++i) {
      prod[k - n + i] = ((prod[k - n + i] - c * f[i]) % p + p) % p;
    }
  }
  prod.resize(n);
  return from_coeffs(prod);
}

Element Field::add(Element a, Element b) const {
  if (has_tables()) {
    check(a);
    check(b);
    return Element{impl_->add_table[a.index * impl_->d + b.index]};
  }
  return add_direct(a, b);
}

Element Field::neg(Element a) const {
  check(a);
  if (has_tables()) return Element{impl_->neg_table[a.index]};
  auto c = coeffs(a);
  for (auto& x : c) x = (impl_->p - x) % impl_->p;
  return from_coeffs(c);
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
  if (has_tables()) {
    check(a);
    check(b);
    return Element{impl_->mul_table[a.index * impl_->d + b.index]};
  }
  return mul_direct(a, b);
}

Element Field::inv(Element a) const {
  check(a);
  if (a.is_zero()) throw std::domain_error("inverse of zero field element");
  if (has_tables()) return Element{impl_->inv_table[a.index]};
  // a^(d-2) by square-and-multiply.
  Element result = one();
  Element base = a;
  std::uint64_t e = impl_->d - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element Field::reverse(Element a) const {
  auto c = coeffs(a);
  std::reverse(c.begin(), c.end());
  return from_coeffs(c);
}

int Field::dot(Element a, Element b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  int s = 0;
  for (int i = 0; i < impl_->n; ++i) s = (s + ca[i] * cb[i]) % impl_->p;
  return s;
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out(impl_->d);
  for (std::uint32_t i = 0; i < impl_->d; ++i) out[i] = Element{i};
  return out;
}

}  // namespace qgraph
