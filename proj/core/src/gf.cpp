// Copyright 2026 The aslab Authors
// SPDX-License-Identifier: Apache-2.0

#include "aslab/gf.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "aslab/error.hpp"

namespace aslab::gf {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t order = 0;
  Digits modulus;
  // weights[i] = p^{k-1-i}: digit 0 is the most significant in the index.
  std::vector<std::uint32_t> weights;
};

}  // namespace detail

namespace {

constexpr std::size_t kMaxDegree = 16;
using DigitBuffer = std::array<std::uint32_t, 2 * kMaxDegree>;

// ---- dense polynomials over F_p (little-endian, trimmed) -------------------

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = linalg::inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint32_t factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + (p - factor) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly product(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      product[i + j] = (product[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_mod(std::move(product), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1U;
  }
  return poly_mod(std::move(result), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::string digits_to_string(const Digits& digits) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out << ',';
    out << digits[i];
  }
  out << ']';
  return out.str();
}

std::uint32_t parse_uint(std::string_view text, const char* what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument(std::string("cannot parse ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

Digits parse_digit_list(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw InvalidArgument("expected a bracketed digit list, got '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  Digits out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_uint(text.substr(0, comma), "digit"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::shared_ptr<const detail::FieldData> make_data(std::uint32_t p, Digits modulus) {
  if (p >= 256 || !is_prime(p)) throw InvalidArgument("characteristic must be a prime below 256");
  trim(modulus);
  if (modulus.size() < 2) throw InvalidArgument("modulus must have degree >= 1");
  if (modulus.back() != 1) throw InvalidArgument("modulus must be monic");
  const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
  if (k > kMaxDegree || ipow(p, k) > kMaxFieldOrder) {
    throw BoundExceeded("field order " + std::to_string(p) + "^" + std::to_string(k) +
                        " exceeds 65536");
  }
  for (auto d : modulus) {
    if (d >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  if (!is_irreducible(p, modulus)) throw InvalidArgument("modulus is not irreducible");
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->k = k;
  data->order = static_cast<std::uint32_t>(ipow(p, k));
  data->modulus = std::move(modulus);
  data->weights.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) data->weights[i] = static_cast<std::uint32_t>(ipow(p, k - 1 - i));
  return data;
}

void decode(const detail::FieldData& f, std::uint32_t index, std::uint32_t* out) {
  for (std::uint32_t i = f.k; i-- > 0;) {
    out[i] = index % f.p;
    index /= f.p;
  }
}

std::uint32_t encode(const detail::FieldData& f, const std::uint32_t* digits) {
  std::uint32_t index = 0;
  for (std::uint32_t i = 0; i < f.k; ++i) index = index * f.p + digits[i];
  return index;
}

}  // namespace

// ---- irreducibility ----------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const Digits& monic) {
  if (!is_prime(p)) throw InvalidArgument("characteristic must be prime");
  Poly f = monic;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // h = x^{p^d} mod f, built by repeated p-th powers.
  Poly h{0, 1};
  for (std::size_t d = 1; d <= k / 2; ++d) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // f divides x^{p^d} - x
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

Digits find_irreducible(std::uint32_t p, std::uint32_t k) {
  if (p >= 256 || !is_prime(p)) throw InvalidArgument("characteristic must be a prime below 256");
  if (k < 1) throw InvalidArgument("degree must be at least 1");
  if (k > kMaxDegree || ipow(p, k) > kMaxFieldOrder) {
    throw BoundExceeded("requested field exceeds 65536 elements");
  }
  const std::uint64_t count = ipow(p, k);
  Digits candidate(k + 1, 0);
  candidate[k] = 1;
  for (std::uint64_t index = 0; index < count; ++index) {
    std::uint64_t rest = index;
    for (std::uint32_t i = k; i-- > 0;) {
      candidate[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (k > 1 && candidate[0] == 0) continue;
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw LemmaViolation("no irreducible polynomial found");
}

// ---- FiniteField -------------------------------------------------------------

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k)
    : data_(make_data(p, find_irreducible(p, k))) {}

FiniteField::FiniteField(std::uint32_t p, Digits modulus) : data_(make_data(p, std::move(modulus))) {}

FiniteField::FiniteField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

FiniteField FiniteField::parse(std::string_view spec) {
  const auto slash = spec.find('/');
  const std::string_view head = spec.substr(0, slash);
  const auto caret = head.find('^');
  const std::uint32_t p = parse_uint(head.substr(0, caret), "characteristic");
  const std::uint32_t k = caret == std::string_view::npos ? 1 : parse_uint(head.substr(caret + 1), "degree");
  if (!is_prime(p)) throw InvalidArgument("characteristic must be prime: '" + std::string(spec) + "'");
  if (k < 1) throw InvalidArgument("degree must be at least 1");
  if (slash == std::string_view::npos) return FiniteField(p, k);
  Digits modulus = parse_digit_list(spec.substr(slash + 1));
  if (modulus.size() != k + 1) throw InvalidArgument("modulus length does not match degree");
  return FiniteField(p, std::move(modulus));
}

std::uint32_t FiniteField::characteristic() const { return data_->p; }
std::uint32_t FiniteField::degree() const { return data_->k; }
std::uint32_t FiniteField::order() const { return data_->order; }
const Digits& FiniteField::modulus() const { return data_->modulus; }

std::string FiniteField::spec() const {
  return std::to_string(data_->p) + "^" + std::to_string(data_->k) + "/" + digits_to_string(data_->modulus);
}

Element FiniteField::zero() const { return Element(*this, 0); }
Element FiniteField::one() const { return constant(1); }

Element FiniteField::generator() const {
  if (data_->k == 1) {
    // x reduces to -c0 in a prime field.
    return constant(data_->p - data_->modulus[0]);
  }
  Digits d(data_->k, 0);
  d[1] = 1;
  return from_digits(d);
}

Element FiniteField::constant(std::uint32_t c) const {
  Digits d(data_->k, 0);
  d[0] = c % data_->p;
  return from_digits(d);
}

Element FiniteField::element(std::uint32_t index) const {
  if (index >= data_->order) throw InvalidArgument("element index out of range");
  return Element(*this, index);
}

Element FiniteField::from_digits(const Digits& digits) const { return Element(*this, index_of(digits)); }

Element FiniteField::parse_element(std::string_view text) const { return from_digits(parse_digit_list(text)); }

std::vector<Element> FiniteField::elements() const {
  std::vector<Element> out;
  out.reserve(data_->order);
  for (std::uint32_t i = 0; i < data_->order; ++i) out.emplace_back(*this, i);
  return out;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  const auto& f = *data_;
  if (f.p == 2) return a ^ b;
  std::uint32_t result = 0;
  for (std::uint32_t i = 0; i < f.k; ++i) {
    const std::uint32_t w = f.weights[i];
    result += ((a / w % f.p + b / w % f.p) % f.p) * w;
  }
  return result;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  const auto& f = *data_;
  if (f.p == 2) return a;
  std::uint32_t result = 0;
  for (std::uint32_t i = 0; i < f.k; ++i) {
    const std::uint32_t w = f.weights[i];
    result += ((f.p - a / w % f.p) % f.p) * w;
  }
  return result;
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  const auto& f = *data_;
  if (a == 0 || b == 0) return 0;
  DigitBuffer da{};
  DigitBuffer db{};
  decode(f, a, da.data());
  decode(f, b, db.data());
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (std::uint32_t i = 0; i < f.k; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < f.k; ++j) prod[i + j] += da[i] * db[j];
  }
  // Reduce from the top with the monic modulus.
  for (std::uint32_t deg = 2 * f.k - 2; deg >= f.k; --deg) {
    const std::uint64_t c = prod[deg] % f.p;
    prod[deg] = 0;
    if (c == 0) continue;
    const std::uint32_t shift = deg - f.k;
    for (std::uint32_t i = 0; i < f.k; ++i) {
      prod[shift + i] += (f.p - c) * f.modulus[i];
    }
  }
  DigitBuffer out{};
  for (std::uint32_t i = 0; i < f.k; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % f.p);
  return encode(f, out.data());
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = data_->weights[0];  // the index of 1
  std::uint32_t base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  return pow(a, data_->order - 2);
}

Digits FiniteField::digits_of(std::uint32_t index) const {
  Digits d(data_->k);
  decode(*data_, index, d.data());
  return d;
}

std::uint32_t FiniteField::index_of(const Digits& digits) const {
  if (digits.size() != data_->k) {
    throw InvalidArgument("element has " + std::to_string(digits.size()) + " digits, field degree is " +
                          std::to_string(data_->k));
  }
  for (auto d : digits) {
    if (d >= data_->p) throw InvalidArgument("element digit out of range");
  }
  return encode(*data_, digits.data());
}

bool operator==(const FiniteField& a, const FiniteField& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->p == b.data_->p && a.data_->modulus == b.data_->modulus;
}

// ---- Element -----------------------------------------------------------------

Element::Element(FiniteField field, std::uint32_t index) : field_(std::move(field)), index_(index) {}

std::string Element::to_string() const { return digits_to_string(digits()); }

bool Element::is_one() const { return *this == field_.one(); }

const FiniteField& Element::same_field(const Element& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("operands live in different fields: " + field_.spec() + " vs " + other.field_.spec());
  }
  return field_;
}

Element Element::operator+(const Element& other) const {
  return Element(field_, same_field(other).add(index_, other.index_));
}

Element Element::operator-(const Element& other) const {
  return Element(field_, same_field(other).sub(index_, other.index_));
}

Element Element::operator*(const Element& other) const {
  return Element(field_, same_field(other).mul(index_, other.index_));
}

Element Element::operator/(const Element& other) const {
  const auto& f = same_field(other);
  return Element(field_, f.mul(index_, f.inv(other.index_)));
}

Element Element::operator-() const { return Element(field_, field_.neg(index_)); }

Element Element::inverse() const { return Element(field_, field_.inv(index_)); }

Element Element::pow(std::uint64_t e) const { return Element(field_, field_.pow(index_, e)); }

Element Element::frobenius(std::uint64_t i) const {
  std::uint32_t x = index_;
  const std::uint64_t steps = i % field_.degree();
  for (std::uint64_t s = 0; s < steps; ++s) x = field_.pow(x, field_.characteristic());
  return Element(field_, x);
}

std::uint32_t Element::trace_to_prime() const {
  std::uint32_t sum = 0;
  std::uint32_t x = index_;
  for (std::uint32_t i = 0; i < field_.degree(); ++i) {
    sum = field_.add(sum, x);
    x = field_.pow(x, field_.characteristic());
  }
  const Digits d = field_.digits_of(sum);
  for (std::size_t i = 1; i < d.size(); ++i) {
    aslab::detail::ensure(d[i] == 0, "trace left the prime field");
  }
  return d[0];
}

bool operator==(const Element& a, const Element& b) {
  return a.index_ == b.index_ && a.field_ == b.field_;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  a.same_field(b);
  return a.index_ <=> b.index_;
}

// ---- Embedding ---------------------------------------------------------------

namespace {

void check_degrees(const FiniteField& source, const FiniteField& target) {
  if (source.characteristic() != target.characteristic()) {
    throw InvalidArgument("embedding between fields of different characteristic");
  }
  if (target.degree() % source.degree() != 0) {
    throw InvalidArgument("cannot embed degree " + std::to_string(source.degree()) + " into degree " +
                          std::to_string(target.degree()));
  }
}

// Evaluates a polynomial over F_p (little-endian digits) at y.
Element eval_prime_poly(const Digits& poly, const Element& y) {
  const auto& f = y.field();
  std::uint32_t acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) {
    acc = f.add(f.mul(acc, y.index()), f.constant(poly[i]).index());
  }
  return Element(f, acc);
}

Element canonical_image(const FiniteField& source, const FiniteField& target) {
  if (source == target) return target.generator();
  check_degrees(source, target);
  for (std::uint32_t i = 0; i < target.order(); ++i) {
    Element y = target.element(i);
    if (eval_prime_poly(source.modulus(), y).is_zero()) return y;
  }
  throw LemmaViolation("source modulus has no root in the target field");
}

}  // namespace

Embedding::Embedding(FiniteField source, FiniteField target)
    : source_(source),
      target_(target),
      image_(canonical_image(source, target)) {
  build_linear_map();
}

Embedding::Embedding(FiniteField source, FiniteField target, const Element& image_of_generator)
    : source_(std::move(source)), target_(std::move(target)), image_(image_of_generator) {
  check_degrees(source_, target_);
  if (!(image_.field() == target_)) throw FieldMismatch("generator image is not in the target field");
  if (!eval_prime_poly(source_.modulus(), image_).is_zero()) {
    throw InvalidArgument("generator image is not a root of the source modulus");
  }
  build_linear_map();
}

Embedding Embedding::identity(const FiniteField& field) { return Embedding(field, field, field.generator()); }

void Embedding::build_linear_map() {
  basis_images_.clear();
  Element power = target_.one();
  for (std::uint32_t i = 0; i < source_.degree(); ++i) {
    basis_images_.push_back(power.digits());
    power *= image_;
  }
  solver_ = std::make_shared<const linalg::CombinationSolver>(target_.characteristic(), basis_images_);
}

Element Embedding::apply(const Element& x) const {
  if (!(x.field() == source_)) throw FieldMismatch("element is not in the embedding source");
  const Digits d = x.digits();
  const std::uint32_t p = target_.characteristic();
  Digits out(target_.degree(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = (out[j] + d[i] * basis_images_[i][j]) % p;
  }
  return target_.from_digits(out);
}

std::optional<Element> Embedding::preimage(const Element& y) const {
  if (!(y.field() == target_)) throw FieldMismatch("element is not in the embedding target");
  auto coefficients = solver_->solve(y.digits());
  if (!coefficients) return std::nullopt;
  return source_.from_digits(*coefficients);
}

bool Embedding::contains(const Element& y) const {
  if (!(y.field() == target_)) throw FieldMismatch("element is not in the embedding target");
  return y.frobenius(source_.degree()) == y;
}

Embedding build_embedding(const FiniteField& source, const FiniteField& target) {
  return Embedding(source, target);
}

bool in_subfield(const Embedding& e, const Element& y) { return e.contains(y); }

}  // namespace aslab::gf
