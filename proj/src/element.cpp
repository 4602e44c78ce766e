#include "groupoidal/element.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "groupoidal/errors.hpp"

namespace groupoidal {

namespace {

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.carrier() != b.carrier() || a.size() != b.size()) {
    throw CarrierMismatch("element shape mismatch: " + std::string(to_string(a.carrier())) + "[" +
                          std::to_string(a.size()) + "] vs " + std::string(to_string(b.carrier())) +
                          "[" + std::to_string(b.size()) + "]");
  }
}

}  // namespace

std::string_view to_string(Carrier c) {
  switch (c) {
    case Carrier::G: return "G";
    case Carrier::H: return "H";
    case Carrier::Z: return "Z";
    case Carrier::Zop: return "Zop";
    case Carrier::L: return "L";
  }
  return "?";
}

std::optional<Carrier> parse_carrier(std::string_view s) {
  if (s == "G") return Carrier::G;
  if (s == "H") return Carrier::H;
  if (s == "Z") return Carrier::Z;
  if (s == "Zop") return Carrier::Zop;
  if (s == "L") return Carrier::L;
  return std::nullopt;
}

AlgebraElement AlgebraElement::delta(Carrier carrier, std::size_t size, std::size_t at,
                                     Complex value) {
  AlgebraElement e(carrier, size);
  e.values_.at(at) = value;
  return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

bool AlgebraElement::is_zero(double tol) const {
  return std::all_of(values_.begin(), values_.end(),
                     [tol](Complex v) { return std::abs(v) <= tol; });
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace groupoidal
