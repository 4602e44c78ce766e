#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace groupoidal {

using Complex = std::complex<double>;

/// Which space an element lives on: the two groupoids of an equivalence, the
/// bispace, its opposite, or the linking groupoid.
enum class Carrier { G, H, Z, Zop, L };

std::string_view to_string(Carrier c);
std::optional<Carrier> parse_carrier(std::string_view s);

/// A complex function on the arrows (or points) of one carrier, dense over
/// the carrier's canonical ordering.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(Carrier carrier, std::size_t size) : carrier_(carrier), values_(size) {}
  AlgebraElement(Carrier carrier, std::vector<Complex> values)
      : carrier_(carrier), values_(std::move(values)) {}

  static AlgebraElement delta(Carrier carrier, std::size_t size, std::size_t at,
                              Complex value = 1.0);

  Carrier carrier() const { return carrier_; }
  std::size_t size() const { return values_.size(); }
  Complex operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex scalar);

  bool is_zero(double tol = 0.0) const;

 private:
  Carrier carrier_ = Carrier::G;
  std::vector<Complex> values_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(Complex s, AlgebraElement a);

/// Largest entrywise modulus of a - b; throws CarrierMismatch on shape mismatch.
double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace groupoidal
