#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minrank {

/// Integer polynomial, coefficients lowest degree first. Arithmetic is
/// overflow-checked and throws std::overflow_error instead of wrapping.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coeffs);

  static Polynomial one() { return Polynomial({1}); }
  /// 1 + t + ... + t^(n-1)
  static Polynomial geometric(int n);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  std::int64_t at_one() const;
  bool is_palindromic() const;

  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator+(const Polynomial& rhs) const;
  bool operator==(const Polynomial& rhs) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Length generating function of a Weyl group: coeffs[k] = #{w : l(w) = k}.
using LengthPolynomial = Polynomial;
/// Orbit generating function Q(t) = sum over orbit closures of t^(dim V - d_H).
using OrbitPolynomial = Polynomial;

}  // namespace minrank
