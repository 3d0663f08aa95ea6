#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace beireg {

/// Prime field GF(p) used for homology ranks. Characteristic zero is not offered.
class FieldSpec {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw std::invalid_argument("field characteristic too large");
  }

  std::uint32_t characteristic() const { return p_; }

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t p_ = kDefaultPrime;
};

}  // namespace beireg
