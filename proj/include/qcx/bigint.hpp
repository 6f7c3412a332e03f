#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcx {

/// Minimal arbitrary-precision unsigned integer, base 10^9 limbs.
/// Covers exactly what the library needs: group orders (n! grows past
/// 64 bits already for S_21) and the irrep dimension product formula.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  BigUint(std::uint64_t v) {  // NOLINT: implicit by design
    limbs_.clear();
    do {
      limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
      v /= kBase;
    } while (v != 0);
  }

  static BigUint factorial(std::uint64_t n) {
    BigUint r{1};
    for (std::uint64_t i = 2; i <= n; ++i) r.mul_small(static_cast<std::uint32_t>(i));
    return r;
  }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

  void mul_small(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
  }

  void add(const BigUint& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t cur = carry + limbs_[i] + (i < other.limbs_.size() ? other.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  /// In-place division by a small divisor; returns the remainder.
  std::uint32_t div_small(std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("BigUint: division by zero");
    std::uint64_t rem = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
      std::uint64_t cur = rem * kBase + *it;
      *it = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
  }

  BigUint operator*(const BigUint& other) const {
    std::vector<std::uint64_t> acc(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
        std::uint64_t cur = acc[i + j] + static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] + carry;
        acc[i + j] = cur % kBase;
        carry = cur / kBase;
      }
      acc[i + other.limbs_.size()] += carry;
    }
    BigUint r;
    r.limbs_.assign(acc.begin(), acc.end());
    r.trim();
    return r;
  }

  bool operator==(const BigUint& other) const { return limbs_ == other.limbs_; }
  bool operator!=(const BigUint& other) const { return !(*this == other); }

  bool operator<(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) return limbs_.size() < other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i];
    }
    return false;
  }
  bool operator<=(const BigUint& other) const { return *this < other || *this == other; }
  bool operator>(const BigUint& other) const { return other < *this; }

  bool fits_u64() const {
    if (limbs_.size() > 3) return false;
    return !(BigUint(UINT64_MAX) < *this);
  }

  std::uint64_t to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint: value exceeds 64 bits");
    std::uint64_t v = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * kBase + *it;
    return v;
  }

  std::string to_string() const {
    std::string s = std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
      std::string part = std::to_string(*it);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000ULL;
  std::vector<std::uint32_t> limbs_;  // little-endian

  void trim() {
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
  }
};

}  // namespace qcx
