#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcx/bigint.hpp"

namespace qcx {

/// Integer partition λ₁ ≥ λ₂ ≥ … ≥ λ_k ≥ 1, labelling an irrep of S_n (n = Σλᵢ).
struct Partition {
  std::vector<int> parts;

  int n() const;
  bool operator==(const Partition& other) const { return parts == other.parts; }
  bool operator<(const Partition& other) const { return parts < other.parts; }
  std::string to_string() const;  // "(3,1)"
  static Partition parse(const std::string& text);
};

/// Throws std::invalid_argument unless parts are weakly decreasing positive.
void validate_partition(const Partition& p);

/// All partitions of n, (n) first and (1,…,1) last (descending lexicographic).
std::vector<Partition> partitions_of(int n);

/// Irrep dimension d_λ = n! ∏_{i<j}(λᵢ − λⱼ − i + j) / ∏ᵢ (λᵢ + n − i)!,
/// parts padded with zeros to n entries; computed exactly.
BigUint irrep_dimension_big(const Partition& p);

/// d_λ narrowed to 64 bits; throws std::overflow_error if it does not fit.
std::uint64_t irrep_dimension(const Partition& p);

}  // namespace qcx
