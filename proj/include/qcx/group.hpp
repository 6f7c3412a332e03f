#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcx/bigint.hpp"

namespace qcx {

enum class GroupFamily { Symmetric, Cyclic, Dihedral, Product };

/// Descriptor for the finite-group families the library supports.
///   symmetric(n): permutations of {1..n}, order n!
///   cyclic(n):    Z_n under addition, order n
///   dihedral(n):  symmetries of the n-gon (n >= 3), order 2n
///   product(...): direct product of factor groups
struct GroupSpec {
  GroupFamily family = GroupFamily::Cyclic;
  std::int64_t n = 1;
  std::vector<GroupSpec> factors;  // Product only

  static GroupSpec symmetric(std::int64_t n);
  static GroupSpec cyclic(std::int64_t n);
  static GroupSpec dihedral(std::int64_t n);
  static GroupSpec product(std::vector<GroupSpec> factors);

  BigUint order() const;
  /// Group order when it fits in 64 bits; throws std::overflow_error otherwise.
  std::uint64_t order_u64() const { return order().to_u64(); }

  /// Number of int64 slots an element payload of this group occupies.
  std::size_t payload_size() const;

  std::string name() const;
  bool operator==(const GroupSpec& other) const;
  bool operator!=(const GroupSpec& other) const { return !(*this == other); }
};

/// A group element as a flat integer payload. Layout per family:
///   symmetric(n): n slots, one-line images of 1..n (1-based, a bijection)
///   cyclic(n):    1 slot, residue in [0, n)
///   dihedral(n):  2 slots (reflect in {0,1}, rotation in [0, n)), meaning s^reflect · r^rotation
///   product:      concatenation of factor payloads
/// The canonical element order used everywhere (matrix indices, enumeration)
/// is lexicographic on this payload.
struct GroupElement {
  GroupSpec group;
  std::vector<std::int64_t> payload;

  bool operator==(const GroupElement& other) const {
    return group == other.group && payload == other.payload;
  }
  bool operator!=(const GroupElement& other) const { return !(*this == other); }
  /// Canonical (payload-lexicographic) order.
  bool operator<(const GroupElement& other) const { return payload < other.payload; }
};

/// Ordered multiset of generators for a Cayley walk. Duplicates are kept:
/// a Cayley multigraph is legitimate and changes the walk's weights.
struct GeneratorSet {
  GroupSpec group;
  std::vector<GroupElement> elements;
  std::vector<int> labels;  // edge labels 1..D

  std::size_t degree() const { return elements.size(); }
};

/// Validating constructors.
GroupElement make_element(const GroupSpec& group, std::vector<std::int64_t> payload);
GroupElement identity(const GroupSpec& group);
GeneratorSet make_generator_set(const GroupSpec& group, std::vector<GroupElement> elements);

/// Group product. Composition convention, fixed once and used everywhere:
/// (a·b)(x) = a(b(x)) for permutations, i.e. b acts first.
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// All |G| elements exactly once, in canonical payload-lexicographic order.
/// Throws if order(group) exceeds cap.
std::vector<GroupElement> enumerate_elements(const GroupSpec& group, std::uint64_t cap);

struct ClosureResult {
  std::vector<GroupElement> elements;  // canonical order
  bool generates_full_group = false;
};

/// Breadth-first closure of the generators under multiplication.
ClosureResult closure(const GeneratorSet& gens, std::uint64_t cap);

/// Γ ∪ Γ^{-1} with duplicates collapsed; first-occurrence order over Γ then Γ^{-1}.
GeneratorSet symmetrize(const GeneratorSet& gens);

/// Parses an element from text. Permutations accept cycle notation
/// "(1 2)(3 4)", "()" for the identity, and one-line "[2,1,4,3]".
/// Cyclic accepts a (possibly signed) integer, reduced mod n. Dihedral accepts
/// "e", "r^k", "s", "s·r^k" (also "s*r^k", "s r^k"). Product accepts
/// "(comp1; comp2; ...)" with components in the factor groups' syntax.
GroupElement parse_element(const GroupSpec& group, const std::string& text);

/// Canonical formatter; parse_element(format_element(g)) == g.
std::string format_element(const GroupElement& g);

/// Default cap for dense enumeration paths.
inline constexpr std::uint64_t kDefaultEnumCap = 100000;

}  // namespace qcx
