#pragma once

// GL_2(Z/2^n) for n = 1..4: element tables, subgroup closure, the kernel of
// reduction to level n-1, supplements of that kernel, and the small amount
// of group theory (abelian 2-rank, conjugacy, cosets) the surjectivity
// criteria rest on.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace twoadic::glmod {

using Index = std::uint32_t;

/// 2x2 matrix (e11 e12; e21 e22) with entries reduced mod 2^exponent.
struct Mat2 {
  unsigned exponent = 1;
  unsigned e11 = 1, e12 = 0, e21 = 0, e22 = 1;

  [[nodiscard]] unsigned modulus() const { return 1u << exponent; }
  [[nodiscard]] unsigned det() const;
  [[nodiscard]] bool invertible() const { return (det() & 1u) != 0; }
  /// Packs the four entries into 16 bits (4 bits each, row-major).
  [[nodiscard]] std::uint32_t code() const { return e11 | (e12 << 4) | (e21 << 8) | (e22 << 12); }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 make_mat(unsigned exponent, int e11, int e12, int e21, int e22);
Mat2 multiply(const Mat2& x, const Mat2& y);
/// Entries mod 2^(exponent - 1).
Mat2 reduce(const Mat2& m);
/// The matrix with the same entries read at the higher level.
Mat2 lift(const Mat2& m, unsigned exponent);
std::string to_string(const Mat2& m);

/// All of GL_2(Z/2^n), lexicographic on (e11, e12, e21, e22).
/// Immutable after construction.
class GroupTable {
 public:
  explicit GroupTable(unsigned exponent);

  [[nodiscard]] unsigned exponent() const { return exponent_; }
  [[nodiscard]] unsigned modulus() const { return 1u << exponent_; }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] const Mat2& element(Index i) const { return elements_[i]; }
  [[nodiscard]] const std::vector<Mat2>& elements() const { return elements_; }
  [[nodiscard]] Index identity() const { return identity_; }

  /// Throws std::invalid_argument for a non-invertible or wrong-level matrix.
  [[nodiscard]] Index index_of(const Mat2& m) const;
  [[nodiscard]] Index multiply(Index x, Index y) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(x) * elements_.size() + y];
    return multiply_direct(x, y);
  }
  [[nodiscard]] Index inverse(Index x) const { return inverse_[x]; }
  [[nodiscard]] Index conjugate(Index g, Index x) const { return multiply(multiply(g, x), inverse_[g]); }
  [[nodiscard]] unsigned det(Index x) const { return det_[x]; }
  [[nodiscard]] unsigned element_order(Index x) const;

 private:
  [[nodiscard]] Index multiply_direct(Index x, Index y) const;

  unsigned exponent_;
  std::vector<Mat2> elements_;
  std::vector<std::int32_t> index_of_code_;
  std::vector<Index> inverse_;
  std::vector<unsigned> det_;
  std::vector<Index> table_;  // full Cayley table for n <= 3
  Index identity_ = 0;
};

/// Sending each element of `upper` to the index of its reduction in `lower`.
std::vector<Index> reduction_map(const GroupTable& upper, const GroupTable& lower);

/// A subgroup as a sorted list of element indices of its parent table.
/// The parent must outlive it.
class SubgroupSet {
 public:
  SubgroupSet(const GroupTable& parent, std::vector<Index> sorted_elements);

  [[nodiscard]] const GroupTable& parent() const { return *parent_; }
  [[nodiscard]] std::size_t order() const { return elements_.size(); }
  [[nodiscard]] const std::vector<Index>& elements() const { return elements_; }
  [[nodiscard]] bool contains(Index x) const;
  [[nodiscard]] std::size_t index_in_parent() const { return parent_->order() / elements_.size(); }

  /// Exhaustive closure check under product and inverse, plus identity.
  [[nodiscard]] bool verify_closed() const;

  /// A generating set found greedily from the sorted element list.
  [[nodiscard]] std::vector<Index> generators() const;

  friend bool operator==(const SubgroupSet& l, const SubgroupSet& r) {
    return l.parent_ == r.parent_ && l.elements_ == r.elements_;
  }
  friend bool operator<(const SubgroupSet& l, const SubgroupSet& r) {
    if (l.order() != r.order()) return l.order() < r.order();
    return l.elements_ < r.elements_;
  }

 private:
  const GroupTable* parent_;
  std::vector<Index> elements_;
};

struct SubgroupHash {
  std::size_t operator()(const SubgroupSet& s) const;
};

/// Smallest subgroup containing `gens` (breadth-first right multiplication
/// by the generators). An empty generator list gives the trivial group.
SubgroupSet closure(const GroupTable& g, std::span<const Index> gens);
SubgroupSet whole_group(const GroupTable& g);

/// Kernel of reduction to level n-1: the 16 matrices I + 2^(n-1) M, M over F_2.
/// Requires n >= 2.
SubgroupSet reduction_kernel(const GroupTable& g);

/// The kernel element I + 2^(n-1) M where bit k of `bits` is entry k of M
/// (row-major).
Index kernel_element(const GroupTable& g, unsigned bits);

/// All 67 subgroups of the kernel (enumerated as F_2-subspaces of F_2^4)
/// that are stable under conjugation by every element of `conjugators`.
std::vector<SubgroupSet> stable_kernel_subgroups(const GroupTable& g, std::span<const Index> conjugators);

/// Randomized search for a small generating set, verified by closure.
/// Deterministic for a fixed seed.
std::vector<Index> find_generating_set(const GroupTable& g, std::uint64_t seed = 1);

/// Every subgroup of GL_2(Z/2^n) that reduces onto GL_2(Z/2^(n-1)), without
/// duplicates, in ascending (order, elements) order. `gens_below` must
/// generate `below` (GeneratorSetInvalid otherwise). Work is split across
/// `workers` threads; the result does not depend on the worker count.
std::vector<SubgroupSet> supplements(const GroupTable& g, const GroupTable& below,
                                     std::span<const Index> gens_below, unsigned workers = 1);

/// Commutator subgroup [H, H].
SubgroupSet derived_subgroup(const SubgroupSet& h);

/// dim over F_2 of H^ab / 2 H^ab. H has a (C_2)^k quotient iff this is >= k.
unsigned abelian_two_rank(const SubgroupSet& h);

/// Sorted set of determinants of elements of h, as residues mod 2^n.
std::vector<unsigned> det_image(const SubgroupSet& h);

/// +1 or -1: the sign of the reduction mod 2 as a permutation of the three
/// nonzero vectors of F_2^2.
int mod2_sign(const GroupTable& g, Index x);

/// Sorted set of (mod2_sign, det) pairs over h. h maps onto
/// C_2 x (Z/2^n)^x exactly when this has 2 * 2^(n-1) entries.
std::vector<std::pair<int, unsigned>> sign_det_image(const SubgroupSet& h);

/// Left cosets xH, sorted by least element index. Each coset is sorted.
std::vector<std::vector<Index>> coset_partition(const SubgroupSet& h);

/// True iff x h1 x^-1 == h2 for some x in the parent group.
bool subgroups_conjugate(const SubgroupSet& h1, const SubgroupSet& h2);

/// Groups `subgroups` into conjugacy classes (indices into the input).
std::vector<std::vector<std::size_t>> conjugacy_classes(std::span<const SubgroupSet> subgroups);

/// closure of (0 1; 3 0) and (0 1; 1 1) in GL_2(Z/4).
SubgroupSet exceptional_subgroup(const GroupTable& gl2_mod4);

/// Order 24 with a normal C_3, a nonabelian Sylow 2-subgroup with exactly two
/// elements of order 4 (D_8 rather than Q_8), acting nontrivially on the C_3.
bool is_c3_semidirect_d8(const SubgroupSet& h);

}  // namespace twoadic::glmod
