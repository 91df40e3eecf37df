#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pitop/cyclo.hpp"

namespace pitop {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite group given by its Cayley table. Elements are indices 0..n-1.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group

  /// Validates the table; throws GroupError naming the failing triple.
  static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = "table");
  static FiniteGroup cyclic(int n);
  /// Mixed-radix product of cyclic groups; the first factor is the most significant digit.
  static FiniteGroup product(const std::vector<int>& orders);
  /// Parses "cyclic:<n>", "product:<n1>x<n2>..." or "trivial".
  static FiniteGroup parse(const std::string& spec);

  int order() const { return static_cast<int>(mul_.size()); }
  int unit() const { return unit_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int d, int a) const { return mul_[mul_[d][a]][inv_[d]]; }
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  int pow(int a, long e) const;
  int element_order(int a) const;
  bool is_abelian() const;
  const std::vector<std::vector<int>>& table() const { return mul_; }
  const std::string& spec() const { return spec_; }
  /// Cyclic factor orders when built from cyclic/product specs; empty otherwise.
  const std::vector<int>& factors() const { return factors_; }
  /// Mixed-radix digits of an element of a product group.
  std::vector<int> digits(int a) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.mul_ == b.mul_; }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int unit_ = 0;
  std::string spec_;
  std::vector<int> factors_;
};

/// Reports the first violated group axiom, if any.
std::optional<std::string> check_group_table(const std::vector<std::vector<int>>& table);

/// Homomorphism from a finite group or a free group on named generators into a finite group.
class GroupHom {
 public:
  /// Free source: generator names with their images.
  static GroupHom free(std::vector<std::string> generators, std::vector<int> images,
                       const FiniteGroup& target);
  /// Finite source: images of every element; verified multiplicative.
  static GroupHom finite(const FiniteGroup& source, std::vector<int> images, const FiniteGroup& target);

  bool is_free() const { return !source_.has_value(); }
  const FiniteGroup& target() const { return target_; }
  const std::optional<FiniteGroup>& source() const { return source_; }
  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<int>& images() const { return images_; }

  int operator()(int a) const;
  /// Word tokens are generator names optionally followed by "^-1"; unknown names throw.
  int evaluate_word(const std::vector<std::string>& word) const;
  /// True when each relator word evaluates to the unit.
  bool respects(const std::vector<std::vector<std::string>>& relators) const;

 private:
  std::optional<FiniteGroup> source_;
  FiniteGroup target_;
  std::vector<std::string> gens_;
  std::vector<int> images_;
};

/// Index of a subgroup given by membership flags, with right cosets G*w.
struct CosetSystem {
  std::vector<int> reps;           // one representative per right coset, reps[0] in G
  std::vector<int> coset_of;       // element -> coset index
};

CosetSystem right_cosets(const FiniteGroup& pi, const std::vector<bool>& in_subgroup,
                         const std::vector<int>& preferred_reps = {});

}  // namespace pitop
