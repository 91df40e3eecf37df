#pragma once

#include <vector>

#include "pitop/category.hpp"

namespace pitop {

/// Same category with simple s renamed perm[s].
ThinCategory relabel(const ThinCategory& c, const std::vector<int>& perm);

/// Category over the source of q with component C_{q(alpha')} over alpha'.
ThinCategory pullback(const ThinCategory& c, const GroupHom& q);
/// Category over the target of a surjection whose kernel acts trivially.
ThinCategory pushforward(const ThinCategory& c, const GroupHom& q);

enum class ProductMode { Direct, Tensor };
struct ProductResult {
  ThinCategory cat;
  int unit_rank = 1;  // dimension of End(1)
  Report report{"product"};
};
ProductResult product_categories(const std::vector<ThinCategory>& cs, ProductMode mode);

ThinCategory mirror_category(const ThinCategory& c);

struct TransferResult {
  ThinCategory cat;
  CosetSystem cosets;
  std::vector<int> coset_of_simple;
  int unit_rank = 0;
  Report report{"transfer"};
};
/// Transfer of a G-category to pi along an injective `embedding` (G index -> pi index).
/// `reps` optionally fixes the coset representatives.
TransferResult transfer(const ThinCategory& c, const FiniteGroup& pi, const std::vector<int>& embedding,
                        const std::vector<int>& reps = {});

bool is_pointlike(const ThinCategory& c);

/// Characters of the grading group with values in mu_N, as a group under pointwise product.
struct CharacterGroup {
  FiniteGroup group;
  long order = 1;
  std::vector<std::vector<long>> chars;  // exponent of zeta_N per base-group element
  CycloNum value(int chi, int g) const { return CycloNum::root(order, chars[chi][g]); }
};
CharacterGroup aut0_pointlike(const ThinCategory& c);
/// Each automorphism fixes objects and rescales morphisms by character values;
/// checks that braiding and twist tables are preserved.
Report aut0_preserves_structure(const ThinCategory& c, const CharacterGroup& aut);

struct ExtensionResult {
  ThinCategory cat;
  std::vector<int> subgroup;  // character indices, in the order of cat.group
  Report report{"canonical extension"};
};
/// Extension over a subgroup of the character group, listed by character indices.
ExtensionResult canonical_extension(const ThinCategory& c, const CharacterGroup& aut,
                                    const std::vector<int>& subgroup);

}  // namespace pitop
