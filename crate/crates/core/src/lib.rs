//! Exact structural invariants of the finite simple groups.
//!
//! The library computes, in exact integer arithmetic, the order |S|, the
//! least faithful transitive permutation degree l(S), the outer automorphism
//! group Out(S) (order, construction recipe, and explicit Cayley table), the
//! membership of S in the two exceptional classes that lack ordinary
//! maximal subgroups of minimal index, and the guaranteed maximal-subgroup
//! index v_S for those classes. On top of the invariants sit exact-verdict
//! comparison primitives (integer power comparison and dyadic log
//! bracketing), a brute-force permutation oracle for desk-size cross-checks,
//! and a sweep engine that verifies the inequalities
//!
//! ```text
//! l(S)^2 < |S|                       (clause A4a)
//! |Out S| <= 3 log2 l(S)             (clause A4b)
//! |Out S| <= log2 l(S) off-list      (clause A5)
//! v_S <= l(S)^2                      (clause A23)
//! #subgroups(Out S) <= log2^3 l(S)   (clause B)
//! ```
//!
//! over parameter ranges, streaming machine-readable reports. No floating
//! point participates in any verdict.

pub mod classification;
pub mod error;
pub mod exact_cmp;
pub mod fixtures;
pub mod group_id;
pub mod invariants;
pub mod out_groups;
pub mod perm_oracle;
pub mod sweep;

pub use classification::{classify, class_report, v_index, ClassLabel, ClassReport};
pub use error::{Error, Result};
pub use group_id::{
    canonical_key, factor_prime_power, normalize, parse_group, CanonicalGroup, GroupKey,
    PrimePower, Sporadic,
};
pub use invariants::{invariants, mindeg, order, out_order, Invariants, MaxSubgroupWitness};
pub use out_groups::{
    count_subgroups, out_recipe, realize, subgroup_bound_check, FiniteGroupTable, GroupRecipe,
};
pub use perm_oracle::{generate_elements, min_corefree_index, PermGroup, Permutation};
pub use sweep::{
    exponent_ratio, remark_psl_n2, sweep, tightness_report, FamilyFilter, SweepRanges,
    SweepReport, SweepClause,
};
