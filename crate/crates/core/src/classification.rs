//! Membership in the two exceptional classes of simple groups, the
//! guaranteed ordinary index v_S, and the per-group report on which
//! maximal-subgroup indices every almost simple group over S receives.
//!
//! Class X: the simple groups whose minimal-index maximal subgroups form at
//! least two classes fused by an outer automorphism and which carry no
//! ordinary class of index at most l(S)^2 beyond the two-class/novelty
//! dichotomy. Class Y: the groups that still have an ordinary class at a
//! fixed index v_S <= l(S)^2. Everything else has an ordinary class at l(S).

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_id::{canonical_key, GroupKey};
use crate::invariants::{self, big, exact_div};
use crate::fixtures;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassLabel {
    X,
    Y,
    Neither,
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        out.write_str(match self {
            ClassLabel::X => "X",
            ClassLabel::Y => "Y",
            ClassLabel::Neither => "Neither",
        })
    }
}

/// Decide the class of a canonical key. Y membership is checked before the
/// X predicate for PSL3, so square q (even f) lands in Y.
pub fn classify(key: GroupKey) -> ClassLabel {
    use GroupKey::*;
    let key = canonical_key(key);
    let in_y = match key {
        Sporadic(s) => matches!(
            s,
            crate::group_id::Sporadic::M12
                | crate::group_id::Sporadic::ON
                | crate::group_id::Sporadic::Tits
        ),
        Alternating(6) => true, // PSL(2,9)
        Linear { n: 2, q } => q.q == 7 || q.q == 11,
        Linear { n: 3, q } => q.q == 3 || invariants::is_square_prime_power(q),
        Linear { n: 4, q } => q.q > 2,
        Linear { n: 6, .. } => true,
        Unitary { n: 3, q } => q.q == 5,
        OrthogonalPlus { n: 8, .. } => true,
        OrthogonalPlus { n, q } => n >= 10 && q.q == 3,
        G2(q) => q.p == 3,
        F4(q) => q.p == 2,
        E6(_) => true,
        _ => false,
    };
    if in_y {
        return ClassLabel::Y;
    }
    let in_x = match key {
        Linear { n: 3, q } => q.q > 3 && q.f % 2 == 1,
        Linear { n, .. } => n == 5 || n >= 7,
        Symplectic { n: 4, q } => q.p == 2 && q.f >= 2,
        _ => false,
    };
    if in_x {
        ClassLabel::X
    } else {
        ClassLabel::Neither
    }
}

/// The guaranteed index v_S for members of X or Y. Small members carry
/// fixed reference values; the rest evaluate the per-family closed forms.
pub fn v_index(key: GroupKey) -> Result<BigUint> {
    use GroupKey::*;
    let key = canonical_key(key);
    if classify(key) == ClassLabel::Neither {
        return Err(Error::NotApplicable(format!(
            "{key} has an ordinary class of minimal index; no v is defined"
        )));
    }
    // fixed small values first
    let fixed: Option<u64> = match key {
        Sporadic(s) => {
            return Ok(fixtures::sporadic(s)
                .v
                .clone()
                .expect("exceptional sporadic member carries v in the table"))
        }
        Alternating(6) => Some(10),
        Linear { n: 2, q } if q.q == 7 => Some(8),
        Linear { n: 2, q } if q.q == 11 => Some(12),
        Linear { n: 3, q } if q.q == 3 => Some(144),
        Linear { n: 3, q } if q.q == 4 => Some(280),
        Unitary { n: 3, q } if q.q == 5 => Some(126),
        G2(q) if q.q == 3 => Some(2_808),
        OrthogonalPlus { n: 8, q } if q.q == 2 => Some(1_575),
        OrthogonalPlus { n: 8, q } if q.q == 3 => Some(36_400),
        _ => None,
    };
    if let Some(v) = fixed {
        return Ok(big(v));
    }

    let v = match key {
        // ordinary subfield/unitary subgroup of the square-field plane group
        Linear { n: 3, q } if q.f % 2 == 0 => {
            let q0 = invariants::integer_sqrt(q.q);
            let q0b = big(q0);
            if gcd(3, q0 + 1) == 1 {
                q0b.pow(3) * (big(q0).pow(3) + 1u32) * (big(q0).pow(2) + 1u32)
            } else {
                q0b.pow(3) * (big(q0).pow(3) - 1u32) * (big(q0).pow(2) + 1u32)
            }
        }
        Linear { n: 4, q } => exact_div(
            (big(q.q).pow(2) + 1u32) * (big(q.q).pow(3) - 1u32),
            &(big(q.q) - 1u32),
        ),
        Linear { n: 6, q } => exact_div(
            (big(q.q).pow(5) - 1u32) * (big(q.q).pow(4) - 1u32) * (big(q.q).pow(3) + 1u32),
            &((big(q.q) - 1u32).pow(2) * (big(q.q) + 1u32)),
        ),
        // stabilizers of incident point-hyperplane pairs
        Linear { n, q } => exact_div(
            (big(q.q).pow(n) - 1u32) * (big(q.q).pow(n - 1) - 1u32),
            &(big(q.q) - 1u32).pow(2),
        ),
        Symplectic { n: 4, q } => exact_div(
            (big(q.q).pow(4) - 1u32) * (big(q.q) + 1u32),
            &(big(q.q) - 1u32),
        ),
        OrthogonalPlus { n: 8, q } => {
            (big(q.q) + 1u32)
                * (big(q.q).pow(2) - big(q.q) + 1u32)
                * (big(q.q).pow(2) + 1u32).pow(2)
                * (big(q.q).pow(2) + big(q.q) + 1u32)
        }
        // singular-point parabolic of the plus-type group over GF(3)
        OrthogonalPlus { n, q } => {
            let t = n / 2;
            debug_assert_eq!(q.q, 3);
            exact_div((big(3).pow(t) - 1u32) * (big(3).pow(t - 1) + 1u32), &big(2))
        }
        G2(q) => big(q.q).pow(4) * (big(q.q).pow(4) + big(q.q).pow(2) + 1u32),
        // index of the ordinary maximal 3D4(q).3 subgroup; the product
        // subgroup of two rank-2 linear groups has index exceeding l(S)^2
        // and cannot serve as the guaranteed class
        F4(q) => exact_div(
            big(q.q).pow(12) * (big(q.q).pow(4) - 1u32) * (big(q.q).pow(8) - 1u32),
            &big(3),
        ),
        E6(q) => exact_div(
            (big(q.q).pow(12) - 1u32) * (big(q.q).pow(4) + 1u32) * (big(q.q).pow(9) - 1u32),
            &(big(q.q).pow(3) - 1u32),
        ),
        other => unreachable!("v_index: {other} is not in X or Y"),
    };
    Ok(v)
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Which guaranteed indices every almost simple group over S receives.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub key: String,
    pub label: ClassLabel,
    #[serde(serialize_with = "crate::sweep::ser_biguint")]
    pub mindeg: BigUint,
    #[serde(serialize_with = "crate::sweep::ser_opt_biguint")]
    pub v_index: Option<BigUint>,
    /// 1: ordinary class at l(S); 2: ordinary class at v_S plus two or more
    /// classes at l(S) in S itself; 3: two classes at l(S) or one at v_S,
    /// depending on the extension.
    pub clause: u8,
    pub guaranteed_indices: String,
}

pub fn class_report(key: GroupKey) -> ClassReport {
    let key = canonical_key(key);
    let label = classify(key);
    let ell = invariants::mindeg(key);
    let v = v_index(key).ok();
    let (clause, guaranteed) = match label {
        ClassLabel::Neither => (
            1u8,
            format!(
                "every almost simple group over {key} has a conjugacy class of core-free maximal \
                 subgroups of index {ell}"
            ),
        ),
        ClassLabel::Y => (
            2u8,
            format!(
                "{key} has at least two classes of maximal subgroups of index {ell}; every almost \
                 simple group over it has a core-free maximal class of index {}",
                v.as_ref().unwrap()
            ),
        ),
        ClassLabel::X => (
            3u8,
            format!(
                "an almost simple group R over {key} has at least two core-free maximal classes \
                 of index {ell} (R inside the diagonal-field subgroup of Out) or one of index {}",
                v.as_ref().unwrap()
            ),
        ),
    };
    ClassReport {
        key: key.render(),
        label,
        mindeg: ell,
        v_index: v,
        clause,
        guaranteed_indices: guaranteed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_id::parse_group;
    use num_traits::Zero;

    fn key(s: &str) -> GroupKey {
        parse_group(s).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(key("PSL(5,2)")), ClassLabel::X);
        assert_eq!(classify(key("PSL(3,9)")), ClassLabel::Y);
        assert_eq!(classify(key("Alt(7)")), ClassLabel::Neither);
        assert_eq!(classify(key("PSL(3,5)")), ClassLabel::X);
        assert_eq!(classify(key("PSL(3,3)")), ClassLabel::Y);
        assert_eq!(classify(key("PSp(4,4)")), ClassLabel::X);
        assert_eq!(classify(key("PSp(4,5)")), ClassLabel::Neither);
        assert_eq!(classify(key("PSL(2,9)")), ClassLabel::Y); // Alt(6)
        assert_eq!(classify(key("PSL(4,2)")), ClassLabel::Neither); // Alt(8)
        assert_eq!(classify(key("PSL(4,3)")), ClassLabel::Y);
        assert_eq!(classify(key("PSL(6,17)")), ClassLabel::Y);
        assert_eq!(classify(key("PSL(7,2)")), ClassLabel::X);
        assert_eq!(classify(key("O+(8,4)")), ClassLabel::Y);
        assert_eq!(classify(key("O+(10,3)")), ClassLabel::Y);
        assert_eq!(classify(key("O+(10,9)")), ClassLabel::Neither);
        assert_eq!(classify(key("G2(27)")), ClassLabel::Y);
        assert_eq!(classify(key("G2(5)")), ClassLabel::Neither);
        assert_eq!(classify(key("F4(4)")), ClassLabel::Y);
        assert_eq!(classify(key("F4(3)")), ClassLabel::Neither);
        assert_eq!(classify(key("E6(7)")), ClassLabel::Y);
        assert_eq!(classify(key("2E6(2)")), ClassLabel::Neither);
        assert_eq!(classify(key("M12")), ClassLabel::Y);
        assert_eq!(classify(key("M11")), ClassLabel::Neither);
        assert_eq!(classify(key("2F4(2)'")), ClassLabel::Y);
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_index(key("M12")).unwrap(), big(144));
        assert_eq!(v_index(key("2F4(2)'")).unwrap(), big(1_755));
        assert_eq!(v_index(key("PSL(2,11)")).unwrap(), big(12));
        assert_eq!(v_index(key("PSL(4,3)")).unwrap(), big(130));
        assert_eq!(v_index(key("PSU(3,5)")).unwrap(), big(126));
        assert_eq!(v_index(key("O'N")).unwrap(), big(55_978_560));
        assert_eq!(v_index(key("PSL(3,4)")).unwrap(), big(280));
        assert_eq!(v_index(key("PSL(3,9)")).unwrap(), big(7_560));
        assert!(matches!(
            v_index(key("Alt(9)")),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn v_divides_order_and_sits_below_mindeg_squared() {
        for name in [
            "M12", "O'N", "2F4(2)'", "Alt(6)", "PSL(2,7)", "PSL(2,11)", "PSL(3,3)", "PSL(3,4)",
            "PSL(3,9)", "PSL(3,25)", "PSL(3,49)", "PSL(4,3)", "PSL(4,4)", "PSL(5,2)", "PSL(5,3)",
            "PSL(6,2)", "PSL(6,3)", "PSL(7,2)", "PSU(3,5)", "PSp(4,4)", "PSp(4,16)", "O+(8,2)",
            "O+(8,3)", "O+(8,5)", "O+(10,3)", "O+(12,3)", "G2(3)", "G2(9)", "G2(27)", "F4(2)",
            "F4(8)", "E6(2)", "E6(3)",
        ] {
            let k = key(name);
            let v = v_index(k).unwrap();
            let ell = invariants::mindeg(k);
            assert!(v <= &ell * &ell, "{name}: v exceeds mindeg^2");
            let order = invariants::order(k);
            assert!((&order % &v).is_zero(), "{name}: v does not divide order");
            assert!(v < order);
        }
    }

    #[test]
    fn report_examples() {
        let r = class_report(key("Alt(9)"));
        assert_eq!(r.clause, 1);
        assert_eq!(r.mindeg, big(9));
        assert!(r.v_index.is_none());

        let r = class_report(key("O'N"));
        assert_eq!(r.clause, 2);
        assert_eq!(r.mindeg, big(122_760));
        assert_eq!(r.v_index.unwrap(), big(55_978_560));

        let r = class_report(key("PSL(7,2)"));
        assert_eq!(r.clause, 3);
        assert_eq!(r.mindeg, big(127));
        assert_eq!(r.v_index.unwrap(), big(8_001));
    }

    #[test]
    fn y_members_have_two_classes_at_mindeg() {
        for name in [
            "M12", "O'N", "2F4(2)'", "Alt(6)", "PSL(2,7)", "PSL(2,11)", "PSL(3,3)", "PSL(3,4)",
            "PSL(3,16)", "PSL(4,5)", "PSL(6,3)", "PSU(3,5)", "O+(8,7)", "O+(10,3)", "G2(3)",
            "G2(9)", "F4(2)", "E6(2)",
        ] {
            let k = key(name);
            assert_eq!(classify(k), ClassLabel::Y, "{name}");
            let ell = invariants::mindeg(k);
            let ws = invariants::witnesses(k);
            assert!(
                ws.iter().any(|w| w.index == ell && w.class_count >= 2),
                "{name}: no fused multi-class witness at the minimal index"
            );
        }
    }
}
