//! Sweep engine: evaluate one inequality clause for every valid canonical
//! group in a parameter range, with machine-readable reporting.
//!
//! Clauses:
//!   A4a  l(S)^2 < |S|
//!   A4b  |Out S| <= 3 log2 l(S)        (as 2^|Out| <= l^3)
//!   A5   |Out S| <= log2 l(S) outside a fixed exclusion list
//!   A23  v_S <= l(S)^2 for the members of the two exceptional classes
//!   B    #subgroups(Out S) <= (log2 l(S))^3 for |Out S| within the cap
//!
//! Failures are never swallowed: the report carries both sides of every
//! violated comparison and the all-pass flag is false iff the list is
//! non-empty.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::classification::{self, ClassLabel};
use crate::error::{Error, Result};
use crate::exact_cmp::{self, DyadicBracket, RatioBracket};
use crate::group_id::{canonical_key, is_prime, GroupKey, PrimePower, Sporadic};
use crate::invariants;
use crate::out_groups::{self, GroupRecipe};

pub fn ser_biguint<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn ser_opt_biguint<S: Serializer>(
    v: &Option<BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SweepClause {
    A4a,
    A4b,
    A5,
    A23,
    B,
}

impl std::str::FromStr for SweepClause {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a4a" => Ok(SweepClause::A4a),
            "a4b" => Ok(SweepClause::A4b),
            "a5" => Ok(SweepClause::A5),
            "a23" => Ok(SweepClause::A23),
            "b" => Ok(SweepClause::B),
            other => Err(Error::Syntax(format!(
                "unknown clause `{other}` (expected A4a, A4b, A5, A23, or B)"
            ))),
        }
    }
}

impl std::fmt::Display for SweepClause {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SweepClause::A4a => "A4a",
            SweepClause::A4b => "A4b",
            SweepClause::A5 => "A5",
            SweepClause::A23 => "A23",
            SweepClause::B => "B",
        };
        out.write_str(s)
    }
}

/// Family selector for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyFilter {
    All,
    Alternating,
    Sporadic,
    Linear,
    Unitary,
    Symplectic,
    OrthogonalOdd,
    OrthogonalPlus,
    OrthogonalMinus,
    G2,
    F4,
    E6,
    E7,
    E8,
    TwistedB2,
    TwistedG2,
    TwistedD4,
    TwistedE6,
    TwistedF4,
}

impl std::str::FromStr for FamilyFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use FamilyFilter::*;
        Ok(match s.to_ascii_lowercase().as_str() {
            "all" => All,
            "alternating" | "alt" => Alternating,
            "sporadic" => Sporadic,
            "linear" | "psl" => Linear,
            "unitary" | "psu" => Unitary,
            "symplectic" | "psp" => Symplectic,
            "orthogonalodd" | "o" => OrthogonalOdd,
            "orthogonalplus" | "o+" => OrthogonalPlus,
            "orthogonalminus" | "o-" => OrthogonalMinus,
            "g2" => G2,
            "f4" => F4,
            "e6" => E6,
            "e7" => E7,
            "e8" => E8,
            "2b2" => TwistedB2,
            "2g2" => TwistedG2,
            "3d4" => TwistedD4,
            "2e6" => TwistedE6,
            "2f4" => TwistedF4,
            other => {
                return Err(Error::Syntax(format!("unknown family filter `{other}`")))
            }
        })
    }
}

/// Desk-scale default ranges: large enough to exercise every family branch,
/// small enough that every sweep finishes in seconds to minutes.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRanges {
    pub alternating_n_max: u32,
    pub linear_unitary_n_max: u32,
    pub symplectic_orthogonal_n_max: u32,
    pub q_max: u64,
    pub e_series_q_max: u64,
    pub out_order_cap: u64,
}

impl Default for SweepRanges {
    fn default() -> Self {
        SweepRanges {
            alternating_n_max: 200,
            linear_unitary_n_max: 12,
            symplectic_orthogonal_n_max: 20,
            q_max: 1024,
            e_series_q_max: 64,
            out_order_cap: 500,
        }
    }
}

impl SweepRanges {
    pub fn with_n_max(mut self, n_max: u32) -> Self {
        self.alternating_n_max = n_max;
        self.linear_unitary_n_max = n_max;
        self.symplectic_orthogonal_n_max = n_max;
        self
    }

    pub fn with_q_max(mut self, q_max: u64) -> Self {
        self.q_max = q_max;
        self.e_series_q_max = q_max;
        self
    }
}

fn prime_powers_up_to(q_max: u64) -> Vec<PrimePower> {
    let mut out = Vec::new();
    for p in 2..=q_max {
        if !is_prime(p) {
            continue;
        }
        let mut f = 1u32;
        let mut q = p;
        loop {
            out.push(PrimePower { p, f, q });
            match q.checked_mul(p) {
                Some(next) if next <= q_max => {
                    q = next;
                    f += 1;
                }
                _ => break,
            }
        }
    }
    out.sort_by_key(|pp| pp.q);
    out
}

/// All valid canonical keys in range for one family tag. Invalid parameter
/// combinations and aliases of other canonical keys are tallied as skipped.
fn enumerate_family(
    filter: FamilyFilter,
    ranges: &SweepRanges,
    keys: &mut Vec<GroupKey>,
    skipped: &mut u64,
) {
    use FamilyFilter::*;
    let pps = prime_powers_up_to(ranges.q_max);
    let e_pps: Vec<PrimePower> = pps
        .iter()
        .copied()
        .filter(|pp| pp.q <= ranges.e_series_q_max)
        .collect();
    let mut push = |raw: GroupKey, skipped: &mut u64| {
        match raw.validate() {
            Ok(key) => {
                if canonical_key(key) == key {
                    keys.push(key);
                } else {
                    *skipped += 1;
                }
            }
            Err(_) => *skipped += 1,
        }
    };
    match filter {
        All => unreachable!("expand All before enumerating"),
        Alternating => {
            for n in 5..=ranges.alternating_n_max {
                push(GroupKey::Alternating(n), skipped);
            }
        }
        Sporadic => {
            for s in crate::group_id::Sporadic::ALL {
                push(GroupKey::Sporadic(s), skipped);
            }
        }
        Linear => {
            for n in 2..=ranges.linear_unitary_n_max {
                for &q in &pps {
                    push(GroupKey::Linear { n, q }, skipped);
                }
            }
        }
        Unitary => {
            for n in 3..=ranges.linear_unitary_n_max {
                for &q in &pps {
                    push(GroupKey::Unitary { n, q }, skipped);
                }
            }
        }
        Symplectic => {
            for n in (4..=ranges.symplectic_orthogonal_n_max).step_by(2) {
                for &q in &pps {
                    push(GroupKey::Symplectic { n, q }, skipped);
                }
            }
        }
        OrthogonalOdd => {
            for n in (7..=ranges.symplectic_orthogonal_n_max).step_by(2) {
                for &q in &pps {
                    push(GroupKey::OrthogonalOdd { n, q }, skipped);
                }
            }
        }
        OrthogonalPlus => {
            for n in (8..=ranges.symplectic_orthogonal_n_max).step_by(2) {
                for &q in &pps {
                    push(GroupKey::OrthogonalPlus { n, q }, skipped);
                }
            }
        }
        OrthogonalMinus => {
            for n in (8..=ranges.symplectic_orthogonal_n_max).step_by(2) {
                for &q in &pps {
                    push(GroupKey::OrthogonalMinus { n, q }, skipped);
                }
            }
        }
        G2 => pps.iter().for_each(|&q| push(GroupKey::G2(q), skipped)),
        F4 => pps.iter().for_each(|&q| push(GroupKey::F4(q), skipped)),
        E6 => e_pps.iter().for_each(|&q| push(GroupKey::E6(q), skipped)),
        E7 => e_pps.iter().for_each(|&q| push(GroupKey::E7(q), skipped)),
        E8 => e_pps.iter().for_each(|&q| push(GroupKey::E8(q), skipped)),
        TwistedB2 => pps
            .iter()
            .for_each(|&q| push(GroupKey::TwistedB2(q), skipped)),
        TwistedG2 => pps
            .iter()
            .for_each(|&q| push(GroupKey::TwistedG2(q), skipped)),
        TwistedD4 => pps
            .iter()
            .for_each(|&q| push(GroupKey::TwistedD4(q), skipped)),
        TwistedE6 => e_pps
            .iter()
            .for_each(|&q| push(GroupKey::TwistedE6(q), skipped)),
        TwistedF4 => pps
            .iter()
            .for_each(|&q| push(GroupKey::TwistedF4(q), skipped)),
    }
}

pub fn enumerate_keys(filter: FamilyFilter, ranges: &SweepRanges) -> (Vec<GroupKey>, u64) {
    let mut keys = Vec::new();
    let mut skipped = 0u64;
    if filter == FamilyFilter::All {
        use FamilyFilter::*;
        for f in [
            Alternating,
            Sporadic,
            Linear,
            Unitary,
            Symplectic,
            OrthogonalOdd,
            OrthogonalPlus,
            OrthogonalMinus,
            G2,
            F4,
            E6,
            E7,
            E8,
            TwistedB2,
            TwistedG2,
            TwistedD4,
            TwistedE6,
            TwistedF4,
        ] {
            enumerate_family(f, ranges, &mut keys, &mut skipped);
        }
    } else {
        enumerate_family(filter, ranges, &mut keys, &mut skipped);
    }
    keys.sort();
    keys.dedup();
    (keys, skipped)
}

/// The refined bound |Out| <= log2 l(S) is asserted only outside this list.
/// The unitary entry for n = 5 in characteristic 3 is carried in full
/// (every field size), the conservative reading of its published form.
pub fn a5_excluded(key: GroupKey) -> bool {
    use GroupKey::*;
    match canonical_key(key) {
        Alternating(6) => true,
        Linear { n, q } => {
            (n >= 3 && matches!(q.p, 2 | 3 | 5 | 7) && gcd(n as u64, q.q - 1) > 1)
                || (n == 2 && q.p == 3)
        }
        Unitary { n, q } => {
            (n == 3 && q.p == 3)
                || (n == 3 && q.q == 5)
                || (n >= 4 && q.p == 2 && q.f > 1 && gcd(n as u64, q.q + 1) > 1)
                || (n == 5 && q.p == 3)
        }
        OrthogonalPlus { n: 8, q } => matches!(q.p, 3 | 5 | 7 | 11 | 13),
        _ => false,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepFailure {
    pub key: String,
    pub lhs: String,
    pub rhs: String,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub clause: SweepClause,
    pub family: String,
    pub ranges: SweepRanges,
    pub candidates: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    /// A5 only: how many groups the exclusion list removed, and how many of
    /// those would have passed the refined bound anyway.
    pub excluded: u64,
    pub excluded_would_pass: u64,
    pub all_pass: bool,
    pub failures: Vec<SweepFailure>,
    pub wall_ms: u128,
}

/// Per-group record emitted on the streaming interfaces.
#[derive(Debug, Clone, Serialize)]
pub struct GroupRecord {
    pub key: String,
    pub order: String,
    pub mindeg: String,
    pub out_order: u64,
    pub label: ClassLabel,
    pub v: Option<String>,
    pub clauses: HashMap<String, bool>,
}

pub fn group_record(key: GroupKey, clause: SweepClause, pass: Option<bool>) -> GroupRecord {
    let label = classification::classify(key);
    let v = classification::v_index(key).ok().map(|v| v.to_string());
    let mut clauses = HashMap::new();
    if let Some(p) = pass {
        clauses.insert(clause.to_string(), p);
    }
    GroupRecord {
        key: key.render(),
        order: invariants::order(key).to_string(),
        mindeg: invariants::mindeg(key).to_string(),
        out_order: invariants::out_order(key),
        label,
        v,
        clauses,
    }
}

/// Outcome of one clause evaluation.
enum ClauseOutcome {
    Pass,
    Fail(SweepFailure),
    Skip,
    Excluded { would_pass: bool },
}

fn evaluate_clause(
    clause: SweepClause,
    key: GroupKey,
    ranges: &SweepRanges,
    b_cache: &mut HashMap<GroupRecipe, u64>,
) -> ClauseOutcome {
    match clause {
        SweepClause::A4a => {
            let ell = invariants::mindeg(key);
            let order = invariants::order(key);
            if &ell * &ell < order {
                ClauseOutcome::Pass
            } else {
                ClauseOutcome::Fail(SweepFailure {
                    key: key.render(),
                    lhs: format!("mindeg^2 = {}", &ell * &ell),
                    rhs: format!("order = {}", invariants::order(key)),
                    note: "mindeg^2 < order violated".into(),
                })
            }
        }
        SweepClause::A4b => {
            let ell = invariants::mindeg(key);
            let out = invariants::out_order(key);
            if exact_cmp::cmp_linear_log(out, &ell, 3) {
                ClauseOutcome::Pass
            } else {
                ClauseOutcome::Fail(SweepFailure {
                    key: key.render(),
                    lhs: format!("2^|Out| = 2^{out}"),
                    rhs: format!("mindeg^3 = {}", ell.pow(3)),
                    note: "|Out| <= 3 log2 mindeg violated".into(),
                })
            }
        }
        SweepClause::A5 => {
            let ell = invariants::mindeg(key);
            let out = invariants::out_order(key);
            let pass = exact_cmp::cmp_linear_log(out, &ell, 1);
            if a5_excluded(key) {
                ClauseOutcome::Excluded { would_pass: pass }
            } else if pass {
                ClauseOutcome::Pass
            } else {
                ClauseOutcome::Fail(SweepFailure {
                    key: key.render(),
                    lhs: format!("2^|Out| = 2^{out}"),
                    rhs: format!("mindeg = {ell}"),
                    note: "refined bound |Out| <= log2 mindeg violated outside the exclusion list"
                        .into(),
                })
            }
        }
        SweepClause::A23 => {
            if classification::classify(key) == ClassLabel::Neither {
                return ClauseOutcome::Skip;
            }
            let v = classification::v_index(key).expect("X/Y member has v");
            let ell = invariants::mindeg(key);
            if v <= &ell * &ell {
                ClauseOutcome::Pass
            } else {
                ClauseOutcome::Fail(SweepFailure {
                    key: key.render(),
                    lhs: format!("v = {v}"),
                    rhs: format!("mindeg^2 = {}", &ell * &ell),
                    note: "v <= mindeg^2 violated".into(),
                })
            }
        }
        SweepClause::B => {
            let out = invariants::out_order(key);
            if out > ranges.out_order_cap {
                return ClauseOutcome::Skip;
            }
            let recipe = out_groups::out_recipe(key);
            let count = match b_cache.get(&recipe) {
                Some(&c) => c,
                None => {
                    let table = out_groups::realize(&recipe, ranges.out_order_cap)
                        .expect("outer order is within the cap");
                    assert_eq!(
                        table.n as u64,
                        out,
                        "realized outer group disagrees with the order formula for {key}"
                    );
                    let c = out_groups::count_subgroups(&table)
                        .expect("subgroup enumeration within cap");
                    b_cache.insert(recipe, c);
                    c
                }
            };
            let ell = invariants::mindeg(key);
            let (pass, _ev) = exact_cmp::cmp_cubed_log(count, &ell);
            if pass {
                ClauseOutcome::Pass
            } else {
                ClauseOutcome::Fail(SweepFailure {
                    key: key.render(),
                    lhs: format!("subgroup count = {count}"),
                    rhs: format!("(log2 {ell})^3"),
                    note: "subgroup count <= (log2 mindeg)^3 violated".into(),
                })
            }
        }
    }
}

/// Evaluate a clause over every valid canonical key in range. The optional
/// callback receives one record per evaluated group (for streaming output).
pub fn sweep(
    clause: SweepClause,
    filter: FamilyFilter,
    ranges: &SweepRanges,
    mut per_group: Option<&mut dyn FnMut(&GroupRecord)>,
) -> SweepReport {
    let started = Instant::now();
    let (keys, invalid_skipped) = enumerate_keys(filter, ranges);
    let mut report = SweepReport {
        clause,
        family: format!("{filter:?}"),
        ranges: ranges.clone(),
        candidates: invalid_skipped,
        passed: 0,
        failed: 0,
        skipped: invalid_skipped,
        excluded: 0,
        excluded_would_pass: 0,
        all_pass: true,
        failures: Vec::new(),
        wall_ms: 0,
    };
    let mut b_cache: HashMap<GroupRecipe, u64> = HashMap::new();
    for &key in &keys {
        report.candidates += 1;
        let outcome = evaluate_clause(clause, key, ranges, &mut b_cache);
        let pass_flag = match &outcome {
            ClauseOutcome::Pass => {
                report.passed += 1;
                Some(true)
            }
            ClauseOutcome::Fail(f) => {
                report.failed += 1;
                report.failures.push(f.clone());
                Some(false)
            }
            ClauseOutcome::Skip => {
                report.skipped += 1;
                None
            }
            ClauseOutcome::Excluded { would_pass } => {
                report.skipped += 1;
                report.excluded += 1;
                if *would_pass {
                    report.excluded_would_pass += 1;
                }
                None
            }
        };
        if let Some(cb) = per_group.as_deref_mut() {
            cb(&group_record(key, clause, pass_flag));
        }
    }
    report.all_pass = report.failures.is_empty();
    report.wall_ms = started.elapsed().as_millis();
    report
}

/// Evidence for the subgroup-index remark on the n-dimensional linear groups
/// over GF(2) at prime n: the index of the ordinary field-extension subgroup
/// GL1(2^n):n exceeds l(S)^((n-1)/2).
#[derive(Debug, Clone, Serialize)]
pub struct PslN2Evidence {
    pub n: u32,
    #[serde(serialize_with = "ser_biguint")]
    pub index: BigUint,
    #[serde(serialize_with = "ser_biguint")]
    pub mindeg_power: BigUint,
    pub holds: bool,
}

pub fn remark_psl_n2(n: u32) -> Result<PslN2Evidence> {
    if !is_prime(u64::from(n)) {
        return Err(Error::NotPrime(u64::from(n)));
    }
    if !(5..=31).contains(&n) {
        return Err(Error::OutOfRange(format!("n = {n} outside 5..=31")));
    }
    // |S : GL1(2^n):n| = (2^n - 2)(2^n - 4)...(2^n - 2^(n-1)) / n
    let two_n = BigUint::from(2u32).pow(n);
    let mut index = BigUint::from(1u32);
    for i in 1..n {
        index *= &two_n - BigUint::from(2u32).pow(i);
    }
    let index = invariants::exact_div(index, &BigUint::from(n));
    let ell = &two_n - 1u32; // index of the point-stabilizer parabolic
    let power = ell.pow((n - 1) / 2);
    Ok(PslN2Evidence {
        n,
        holds: index > power,
        index,
        mindeg_power: power,
    })
}

/// One row of the tightness table for PSL(m, 2^f) with m | 2^f - 1: the
/// ratio log2(l(S)) / (2 m f), which approaches (m-1)/2m from above as f
/// grows. Reported, not asserted.
#[derive(Debug, Clone, Serialize)]
pub struct TightnessRow {
    pub f: u32,
    #[serde(serialize_with = "ser_biguint")]
    pub mindeg: BigUint,
    pub ratio: RatioBracket,
    pub ratio_mid: f64,
}

pub fn tightness_report(m: u32, f_max: u32) -> Result<Vec<TightnessRow>> {
    if m < 3 {
        return Err(Error::OutOfRange("tightness table needs m >= 3".into()));
    }
    let mut rows = Vec::new();
    for f in 1..=f_max {
        // admissible when m divides 2^f - 1
        let mut pow = 1u64;
        for _ in 0..f {
            pow = pow * 2 % u64::from(m);
        }
        if pow != 1 {
            continue;
        }
        let ell = invariants::exact_div(
            BigUint::from(2u32).pow(m * f) - 1u32,
            &(BigUint::from(2u32).pow(f) - 1u32),
        );
        let bracket: DyadicBracket = exact_cmp::log2_bracket(&ell, 48);
        let ratio = exact_cmp::scale_down(&bracket, 2 * u64::from(m) * u64::from(f));
        let mid = ratio.midpoint_f64();
        rows.push(TightnessRow {
            f,
            mindeg: ell,
            ratio,
            ratio_mid: mid,
        });
    }
    Ok(rows)
}

/// Dyadic enclosure of log|S| / log l(S), width at most 1e-4.
pub fn exponent_ratio(key: GroupKey) -> RatioBracket {
    let key = canonical_key(key);
    let order = invariants::order(key);
    let ell = invariants::mindeg(key);
    exact_cmp::log_ratio_bracket(&order, &ell, 1e-4)
}

/// Names of the sporadic fixtures, for CLI listings.
pub fn sporadic_names() -> Vec<&'static str> {
    Sporadic::ALL.iter().map(|s| s.as_str()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_id::parse_group;

    #[test]
    fn enumerate_counts_look_sane() {
        let ranges = SweepRanges::default();
        let (keys, _) = enumerate_keys(FamilyFilter::All, &ranges);
        assert!(keys.len() >= 5_000, "only {} groups enumerated", keys.len());
        // aliases must not appear
        for &k in &keys {
            assert_eq!(canonical_key(k), k);
        }
    }

    #[test]
    fn linear_sweep_example() {
        let ranges = SweepRanges::default().with_n_max(10).with_q_max(128);
        let report = sweep(SweepClause::A4a, FamilyFilter::Linear, &ranges, None);
        assert!(report.all_pass, "failures: {:?}", report.failures);
        assert!(report.passed > 150);
        assert_eq!(
            report.candidates,
            report.passed + report.failed + report.skipped
        );
    }

    #[test]
    fn remark_psl_n2_examples() {
        let ev = remark_psl_n2(5).unwrap();
        assert!(ev.holds);
        assert_eq!(ev.index, BigUint::from(64_512u64));
        assert_eq!(ev.mindeg_power, BigUint::from(961u64));
        let ev = remark_psl_n2(7).unwrap();
        assert!(ev.holds);
        assert!(matches!(remark_psl_n2(4), Err(Error::NotPrime(4))));
        assert!(matches!(remark_psl_n2(37), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn tightness_rows() {
        let rows = tightness_report(3, 8).unwrap();
        // admissible f for m = 3 are the even ones
        let fs: Vec<u32> = rows.iter().map(|r| r.f).collect();
        assert_eq!(fs, vec![2, 4, 6, 8]);
        assert_eq!(rows[0].mindeg, BigUint::from(21u32));
        assert!((rows[0].ratio_mid - 0.36603).abs() < 1e-3);
        assert_eq!(rows[1].mindeg, BigUint::from(273u32));
        assert!((rows[1].ratio_mid - 0.33719).abs() < 1e-3);
    }

    #[test]
    fn exponent_ratio_examples() {
        let r = exponent_ratio(parse_group("J3").unwrap());
        assert!(r.contains_f64(2.0323, 1e-4));
        let r = exponent_ratio(parse_group("Alt(5)").unwrap());
        assert!(r.contains_f64(2.5437, 1e-3));
    }

    #[test]
    fn exponent_ratio_exceeds_two_iff_a4a() {
        for name in ["Alt(5)", "M12", "J3", "Th", "PSL(2,13)", "2B2(8)"] {
            let key = parse_group(name).unwrap();
            let r = exponent_ratio(key);
            let ell = invariants::mindeg(key);
            let a4a = &ell * &ell < invariants::order(key);
            assert_eq!(r.lo_f64() > 2.0, a4a, "{name}");
        }
    }
}
