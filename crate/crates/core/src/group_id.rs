//! Identifiers of finite simple groups: parsing, simplicity validation, and
//! canonicalization across the exceptional isomorphisms.
//!
//! A group is named by its family plus integer parameters, e.g. `PSL(3,4)`,
//! `O+(8,2)`, `2B2(32)`, or a sporadic name such as `M12` or `2F4(2)'`.
//! Parameters `q` must be prime powers; non-simple parameter combinations are
//! rejected rather than silently redirected (the lone exception being the Tits
//! group, which is accepted under its sporadic name).

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A prime power q = p^f with p verified prime by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    pub p: u64,
    pub f: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn new(p: u64, f: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if f == 0 {
            return Err(Error::OutOfRange("exponent f must be >= 1".into()));
        }
        let q = checked_pow(p, f)
            .ok_or_else(|| Error::OutOfRange(format!("{p}^{f} overflows u64")))?;
        Ok(PrimePower { p, f, q })
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "{}", self.q)
    }
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Factor q as p^f with p prime, by trial division.
pub fn factor_prime_power(q: u64) -> Result<PrimePower> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 0u64;
    let mut d = 2u64;
    while d.saturating_mul(d) <= q {
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        // q itself is prime
        return PrimePower::new(q, 1);
    }
    let mut rest = q;
    let mut f = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    PrimePower::new(p, f)
}

/// The 26 sporadic simple groups plus the Tits group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(clippy::upper_case_acronyms)]
pub enum Sporadic {
    M11,
    M12,
    M22,
    M23,
    M24,
    J1,
    J2,
    J3,
    J4,
    Co1,
    Co2,
    Co3,
    Fi22,
    Fi23,
    Fi24Prime,
    HS,
    McL,
    He,
    Ru,
    Suz,
    ON,
    HN,
    Ly,
    Th,
    B,
    M,
    Tits,
}

impl Sporadic {
    pub const ALL: [Sporadic; 27] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::M22,
        Sporadic::M23,
        Sporadic::M24,
        Sporadic::J1,
        Sporadic::J2,
        Sporadic::J3,
        Sporadic::J4,
        Sporadic::Co1,
        Sporadic::Co2,
        Sporadic::Co3,
        Sporadic::Fi22,
        Sporadic::Fi23,
        Sporadic::Fi24Prime,
        Sporadic::HS,
        Sporadic::McL,
        Sporadic::He,
        Sporadic::Ru,
        Sporadic::Suz,
        Sporadic::ON,
        Sporadic::HN,
        Sporadic::Ly,
        Sporadic::Th,
        Sporadic::B,
        Sporadic::M,
        Sporadic::Tits,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Sporadic::M11 => "M11",
            Sporadic::M12 => "M12",
            Sporadic::M22 => "M22",
            Sporadic::M23 => "M23",
            Sporadic::M24 => "M24",
            Sporadic::J1 => "J1",
            Sporadic::J2 => "J2",
            Sporadic::J3 => "J3",
            Sporadic::J4 => "J4",
            Sporadic::Co1 => "Co1",
            Sporadic::Co2 => "Co2",
            Sporadic::Co3 => "Co3",
            Sporadic::Fi22 => "Fi22",
            Sporadic::Fi23 => "Fi23",
            Sporadic::Fi24Prime => "Fi24'",
            Sporadic::HS => "HS",
            Sporadic::McL => "McL",
            Sporadic::He => "He",
            Sporadic::Ru => "Ru",
            Sporadic::Suz => "Suz",
            Sporadic::ON => "O'N",
            Sporadic::HN => "HN",
            Sporadic::Ly => "Ly",
            Sporadic::Th => "Th",
            Sporadic::B => "B",
            Sporadic::M => "M",
            Sporadic::Tits => "2F4(2)'",
        }
    }

    pub fn from_name(name: &str) -> Option<Sporadic> {
        let lower = name.trim().to_ascii_lowercase();
        Sporadic::ALL
            .iter()
            .copied()
            .find(|s| s.as_str().to_ascii_lowercase() == lower)
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(self.as_str())
    }
}

/// Taxonomic identifier of a finite simple group. Construct through
/// [`GroupKey::new_validated`] helpers or [`parse_group`]; every constructor
/// enforces the simplicity constraints of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKey {
    Alternating(u32),
    Sporadic(Sporadic),
    Linear { n: u32, q: PrimePower },
    Unitary { n: u32, q: PrimePower },
    Symplectic { n: u32, q: PrimePower },
    OrthogonalOdd { n: u32, q: PrimePower },
    OrthogonalPlus { n: u32, q: PrimePower },
    OrthogonalMinus { n: u32, q: PrimePower },
    G2(PrimePower),
    F4(PrimePower),
    E6(PrimePower),
    E7(PrimePower),
    E8(PrimePower),
    TwistedB2(PrimePower),
    TwistedG2(PrimePower),
    TwistedD4(PrimePower),
    TwistedE6(PrimePower),
    TwistedF4(PrimePower),
}

impl GroupKey {
    /// Validate the simplicity constraints for this key.
    pub fn validate(self) -> Result<Self> {
        use GroupKey::*;
        match self {
            Alternating(n) if n < 5 => Err(Error::NotSimple(format!(
                "Alt({n}): alternating groups are simple only for n >= 5"
            ))),
            Alternating(_) | Sporadic(_) => Ok(self),
            Linear { n, q } => {
                if n < 2 {
                    Err(Error::NotSimple(format!("PSL({n},{q}): requires n >= 2")))
                } else if n == 2 && (q.q == 2 || q.q == 3) {
                    Err(Error::NotSimple(format!(
                        "PSL(2,{q}) is solvable, not simple"
                    )))
                } else {
                    Ok(self)
                }
            }
            Unitary { n, q } => {
                if n < 3 {
                    Err(Error::NotSimple(format!("PSU({n},{q}): requires n >= 3")))
                } else if n == 3 && q.q == 2 {
                    Err(Error::NotSimple("PSU(3,2) is solvable, not simple".into()))
                } else {
                    Ok(self)
                }
            }
            Symplectic { n, q } => {
                if n < 4 || n % 2 != 0 {
                    Err(Error::NotSimple(format!(
                        "PSp({n},{q}): requires even n >= 4"
                    )))
                } else if n == 4 && q.q == 2 {
                    Err(Error::NotSimple(
                        "Sp(4,2) ~ Sym(6) is not simple; its derived subgroup is Alt(6)".into(),
                    ))
                } else {
                    Ok(self)
                }
            }
            OrthogonalOdd { n, q } => {
                if n < 7 || n % 2 == 0 {
                    Err(Error::NotSimple(format!(
                        "O({n},{q}): odd-dimensional orthogonal groups are accepted for odd n >= 7 \
                         (smaller dimensions coincide with linear, unitary or symplectic groups)"
                    )))
                } else if q.p == 2 {
                    Err(Error::NotSimple(format!(
                        "O({n},{q}): in characteristic 2 the odd-dimensional group coincides with \
                         PSp({},{q})",
                        n - 1
                    )))
                } else {
                    Ok(self)
                }
            }
            OrthogonalPlus { n, q } | OrthogonalMinus { n, q } => {
                let sign = if matches!(self, OrthogonalPlus { .. }) {
                    "+"
                } else {
                    "-"
                };
                if n < 8 || n % 2 != 0 {
                    Err(Error::NotSimple(format!(
                        "O{sign}({n},{q}): even-dimensional orthogonal groups are accepted for \
                         even n >= 8 (smaller dimensions coincide with other families)"
                    )))
                } else {
                    Ok(self)
                }
            }
            G2(q) => {
                if q.q < 3 {
                    Err(Error::NotSimple(
                        "G2(2) is not simple; its derived subgroup is PSU(3,3)".into(),
                    ))
                } else {
                    Ok(self)
                }
            }
            F4(_) | E6(_) | E7(_) | E8(_) | TwistedD4(_) | TwistedE6(_) => Ok(self),
            TwistedB2(q) => {
                if q.p != 2 || q.f % 2 == 0 || q.f < 3 {
                    Err(Error::NotSimple(format!(
                        "2B2({q}): requires q = 2^f with odd f >= 3"
                    )))
                } else {
                    Ok(self)
                }
            }
            TwistedG2(q) => {
                if q.p != 3 || q.f % 2 == 0 || q.f < 3 {
                    Err(Error::NotSimple(format!(
                        "2G2({q}): requires q = 3^f with odd f >= 3 (2G2(3) is not simple)"
                    )))
                } else {
                    Ok(self)
                }
            }
            TwistedF4(q) => {
                if q.p != 2 || q.f % 2 == 0 || q.f < 3 {
                    Err(Error::NotSimple(format!(
                        "2F4({q}): requires q = 2^f with odd f >= 3; for the Tits group use the \
                         sporadic name 2F4(2)'"
                    )))
                } else {
                    Ok(self)
                }
            }
        }
    }

    /// Canonical rendering, accepted back by [`parse_group`].
    pub fn render(&self) -> String {
        use GroupKey::*;
        match self {
            Alternating(n) => format!("Alt({n})"),
            Sporadic(s) => s.as_str().to_string(),
            Linear { n, q } => format!("PSL({n},{q})"),
            Unitary { n, q } => format!("PSU({n},{q})"),
            Symplectic { n, q } => format!("PSp({n},{q})"),
            OrthogonalOdd { n, q } => format!("O({n},{q})"),
            OrthogonalPlus { n, q } => format!("O+({n},{q})"),
            OrthogonalMinus { n, q } => format!("O-({n},{q})"),
            G2(q) => format!("G2({q})"),
            F4(q) => format!("F4({q})"),
            E6(q) => format!("E6({q})"),
            E7(q) => format!("E7({q})"),
            E8(q) => format!("E8({q})"),
            TwistedB2(q) => format!("2B2({q})"),
            TwistedG2(q) => format!("2G2({q})"),
            TwistedD4(q) => format!("3D4({q})"),
            TwistedE6(q) => format!("2E6({q})"),
            TwistedF4(q) => format!("2F4({q})"),
        }
    }
}

impl fmt::Display for GroupKey {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(&self.render())
    }
}

/// Parse a group name. Case-insensitive; sporadic names take precedence over
/// the family grammar, so `2F4(2)'` is the Tits group while `2F4(2)` is a
/// (rejected) family instance.
pub fn parse_group(text: &str) -> Result<GroupKey> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Syntax("empty group name".into()));
    }
    if let Some(s) = Sporadic::from_name(trimmed) {
        return Ok(GroupKey::Sporadic(s));
    }

    let lower = trimmed.to_ascii_lowercase();
    let open = lower
        .find('(')
        .ok_or_else(|| Error::Syntax(format!("unrecognized group name `{trimmed}`")))?;
    if !lower.ends_with(')') {
        Err(Error::Syntax(format!("expected `)` at end of `{trimmed}`")))?;
    }
    let head = &lower[..open];
    let args: Vec<&str> = lower[open + 1..lower.len() - 1]
        .split(',')
        .map(|a| a.trim())
        .collect();

    let parse_u64 = |s: &str| -> Result<u64> {
        s.parse::<u64>()
            .map_err(|_| Error::Syntax(format!("`{s}` is not a positive integer")))
    };
    let one_arg = |args: &[&str]| -> Result<u64> {
        if args.len() != 1 {
            return Err(Error::Syntax(format!(
                "`{trimmed}` takes exactly one parameter"
            )));
        }
        parse_u64(args[0])
    };
    let two_args = |args: &[&str]| -> Result<(u64, u64)> {
        if args.len() != 2 {
            return Err(Error::Syntax(format!(
                "`{trimmed}` takes exactly two parameters"
            )));
        }
        Ok((parse_u64(args[0])?, parse_u64(args[1])?))
    };

    let key = match head {
        "alt" | "a" => {
            let n = one_arg(&args)?;
            GroupKey::Alternating(
                u32::try_from(n).map_err(|_| Error::OutOfRange(format!("Alt({n})")))?,
            )
        }
        "psl" | "l" => {
            let (n, q) = two_args(&args)?;
            GroupKey::Linear {
                n: n as u32,
                q: factor_prime_power(q)?,
            }
        }
        "psu" | "u" => {
            let (n, q) = two_args(&args)?;
            GroupKey::Unitary {
                n: n as u32,
                q: factor_prime_power(q)?,
            }
        }
        "psp" | "sp" | "s" => {
            let (n, q) = two_args(&args)?;
            GroupKey::Symplectic {
                n: n as u32,
                q: factor_prime_power(q)?,
            }
        }
        "o" => {
            let (n, q) = two_args(&args)?;
            GroupKey::OrthogonalOdd {
                n: n as u32,
                q: factor_prime_power(q)?,
            }
        }
        "o+" => {
            let (n, q) = two_args(&args)?;
            GroupKey::OrthogonalPlus {
                n: n as u32,
                q: factor_prime_power(q)?,
            }
        }
        "o-" => {
            let (n, q) = two_args(&args)?;
            GroupKey::OrthogonalMinus {
                n: n as u32,
                q: factor_prime_power(q)?,
            }
        }
        "g2" => GroupKey::G2(factor_prime_power(one_arg(&args)?)?),
        "f4" => GroupKey::F4(factor_prime_power(one_arg(&args)?)?),
        "e6" => GroupKey::E6(factor_prime_power(one_arg(&args)?)?),
        "e7" => GroupKey::E7(factor_prime_power(one_arg(&args)?)?),
        "e8" => GroupKey::E8(factor_prime_power(one_arg(&args)?)?),
        "2b2" | "sz" => GroupKey::TwistedB2(factor_prime_power(one_arg(&args)?)?),
        "2g2" | "r" => GroupKey::TwistedG2(factor_prime_power(one_arg(&args)?)?),
        "3d4" => GroupKey::TwistedD4(factor_prime_power(one_arg(&args)?)?),
        "2e6" => GroupKey::TwistedE6(factor_prime_power(one_arg(&args)?)?),
        "2f4" => GroupKey::TwistedF4(factor_prime_power(one_arg(&args)?)?),
        _ => {
            return Err(Error::Syntax(format!(
                "unrecognized family `{}` in `{trimmed}`",
                &trimmed[..open]
            )))
        }
    };
    key.validate()
}

/// Canonical representative of an isomorphism class, with the identifiers
/// that normalize to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGroup {
    pub key: GroupKey,
    pub aliases: Vec<GroupKey>,
}

type IsoTables = (HashMap<GroupKey, GroupKey>, HashMap<GroupKey, Vec<GroupKey>>);

/// The exceptional-isomorphism table, shipped as a fixture file of
/// `alias|canonical` records (see `data/isomorphisms.txt`).
fn iso_tables() -> &'static IsoTables {
    static TABLES: OnceLock<IsoTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let raw = include_str!("../data/isomorphisms.txt");
        let mut fwd = HashMap::new();
        let mut rev: HashMap<GroupKey, Vec<GroupKey>> = HashMap::new();
        for line in raw.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split('|');
            let alias = parse_group(parts.next().expect("alias column"))
                .expect("alias key in isomorphism table must be valid");
            let canonical = parse_group(parts.next().expect("canonical column"))
                .expect("canonical key in isomorphism table must be valid");
            fwd.insert(alias, canonical);
            rev.entry(canonical).or_default().push(alias);
        }
        for aliases in rev.values_mut() {
            aliases.sort();
        }
        (fwd, rev)
    })
}

/// Map a valid key to its canonical representative. Identifiers appearing in
/// the exceptional-isomorphism table are redirected (priority Alternating >
/// Linear > Unitary > Symplectic); everything else is its own representative.
pub fn normalize(key: GroupKey) -> CanonicalGroup {
    let (fwd, rev) = iso_tables();
    let canonical = fwd.get(&key).copied().unwrap_or(key);
    CanonicalGroup {
        key: canonical,
        aliases: rev.get(&canonical).cloned().unwrap_or_default(),
    }
}

/// Shorthand for `normalize(key).key`.
pub fn canonical_key(key: GroupKey) -> GroupKey {
    let (fwd, _) = iso_tables();
    fwd.get(&key).copied().unwrap_or(key)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_family_names() {
        let k = parse_group("PSL(3,4)").unwrap();
        match k {
            GroupKey::Linear { n, q } => {
                assert_eq!(n, 3);
                assert_eq!((q.p, q.f, q.q), (2, 2, 4));
            }
            other => panic!("wrong key {other:?}"),
        }
        assert_eq!(parse_group("alt(17)").unwrap(), GroupKey::Alternating(17));
        assert_eq!(
            parse_group("o+(8, 2)").unwrap(),
            GroupKey::OrthogonalPlus {
                n: 8,
                q: PrimePower::new(2, 1).unwrap()
            }
        );
        assert_eq!(
            parse_group("2b2(32)").unwrap(),
            GroupKey::TwistedB2(PrimePower::new(2, 5).unwrap())
        );
    }

    #[test]
    fn sporadic_names_roundtrip_and_shadow_families() {
        for s in Sporadic::ALL {
            assert_eq!(parse_group(s.as_str()).unwrap(), GroupKey::Sporadic(s));
            assert_eq!(
                parse_group(&s.as_str().to_ascii_lowercase()).unwrap(),
                GroupKey::Sporadic(s)
            );
        }
        // Tits group with the prime mark is sporadic; without it, a rejected
        // family member.
        assert_eq!(
            parse_group("2F4(2)'").unwrap(),
            GroupKey::Sporadic(Sporadic::Tits)
        );
        assert!(matches!(parse_group("2F4(2)"), Err(Error::NotSimple(_))));
    }

    #[test]
    fn rejects_non_simple_parameters() {
        assert!(matches!(parse_group("Sp(4,2)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("PSL(2,2)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("PSL(2,3)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("PSU(3,2)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("Alt(4)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("G2(2)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("2G2(3)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("O(6,3)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("O(7,2)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("O+(6,5)"), Err(Error::NotSimple(_))));
        assert!(matches!(parse_group("2B2(4)"), Err(Error::NotSimple(_))));
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(matches!(
            parse_group("PSL(2,6)"),
            Err(Error::NotPrimePower(6))
        ));
        assert!(matches!(
            parse_group("PSU(4,12)"),
            Err(Error::NotPrimePower(12))
        ));
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_group(""), Err(Error::Syntax(_))));
        assert!(matches!(parse_group("PSL(3)"), Err(Error::Syntax(_))));
        assert!(matches!(parse_group("PSL(3,4,5)"), Err(Error::Syntax(_))));
        assert!(matches!(parse_group("Q8(2)"), Err(Error::Syntax(_))));
        assert!(matches!(parse_group("PSL(3,4"), Err(Error::Syntax(_))));
    }

    #[test]
    fn factor_prime_power_examples() {
        let pp = factor_prime_power(8).unwrap();
        assert_eq!((pp.p, pp.f), (2, 3));
        let pp = factor_prime_power(343).unwrap();
        assert_eq!((pp.p, pp.f), (7, 3));
        assert!(matches!(
            factor_prime_power(12),
            Err(Error::NotPrimePower(12))
        ));
        assert!(matches!(factor_prime_power(1), Err(Error::NotPrimePower(1))));
        let pp = factor_prime_power(1021).unwrap(); // prime
        assert_eq!((pp.p, pp.f), (1021, 1));
    }

    #[test]
    fn normalization_examples() {
        let alt5 = parse_group("Alt(5)").unwrap();
        assert_eq!(canonical_key(parse_group("PSL(2,4)").unwrap()), alt5);
        assert_eq!(canonical_key(parse_group("PSL(2,5)").unwrap()), alt5);
        assert_eq!(
            canonical_key(parse_group("PSL(2,9)").unwrap()),
            parse_group("Alt(6)").unwrap()
        );
        assert_eq!(
            canonical_key(parse_group("PSL(4,2)").unwrap()),
            parse_group("Alt(8)").unwrap()
        );
        assert_eq!(
            canonical_key(parse_group("PSL(3,2)").unwrap()),
            parse_group("PSL(2,7)").unwrap()
        );
        assert_eq!(
            canonical_key(parse_group("PSp(4,3)").unwrap()),
            parse_group("PSU(4,2)").unwrap()
        );
        // fixed point
        let alt7 = parse_group("Alt(7)").unwrap();
        assert_eq!(canonical_key(alt7), alt7);
    }

    #[test]
    fn normalization_is_idempotent_on_table_entries() {
        for alias_line in include_str!("../data/isomorphisms.txt").lines() {
            let alias_line = alias_line.trim();
            if alias_line.is_empty() || alias_line.starts_with('#') {
                continue;
            }
            let alias = parse_group(alias_line.split('|').next().unwrap()).unwrap();
            let c1 = canonical_key(alias);
            assert_eq!(canonical_key(c1), c1);
        }
    }
}
