//! Exact verdicts for the logarithmic inequalities. No floating point enters
//! any decision: linear bounds a <= k*log2(l) reduce to the integer power
//! comparison 2^a <= l^k, and the cubed bound s <= (log2 l)^3 is decided by
//! enclosing log2(l) between dyadic rationals obtained from directed
//! square-and-shift iteration, refining until the cube separates strictly.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// Record of one linear-log comparison "lhs <= multiplier * log2(base)".
#[derive(Debug, Clone, Serialize)]
pub struct LogComparison {
    pub lhs: u64,
    #[serde(serialize_with = "crate::sweep::ser_biguint")]
    pub rhs_base: BigUint,
    pub rhs_multiplier: u32,
    pub verdict: bool,
}

/// a <= k * log2(l), decided as 2^a <= l^k in exact integers.
pub fn cmp_linear_log(a: u64, ell: &BigUint, k: u32) -> bool {
    assert!(*ell >= BigUint::from(2u32), "base must be >= 2");
    assert!(k >= 1);
    let a32 = u32::try_from(a).expect("exponent fits u32");
    BigUint::one() << a32 <= ell.pow(k)
}

pub fn linear_log_comparison(a: u64, ell: &BigUint, k: u32) -> LogComparison {
    LogComparison {
        lhs: a,
        rhs_base: ell.clone(),
        rhs_multiplier: k,
        verdict: cmp_linear_log(a, ell, k),
    }
}

/// A dyadic enclosure lo/2^k <= log2(v) <= hi/2^k.
#[derive(Debug, Clone, Serialize)]
pub struct DyadicBracket {
    pub frac_bits: u32,
    #[serde(serialize_with = "crate::sweep::ser_biguint")]
    pub lo: BigUint,
    #[serde(serialize_with = "crate::sweep::ser_biguint")]
    pub hi: BigUint,
}

impl DyadicBracket {
    pub fn lo_f64(&self) -> f64 {
        dyadic_to_f64(&self.lo, self.frac_bits)
    }
    pub fn hi_f64(&self) -> f64 {
        dyadic_to_f64(&self.hi, self.frac_bits)
    }
    /// Width as an f64 (display only).
    pub fn width_f64(&self) -> f64 {
        self.hi_f64() - self.lo_f64()
    }
}

fn dyadic_to_f64(num: &BigUint, frac_bits: u32) -> f64 {
    // keep 64 significant bits; exponent arithmetic in f64 is fine for display
    let bits = num.bits();
    if bits == 0 {
        return 0.0;
    }
    let shift = bits.saturating_sub(53);
    let top: u64 = ((num >> shift) & BigUint::from(u64::MAX)).try_into().unwrap();
    top as f64 * 2f64.powi(shift as i32 - frac_bits as i32)
}

/// Enclose log2(v) between dyadic rationals with denominator 2^frac_bits.
/// Runs two directed square-and-shift iterations (floor for the lower bound,
/// ceiling for the upper), carrying 64 guard bits, and pads the result by one
/// unit in the last place on each side.
pub fn log2_bracket(v: &BigUint, frac_bits: u32) -> DyadicBracket {
    assert!(!v.is_zero(), "log of zero");
    if v.is_one() {
        return DyadicBracket {
            frac_bits,
            lo: BigUint::zero(),
            hi: BigUint::zero(),
        };
    }
    let e = (v.bits() - 1) as u32; // integer part of log2
    if v == &(BigUint::one() << e) {
        let exact = BigUint::from(e) << frac_bits;
        return DyadicBracket {
            frac_bits,
            lo: exact.clone(),
            hi: exact,
        };
    }
    let guard = 64u32;
    let p = frac_bits + guard;
    let two_p1 = BigUint::one() << (p + 1);

    // lower: floor rounding throughout; the accumulator starts at the
    // integer part and picks up one fractional bit per squaring
    let mut x = (v << p) >> e;
    let mut lo = BigUint::from(e);
    for _ in 0..frac_bits {
        x = (&x * &x) >> p;
        lo <<= 1;
        if x >= two_p1 {
            x >>= 1;
            lo += 1u32;
        }
    }

    // upper: ceiling rounding throughout
    let ceil_shr = |n: &BigUint, s: u32| -> BigUint {
        let mask = (BigUint::one() << s) - 1u32;
        if (n & &mask).is_zero() {
            n >> s
        } else {
            (n >> s) + 1u32
        }
    };
    let mut x = ceil_shr(&(v << p), e);
    let mut hi = BigUint::from(e);
    for _ in 0..frac_bits {
        x = ceil_shr(&(&x * &x), p);
        hi <<= 1;
        if x >= two_p1 {
            x = ceil_shr(&x, 1);
            hi += 1u32;
        }
    }
    // the residual normalized value still carries a fractional log in [0,1),
    // so the upper side must round up; pad both sides one more ulp for the
    // accumulated guard-bit drift
    let lo = if lo.is_zero() { lo } else { lo - 1u32 };
    let hi = hi + 2u32;
    debug_assert!(lo <= hi);
    DyadicBracket { frac_bits, lo, hi }
}

/// Evidence for a cubed-log verdict.
#[derive(Debug, Clone, Serialize)]
pub enum CubedLogEvidence {
    /// l = 2^e, so the comparison is s <= e^3 in plain integers.
    PowerOfTwo { exponent: u32 },
    /// The dyadic enclosure that separated s from (log2 l)^3.
    Bracket(DyadicBracket),
}

/// s <= (log2 l)^3, decided exactly. For l a power of two this is an integer
/// comparison; otherwise the dyadic bracket is refined until the cube
/// separates (an integer s can only equal the cube when l is a power of two,
/// so the refinement terminates).
pub fn cmp_cubed_log(s: u64, ell: &BigUint) -> (bool, CubedLogEvidence) {
    assert!(*ell >= BigUint::from(2u32), "base must be >= 2");
    assert!(s >= 1);
    let e = (ell.bits() - 1) as u32;
    if ell == &(BigUint::one() << e) {
        let verdict = BigUint::from(s) <= BigUint::from(e).pow(3);
        return (verdict, CubedLogEvidence::PowerOfTwo { exponent: e });
    }
    let mut frac_bits = 16u32;
    loop {
        let bracket = log2_bracket(ell, frac_bits);
        let s_scaled = BigUint::from(s) << (3 * frac_bits);
        if s_scaled <= bracket.lo.pow(3) {
            return (true, CubedLogEvidence::Bracket(bracket));
        }
        if s_scaled > bracket.hi.pow(3) {
            return (false, CubedLogEvidence::Bracket(bracket));
        }
        frac_bits *= 2;
        assert!(
            frac_bits <= 4096,
            "cubed-log bracket refinement failed to separate"
        );
    }
}

/// Dyadic enclosure of the ratio log2(num) / log2(den), refined until its
/// width is at most `width` (e.g. 1e-4).
#[derive(Debug, Clone, Serialize)]
pub struct RatioBracket {
    pub frac_bits: u32,
    #[serde(serialize_with = "crate::sweep::ser_biguint")]
    pub lo: BigUint,
    #[serde(serialize_with = "crate::sweep::ser_biguint")]
    pub hi: BigUint,
}

impl RatioBracket {
    pub fn lo_f64(&self) -> f64 {
        dyadic_to_f64(&self.lo, self.frac_bits)
    }
    pub fn hi_f64(&self) -> f64 {
        dyadic_to_f64(&self.hi, self.frac_bits)
    }
    pub fn midpoint_f64(&self) -> f64 {
        (self.lo_f64() + self.hi_f64()) / 2.0
    }
    pub fn contains_f64(&self, x: f64, slack: f64) -> bool {
        self.lo_f64() - slack <= x && x <= self.hi_f64() + slack
    }
}

pub fn log_ratio_bracket(num: &BigUint, den: &BigUint, width: f64) -> RatioBracket {
    assert!(*num >= BigUint::from(2u32) && *den >= BigUint::from(2u32));
    let mut k = 32u32;
    loop {
        let a = log2_bracket(num, k);
        let b = log2_bracket(den, k);
        if !b.lo.is_zero() {
            let lo = (&a.lo << k) / &b.hi;
            let hi = (&a.hi << k) / &b.lo + 1u32;
            let bracket = RatioBracket {
                frac_bits: k,
                lo,
                hi,
            };
            if bracket.hi_f64() - bracket.lo_f64() <= width {
                return bracket;
            }
        }
        k *= 2;
        assert!(k <= 1 << 14, "ratio bracket failed to converge");
    }
}

/// Divide a ratio bracket by an exact integer (used for the tightness table,
/// where the denominator 2mf is exact).
pub fn scale_down(b: &DyadicBracket, den: u64) -> RatioBracket {
    // extend precision so the division keeps the width small
    let extra = 32u32;
    let k = b.frac_bits + extra;
    let lo = (&b.lo << extra) / den;
    let hi = (&b.hi << extra) / den + 1u32;
    RatioBracket {
        frac_bits: k,
        lo,
        hi,
    }
}
