//! Arbitrary-precision rational scalars and small integer helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. `BigRational` keeps the fraction reduced with a
/// positive denominator, which is exactly the canonical form we need.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Renders a rational as `num/den` with an explicit denominator, `den > 0`.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from(n))
        }
    }
}

/// Exact integer square root test.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root, if one exists.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    let n = perfect_sqrt(r.numer())?;
    let d = perfect_sqrt(r.denom())?;
    Some(Rat::new(n, d))
}

/// Splits a non-zero integer as `n = sign * c^2 * m` with `m` square-free
/// and positive `c`; returns `(m_signed, c)` where `m_signed` carries the
/// sign of `n`.
///
/// Factorization is by trial division, which is ample for the coefficient
/// sizes this library meets (frame norms of small rational vectors).
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero(), "square-free split of zero");
    let negative = n.is_negative();
    let mut rest = n.abs();
    let mut sf = BigInt::one();
    let mut sq = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            if e % 2 == 1 {
                sf *= &p;
            }
            sq *= p.pow(e / 2);
        }
        p += 1u32;
    }
    if !rest.is_one() {
        sf *= rest;
    }
    if negative {
        sf = -sf;
    }
    (sf, sq)
}

/// Writes `sqrt(r)` for a rational `r` as `c * sqrt(m)` with square-free
/// integer `m` (carrying the sign of `r`) and rational `c > 0`.
/// `m == 1` means the root is rational.
pub fn sqrt_as_radical(r: &Rat) -> (BigInt, Rat) {
    assert!(!r.is_zero());
    // sqrt(p/q) = sqrt(p*q)/q
    let pq = r.numer() * r.denom();
    let (m, c) = squarefree_decompose(&pq);
    (m, Rat::new(c, r.denom().clone()))
}

pub fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_num_den() {
        let r = rat(-3, 5);
        assert_eq!(rat_to_string(&r), "-3/5");
        assert_eq!(rat_from_str("-3/5").unwrap(), r);
        assert_eq!(rat_from_str("7").unwrap(), rat_int(7));
        assert!(rat_from_str("1/0").is_none());
    }

    #[test]
    fn radical_normalization() {
        // sqrt(25) = 5
        let (m, c) = sqrt_as_radical(&rat_int(25));
        assert_eq!(m, BigInt::from(1));
        assert_eq!(c, rat_int(5));
        // sqrt(8) = 2*sqrt(2)
        let (m, c) = sqrt_as_radical(&rat_int(8));
        assert_eq!(m, BigInt::from(2));
        assert_eq!(c, rat_int(2));
        // sqrt(1/2) = (1/2) sqrt(2)
        let (m, c) = sqrt_as_radical(&rat(1, 2));
        assert_eq!(m, BigInt::from(2));
        assert_eq!(c, rat(1, 2));
    }
}
