//! Univariate polynomial tools over the rationals: gcd, square-free
//! splitting, Sturm chains, real-root counting and isolation, and the
//! positivity-interval count used by the connectedness criterion.
//!
//! Polynomials are dense coefficient vectors, ascending in degree.

use super::rat::{big_gcd, rat_sqrt, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type UniPoly = Vec<Rat>;

#[derive(Debug, Error, PartialEq)]
pub enum UniError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

pub fn trim(p: &mut UniPoly) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

pub fn is_zero(p: &UniPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn degree(p: &UniPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn lead(p: &UniPoly) -> Option<&Rat> {
    degree(p).map(|d| &p[d])
}

pub fn add(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub fn neg(a: &UniPoly) -> UniPoly {
    a.iter().map(|c| -c.clone()).collect()
}

pub fn sub(a: &UniPoly, b: &UniPoly) -> UniPoly {
    add(a, &neg(b))
}

pub fn mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if is_zero(a) || is_zero(b) {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &UniPoly, c: &Rat) -> UniPoly {
    let mut out: UniPoly = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

pub fn constant(c: Rat) -> UniPoly {
    if c.is_zero() {
        vec![]
    } else {
        vec![c]
    }
}

pub fn derivative(p: &UniPoly) -> UniPoly {
    let mut out: UniPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rat::from(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

pub fn eval(p: &UniPoly, x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Euclidean division over Q; panics on zero divisor.
pub fn div_rem(a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let lb = b[db].clone();
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = vec![Rat::zero(); a.len().saturating_sub(db)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let q = &rem[dr] / &lb;
        for j in 0..=db {
            let v = &b[j] * &q;
            rem[dr - db + j] -= v;
        }
        quot[dr - db] = q;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn divides(b: &UniPoly, a: &UniPoly) -> bool {
    let (_, r) = div_rem(a, b);
    is_zero(&r)
}

/// Divides out rational content, keeping the sign of the leading
/// coefficient; used to bound growth in remainder chains.
fn primitive_keep_sign(p: &UniPoly) -> UniPoly {
    if is_zero(p) {
        return vec![];
    }
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in p {
        num = big_gcd(&num, c.numer());
        den = num_integer::lcm(den, c.denom().clone());
    }
    let c = Rat::new(num, den); // positive
    scale(p, &c.recip())
}

pub fn monic(p: &UniPoly) -> UniPoly {
    match lead(p) {
        None => vec![],
        Some(l) => scale(p, &l.recip()),
    }
}

/// Monic greatest common divisor. Errors only when both inputs are zero.
pub fn gcd_checked(a: &UniPoly, b: &UniPoly) -> Result<UniPoly, UniError> {
    if is_zero(a) && is_zero(b) {
        return Err(UniError::ZeroPolynomial);
    }
    Ok(gcd(a, b).unwrap())
}

/// Monic gcd; `None` if both inputs are zero.
pub fn gcd(a: &UniPoly, b: &UniPoly) -> Option<UniPoly> {
    if is_zero(a) && is_zero(b) {
        return None;
    }
    let mut f = primitive_keep_sign(a);
    let mut g = primitive_keep_sign(b);
    while !is_zero(&g) {
        let (_, r) = div_rem(&f, &g);
        f = g;
        g = primitive_keep_sign(&r);
    }
    Some(monic(&f))
}

/// Square-free (radical) part: distinct roots, multiplicity one.
pub fn radical(p: &UniPoly) -> UniPoly {
    let d = derivative(p);
    if is_zero(&d) {
        // constant
        return monic(p);
    }
    let g = gcd(p, &d).unwrap();
    let (q, _) = div_rem(p, &g);
    monic(&q)
}

/// Yun's square-free factorization: returns `a_1, a_2, ...` with
/// `p = lc * prod a_i^i` and the `a_i` monic, square-free, pairwise coprime.
pub fn yun_squarefree(p: &UniPoly) -> (Rat, Vec<UniPoly>) {
    let lc = lead(p).expect("zero polynomial").clone();
    let p = monic(p);
    if degree(&p) == Some(0) || p.is_empty() {
        return (lc, vec![]);
    }
    let dp = derivative(&p);
    let g = gcd(&p, &dp).unwrap();
    let (mut w, _) = div_rem(&p, &g);
    let (mut y, _) = div_rem(&dp, &g);
    let mut factors = Vec::new();
    loop {
        let z = sub(&y, &derivative(&w));
        if is_zero(&z) {
            factors.push(monic(&w));
            break;
        }
        let a = gcd(&w, &z).unwrap();
        factors.push(a.clone());
        let (w2, _) = div_rem(&w, &a);
        let (y2, _) = div_rem(&z, &a);
        w = w2;
        y = y2;
    }
    (lc, factors)
}

/// Splits `h = m * d^2` with `m` carrying the odd-multiplicity part (and
/// the leading unit) and `d` monic.
pub fn squarefree_square_split(h: &UniPoly) -> Result<(UniPoly, UniPoly), UniError> {
    if is_zero(h) {
        return Err(UniError::ZeroPolynomial);
    }
    let (_, factors) = yun_squarefree(h);
    let mut d = vec![Rat::one()];
    for (i, a) in factors.iter().enumerate() {
        let mult = (i + 1) as u32;
        for _ in 0..(mult / 2) {
            d = mul(&d, a);
        }
    }
    let d2 = mul(&d, &d);
    let (m, r) = div_rem(h, &d2);
    debug_assert!(is_zero(&r));
    Ok((m, d))
}

/// `p = q^2` test; returns `q` (with positive leading coefficient) or None.
pub fn poly_sqrt(p: &UniPoly) -> Option<UniPoly> {
    if is_zero(p) {
        return Some(vec![]);
    }
    let (m, d) = squarefree_square_split(p).ok()?;
    if degree(&m).unwrap_or(0) != 0 {
        return None;
    }
    let c = rat_sqrt(&m[0])?;
    Some(scale(&d, &c))
}

fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of the square-free part, remainders kept primitive (the
/// positive content is stripped so signs are preserved).
fn sturm_chain(h: &UniPoly) -> Vec<UniPoly> {
    let g = radical(h);
    if degree(&g).unwrap_or(0) == 0 {
        return vec![g];
    }
    let mut chain = vec![g.clone(), derivative(&g)];
    loop {
        let n = chain.len();
        let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
        if is_zero(&r) {
            break;
        }
        chain.push(primitive_keep_sign(&neg(&r)));
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn variations_at(chain: &[UniPoly], x: &Rat) -> usize {
    sign_changes(chain.iter().map(|p| sign(&eval(p, x))))
}

fn variations_at_inf(chain: &[UniPoly], positive: bool) -> usize {
    sign_changes(chain.iter().map(|p| match degree(p) {
        None => 0,
        Some(d) => {
            let s = sign(&p[d]);
            if positive || d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }))
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`,
/// or over all of R when no interval is given.
pub fn sturm_real_roots(h: &UniPoly, interval: Option<(&Rat, &Rat)>) -> Result<usize, UniError> {
    if is_zero(h) {
        return Err(UniError::ZeroPolynomial);
    }
    let chain = sturm_chain(h);
    match interval {
        None => Ok(variations_at_inf(&chain, false) - variations_at_inf(&chain, true)),
        Some((lo, hi)) => Ok(variations_at(&chain, lo) - variations_at(&chain, hi)),
    }
}

/// A bound B such that all real roots lie in (-B, B).
pub fn root_bound(p: &UniPoly) -> Rat {
    let d = degree(p).expect("zero polynomial");
    let lc = p[d].clone();
    let mut max = Rat::zero();
    for c in &p[..d] {
        let v = (c / &lc).abs();
        if v > max {
            max = v;
        }
    }
    max + Rat::one()
}

/// Disjoint, ordered isolating intervals `(lo, hi]` for the distinct real
/// roots of `h`; endpoints are never roots except that a rational root may
/// be returned as a degenerate interval via its exact value in `hi`.
pub fn isolate_real_roots(h: &UniPoly) -> Result<Vec<(Rat, Rat)>, UniError> {
    if is_zero(h) {
        return Err(UniError::ZeroPolynomial);
    }
    let g = radical(h);
    if degree(&g).unwrap_or(0) == 0 {
        return Ok(vec![]);
    }
    let chain = sturm_chain(h);
    let b = root_bound(&g);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b.clone())];
    // depth-first, left interval pushed last so output comes out ordered
    let mut pending: Vec<(Rat, Rat)> = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let n = variations_at(&chain, &lo) - variations_at(&chain, &hi);
        match n {
            0 => {}
            1 => pending.push((lo, hi)),
            _ => {
                let two = Rat::from(BigInt::from(2));
                let mut mid = (&lo + &hi) / &two;
                // nudge off a root so interval endpoints stay sign-definite
                let mut step = (&hi - &lo) / Rat::from(BigInt::from(64));
                while eval(&g, &mid).is_zero() {
                    mid += &step;
                    step /= &two;
                }
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    pending.sort_by(|a, b| a.0.cmp(&b.0));
    out.extend(pending);
    Ok(out)
}

/// Number of maximal open intervals of the real line where `h > 0`.
pub fn positive_intervals(h: &UniPoly) -> Result<usize, UniError> {
    if is_zero(h) {
        return Err(UniError::ZeroPolynomial);
    }
    let roots = isolate_real_roots(h)?;
    let b = match degree(h) {
        Some(0) => Rat::one(),
        _ => root_bound(&radical(h)),
    };
    // one sample strictly between consecutive roots, plus the two tails
    let mut samples = Vec::with_capacity(roots.len() + 2);
    samples.push(-&b - Rat::one());
    for w in roots.windows(2) {
        // the right endpoint of an isolating interval lies strictly between
        // its root and the next one, and is never a root itself... except
        // when the bisection returned an exact rational root; shift then.
        let mut s = w[0].1.clone();
        if eval(h, &s).is_zero() {
            let two = Rat::from(BigInt::from(2));
            let mut hi = w[1].0.clone();
            if eval(h, &hi).is_zero() {
                hi = (&s + &w[1].1) / &two;
            }
            loop {
                s = (&s + &hi) / &two;
                if !eval(h, &s).is_zero() {
                    break;
                }
            }
        }
        samples.push(s);
    }
    if !roots.is_empty() {
        samples.push(&b + Rat::one());
    }
    Ok(samples.iter().filter(|s| eval(h, s).is_positive()).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, rat_int};

    fn p(coeffs: &[i64]) -> UniPoly {
        let mut v: UniPoly = coeffs.iter().map(|&c| rat_int(c)).collect();
        trim(&mut v);
        v
    }

    // t^4 + 4t^3 + 6t^2 + 4t + 5 = (t+1)^4 + 4, positive everywhere
    fn quartic() -> UniPoly {
        p(&[5, 4, 6, 4, 1])
    }

    #[test]
    fn gcd_examples() {
        // (t^2-1, t-1) -> t-1
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        // (quartic, 1) -> 1
        assert_eq!(gcd(&quartic(), &p(&[1])).unwrap(), p(&[1]));
        // (t^3 - t, t^2 - 1) -> t^2 - 1 (oracle: t(t-1)(t+1) vs (t-1)(t+1))
        assert_eq!(gcd(&p(&[0, -1, 0, 1]), &p(&[-1, 0, 1])).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(gcd_checked(&vec![], &vec![]), Err(UniError::ZeroPolynomial));
    }

    #[test]
    fn squarefree_split_examples() {
        // quartic is square-free: (m, d) = (h, 1)
        let (m, d) = squarefree_square_split(&quartic()).unwrap();
        assert_eq!(m, quartic());
        assert_eq!(d, p(&[1]));
        // t^2 -> (1, t)
        let (m, d) = squarefree_square_split(&p(&[0, 0, 1])).unwrap();
        assert_eq!(m, p(&[1]));
        assert_eq!(d, p(&[0, 1]));
        // t^3 -> (t, t)
        let (m, d) = squarefree_square_split(&p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(m, p(&[0, 1]));
        assert_eq!(d, p(&[0, 1]));
        assert_eq!(squarefree_square_split(&vec![]), Err(UniError::ZeroPolynomial));
    }

    #[test]
    fn split_keeps_unit() {
        // 4t^2 -> m = 4, d = t, m*d^2 = h
        let (m, d) = squarefree_square_split(&p(&[0, 0, 4])).unwrap();
        assert_eq!(mul(&m, &mul(&d, &d)), p(&[0, 0, 4]));
        assert_eq!(m, p(&[4]));
    }

    #[test]
    fn sturm_examples() {
        // quartic has no real roots: (t+1)^4 + 4 > 0
        assert_eq!(sturm_real_roots(&quartic(), None).unwrap(), 0);
        // x^3 + 3x^2 - 2x = x(x^2+3x-2), discriminant 17 > 0 -> 3 roots
        assert_eq!(sturm_real_roots(&p(&[0, -2, 3, 1]), None).unwrap(), 3);
        // t^2 + 1 -> 0
        assert_eq!(sturm_real_roots(&p(&[1, 0, 1]), None).unwrap(), 0);
        // interval query: roots of x^2-2 in (0, 2]
        assert_eq!(
            sturm_real_roots(&p(&[-2, 0, 1]), Some((&rat_int(0), &rat_int(2)))).unwrap(),
            1
        );
    }

    #[test]
    fn positive_interval_examples() {
        // x^3 + 3x^2 - 2x: two positivity components
        assert_eq!(positive_intervals(&p(&[0, -2, 3, 1])).unwrap(), 2);
        assert_eq!(positive_intervals(&quartic()).unwrap(), 1);
        assert_eq!(positive_intervals(&p(&[-1, 0, -1])).unwrap(), 0);
        // even-multiplicity root splits an interval: t^2 -> 2
        assert_eq!(positive_intervals(&p(&[0, 0, 1])).unwrap(), 2);
    }

    #[test]
    fn poly_sqrt_recognizes_squares() {
        let g = p(&[1, 2]); // 2t + 1
        let g2 = mul(&g, &g);
        let r = poly_sqrt(&g2).unwrap();
        assert_eq!(mul(&r, &r), g2);
        assert!(poly_sqrt(&p(&[0, 1])).is_none());
        // rational square content: (3/2 t)^2
        let h = scale(&p(&[0, 0, 1]), &rat(9, 4));
        let r = poly_sqrt(&h).unwrap();
        assert_eq!(mul(&r, &r), h);
    }

    #[test]
    fn isolation_separates_roots() {
        // (x-1)(x-2)(x+3)
        let h = mul(&mul(&p(&[-1, 1]), &p(&[-2, 1])), &p(&[3, 1]));
        let ivs = isolate_real_roots(&h).unwrap();
        assert_eq!(ivs.len(), 3);
        for w in ivs.windows(2) {
            assert!(w[0].1 <= w[1].0);
        }
    }
}
