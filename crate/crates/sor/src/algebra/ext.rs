//! Quadratic-extension scalars: elements of Q(sqrt(d1))(sqrt(d2)).
//!
//! The tower depth is capped at two radicals, which covers the frame
//! normalization of the axis isometry (one radical per Gram-Schmidt norm)
//! and the adjoined imaginary unit (`d = -1`) used by complex sections.

use super::coeff::Coeff;
use super::rat::{sqrt_as_radical, Rat};
use num_bigint::BigInt;


/// Element of a quadratic tower over the rationals.
///
/// Coordinates are over the basis `1, sqrt(d1), sqrt(d2), sqrt(d1*d2)`.
/// Radicands are square-free integers, never `0` or `1`, stored sorted;
/// unused radicands are dropped so that equal values compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ext {
    d1: Option<BigInt>,
    d2: Option<BigInt>,
    c: [Rat; 4],
}

impl Ext {
    pub fn from_rat(r: Rat) -> Self {
        Ext {
            d1: None,
            d2: None,
            c: [r, Rat::zero(), Rat::zero(), Rat::zero()],
        }
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    /// The imaginary unit, as `sqrt(-1)`.
    pub fn imaginary_unit() -> Self {
        Ext {
            d1: Some(BigInt::from(-1)),
            d2: None,
            c: [Rat::zero(), Rat::one(), Rat::zero(), Rat::zero()],
        }
    }

    /// Exact square root of a non-zero rational. Collapses to the base
    /// field when the radicand is a perfect square.
    pub fn sqrt_of_rat(r: &Rat) -> Self {
        let (m, c) = sqrt_as_radical(r);
        if m == num_bigint::BigInt::from(1) {
            Self::from_rat(c)
        } else {
            Ext {
                d1: Some(m),
                d2: None,
                c: [Rat::zero(), c, Rat::zero(), Rat::zero()],
            }
        }
    }

    pub fn radicands(&self) -> (Option<&BigInt>, Option<&BigInt>) {
        (self.d1.as_ref(), self.d2.as_ref())
    }

    fn normalize(mut self) -> Self {
        if self.d2.is_some() && self.c[2].is_zero() && self.c[3].is_zero() {
            self.d2 = None;
        }
        if self.d1.is_some() && self.c[1].is_zero() && self.c[3].is_zero() {
            // move the d2 block down, if present
            self.d1 = self.d2.take();
            self.c[1] = std::mem::replace(&mut self.c[2], Rat::zero());
            debug_assert!(self.c[3].is_zero());
            if self.d1.is_some() && self.c[1].is_zero() {
                self.d1 = None;
            }
        }
        self
    }

    /// Re-expresses both operands over a common tower. Panics if the union
    /// of radicands exceeds the depth-2 cap; the library never constructs
    /// such values.
    fn unify(&self, rhs: &Self) -> (Vec<BigInt>, [Rat; 4], [Rat; 4]) {
        let mut rads: Vec<BigInt> = Vec::new();
        for d in [&self.d1, &self.d2, &rhs.d1, &rhs.d2].into_iter().flatten() {
            if !rads.contains(d) {
                rads.push((*d).clone());
            }
        }
        rads.sort();
        assert!(rads.len() <= 2, "quadratic tower depth exceeded");
        let place = |e: &Ext| -> [Rat; 4] {
            let mut out = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
            out[0] = e.c[0].clone();
            let pos = |d: &BigInt| rads.iter().position(|r| r == d).unwrap() + 1;
            if let Some(d) = &e.d1 {
                out[pos(d)] = out[pos(d)].clone() + &e.c[1];
            }
            if let Some(d) = &e.d2 {
                out[pos(d)] = out[pos(d)].clone() + &e.c[2];
            }
            if !e.c[3].is_zero() {
                // basis element sqrt(d1*d2) requires both radicands
                out[3] = out[3].clone() + &e.c[3];
            }
            out
        };
        (rads.clone(), place(self), place(rhs))
    }

    fn from_parts(rads: &[BigInt], c: [Rat; 4]) -> Self {
        Ext {
            d1: rads.first().cloned(),
            d2: rads.get(1).cloned(),
            c,
        }
        .normalize()
    }

    fn conj1(&self) -> Self {
        let mut e = self.clone();
        e.c[1] = -e.c[1].clone();
        e.c[3] = -e.c[3].clone();
        e
    }

    fn conj2(&self) -> Self {
        let mut e = self.clone();
        e.c[2] = -e.c[2].clone();
        e.c[3] = -e.c[3].clone();
        e
    }
}

impl Coeff for Ext {
    fn zero() -> Self {
        Ext::zero()
    }
    fn one() -> Self {
        Ext::one()
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    fn add(&self, rhs: &Self) -> Self {
        let (rads, a, b) = self.unify(rhs);
        let c = [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2], &a[3] + &b[3]];
        Ext::from_parts(&rads, c)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (rads, a, b) = self.unify(rhs);
        let d1 = rads
            .first()
            .map(|d| Rat::from(d.clone()))
            .unwrap_or_else(Rat::one);
        let d2 = rads
            .get(1)
            .map(|d| Rat::from(d.clone()))
            .unwrap_or_else(Rat::one);
        // basis products: e1^2 = d1, e2^2 = d2, e3^2 = d1 d2,
        // e1 e2 = e3, e1 e3 = d1 e2, e2 e3 = d2 e1
        let mut c = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        c[0] = &a[0] * &b[0]
            + &d1 * (&a[1] * &b[1])
            + &d2 * (&a[2] * &b[2])
            + &d1 * &d2 * (&a[3] * &b[3]);
        c[1] = &a[0] * &b[1] + &a[1] * &b[0] + &d2 * (&a[2] * &b[3]) + &d2 * (&a[3] * &b[2]);
        c[2] = &a[0] * &b[2] + &a[2] * &b[0] + &d1 * (&a[1] * &b[3]) + &d1 * (&a[3] * &b[1]);
        c[3] = &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[2] + &a[2] * &b[1];
        Ext::from_parts(&rads, c)
    }

    fn neg(&self) -> Self {
        let mut e = self.clone();
        for x in &mut e.c {
            *x = -x.clone();
        }
        e
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let p1 = self.conj1();
        let p2 = self.conj2();
        let p3 = p1.conj2();
        let num = p1.mul(&p2).mul(&p3);
        let norm = self.mul(&num);
        let n = norm
            .to_rat()
            .expect("norm of a tower element must be rational");
        debug_assert!(!n.is_zero());
        let ninv = n.recip();
        let mut out = num;
        for x in &mut out.c {
            *x = &*x * &ninv;
        }
        Some(out.normalize())
    }

    fn from_rat(r: &Rat) -> Self {
        Ext::from_rat(r.clone())
    }

    fn to_rat(&self) -> Option<Rat> {
        if self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero() {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    fn render(&self) -> String {
        if let Some(r) = self.to_rat() {
            return r.to_string();
        }
        let mut parts = Vec::new();
        if !self.c[0].is_zero() {
            parts.push(self.c[0].to_string());
        }
        let rad = |d: &BigInt| format!("sqrt({})", d);
        if !self.c[1].is_zero() {
            parts.push(format!("{}*{}", self.c[1], rad(self.d1.as_ref().unwrap())));
        }
        if !self.c[2].is_zero() {
            parts.push(format!("{}*{}", self.c[2], rad(self.d2.as_ref().unwrap())));
        }
        if !self.c[3].is_zero() {
            parts.push(format!(
                "{}*sqrt({})",
                self.c[3],
                self.d1.as_ref().unwrap() * self.d2.as_ref().unwrap()
            ));
        }
        format!("({})", parts.join(" + "))
    }
}
