//! Sparse multivariate polynomials over an exact coefficient field.

use super::coeff::Coeff;
use super::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// The fixed variable universe. The order given here (x > y > z > s > t >
/// alpha > beta > gamma > sigma) is the tie-break order of the graded
/// lexicographic term order and the canonical printing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    S,
    T,
    Alpha,
    Beta,
    Gamma,
    Sigma,
}

pub const NVARS: usize = 9;

impl Var {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::S => "s",
            Var::T => "t",
            Var::Alpha => "alpha",
            Var::Beta => "beta",
            Var::Gamma => "gamma",
            Var::Sigma => "sigma",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "z" => Some(Var::Z),
            "s" => Some(Var::S),
            "t" => Some(Var::T),
            _ => None,
        }
    }
}

/// Exponent vector with graded-lex ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub fn unit() -> Mono {
        Mono([0; NVARS])
    }

    pub fn of_var(v: Var, e: u16) -> Mono {
        let mut m = Mono::unit();
        m.0[v.index()] = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut m = self.clone();
        for i in 0..NVARS {
            m.0[i] += other.0[i];
        }
        m
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            // within a degree class, higher power of an earlier variable wins
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial; no zero coefficients are stored and the
/// term map is ordered, so equal polynomials have equal representations.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<C: Coeff = Rat> {
    terms: BTreeMap<Mono, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Mono::unit(), c);
        }
        p
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Mono::of_var(v, 1), C::one())
    }

    pub fn monomial(m: Mono, c: C) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_rat(&Rat::from(BigInt::from(n))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_value(&self) -> Option<&C> {
        if self.terms.len() == 1 {
            self.terms.get(&Mono::unit())
        } else if self.terms.is_empty() {
            None
        } else {
            None
        }
    }

    fn insert(&mut self, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Poly::zero();
        for (m, x) in &self.terms {
            out.insert(m.clone(), x.mul(c));
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vec<Var> {
        let mut seen = [false; NVARS];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        ALL_VARS
            .iter()
            .copied()
            .filter(|v| seen[v.index()])
            .collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| m.0[v.index()] as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn derivative(&self, v: Var) -> Self {
        let i = v.index();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.insert(m2, c.mul(&C::from_rat(&Rat::from(BigInt::from(e)))));
        }
        out
    }

    /// Coefficient of `v^k`, a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u16) -> Self {
        let i = v.index();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.0[i] == k {
                let mut m2 = m.clone();
                m2.0[i] = 0;
                out.insert(m2, c.clone());
            }
        }
        out
    }

    /// Simultaneously substitutes polynomials for variables.
    pub fn substitute(&self, images: &[(Var, Poly<C>)]) -> Self {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for i in 0..NVARS {
                let e = m.0[i];
                if e == 0 {
                    continue;
                }
                let v = ALL_VARS[i];
                match images.iter().find(|(w, _)| *w == v) {
                    Some((_, img)) => term = term.mul(&img.pow(e as u32)),
                    None => term = term.mul(&Poly::monomial(Mono::of_var(v, e), C::one())),
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluates at scalar values for the given variables (total evaluation
    /// expects every supported variable to be covered).
    pub fn eval(&self, point: &[(Var, C)]) -> Self {
        let images: Vec<(Var, Poly<C>)> = point
            .iter()
            .map(|(v, c)| (*v, Poly::constant(c.clone())))
            .collect();
        self.substitute(&images)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.insert(m.clone(), f(c));
        }
        out
    }

    /// Collapse to a rational-coefficient polynomial, when possible.
    pub fn to_rat_poly(&self) -> Option<Poly<Rat>> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.insert(m.clone(), c.to_rat()?);
        }
        Some(out)
    }

    /// Dense univariate coefficient list (ascending) if the polynomial only
    /// involves `v`.
    pub fn univariate_in(&self, v: Var) -> Option<Vec<C>> {
        let i = v.index();
        for m in self.terms.keys() {
            for (j, &e) in m.0.iter().enumerate() {
                if e > 0 && j != i {
                    return None;
                }
            }
        }
        let deg = self.degree_in(v) as usize;
        let mut out = vec![C::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.0[i] as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(coeffs: &[C], v: Var) -> Self {
        let mut out = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out.insert(Mono::of_var(v, k as u16), c.clone());
        }
        out
    }

    /// Leading (graded-lex greatest) term.
    pub fn leading_term(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }
}

pub const ALL_VARS: [Var; NVARS] = [
    Var::X,
    Var::Y,
    Var::Z,
    Var::S,
    Var::T,
    Var::Alpha,
    Var::Beta,
    Var::Gamma,
    Var::Sigma,
];

impl Poly<Rat> {
    /// gcd of numerators over lcm of denominators; positive.
    pub fn content(&self) -> Rat {
        let mut num = BigInt::from(0);
        let mut den = BigInt::from(1);
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num == BigInt::from(0) {
            Rat::one()
        } else {
            Rat::new(num, den)
        }
    }

    /// Divides out the content and fixes the sign so the leading graded-lex
    /// coefficient is positive. The zero polynomial maps to itself.
    pub fn primitive_normalized(&self) -> Poly<Rat> {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_term().unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Exact division; `None` if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Poly<Rat>) -> Option<Poly<Rat>> {
        if rhs.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let (lm, lc) = {
            let (m, c) = rhs.leading_term().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (m, c) = {
                let (m, c) = rem.leading_term().unwrap();
                (m.clone(), c.clone())
            };
            let mut q = Mono::unit();
            for i in 0..NVARS {
                if m.0[i] < lm.0[i] {
                    return None;
                }
                q.0[i] = m.0[i] - lm.0[i];
            }
            let qc = &c / &lc;
            let qt = Poly::monomial(q, qc);
            quot = quot.add(&qt);
            rem = rem.sub(&qt.mul(rhs));
        }
        Some(quot)
    }
}

/// Component-wise partial derivatives of a polynomial in x, y, z.
pub fn gradient(f: &Poly<Rat>) -> (Poly<Rat>, Poly<Rat>, Poly<Rat>) {
    (
        f.derivative(Var::X),
        f.derivative(Var::Y),
        f.derivative(Var::Z),
    )
}

/// Substitutes affine-linear images for x, y, z. The images must have
/// degree at most 1 in their variables.
pub fn affine_substitute<C: Coeff>(f: &Poly<C>, images: &[Poly<C>; 3]) -> Poly<C> {
    for img in images {
        assert!(img.total_degree() <= 1, "image is not affine-linear");
    }
    f.substitute(&[
        (Var::X, images[0].clone()),
        (Var::Y, images[1].clone()),
        (Var::Z, images[2].clone()),
    ])
}

/// Quotient field element: a pair of polynomials with non-zero denominator.
/// No multivariate gcd reduction is attempted; rational content is
/// normalized out of both parts.
#[derive(Clone, Debug)]
pub struct RatFunc<C: Coeff = Rat> {
    pub num: Poly<C>,
    pub den: Poly<C>,
}

impl<C: Coeff> RatFunc<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RatFunc::new(p, Poly::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc::new(self.num.neg(), self.den.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn recip(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }

    /// Equality in the quotient field: cross-multiplied comparison.
    pub fn equiv(&self, rhs: &Self) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }
}

impl RatFunc<Rat> {
    /// Normalizes univariate rational functions: content divided out and
    /// the polynomial gcd of numerator and denominator removed.
    pub fn reduced_univariate(&self, v: Var) -> RatFunc<Rat> {
        use super::uni;
        let (Some(n), Some(d)) = (self.num.univariate_in(v), self.den.univariate_in(v)) else {
            return self.clone();
        };
        if self.num.is_zero() {
            return RatFunc::new(Poly::zero(), Poly::one());
        }
        let g = uni::gcd(&n, &d).expect("denominator non-zero");
        let (n1, _) = uni::div_rem(&n, &g);
        let (d1, _) = uni::div_rem(&d, &g);
        let np = Poly::from_univariate(&n1, v);
        let dp = Poly::from_univariate(&d1, v);
        let c = dp.content();
        let lead_neg = dp.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false);
        let c = if lead_neg { -c } else { c };
        RatFunc::new(np.scale(&c.recip()), dp.scale(&c.recip()))
    }
}

/// Substitutes rational functions for variables of `p`, returning the
/// result as a single rational function (denominators cleared via the
/// total-degree homogenization of the monomials).
pub fn compose_poly_ratfunc<C: Coeff>(p: &Poly<C>, images: &[(Var, RatFunc<C>)]) -> RatFunc<C> {
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut term = RatFunc::from_poly(Poly::constant(c.clone()));
        for i in 0..NVARS {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let v = ALL_VARS[i];
            let img = images
                .iter()
                .find(|(w, _)| *w == v)
                .map(|(_, f)| f.clone())
                .unwrap_or_else(|| RatFunc::from_poly(Poly::var(v)));
            for _ in 0..e {
                term = term.mul(&img);
            }
        }
        acc = acc.add(&term);
    }
    acc
}
