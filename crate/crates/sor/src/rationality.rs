//! Rationality analysis of a recognized surface of revolution: the
//! associated plane curve, profile splitting, tubularization, component
//! counting and the explicit parametrization constructions.

use crate::algebra::coeff::Coeff;
use crate::algebra::ext::Ext;
use crate::algebra::poly::{compose_poly_ratfunc, Poly, RatFunc, Var};
use crate::algebra::rat::{rat_int, rat_sqrt, Rat};
use crate::algebra::uni::{self, UniPoly};
use crate::recognition::ProfileCurve;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RationalityError {
    #[error("parametrization is improper (tracing index {0})")]
    Improper(usize),
    #[error("degenerate parametrization (both components constant)")]
    DegenerateParam,
    #[error("sum-of-squares witness does not match the tube polynomial")]
    SOSMismatch,
    #[error("constructed parametrization does not satisfy the surface equation")]
    VerificationFailed,
    #[error("section does not lie on the surface")]
    SectionOffSurface,
    #[error("contradictory evidence: {0}")]
    Contradiction(String),
}

/// The plane curve associated to a profile: same polynomial, read on the
/// (x, s) plane where the profile's s already denotes the squared radial
/// coordinate. Content-normalized.
#[derive(Clone, Debug, PartialEq)]
pub struct P2Curve {
    pub q: Poly<Rat>,
}

pub fn profile_to_p2(p: &ProfileCurve) -> P2Curve {
    P2Curve {
        q: p.p.primitive_normalized(),
    }
}

impl P2Curve {
    /// The SOR equation about the x-axis induced by this curve:
    /// `q(x, y² + z²)`.
    pub fn surface(&self) -> Poly<Rat> {
        let s_img = Poly::var(Var::Y).pow(2).add(&Poly::var(Var::Z).pow(2));
        self.q.substitute(&[(Var::S, s_img)])
    }
}

/// Rational curve parametrization with shared denominator:
/// `t ↦ (p̃(t)/q̃(t), r̃(t)/q̃(t))`.
#[derive(Clone, Debug)]
pub struct CurveParam {
    pub ptilde: UniPoly,
    pub rtilde: UniPoly,
    pub qtilde: UniPoly,
    pub proper: Option<bool>,
    pub inverse: Option<RatFunc<Rat>>,
}

impl CurveParam {
    pub fn new(ptilde: UniPoly, rtilde: UniPoly, qtilde: UniPoly) -> Self {
        assert!(!uni::is_zero(&qtilde), "denominator must be non-zero");
        // strip the common factor of all three components
        let g = uni::gcd(&ptilde, &rtilde)
            .and_then(|g| uni::gcd(&g, &qtilde))
            .unwrap_or_else(|| uni::constant(rat_int(1)));
        let div = |p: &UniPoly| uni::div_rem(p, &g).0;
        CurveParam {
            ptilde: div(&ptilde),
            rtilde: div(&rtilde),
            qtilde: div(&qtilde),
            proper: None,
            inverse: None,
        }
    }

    pub fn x_component(&self) -> RatFunc<Rat> {
        RatFunc::new(
            Poly::from_univariate(&self.ptilde, Var::T),
            Poly::from_univariate(&self.qtilde, Var::T),
        )
    }

    pub fn s_component(&self) -> RatFunc<Rat> {
        RatFunc::new(
            Poly::from_univariate(&self.rtilde, Var::T),
            Poly::from_univariate(&self.qtilde, Var::T),
        )
    }
}

/// Built-in parametrization for curves linear in s:
/// `p₁(x)·s + p₀(x) = 0` gives `t ↦ (t, −p₀(t)/p₁(t))`.
pub fn p2_param_linear(curve: &P2Curve) -> Option<CurveParam> {
    if curve.q.degree_in(Var::S) != 1 {
        return None;
    }
    let p1 = curve.q.coeff_of(Var::S, 1).univariate_in(Var::X)?;
    let p0 = curve.q.coeff_of(Var::S, 0).univariate_in(Var::X)?;
    // (p̃, r̃, q̃) = (t·p₁(t), −p₀(t), p₁(t))
    let mut tp1 = vec![Rat::zero()];
    tp1.extend(p1.iter().cloned());
    Some(CurveParam::new(tp1, uni::neg(&p0), p1))
}

/// Checks the substitution identity: the parametrization lies on `curve`
/// after clearing the shared denominator.
pub fn validate_param(curve: &P2Curve, param: &CurveParam) -> bool {
    let images = [
        (Var::X, param.x_component()),
        (Var::S, param.s_component()),
    ];
    compose_poly_ratfunc(&curve.q, &images).is_zero()
}

/// Pseudo-remainder of `a` by `b` with respect to the main variable `v`
/// (coefficients in the remaining variables).
fn pseudo_rem(a: &Poly<Rat>, b: &Poly<Rat>, v: Var) -> Poly<Rat> {
    let db = b.degree_in(v);
    let lb = b.coeff_of(v, db as u16);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(v);
        if dr < db || (dr == 0 && db == 0) {
            break;
        }
        let lr = r.coeff_of(v, dr as u16);
        r = r
            .mul(&lb)
            .sub(&lr.mul(&Poly::var(v).pow(dr - db)).mul(b));
        debug_assert!(r.is_zero() || r.degree_in(v) < dr);
    }
    r
}

/// Primitive pseudo-remainder chain in `v`; `effectively_zero` decides
/// when an element vanishes as a function (identically, or modulo a curve
/// relation among the coefficient variables).
fn prs_chain(
    a: &Poly<Rat>,
    b: &Poly<Rat>,
    v: Var,
    effectively_zero: &dyn Fn(&Poly<Rat>) -> bool,
) -> Vec<Poly<Rat>> {
    let mut chain = Vec::new();
    let (mut f, mut g) = if a.degree_in(v) >= b.degree_in(v) {
        (a.primitive_normalized(), b.primitive_normalized())
    } else {
        (b.primitive_normalized(), a.primitive_normalized())
    };
    chain.push(f.clone());
    chain.push(g.clone());
    while !effectively_zero(&g) && g.degree_in(v) > 0 {
        let r = pseudo_rem(&f, &g, v).primitive_normalized();
        if r.is_zero() {
            break;
        }
        chain.push(r.clone());
        f = g;
        g = r;
    }
    chain
}

/// Tracing index of the parametrization: the degree in T of
/// `gcd(p̃(T)q̃(u) − p̃(u)q̃(T), r̃(T)q̃(u) − r̃(u)q̃(T))` over ℚ(u).
/// Index 1 means proper (generically injective).
pub fn tracing_index(param: &CurveParam) -> Result<usize, RationalityError> {
    let t = |p: &UniPoly| Poly::from_univariate(p, Var::T);
    let u = |p: &UniPoly| Poly::from_univariate(p, Var::Alpha);
    let a = t(&param.ptilde)
        .mul(&u(&param.qtilde))
        .sub(&u(&param.ptilde).mul(&t(&param.qtilde)));
    let b = t(&param.rtilde)
        .mul(&u(&param.qtilde))
        .sub(&u(&param.rtilde).mul(&t(&param.qtilde)));
    if a.is_zero() && b.is_zero() {
        return Err(RationalityError::DegenerateParam);
    }
    if a.is_zero() || b.is_zero() {
        let nz = if a.is_zero() { &b } else { &a };
        return Ok(nz.degree_in(Var::T) as usize);
    }
    let chain = prs_chain(&a, &b, Var::T, &|p| p.is_zero());
    let gcd = chain
        .iter()
        .rev()
        .find(|p| !p.is_zero())
        .expect("chain starts non-zero");
    Ok(gcd.degree_in(Var::T) as usize)
}

/// Rational inverse `φ(x, s)` of a proper parametrization: the common
/// root in t of `p̃(t) − x·q̃(t)` and `r̃(t) − s·q̃(t)` on the curve. The
/// pseudo-remainder chain is taken over the function field of the curve,
/// so elements are discarded when they vanish under the parametrization
/// substitution. Returns `None` for improper parametrizations.
pub fn param_inverse(param: &CurveParam) -> Result<Option<RatFunc<Rat>>, RationalityError> {
    let index = tracing_index(param)?;
    if index != 1 {
        return Ok(None);
    }
    let t = |p: &UniPoly| Poly::from_univariate(p, Var::T);
    let a = t(&param.ptilde).sub(&Poly::var(Var::X).mul(&t(&param.qtilde)));
    let b = t(&param.rtilde).sub(&Poly::var(Var::S).mul(&t(&param.qtilde)));
    let xu = RatFunc::new(
        Poly::from_univariate(&param.ptilde, Var::Alpha),
        Poly::from_univariate(&param.qtilde, Var::Alpha),
    );
    let su = RatFunc::new(
        Poly::from_univariate(&param.rtilde, Var::Alpha),
        Poly::from_univariate(&param.qtilde, Var::Alpha),
    );
    let on_curve_zero = |p: &Poly<Rat>| -> bool {
        let imgs = [
            (Var::X, xu.clone()),
            (Var::S, su.clone()),
            (Var::T, RatFunc::from_poly(Poly::var(Var::T))),
        ];
        compose_poly_ratfunc(p, &imgs).is_zero()
    };
    let chain = prs_chain(&a, &b, Var::T, &on_curve_zero);
    let gcd = chain.iter().rev().find(|p| !on_curve_zero(p));
    let Some(gcd) = gcd else {
        return Ok(None);
    };
    if gcd.degree_in(Var::T) != 1 {
        return Ok(None);
    }
    let c1 = gcd.coeff_of(Var::T, 1);
    let c0 = gcd.coeff_of(Var::T, 0);
    let phi = RatFunc::new(c0.neg(), c1);
    // the inverse must send the parametrization back to the parameter
    let imgs = [
        (Var::X, xu.clone()),
        (Var::S, su.clone()),
    ];
    let num = compose_poly_ratfunc(&phi.num, &imgs);
    let den = compose_poly_ratfunc(&phi.den, &imgs);
    let alpha = RatFunc::from_poly(Poly::var(Var::Alpha));
    if !num.equiv(&den.mul(&alpha)) {
        return Ok(None);
    }
    Ok(Some(phi))
}

/// Decomposes a univariate-in-x polynomial as `γ · v²` with `v` primitive
/// and positive leading coefficient; `None` when the polynomial part is
/// not a perfect square.
fn square_decompose_x(p: &Poly<Rat>) -> Option<(Rat, Poly<Rat>)> {
    if p.is_zero() {
        return Some((Rat::zero(), Poly::one()));
    }
    let u = p.univariate_in(Var::X)?;
    let prim = p.primitive_normalized();
    let uprim = prim.univariate_in(Var::X)?;
    let v = uni::poly_sqrt(&uprim)?;
    let gamma = p.content()
        * if u.last().unwrap().numer().sign() == num_bigint::Sign::Minus {
            -Rat::one()
        } else {
            Rat::one()
        };
    // content() of the normalized poly is +1, so γ carries the sign
    let _ = u;
    Some((gamma, Poly::from_univariate(&v, Var::X)))
}

/// Searches for a factorization `p(x, y) = c · g(x, y) · g(x, −y)` of the
/// profile (stored on (x, s), s = y²). Writing g = E(x, y²) + y·O(x, y²)
/// this is `p = c·(E² − s·O²)`; the undetermined system is solved in
/// closed form for s-degree ≤ 2, which covers every split that occurs on
/// low-degree SOR profiles. Higher s-degrees report `None` after the
/// necessary square conditions on the extreme coefficients fail or the
/// bounded search is exhausted.
pub fn profile_split(profile: &ProfileCurve) -> Option<Poly<Rat>> {
    let p = profile.p.primitive_normalized();
    let n = p.degree_in(Var::S);
    let pc = |k: u32| p.coeff_of(Var::S, k as u16);
    let check = |c: &Rat, g: &Poly<Rat>| -> Option<Poly<Rat>> {
        let big = p.substitute(&[(Var::S, Poly::var(Var::Y).pow(2))]);
        let gbar = g.substitute(&[(Var::Y, Poly::var(Var::Y).neg())]);
        if g.mul(&gbar).scale(c) == big {
            Some(g.clone())
        } else {
            None
        }
    };
    match n {
        1 => {
            let p0 = pc(0);
            let p1 = pc(1);
            if p0.is_zero() {
                // p = s·p₁: need p₁ = −c·b²
                let (g1, b) = square_decompose_x(&p1)?;
                let c = -g1;
                let g = b.mul(&Poly::var(Var::Y));
                return check(&c, &g);
            }
            let (g0, a) = square_decompose_x(&p0)?;
            let (g1, b) = square_decompose_x(&p1)?;
            let rho = rat_sqrt(&(-g1.clone() / g0.clone()))?;
            let g = a.add(&b.scale(&rho).mul(&Poly::var(Var::Y)));
            check(&g0, &g)
        }
        2 => {
            let p0 = pc(0);
            let p1 = pc(1);
            let p2 = pc(2);
            let (g2, e1) = square_decompose_x(&p2)?;
            if g2.is_zero() {
                return None;
            }
            let c = g2.clone();
            let e0s: Vec<Poly<Rat>> = if p0.is_zero() {
                vec![Poly::zero()]
            } else {
                let (g0, e0) = square_decompose_x(&p0)?;
                let rho = rat_sqrt(&(g0 / g2))?;
                vec![e0.scale(&rho), e0.scale(&-rho)]
            };
            for e0 in e0s {
                // o₀² = 2·e₀·e₁ − p₁/c
                let u = e0
                    .mul(&e1)
                    .scale(&rat_int(2))
                    .sub(&p1.scale(&c.recip()));
                let o0 = if u.is_zero() {
                    Poly::zero()
                } else {
                    let Some((gu, v)) = square_decompose_x(&u) else {
                        continue;
                    };
                    let Some(sigma) = rat_sqrt(&gu) else {
                        continue;
                    };
                    v.scale(&sigma)
                };
                let g = e0
                    .add(&o0.mul(&Poly::var(Var::Y)))
                    .add(&e1.mul(&Poly::var(Var::Y).pow(2)));
                if let Some(g) = check(&c, &g) {
                    return Some(g);
                }
            }
            None
        }
        _ => None,
    }
}

/// Tubularization data: `r̃·q̃ = m·d²` with m square-free, the tubular
/// surface `y² + z² − m(x) = 0`, the birational map τ onto the SOR and
/// its inverse, plus real diagnostics of the spine polynomial m.
#[derive(Clone, Debug)]
pub struct TubularData {
    pub m: UniPoly,
    pub d: UniPoly,
    pub ptilde: UniPoly,
    pub qtilde: UniPoly,
    pub tubular_eq: Poly<Rat>,
    /// τ: (x, y, z) ↦ (p̃(x)/q̃(x), d(x)·y/q̃(x), d(x)·z/q̃(x))
    pub tau: [RatFunc<Rat>; 3],
    /// τ⁻¹ = τ₂ ∘ τ₁ when the curve inverse φ is available
    pub tau_inv: Option<[RatFunc<Rat>; 3]>,
    pub real_roots_of_m: usize,
    pub positive_intervals_of_m: usize,
}

/// Builds the tubular surface of a properly parametrized plane curve.
pub fn tubularize(param: &CurveParam) -> Result<TubularData, RationalityError> {
    let index = tracing_index(param)?;
    if index != 1 {
        return Err(RationalityError::Improper(index));
    }
    let product = uni::mul(&param.rtilde, &param.qtilde);
    let (m, d) = uni::squarefree_square_split(&product)
        .map_err(|_| RationalityError::DegenerateParam)?;
    let mx = Poly::from_univariate(&m, Var::X);
    let tubular_eq = Poly::var(Var::Y)
        .pow(2)
        .add(&Poly::var(Var::Z).pow(2))
        .sub(&mx);
    let px = Poly::from_univariate(&param.ptilde, Var::X);
    let qx = Poly::from_univariate(&param.qtilde, Var::X);
    let dx = Poly::from_univariate(&d, Var::X);
    let tau = [
        RatFunc::new(px, qx.clone()),
        RatFunc::new(dx.mul(&Poly::var(Var::Y)), qx.clone()),
        RatFunc::new(dx.mul(&Poly::var(Var::Z)), qx.clone()),
    ];
    let tau_inv = param_inverse(param)?.map(|phi| {
        // τ₁ = (φ(x, y²+z²), y, z); τ₂ = (x, q̃(x)y/d(x), q̃(x)z/d(x))
        let s_img = Poly::var(Var::Y).pow(2).add(&Poly::var(Var::Z).pow(2));
        let phi1 = RatFunc::new(
            phi.num.substitute(&[(Var::S, s_img.clone())]),
            phi.den.substitute(&[(Var::S, s_img)]),
        );
        let qx = Poly::from_univariate(&param.qtilde, Var::X);
        let dx = Poly::from_univariate(&d, Var::X);
        let comp = |v: Var| {
            let imgs = [(Var::X, phi1.clone())];
            let qphi = compose_poly_ratfunc(&qx, &imgs);
            let dphi = compose_poly_ratfunc(&dx, &imgs);
            qphi.mul(&RatFunc::from_poly(Poly::var(v)))
                .mul(&dphi.recip().expect("d(φ) non-zero as a rational map"))
        };
        [phi1.clone(), comp(Var::Y), comp(Var::Z)]
    });
    let real_roots_of_m = uni::sturm_real_roots(&m, None).unwrap_or(0);
    let positive_intervals_of_m = uni::positive_intervals(&m).unwrap_or(0);
    Ok(TubularData {
        m,
        d,
        ptilde: param.ptilde.clone(),
        qtilde: param.qtilde.clone(),
        tubular_eq,
        tau,
        tau_inv,
        real_roots_of_m,
        positive_intervals_of_m,
    })
}

/// Number of connected components of the real SOR: the number of
/// intervals where the spine polynomial is positive.
pub fn count_components(td: &TubularData) -> usize {
    td.positive_intervals_of_m
}

/// The complex section of the tube data `(φ(t), (ψ(t)+1)/2, (ψ(t)−1)/2i)`
/// over the Gaussian rationals; satisfies `y² + z² = ψ` identically.
pub fn complex_section(param: &CurveParam) -> [RatFunc<Ext>; 3] {
    let lift = |p: &UniPoly| -> Poly<Ext> {
        Poly::from_univariate(p, Var::T).map_coeffs(|c| Ext::from_rat(c.clone()))
    };
    let ptilde = lift(&param.ptilde);
    let rtilde = lift(&param.rtilde);
    let qtilde = lift(&param.qtilde);
    let half = Ext::from_rat(crate::algebra::rat::rat(1, 2));
    let i = Ext::imaginary_unit();
    // (ψ−1)/(2i) = −i(ψ−1)/2 with ψ = r̃/q̃
    let y = rtilde
        .add(&qtilde)
        .scale(&half);
    let z = rtilde
        .sub(&qtilde)
        .scale(&half.mul(&i.inv().expect("i is invertible")));
    [
        RatFunc::new(ptilde, qtilde.clone()),
        RatFunc::new(y, qtilde.clone()),
        RatFunc::new(z, qtilde),
    ]
}

/// How a surface parametrization was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamConstruction {
    ProfileRotation,
    SectionRotation,
    TubularPullback,
}

/// Bivariate rational parametrization of a surface in the parameters
/// (s, t); coefficients may involve an adjoined imaginary unit.
#[derive(Clone, Debug)]
pub struct SurfaceParam {
    pub components: [RatFunc<Ext>; 3],
    pub construction: ParamConstruction,
    pub verified: bool,
    /// the rotation construction is not necessarily proper
    pub possibly_improper: bool,
}

impl SurfaceParam {
    pub fn rational_components(&self) -> Option<[RatFunc<Rat>; 3]> {
        let conv = |r: &RatFunc<Ext>| -> Option<RatFunc<Rat>> {
            Some(RatFunc::new(r.num.to_rat_poly()?, r.den.to_rat_poly()?))
        };
        Some([
            conv(&self.components[0])?,
            conv(&self.components[1])?,
            conv(&self.components[2])?,
        ])
    }

    /// Exact substitution check `f(x(s,t), y(s,t), z(s,t)) ≡ 0`.
    pub fn satisfies(&self, f: &Poly<Rat>) -> bool {
        let fe = f.map_coeffs(|c| Ext::from_rat(c.clone()));
        let imgs = [
            (Var::X, self.components[0].clone()),
            (Var::Y, self.components[1].clone()),
            (Var::Z, self.components[2].clone()),
        ];
        compose_poly_ratfunc(&fe, &imgs).is_zero()
    }
}

fn circle_weights<C: Coeff>() -> (RatFunc<C>, RatFunc<C>) {
    // 2s/(1+s²) and (1−s²)/(1+s²)
    let s = Poly::<C>::var(Var::S);
    let one = Poly::<C>::one();
    let den = one.add(&s.mul(&s));
    let sin = s.scale(&C::from_rat(&rat_int(2)));
    let cos = one.sub(&s.mul(&s));
    (RatFunc::new(sin, den.clone()), RatFunc::new(cos, den))
}

/// Rotates a parametrized profile `(φ(t), ψ(t))` about the x-axis:
/// `(φ(t), 2s/(1+s²)·ψ(t), (1−s²)/(1+s²)·ψ(t))`.
pub fn rotate_profile_param(phi: &RatFunc<Rat>, psi: &RatFunc<Rat>) -> SurfaceParam {
    let lift = |r: &RatFunc<Rat>| RatFunc::<Ext> {
        num: r.num.map_coeffs(|c| Ext::from_rat(c.clone())),
        den: r.den.map_coeffs(|c| Ext::from_rat(c.clone())),
    };
    let (sin, cos) = circle_weights::<Ext>();
    let psi = lift(psi);
    SurfaceParam {
        components: [lift(phi), sin.mul(&psi), cos.mul(&psi)],
        construction: ParamConstruction::ProfileRotation,
        verified: false,
        possibly_improper: true,
    }
}

/// Rotates a section `(φ(t), ψ(t), μ(t))` of a SOR about the x-axis:
/// `(φ, 2s/(1+s²)ψ − (1−s²)/(1+s²)μ, 2s/(1+s²)μ + (1−s²)/(1+s²)ψ)`.
/// The section must lie on `surface` (checked by substitution).
pub fn rotate_section(
    section: &[RatFunc<Ext>; 3],
    surface: &Poly<Rat>,
) -> Result<SurfaceParam, RationalityError> {
    let fe = surface.map_coeffs(|c| Ext::from_rat(c.clone()));
    let imgs = [
        (Var::X, section[0].clone()),
        (Var::Y, section[1].clone()),
        (Var::Z, section[2].clone()),
    ];
    if !compose_poly_ratfunc(&fe, &imgs).is_zero() {
        return Err(RationalityError::SectionOffSurface);
    }
    let (sin, cos) = circle_weights::<Ext>();
    let y = sin.mul(&section[1]).sub(&cos.mul(&section[2]));
    let z = sin.mul(&section[2]).add(&cos.mul(&section[1]));
    Ok(SurfaceParam {
        components: [section[0].clone(), y, z],
        construction: ParamConstruction::SectionRotation,
        verified: false,
        possibly_improper: false,
    })
}

/// Full parametrization of the x-axis SOR `f̂` through its tubular
/// surface: build a section of the tube (from the real sum-of-squares
/// witness `a² + b² = m` when given, else the complex section), rotate it
/// and push it through τ. The result is verified against `f̂`.
pub fn parametrize_surface(
    fhat: &Poly<Rat>,
    td: &TubularData,
    sos: Option<(&UniPoly, &UniPoly)>,
) -> Result<SurfaceParam, RationalityError> {
    let lift_uni = |p: &UniPoly| -> RatFunc<Ext> {
        RatFunc::from_poly(
            Poly::from_univariate(p, Var::T).map_coeffs(|c| Ext::from_rat(c.clone())),
        )
    };
    let section: [RatFunc<Ext>; 3] = match sos {
        Some((a, b)) => {
            let sum = uni::add(&uni::mul(a, a), &uni::mul(b, b));
            let mut diff = uni::sub(&sum, &td.m);
            uni::trim(&mut diff);
            if !uni::is_zero(&diff) {
                return Err(RationalityError::SOSMismatch);
            }
            [
                RatFunc::from_poly(
                    Poly::var(Var::T).map_coeffs(|c: &Rat| Ext::from_rat(c.clone())),
                ),
                lift_uni(a),
                lift_uni(b),
            ]
        }
        None => {
            // complex section of the tube: ψ = m, denominator 1
            let param = CurveParam::new(
                vec![Rat::zero(), Rat::one()],
                td.m.clone(),
                uni::constant(Rat::one()),
            );
            complex_section(&param)
        }
    };
    let rotated = rotate_section(&section, &td.tubular_eq)?;
    // push through τ: components of τ are rational in (x, y, z)
    let imgs = [
        (Var::X, rotated.components[0].clone()),
        (Var::Y, rotated.components[1].clone()),
        (Var::Z, rotated.components[2].clone()),
    ];
    let lift_rf = |r: &RatFunc<Rat>| -> RatFunc<Ext> {
        RatFunc {
            num: r.num.map_coeffs(|c| Ext::from_rat(c.clone())),
            den: r.den.map_coeffs(|c| Ext::from_rat(c.clone())),
        }
    };
    let push = |r: &RatFunc<Rat>| -> Result<RatFunc<Ext>, RationalityError> {
        let e = lift_rf(r);
        let num = compose_poly_ratfunc(&e.num, &imgs);
        let den = compose_poly_ratfunc(&e.den, &imgs);
        let inv = den.recip().ok_or(RationalityError::VerificationFailed)?;
        Ok(num.mul(&inv))
    };
    let components = [push(&td.tau[0])?, push(&td.tau[1])?, push(&td.tau[2])?];
    let mut out = SurfaceParam {
        components,
        construction: ParamConstruction::TubularPullback,
        verified: false,
        possibly_improper: false,
    };
    if !out.satisfies(fhat) {
        return Err(RationalityError::VerificationFailed);
    }
    out.verified = true;
    Ok(out)
}

/// Rationality verdict per the classification table for SORs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Rational,
    UnirationalNotRational,
    NonRational,
    NeedsEvidence(String),
}

/// Evidence assembled by the pipeline (or supplied by the caller, for
/// genus values, which are out of scope to compute here).
#[derive(Clone, Debug, Default)]
pub struct Evidence {
    pub profile_reducible: Option<bool>,
    pub p2_param_present: bool,
    pub components: Option<usize>,
    pub genus_p2: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub verdict: Verdict,
    pub evidence: Evidence,
}

/// Table-driven classification. The surface is rational iff it is
/// unirational and connected (one real component).
pub fn classify(evidence: Evidence) -> Result<Classification, RationalityError> {
    let genus_positive = matches!(evidence.genus_p2, Some(g) if g > 0);
    if evidence.p2_param_present && genus_positive {
        return Err(RationalityError::Contradiction(
            "plane curve is parametrized yet has positive genus".to_string(),
        ));
    }
    let verdict = if evidence.profile_reducible == Some(true) && evidence.p2_param_present {
        Verdict::Rational
    } else if evidence.profile_reducible == Some(true) && genus_positive {
        Verdict::NonRational
    } else if evidence.p2_param_present {
        match evidence.components {
            Some(1) => Verdict::Rational,
            Some(0) => Verdict::UnirationalNotRational,
            Some(_) => Verdict::UnirationalNotRational,
            None => Verdict::NeedsEvidence("real component count".to_string()),
        }
    } else if genus_positive {
        Verdict::NonRational
    } else {
        Verdict::NeedsEvidence(
            "a plane-curve parametrization or a positive genus value".to_string(),
        )
    };
    Ok(Classification { verdict, evidence })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn upoly(coeffs: &[i64]) -> UniPoly {
        coeffs.iter().map(|&c| rat_int(c)).collect()
    }

    fn profile_from(p: Poly<Rat>) -> ProfileCurve {
        ProfileCurve { p, frame: None }
    }

    /// profile of the sextic example surface after the axis transform
    fn example_profile() -> Poly<Rat> {
        // s³ + 12xs² − 29s² + 26x²s − 48xs + 200s − x⁴ − 104x² − 400
        let x = Poly::var(Var::X);
        let s = Poly::var(Var::S);
        s.pow(3)
            .add(&x.mul(&s.pow(2)).scale(&rat_int(12)))
            .sub(&s.pow(2).scale(&rat_int(29)))
            .add(&x.pow(2).mul(&s).scale(&rat_int(26)))
            .sub(&x.mul(&s).scale(&rat_int(48)))
            .add(&s.scale(&rat_int(200)))
            .sub(&x.pow(4))
            .sub(&x.pow(2).scale(&rat_int(104)))
            .sub(&Poly::from_int(400))
    }

    fn example_param() -> CurveParam {
        // (−t³ + t, t⁴ + 4t³ + 6t² + 4t + 5)
        CurveParam::new(
            upoly(&[0, 1, 0, -1]),
            upoly(&[5, 4, 6, 4, 1]),
            upoly(&[1]),
        )
    }

    #[test]
    fn p2_of_example_profile() {
        let p2 = profile_to_p2(&profile_from(example_profile()));
        assert_eq!(p2.q, example_profile().primitive_normalized());
        assert!(validate_param(&p2, &example_param()));
    }

    #[test]
    fn validate_param_examples() {
        // s − x² with (t, t²) and (t, t³)
        let curve = P2Curve {
            q: Poly::var(Var::S).sub(&Poly::var(Var::X).pow(2)),
        };
        let good = CurveParam::new(upoly(&[0, 1]), upoly(&[0, 0, 1]), upoly(&[1]));
        let bad = CurveParam::new(upoly(&[0, 1]), upoly(&[0, 0, 0, 1]), upoly(&[1]));
        assert!(validate_param(&curve, &good));
        assert!(!validate_param(&curve, &bad));
    }

    #[test]
    fn profile_split_examples() {
        // s − x² (i.e. y² − x²) → g with g(x,y)·g(x,−y) ~ y² − x²
        let p = profile_from(Poly::var(Var::S).sub(&Poly::var(Var::X).pow(2)));
        let g = profile_split(&p).expect("split exists");
        assert_eq!(g.degree_in(Var::Y), 1);

        // elliptic profile: s − x³ − 3x² + 2x is not a split
        let x = Poly::var(Var::X);
        let cubic = x
            .pow(3)
            .add(&x.pow(2).scale(&rat_int(3)))
            .sub(&x.scale(&rat_int(2)));
        let p = profile_from(Poly::var(Var::S).sub(&cubic));
        assert_eq!(profile_split(&p), None);

        // torus profile (x² + s + 3)² − 16s splits with y-degree 2
        let inner = x.pow(2).add(&Poly::var(Var::S)).add(&Poly::from_int(3));
        let torus = inner.pow(2).sub(&Poly::var(Var::S).scale(&rat_int(16)));
        let g = profile_split(&profile_from(torus)).expect("torus splits");
        assert_eq!(g.degree_in(Var::Y), 2);
    }

    #[test]
    fn tracing_and_inverse_examples() {
        // (t, t²) on s = x² → proper, φ = x
        let p = CurveParam::new(upoly(&[0, 1]), upoly(&[0, 0, 1]), upoly(&[1]));
        assert_eq!(tracing_index(&p).unwrap(), 1);
        let phi = param_inverse(&p).unwrap().expect("proper");
        assert!(phi.equiv(&RatFunc::from_poly(Poly::var(Var::X))));

        // (t², t⁴) → improper with index 2
        let p = CurveParam::new(upoly(&[0, 0, 1]), upoly(&[0, 0, 0, 0, 1]), upoly(&[1]));
        assert_eq!(tracing_index(&p).unwrap(), 2);
        assert!(param_inverse(&p).unwrap().is_none());
    }

    #[test]
    fn example_inverse() {
        let phi = param_inverse(&example_param()).unwrap().expect("proper");
        // φ = (−4x² − xs − 12x + 8s − 40)/(x² + 12x + 7s − 20)
        let x = Poly::var(Var::X);
        let s = Poly::var(Var::S);
        let num = x
            .pow(2)
            .scale(&rat_int(-4))
            .sub(&x.mul(&s))
            .sub(&x.scale(&rat_int(12)))
            .add(&s.scale(&rat_int(8)))
            .sub(&Poly::from_int(40));
        let den = x
            .pow(2)
            .add(&x.scale(&rat_int(12)))
            .add(&s.scale(&rat_int(7)))
            .sub(&Poly::from_int(20));
        assert!(phi.equiv(&RatFunc::new(num, den)));
    }

    #[test]
    fn tubularize_examples() {
        // quartic example: m is the quartic itself, d = 1
        let td = tubularize(&example_param()).unwrap();
        assert_eq!(td.m, upoly(&[5, 4, 6, 4, 1]));
        assert_eq!(td.d, upoly(&[1]));
        assert_eq!(td.real_roots_of_m, 0);
        assert_eq!(count_components(&td), 1);

        // cone: (t, t²) → m = 1, d = t, τ = (x, xy, xz)
        let p = CurveParam::new(upoly(&[0, 1]), upoly(&[0, 0, 1]), upoly(&[1]));
        let td = tubularize(&p).unwrap();
        assert_eq!(td.m, upoly(&[1]));
        assert_eq!(td.d, upoly(&[0, 1]));
        let xy = RatFunc::from_poly(Poly::var(Var::X).mul(&Poly::var(Var::Y)));
        assert!(td.tau[1].equiv(&xy));

        // cubic SOR: m = t³ + 3t² − 2t, d = 1, two components
        let p = CurveParam::new(upoly(&[0, 1]), upoly(&[0, -2, 3, 1]), upoly(&[1]));
        let td = tubularize(&p).unwrap();
        assert_eq!(td.m, upoly(&[0, -2, 3, 1]));
        assert_eq!(count_components(&td), 2);
    }

    #[test]
    fn tau_maps_tube_into_surface() {
        // numerator of f̂∘τ must be divisible by the tubular equation
        for (param, profile) in [
            (example_param(), example_profile()),
            (
                CurveParam::new(upoly(&[0, 1]), upoly(&[0, 0, 1]), upoly(&[1])),
                Poly::var(Var::S).sub(&Poly::var(Var::X).pow(2)),
            ),
        ] {
            let td = tubularize(&param).unwrap();
            let fhat = P2Curve {
                q: profile.clone(),
            }
            .surface();
            let imgs = [
                (Var::X, td.tau[0].clone()),
                (Var::Y, td.tau[1].clone()),
                (Var::Z, td.tau[2].clone()),
            ];
            let composed = compose_poly_ratfunc(&fhat, &imgs);
            let q = composed
                .num
                .primitive_normalized()
                .div_exact(&td.tubular_eq.primitive_normalized());
            assert!(q.is_some(), "tubular equation must divide the numerator");
        }
    }

    #[test]
    fn tau_roundtrip_on_tube() {
        // τ⁻¹∘τ = identity modulo the tubular equation: check on the
        // rational point sweep of the tube via the complex section
        let td = tubularize(&example_param()).unwrap();
        let inv = td.tau_inv.as_ref().expect("proper");
        // τ then τ⁻¹, as rational maps, composed on generic (x, y, z)
        let imgs = [
            (Var::X, td.tau[0].clone()),
            (Var::Y, td.tau[1].clone()),
            (Var::Z, td.tau[2].clone()),
        ];
        let comp = |r: &RatFunc<Rat>| {
            let n = compose_poly_ratfunc(&r.num, &imgs);
            let d = compose_poly_ratfunc(&r.den, &imgs);
            (n, d)
        };
        // first coordinate: back to x modulo the tube relation
        let (n, d) = comp(&inv[0]);
        let diff = n.sub(&d.mul(&RatFunc::from_poly(Poly::var(Var::X))));
        let rem = diff
            .num
            .primitive_normalized()
            .div_exact(&td.tubular_eq.primitive_normalized());
        assert!(rem.is_some(), "x-roundtrip must vanish on the tube");
    }

    #[test]
    fn count_components_examples() {
        assert_eq!(uni::positive_intervals(&upoly(&[5, 4, 6, 4, 1])).unwrap(), 1);
        assert_eq!(uni::positive_intervals(&upoly(&[0, -2, 3, 1])).unwrap(), 2);
        assert_eq!(uni::positive_intervals(&upoly(&[-1])).unwrap(), 0);
    }

    #[test]
    fn complex_section_identity() {
        for param in [
            CurveParam::new(upoly(&[0, 1]), upoly(&[0, 0, 1]), upoly(&[1])),
            example_param(),
        ] {
            let sec = complex_section(&param);
            // y² + z² = ψ
            let lhs = sec[1].mul(&sec[1]).add(&sec[2].mul(&sec[2]));
            let psi = RatFunc {
                num: Poly::from_univariate(&param.rtilde, Var::T)
                    .map_coeffs(|c: &Rat| Ext::from_rat(c.clone())),
                den: Poly::from_univariate(&param.qtilde, Var::T)
                    .map_coeffs(|c: &Rat| Ext::from_rat(c.clone())),
            };
            assert!(lhs.equiv(&psi));
        }
    }

    #[test]
    fn rotate_profile_cone() {
        // profile (t, t) of the cone y² + z² = x²
        let t = RatFunc::from_poly(Poly::var(Var::T));
        let sp = rotate_profile_param(&t, &t);
        let cone = Poly::var(Var::Y)
            .pow(2)
            .add(&Poly::var(Var::Z).pow(2))
            .sub(&Poly::var(Var::X).pow(2));
        assert!(sp.satisfies(&cone));
        assert!(sp.possibly_improper);
    }

    #[test]
    fn rotate_section_examples() {
        // cylinder section (t, 1, 0)
        let cyl = Poly::var(Var::Y)
            .pow(2)
            .add(&Poly::var(Var::Z).pow(2))
            .sub(&Poly::one());
        let lift = |p: Poly<Rat>| {
            RatFunc::from_poly(p.map_coeffs(|c| Ext::from_rat(c.clone())))
        };
        let section = [
            lift(Poly::var(Var::T)),
            lift(Poly::one()),
            lift(Poly::zero()),
        ];
        let sp = rotate_section(&section, &cyl).unwrap();
        assert!(sp.satisfies(&cyl));

        // off-surface section rejected
        let bad = [
            lift(Poly::var(Var::T)),
            lift(Poly::zero()),
            lift(Poly::zero()),
        ];
        assert_eq!(
            rotate_section(&bad, &cyl).err(),
            Some(RationalityError::SectionOffSurface)
        );
    }

    #[test]
    fn parametrize_example_surface() {
        let td = tubularize(&example_param()).unwrap();
        let fhat = P2Curve {
            q: example_profile(),
        }
        .surface();
        let a = upoly(&[-1, 2, 1]); // t² + 2t − 1
        let b = upoly(&[2, 2]); // 2t + 2
        let sp = parametrize_surface(&fhat, &td, Some((&a, &b))).unwrap();
        assert!(sp.verified);
        let comps = sp.rational_components().expect("real parametrization");
        // x-component is −t³ + t
        let xt = Poly::var(Var::T).sub(&Poly::var(Var::T).pow(3));
        assert!(comps[0].equiv(&RatFunc::from_poly(xt)));
        // y-component is (2s(t²+2t−1) + (s²−1)(2t+2))/(s²+1)
        let s = Poly::var(Var::S);
        let t = Poly::var(Var::T);
        let at = t.pow(2).add(&t.scale(&rat_int(2))).sub(&Poly::one());
        let bt = t.scale(&rat_int(2)).add(&Poly::from_int(2));
        let den = s.pow(2).add(&Poly::one());
        let ynum = s
            .scale(&rat_int(2))
            .mul(&at)
            .add(&s.pow(2).sub(&Poly::one()).mul(&bt));
        assert!(comps[1].equiv(&RatFunc::new(ynum, den.clone())));
        let znum = Poly::one()
            .sub(&s.pow(2))
            .mul(&at)
            .add(&s.scale(&rat_int(2)).mul(&bt));
        assert!(comps[2].equiv(&RatFunc::new(znum, den)));

        // wrong witness
        let one = upoly(&[1]);
        assert_eq!(
            parametrize_surface(&fhat, &td, Some((&one, &one))).err(),
            Some(RationalityError::SOSMismatch)
        );
    }

    #[test]
    fn parametrize_cone_real_witness() {
        let p = CurveParam::new(upoly(&[0, 1]), upoly(&[0, 0, 1]), upoly(&[1]));
        let td = tubularize(&p).unwrap();
        let fhat = Poly::var(Var::Y)
            .pow(2)
            .add(&Poly::var(Var::Z).pow(2))
            .sub(&Poly::var(Var::X).pow(2));
        let a = upoly(&[1]);
        let b = upoly(&[0]);
        let sp = parametrize_surface(&fhat, &td, Some((&a, &b))).unwrap();
        assert!(sp.verified);
    }

    #[test]
    fn parametrize_complex_section() {
        // cubic SOR has no global real section; the Gaussian one works
        let p = CurveParam::new(upoly(&[0, 1]), upoly(&[0, -2, 3, 1]), upoly(&[1]));
        let td = tubularize(&p).unwrap();
        let fhat = P2Curve {
            q: Poly::var(Var::S).sub(
                &Poly::var(Var::X)
                    .pow(3)
                    .add(&Poly::var(Var::X).pow(2).scale(&rat_int(3)))
                    .sub(&Poly::var(Var::X).scale(&rat_int(2))),
            ),
        }
        .surface();
        let sp = parametrize_surface(&fhat, &td, None).unwrap();
        assert!(sp.verified);
        assert!(sp.rational_components().is_none());
    }

    #[test]
    fn classify_examples() {
        // parametrized, one component → rational
        let c = classify(Evidence {
            p2_param_present: true,
            components: Some(1),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(c.verdict, Verdict::Rational);

        // parametrized, two components → unirational, not rational
        let c = classify(Evidence {
            p2_param_present: true,
            components: Some(2),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(c.verdict, Verdict::UnirationalNotRational);

        // positive genus → non-rational
        let c = classify(Evidence {
            genus_p2: Some(1),
            ..Default::default()
        })
        .unwrap();
        assert_eq!(c.verdict, Verdict::NonRational);

        // contradictory evidence
        assert!(classify(Evidence {
            p2_param_present: true,
            genus_p2: Some(1),
            ..Default::default()
        })
        .is_err());

        // nothing supplied
        let c = classify(Evidence::default()).unwrap();
        assert!(matches!(c.verdict, Verdict::NeedsEvidence(_)));
    }

    #[test]
    fn p2_param_linear_examples() {
        let curve = P2Curve {
            q: Poly::var(Var::S).sub(&Poly::var(Var::X).pow(2)),
        };
        let p = p2_param_linear(&curve).expect("s-linear");
        assert!(validate_param(&curve, &p));
        assert_eq!(tracing_index(&p).unwrap(), 1);

        // cubic in s has no built-in parametrization
        let deep = P2Curve {
            q: Poly::var(Var::S).pow(3).sub(&Poly::var(Var::X)),
        };
        assert!(p2_param_linear(&deep).is_none());
    }
}
