//! Plücker line geometry over exact scalars: line construction, the
//! bilinear pairing, exact nullspace computation for the axis system and
//! extraction of axis candidates from the solution space.

use crate::algebra::rat::{big_gcd, rat_sqrt, rat_to_string, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LineError {
    #[error("direction vector must be non-zero")]
    ZeroDirection,
}

pub type Vec3 = [Rat; 3];

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot(a: &Vec3, b: &Vec3) -> Rat {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn is_zero3(a: &Vec3) -> bool {
    a.iter().all(|c| c.is_zero())
}

/// Homogeneous Plücker coordinates `(direction : moment)` of a spatial
/// line. Equality is projective (up to a non-zero scale, including sign).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerLine {
    pub coords: [Rat; 6],
}

impl PluckerLine {
    pub fn new(coords: [Rat; 6]) -> Self {
        assert!(
            coords.iter().any(|c| !c.is_zero()),
            "all six Plücker coordinates are zero"
        );
        PluckerLine { coords }
    }

    /// Line through `p` with direction `v`, as `(v : p × v)`.
    pub fn from_point_dir(p: &Vec3, v: &Vec3) -> Result<Self, LineError> {
        if is_zero3(v) {
            return Err(LineError::ZeroDirection);
        }
        let m = cross(p, v);
        Ok(PluckerLine::new([
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            m[0].clone(),
            m[1].clone(),
            m[2].clone(),
        ]))
    }

    pub fn direction(&self) -> Vec3 {
        [
            self.coords[0].clone(),
            self.coords[1].clone(),
            self.coords[2].clone(),
        ]
    }

    pub fn moment(&self) -> Vec3 {
        [
            self.coords[3].clone(),
            self.coords[4].clone(),
            self.coords[5].clone(),
        ]
    }

    /// `⟨L, L⟩ = 0`, i.e. the six-tuple represents an actual line.
    pub fn is_line(&self) -> bool {
        pairing6(&self.coords, &self.coords).is_zero()
    }

    /// A point on the line (foot of the perpendicular from the origin).
    pub fn base_point(&self) -> Vec3 {
        let v = self.direction();
        let m = self.moment();
        let n2 = dot(&v, &v);
        let c = cross(&v, &m);
        [&c[0] / &n2, &c[1] / &n2, &c[2] / &n2]
    }

    /// Projective equality: proportional up to a non-zero rational scale.
    pub fn projectively_equal(&self, other: &PluckerLine) -> bool {
        projectively_proportional(&self.coords, &other.coords)
    }

    /// Integer coordinates with content divided out; sign is normalized so
    /// the first non-zero entry is positive.
    pub fn primitive_coords(&self) -> [BigInt; 6] {
        primitive6(&self.coords)
    }

    pub fn render(&self) -> String {
        let c = self.primitive_coords();
        format!("({})", c.map(|x| x.to_string()).join(":"))
    }

    pub fn render_exact(&self) -> Vec<String> {
        self.coords.iter().map(rat_to_string).collect()
    }
}

pub fn projectively_proportional(a: &[Rat; 6], b: &[Rat; 6]) -> bool {
    let mut ratio: Option<Rat> = None;
    for i in 0..6 {
        match (a[i].is_zero(), b[i].is_zero()) {
            (true, true) => {}
            (false, false) => {
                let r = &a[i] / &b[i];
                match &ratio {
                    None => ratio = Some(r),
                    Some(q) => {
                        if *q != r {
                            return false;
                        }
                    }
                }
            }
            _ => return false,
        }
    }
    ratio.is_some()
}

fn primitive6(c: &[Rat; 6]) -> [BigInt; 6] {
    let mut den = BigInt::one();
    for x in c {
        den = den.lcm(x.denom());
    }
    let ints: Vec<BigInt> = c.iter().map(|x| x.numer() * &den / x.denom()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = big_gcd(&g, x);
    }
    let first_neg = ints.iter().find(|x| !x.is_zero()).map(|x| x.is_negative());
    if first_neg == Some(true) {
        g = -g;
    }
    let mut out: [BigInt; 6] = Default::default();
    for (i, x) in ints.into_iter().enumerate() {
        out[i] = x / &g;
    }
    out
}

/// The symmetric bilinear form `⟨X, Y⟩ = x·ȳ + x̄·y` whose isotropic
/// vectors are the lines of projective 3-space.
pub fn pairing(a: &PluckerLine, b: &PluckerLine) -> Rat {
    pairing6(&a.coords, &b.coords)
}

pub fn pairing6(a: &[Rat; 6], b: &[Rat; 6]) -> Rat {
    let mut acc = Rat::zero();
    for i in 0..3 {
        acc += &a[i] * &b[i + 3] + &a[i + 3] * &b[i];
    }
    acc
}

/// The linear functional of a normal line `N` as a row vector: the row
/// reorders `N` so that `row · A = ⟨N, A⟩` for axis coordinates `A`.
pub fn pairing_row(n: &PluckerLine) -> [Rat; 6] {
    let c = &n.coords;
    [
        c[3].clone(),
        c[4].clone(),
        c[5].clone(),
        c[0].clone(),
        c[1].clone(),
        c[2].clone(),
    ]
}

/// Basis of the exact solution space of a homogeneous linear system.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    pub basis: Vec<[Rat; 6]>,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Rank of a set of 6-column rows, by fraction-free elimination.
pub fn rank(rows: &[[Rat; 6]]) -> usize {
    echelon(rows).len()
}

fn to_int_row(row: &[Rat; 6]) -> [BigInt; 6] {
    let mut den = BigInt::one();
    for x in row {
        den = den.lcm(x.denom());
    }
    let mut out: [BigInt; 6] = Default::default();
    for (i, x) in row.iter().enumerate() {
        out[i] = x.numer() * &den / x.denom();
    }
    out
}

/// Fraction-free (Bareiss-style) forward elimination; returns the non-zero
/// echelon rows with integer entries.
fn echelon(rows: &[[Rat; 6]]) -> Vec<[BigInt; 6]> {
    let mut m: Vec<[BigInt; 6]> = rows
        .iter()
        .map(to_int_row)
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut out: Vec<[BigInt; 6]> = Vec::new();
    for col in 0..6 {
        let Some(pi) = m.iter().position(|r| !r[col].is_zero()) else {
            continue;
        };
        let pivot_row = m.swap_remove(pi);
        let p = pivot_row[col].clone();
        for r in &mut m {
            if r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for j in 0..6 {
                r[j] = &r[j] * &p - &f * &pivot_row[j];
            }
            // strip content to keep entries small
            let mut g = BigInt::zero();
            for x in r.iter() {
                g = big_gcd(&g, x);
            }
            if !g.is_zero() && !g.is_one() {
                for x in r.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        m.retain(|r| r.iter().any(|x| !x.is_zero()));
        out.push(pivot_row);
    }
    out
}

/// Exact basis of the solution space of `row · v = 0` for all rows.
/// An empty input yields the full six-dimensional space.
pub fn nullspace(rows: &[[Rat; 6]]) -> SolutionSpace {
    let ech = echelon(rows);
    // pivot column of each echelon row
    let mut pivots: Vec<(usize, [BigInt; 6])> = ech
        .into_iter()
        .map(|r| (r.iter().position(|x| !x.is_zero()).unwrap(), r))
        .collect();
    pivots.sort_by_key(|(c, _)| *c);
    let pivot_cols: Vec<usize> = pivots.iter().map(|(c, _)| *c).collect();
    let mut basis = Vec::new();
    for free in 0..6 {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = [
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        ];
        v[free] = Rat::one();
        // back-substitute pivot rows from the bottom up
        for (pc, row) in pivots.iter().rev() {
            let mut acc = Rat::zero();
            for j in (pc + 1)..6 {
                acc += Rat::from(row[j].clone()) * &v[j];
            }
            v[*pc] = -acc / Rat::from(row[*pc].clone());
        }
        basis.push(v);
    }
    SolutionSpace { basis }
}

/// Outcome of axis-candidate extraction from a solution space.
#[derive(Clone, Debug)]
pub struct AxisCandidates {
    pub dim: usize,
    /// Verified members of the line quadric with non-zero direction.
    pub candidates: Vec<PluckerLine>,
    /// Present when the solution space has dimension >= 3: the whole basis
    /// (sphere-like symmetry family) plus one representative line inside.
    pub symmetry_basis: Option<Vec<[Rat; 6]>>,
    /// Set when a dim-2 pencil only meets the quadric at irrational
    /// parameters; a genuine SOR over Q would have produced rational ones.
    pub irrational_pencil: bool,
}

impl AxisCandidates {
    fn empty(dim: usize) -> Self {
        AxisCandidates {
            dim,
            candidates: Vec::new(),
            symmetry_basis: None,
            irrational_pencil: false,
        }
    }
}

fn combine(a: &[Rat; 6], b: &[Rat; 6], la: &Rat, lb: &Rat) -> [Rat; 6] {
    let mut out = a.clone();
    for i in 0..6 {
        out[i] = &a[i] * la + &b[i] * lb;
    }
    out
}

fn as_affine_line(v: &[Rat; 6]) -> Option<PluckerLine> {
    if v[..3].iter().all(|c| c.is_zero()) {
        return None; // ideal line: zero direction block
    }
    let l = PluckerLine::new(v.clone());
    if l.is_line() {
        Some(l)
    } else {
        None
    }
}

/// Extracts the affine lines of the Plücker quadric contained in the
/// solution space.
pub fn candidate_axes(space: &SolutionSpace) -> AxisCandidates {
    let dim = space.dim();
    match dim {
        0 => AxisCandidates::empty(0),
        1 => {
            let mut out = AxisCandidates::empty(1);
            if let Some(l) = as_affine_line(&space.basis[0]) {
                out.candidates.push(l);
            }
            out
        }
        2 => {
            let b1 = &space.basis[0];
            let b2 = &space.basis[1];
            let a = pairing6(b1, b1);
            let b = pairing6(b1, b2);
            let c = pairing6(b2, b2);
            let mut out = AxisCandidates::empty(2);
            if a.is_zero() && b.is_zero() && c.is_zero() {
                // the whole pencil lies on the quadric; report the basis
                // lines as representatives
                for v in [b1, b2] {
                    if let Some(l) = as_affine_line(v) {
                        out.candidates.push(l);
                    }
                }
                return out;
            }
            // roots of a λ² + 2b λμ + c μ² on the pencil λ b1 + μ b2
            let mut params: Vec<(Rat, Rat)> = Vec::new();
            if a.is_zero() {
                params.push((Rat::one(), Rat::zero())); // μ = 0
                if !b.is_zero() {
                    // remaining root: 2bλ + cμ = 0
                    params.push((-&c, Rat::from(BigInt::from(2)) * &b));
                }
            } else {
                let disc = &b * &b - &a * &c;
                if disc.is_negative() {
                    // no real intersection with the quadric
                } else {
                    match rat_sqrt(&disc) {
                        Some(r) => {
                            params.push(((-&b + &r) / &a, Rat::one()));
                            if !r.is_zero() {
                                params.push(((-&b - &r) / &a, Rat::one()));
                            }
                        }
                        None => out.irrational_pencil = true,
                    }
                }
            }
            for (la, lb) in params {
                let v = combine(b1, b2, &la, &lb);
                if v.iter().all(|x| x.is_zero()) {
                    continue;
                }
                if let Some(l) = as_affine_line(&v) {
                    out.candidates.push(l);
                }
            }
            out
        }
        _ => {
            let mut out = AxisCandidates::empty(dim);
            out.symmetry_basis = Some(space.basis.clone());
            // representative affine line: try basis vectors, then small
            // integer combinations of pairs via the pencil quadratic
            'search: {
                for v in &space.basis {
                    if let Some(l) = as_affine_line(v) {
                        out.candidates.push(l);
                        break 'search;
                    }
                }
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        let sub = SolutionSpace {
                            basis: vec![space.basis[i].clone(), space.basis[j].clone()],
                        };
                        let pair = candidate_axes(&sub);
                        if let Some(l) = pair.candidates.into_iter().next() {
                            out.candidates.push(l);
                            break 'search;
                        }
                    }
                }
            }
            out
        }
    }
}
