//! Canonical polynomial printing: decreasing graded-lex term order,
//! explicit `*` and `^`, coefficients as exact rationals. The output is
//! re-parseable, and parse ∘ format is the identity.

use crate::algebra::coeff::Coeff;
use crate::algebra::ext::Ext;
use crate::algebra::poly::{Mono, Poly, RatFunc, Var};
use crate::algebra::rat::Rat;
use num_bigint::BigInt;
use num_traits::Signed;

const VAR_ORDER: [Var; 9] = [
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

fn format_mono(m: &Mono) -> Option<String> {
    let mut parts = Vec::new();
    for v in VAR_ORDER {
        let e = m.0[v.index()];
        if e == 1 {
            parts.push(v.name().to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", v.name(), e));
        }
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

fn format_rat_plain(r: &Rat) -> String {
    if *r.denom() == BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_poly(p: &Poly<Rat>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let terms: Vec<(&Mono, &Rat)> = p.terms().collect();
    for (i, (m, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match format_mono(m) {
            None => out.push_str(&format_rat_plain(&mag)),
            Some(vars) => {
                if mag == Rat::one() {
                    out.push_str(&vars);
                } else {
                    out.push_str(&format_rat_plain(&mag));
                    out.push('*');
                    out.push_str(&vars);
                }
            }
        }
    }
    out
}

/// Rendering for tower-coefficient polynomials; coefficients appear in
/// parentheses. Not intended to round-trip through the parser.
pub fn format_poly_ext(p: &Poly<Ext>) -> String {
    if let Some(q) = p.to_rat_poly() {
        return format_poly(&q);
    }
    if p.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<(&Mono, &Ext)> = p.terms().collect();
    let mut parts = Vec::new();
    for (m, c) in terms.iter().rev() {
        let coeff = format!("({})", c.render());
        match format_mono(m) {
            None => parts.push(coeff),
            Some(vars) => parts.push(format!("{}*{}", coeff, vars)),
        }
    }
    parts.join(" + ")
}

pub fn format_ratfunc(r: &RatFunc<Rat>) -> String {
    if r.den.is_constant() {
        let c = r
            .den
            .constant_value()
            .cloned()
            .unwrap_or_else(|| Rat::one());
        return format_poly(&r.num.scale(&c.recip()));
    }
    format!("({})/({})", format_poly(&r.num), format_poly(&r.den))
}

pub fn format_ratfunc_ext(r: &RatFunc<Ext>) -> String {
    if let (Some(n), Some(d)) = (r.num.to_rat_poly(), r.den.to_rat_poly()) {
        return format_ratfunc(&RatFunc::new(n, d));
    }
    format!(
        "({})/({})",
        format_poly_ext(&r.num),
        format_poly_ext(&r.den)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat_int;
    use crate::io::parse::parse_poly;

    #[test]
    fn format_examples() {
        let cone = parse_poly("y^2 - 2*x*z").unwrap();
        assert_eq!(format_poly(&cone), "-2*x*z + y^2");
        assert_eq!(format_poly(&Poly::zero()), "0");
        let p = parse_poly("3/5*x - 1").unwrap();
        assert_eq!(format_poly(&p), "3/5*x - 1");
    }

    #[test]
    fn round_trip() {
        for text in [
            "y^2 - 2*x*z",
            "x^4 + 104*x^2 - 200*s + 48*x*s",
            "-x + 7/3",
            "0",
            "s^3 - 29*s^2 + 12*x*s^2",
        ] {
            let p = parse_poly(text).unwrap();
            let printed = format_poly(&p);
            assert_eq!(parse_poly(&printed).unwrap(), p, "round trip of {}", text);
        }
    }

    #[test]
    fn ratfunc_formats() {
        let r = RatFunc::new(
            Poly::var(Var::X),
            Poly::var(Var::S).add(&Poly::one()),
        );
        assert_eq!(format_ratfunc(&r), "(x)/(s + 1)");
        let whole = RatFunc::new(Poly::var(Var::X), Poly::constant(rat_int(2)));
        assert_eq!(format_ratfunc(&whole), "1/2*x");
    }
}
