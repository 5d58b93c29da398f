//! The log-canonical bracket `{y_j, y_k} = b_jk y_j y_k`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{HalfVec, LaurentPoly, Rational, VarSet};
use crate::ratfun::RatFun;

use super::matrix::ExchangeMatrix;

fn check_dims(n: usize, b: &ExchangeMatrix) -> Result<()> {
    if n == b.n() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: b.n(),
            found: n,
        })
    }
}

/// `uᵀ B v` for doubled exponent vectors, in actual units.
fn pairing(b: &ExchangeMatrix, u: &HalfVec, v: &HalfVec) -> Rational {
    let uu: Vec<i64> = u.doubled().iter().map(|&x| x as i64).collect();
    let vv: Vec<i64> = v.doubled().iter().map(|&x| x as i64).collect();
    Rational::new(b.pair(&uu, &vv).into(), 4.into())
}

/// Bracket of two Laurent polynomials: `{y^a, y^b} = (aᵀBb) y^(a+b)` extended bilinearly.
pub fn bracket(f: &LaurentPoly, g: &LaurentPoly, b: &ExchangeMatrix) -> Result<LaurentPoly> {
    check_dims(f.vars().len(), b)?;
    if f.vars() != g.vars() {
        return Err(Error::VarSetMismatch {
            left: f.vars().names().join(","),
            right: g.vars().names().join(","),
        });
    }
    let mut out = LaurentPoly::zero(f.vars());
    for (ea, ca) in f.terms() {
        for (eb, cb) in g.terms() {
            let w = pairing(b, ea, eb);
            if !w.is_zero() {
                out.add_term(ea.add(eb), w * ca * cb);
            }
        }
    }
    Ok(out)
}

/// `y_j ∂/∂y_j log f` for every `j`.
pub fn log_derivatives(f: &RatFun) -> Result<Vec<RatFun>> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let vars: &VarSet = f.vars();
    let n = vars.len();
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut parts = vec![RatFun::constant(
            vars,
            Rational::new(f.monomial_part().get(j).into(), 2.into()),
        )];
        let yj = LaurentPoly::var(vars, j);
        for (p, e) in f.factors() {
            let dp = p.partial(j)?;
            if dp.is_zero() {
                continue;
            }
            let num = RatFun::from_poly(&(&yj * &dp)).scale(&Rational::from_integer((*e).into()));
            parts.push(num.try_mul(&RatFun::from_poly(p).inv()?)?);
        }
        out.push(RatFun::sum(vars, &parts, &[])?);
    }
    Ok(out)
}

/// `{f, g} / (f g) = Σ b_jk (y_j ∂_j log f)(y_k ∂_k log g)`.
pub fn log_bracket(f: &RatFun, g: &RatFun, b: &ExchangeMatrix) -> Result<RatFun> {
    check_dims(f.vars().len(), b)?;
    let lf = log_derivatives(f)?;
    let lg = log_derivatives(g)?;
    let mut terms = Vec::new();
    for (j, a) in lf.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (k, c) in lg.iter().enumerate() {
            let bjk = b.get(j, k);
            if bjk != 0 && !c.is_zero() {
                terms.push(a.try_mul(c)?.scale(&Rational::from_integer(bjk.into())));
            }
        }
    }
    RatFun::sum(f.vars(), &terms, &[])
}

/// Bracket of two rational functions.
pub fn bracket_ratfun(f: &RatFun, g: &RatFun, b: &ExchangeMatrix) -> Result<RatFun> {
    if f.is_zero() || g.is_zero() {
        return Ok(RatFun::zero(f.vars()));
    }
    f.try_mul(g)?.try_mul(&log_bracket(f, g, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::expr::{ex, LaurentRing};

    fn markoff() -> ExchangeMatrix {
        ExchangeMatrix::new(vec![vec![0, -2, 2], vec![2, 0, -2], vec![-2, 2, 0]]).unwrap()
    }

    /// Independent oracle: Σ b_jk y_j y_k ∂_j f ∂_k g.
    fn biderivation(f: &LaurentPoly, g: &LaurentPoly, b: &ExchangeMatrix) -> LaurentPoly {
        let vars = f.vars();
        let mut out = LaurentPoly::zero(vars);
        for j in 0..b.n() {
            for k in 0..b.n() {
                if b.get(j, k) == 0 {
                    continue;
                }
                let yy = &LaurentPoly::var(vars, j) * &LaurentPoly::var(vars, k);
                let t = &(&yy * &f.partial(j).unwrap()) * &g.partial(k).unwrap();
                out = &out + &t.scale(&int(b.get(j, k)));
            }
        }
        out
    }

    #[test]
    fn generators() {
        let r = LaurentRing::new(&VarSet::numbered("y", 3));
        let y1 = r.eval(&ex("y1")).unwrap();
        let y2 = r.eval(&ex("y2")).unwrap();
        assert_eq!(bracket(&y1, &y2, &markoff()).unwrap(), r.eval(&ex("-2*y1*y2")).unwrap());
    }

    #[test]
    fn matches_biderivation_on_half_exponents() {
        let r = LaurentRing::new(&VarSet::numbered("y", 3));
        let f = r.eval(&ex("sqrt(y1*y3) + sqrt(y1/y3) + 1/sqrt(y1*y3)")).unwrap();
        let g = r.eval(&ex("sqrt(y2*y3) + 3*y1^2 - y2/y3")).unwrap();
        let b = markoff();
        assert_eq!(bracket(&f, &g, &b).unwrap(), biderivation(&f, &g, &b));
        assert!(bracket(&f, &f, &b).unwrap().is_zero());
    }

    #[test]
    fn rational_bracket_agrees_with_polynomial_one() {
        let vars = VarSet::numbered("y", 3);
        let r = LaurentRing::new(&vars);
        let f = r.eval(&ex("y1 + y2*y3")).unwrap();
        let g = r.eval(&ex("1 + y1*y2")).unwrap();
        let b = markoff();
        let lhs = bracket_ratfun(&RatFun::from_poly(&f), &RatFun::from_poly(&g), &b).unwrap();
        assert_eq!(lhs, RatFun::from_poly(&bracket(&f, &g, &b).unwrap()));
    }
}
