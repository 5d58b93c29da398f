use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// `r^k` for an integer `k`; `None` when `r = 0` and `k < 0`.
pub fn pow_int(r: &Rational, k: i64) -> Option<Rational> {
    if k < 0 && r.is_zero() {
        return None;
    }
    let mut base = if k < 0 { r.recip() } else { r.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    Some(acc)
}

/// Renders `n` or `n/d`.
pub fn render(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a fraction `num/den` of small integers in reduced form.
pub fn render_frac(num: i64, den: i64) -> String {
    render(&rat(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-4, 1)), None);
        assert_eq!(sqrt_exact(&int(0)), Some(int(0)));
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow_int(&rat(2, 3), 3), Some(rat(8, 27)));
        assert_eq!(pow_int(&rat(2, 3), -2), Some(rat(9, 4)));
        assert_eq!(pow_int(&int(0), -1), None);
        assert_eq!(render(&rat(-6, 4)), "-3/2");
    }
}
