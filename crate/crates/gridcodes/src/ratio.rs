//! Exact rational arithmetic used for densities and mean weights.

use num_rational::Ratio;

/// Exact fraction with a positive denominator, always in reduced form.
pub type Rational = Ratio<i64>;

/// Builds a reduced rational from a numerator and a nonzero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                None
            } else {
                Some(Ratio::new(p, q))
            }
        }
        None => s.parse::<i64>().ok().map(Ratio::from_integer),
    }
}

/// Formats as `p/q` (or `p` when the denominator is 1).
pub fn format_rational(r: Rational) -> String {
    if *r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal annotation with 7 significant digits; never parsed back.
pub fn approx_decimal(r: Rational) -> String {
    let v = *r.numer() as f64 / *r.denom() as f64;
    format!("{:.7}", v)
}

/// Compares `a/b` and `c/d` exactly by cross multiplication in 128 bits.
/// Denominators must be positive.
pub fn cmp_frac(a: i64, b: i64, c: i64, d: i64) -> std::cmp::Ordering {
    debug_assert!(b > 0 && d > 0);
    (a as i128 * d as i128).cmp(&(c as i128 * b as i128))
}
