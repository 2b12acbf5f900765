//! Exact fractions over `i128`, used for every density, ratio, and α value.
//!
//! The exact decomposition separates candidate α values by exactly 1/n², so
//! none of the arithmetic here may round. Comparisons cross-multiply through
//! a 256-bit product, which keeps them exact even when numerators and
//! denominators individually approach the `i128` range.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

/// A rational number stored in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

const fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Full 128x128 -> 256 bit unsigned product as (hi, lo).
fn wide_mul(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = (1u128 << 64) - 1;
    let (a_hi, a_lo) = (a >> 64, a & MASK);
    let (b_hi, b_lo) = (b >> 64, b & MASK);
    let ll = a_lo * b_lo;
    let lh = a_lo * b_hi;
    let hl = a_hi * b_lo;
    let hh = a_hi * b_hi;
    let mid = (ll >> 64) + (lh & MASK) + (hl & MASK);
    let lo = (mid << 64) | (ll & MASK);
    let hi = hh + (lh >> 64) + (hl >> 64) + (mid >> 64);
    (hi, lo)
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Builds `num/den` reduced to lowest terms.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "rational denominator must be nonzero");
        let sign = if (num < 0) != (den < 0) && num != 0 {
            -1
        } else {
            1
        };
        let (n, d) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd(n, d);
        Rational {
            num: sign * (n / g) as i128,
            den: (d / g) as i128,
        }
    }

    pub fn from_int(v: i128) -> Self {
        Rational { num: v, den: 1 }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn reciprocal(&self) -> Self {
        assert!(self.num != 0, "cannot invert zero");
        Rational::new(self.den, self.num)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Renders the value in decimal with `places` digits, rounding half
    /// away from zero (e.g. 15/16 at 2 places is "0.94", 1/8 is "0.13").
    pub fn to_decimal_string(&self, places: u32) -> String {
        let scale = 10i128
            .checked_pow(places)
            .expect("decimal scale overflows i128");
        let scaled = self
            .num
            .checked_mul(scale)
            .expect("decimal rendering overflows i128");
        let q = scaled / self.den;
        let r = (scaled % self.den).abs();
        // round half up, away from zero
        let rounded = if 2 * r >= self.den {
            q + self.num.signum()
        } else {
            q
        };
        let sign = if rounded < 0 { "-" } else { "" };
        let mag = rounded.unsigned_abs();
        let unit = scale as u128;
        if places == 0 {
            format!("{sign}{mag}")
        } else {
            format!(
                "{sign}{}.{:0width$}",
                mag / unit,
                mag % unit,
                width = places as usize
            )
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.split_once('/') {
            Some((n, d)) => Ok(Rational::new(n.trim().parse()?, d.trim().parse()?)),
            None => Ok(Rational::from_int(s.trim().parse()?)),
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // a/b vs c/d with b,d > 0: compare a*d with c*b.
        let lhs_neg = self.num < 0;
        let rhs_neg = other.num < 0;
        if lhs_neg != rhs_neg {
            return if lhs_neg {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        let lhs = wide_mul(self.num.unsigned_abs(), other.den.unsigned_abs());
        let rhs = wide_mul(other.num.unsigned_abs(), self.den.unsigned_abs());
        if lhs_neg {
            rhs.cmp(&lhs)
        } else {
            lhs.cmp(&rhs)
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        let num = self
            .num
            .checked_mul(rhs.den)
            .and_then(|a| rhs.num.checked_mul(self.den).and_then(|b| a.checked_add(b)))
            .expect("rational addition overflows i128");
        let den = self
            .den
            .checked_mul(rhs.den)
            .expect("rational addition overflows i128");
        Rational::new(num, den)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + Rational {
            num: -rhs.num,
            den: rhs.den,
        }
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        // cross-reduce before multiplying to keep intermediates small
        let g1 = gcd(self.num.unsigned_abs(), rhs.den.unsigned_abs()).max(1);
        let g2 = gcd(rhs.num.unsigned_abs(), self.den.unsigned_abs()).max(1);
        let num = (self.num / g1 as i128)
            .checked_mul(rhs.num / g2 as i128)
            .expect("rational multiplication overflows i128");
        let den = (self.den / g2 as i128)
            .checked_mul(rhs.den / g1 as i128)
            .expect("rational multiplication overflows i128");
        Rational::new(num, den)
    }
}

impl Div for Rational {
    type Output = Rational;
    #[allow(clippy::suspicious_arithmetic_impl)] // division as inverse multiply
    fn div(self, rhs: Rational) -> Rational {
        self * rhs.reciprocal()
    }
}

impl From<u64> for Rational {
    fn from(v: u64) -> Self {
        Rational::from_int(v as i128)
    }
}
