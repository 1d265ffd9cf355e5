use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::PolyError;

/// Dense polynomial in `q` with exact rational coefficients, ascending order.
///
/// Only used for the gcd / Bezout step; everything else stays in Z[q].
#[derive(Clone, Default, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => RatPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Converts back to Z[q] when every coefficient is an integer.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let lead = divisor
            .leading_coeff()
            .expect("division by the zero rational polynomial")
            .clone();
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return (RatPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + db] / &lead;
            if c.is_zero() {
                continue;
            }
            for (k, dk) in divisor.coeffs.iter().enumerate() {
                rem[i + k] -= &c * dk;
            }
            quot[i] = c;
        }
        rem.truncate(db);
        (RatPoly::new(quot), RatPoly::new(rem))
    }
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

/// Monic gcd `g` of `a` and `b` together with Bezout cofactors `u`, `v`
/// such that `u*a + v*b = g`.
///
/// The cofactors are the ones produced by the extended Euclidean algorithm
/// started from `(a, b)`, which are the minimal-degree representatives:
/// `deg u < deg b - deg g` and `deg v < deg a - deg g` whenever both inputs
/// have degree above `deg g`. When `b` divides `a` this gives `u = 0` and
/// `v = 1 / lead(b)`.
pub fn gcd_bezout(a: &RatPoly, b: &RatPoly) -> Result<(RatPoly, RatPoly, RatPoly), PolyError> {
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
    let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (quot, rem) = r0.div_rem(&r1);
        let s2 = &s0 - &(&quot * &s1);
        let t2 = &t0 - &(&quot * &t1);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = r0
        .leading_coeff()
        .expect("gcd of a nonzero input is nonzero")
        .recip();
    let (g, u, v) = (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv));
    if cfg!(debug_assertions) {
        let lhs = &(&u * a) + &(&v * b);
        assert_eq!(lhs, g, "Bezout identity failed to re-expand");
    }
    Ok((g, u, v))
}

fn add_coeffs(a: &[BigRational], b: &[BigRational], negate_b: bool) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    (0..n)
        .map(|i| {
            let x = a.get(i).unwrap_or(&zero);
            let y = b.get(i).unwrap_or(&zero);
            if negate_b {
                x - y
            } else {
                x + y
            }
        })
        .collect()
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Descending-exponent text, rational coefficients written `n/d`.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, usize)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (c.to_string(), e))
            .collect();
        super::format::write_terms(f, terms)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bezout_for_q3_and_q4() {
        let (g, u, v) = gcd_bezout(&r(&[1, 1, 1]), &r(&[1, 1, 1, 1])).unwrap();
        assert_eq!(g, RatPoly::one());
        assert_eq!(u, r(&[0, -1]));
        assert_eq!(v, RatPoly::one());
    }

    #[test]
    fn equal_arguments() {
        let a = r(&[2, 0, 4]);
        let (g, u, v) = gcd_bezout(&a, &a).unwrap();
        assert_eq!(g, a.monic());
        assert!(u.is_zero());
        assert_eq!(v, RatPoly::constant(rat(1, 4)));
    }

    #[test]
    fn divisor_case() {
        let (g, u, v) = gcd_bezout(&r(&[-1, 0, 1]), &r(&[-1, 1])).unwrap();
        assert_eq!(g, r(&[-1, 1]));
        assert!(u.is_zero());
        assert_eq!(v, RatPoly::one());
    }

    #[test]
    fn zero_inputs() {
        assert_eq!(
            gcd_bezout(&RatPoly::zero(), &RatPoly::zero()),
            Err(PolyError::BothZero)
        );
        let (g, u, v) = gcd_bezout(&RatPoly::zero(), &r(&[3, 3])).unwrap();
        assert_eq!(g, r(&[1, 1]));
        assert!(u.is_zero());
        assert_eq!(v, RatPoly::constant(rat(1, 3)));
        let (g, u, v) = gcd_bezout(&r(&[0, 2]), &RatPoly::zero()).unwrap();
        assert_eq!(g, r(&[0, 1]));
        assert_eq!(u, RatPoly::constant(rat(1, 2)));
        assert!(v.is_zero());
    }

    #[test]
    fn rational_cofactors() {
        // gcd(q^2 + 1, 2q + 1) = 1 with non-integer cofactors.
        let (a, b) = (r(&[1, 0, 1]), r(&[1, 2]));
        let (g, u, v) = gcd_bezout(&a, &b).unwrap();
        assert_eq!(g, RatPoly::one());
        assert_eq!(&(&u * &a) + &(&v * &b), RatPoly::one());
        assert!(u.to_int_poly().is_none() || v.to_int_poly().is_none());
    }

    #[test]
    fn display() {
        let p = RatPoly::new(vec![rat(1, 2), rat(0, 1), rat(-3, 4)]);
        assert_eq!(p.to_string(), "-3/4*q^2 + 1/2");
    }

    fn small_rat_poly() -> impl Strategy<Value = RatPoly> {
        prop::collection::vec(-6i64..=6, 0..=7).prop_map(|v| RatPoly::from_ints(&v))
    }

    proptest! {
        #[test]
        fn bezout_postconditions(a in small_rat_poly(), b in small_rat_poly()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let (g, u, v) = gcd_bezout(&a, &b).unwrap();
            prop_assert_eq!(&(&u * &a) + &(&v * &b), g.clone());
            prop_assert!(g.leading_coeff().unwrap().is_one());
            // g divides both inputs
            prop_assert!(a.div_rem(&g).1.is_zero());
            prop_assert!(b.div_rem(&g).1.is_zero());
            let dg = g.degree().unwrap();
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                if da > dg && db > dg {
                    prop_assert!(u.degree().is_none_or(|d| d < db - dg));
                    prop_assert!(v.degree().is_none_or(|d| d < da - dg));
                }
            }
        }
    }
}
