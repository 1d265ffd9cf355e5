use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::PolyError;

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector and equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// The three ring operations accepted by [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Applies one ring operation.
pub fn arith(a: &IntPoly, b: &IntPoly, op: ArithOp) -> IntPoly {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// True iff every coefficient is nonnegative (vacuously true for zero).
    pub fn is_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// True iff coefficient `i` equals coefficient `deg - i` for every `i`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Multiplies by `q^e`.
    pub fn shift_up(&self, e: usize) -> Self {
        if self.is_zero() || e == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient `a / b` in Z[q].
    ///
    /// Every leading-term division must be exact over the integers and the
    /// final remainder must vanish; anything else is reported as
    /// [`PolyError::NotDivisible`].
    pub fn exact_div(&self, b: &IntPoly) -> Result<IntPoly, PolyError> {
        let lead = b
            .leading_coeff()
            .ok_or_else(|| PolyError::NotDivisible("division by the zero polynomial".into()))?;
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let (da, db) = (self.coeffs.len() - 1, b.coeffs.len() - 1);
        if da < db {
            return Err(PolyError::NotDivisible(format!(
                "dividend degree {da} is below divisor degree {db}"
            )));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible(format!(
                    "coefficient {top} of q^{} is not a multiple of the leading coefficient {lead}",
                    i + db
                )));
            }
            for (k, bk) in b.coeffs.iter().enumerate() {
                if !bk.is_zero() {
                    rem[i + k] -= &c * bk;
                }
            }
            quot[i] = c;
        }
        if let Some(pos) = rem.iter().position(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible(format!(
                "nonzero remainder starting at q^{pos}"
            )));
        }
        Ok(IntPoly::new(quot))
    }
}

/// Free-function form of [`IntPoly::exact_div`].
pub fn exact_div(a: &IntPoly, b: &IntPoly) -> Result<IntPoly, PolyError> {
    a.exact_div(b)
}

/// Free-function form of [`IntPoly::eval_int`].
pub fn eval_int(a: &IntPoly, x: &BigInt) -> BigInt {
    a.eval_int(x)
}

/// Free-function form of [`IntPoly::is_nonneg`].
pub fn is_nonneg(a: &IntPoly) -> bool {
    a.is_nonneg()
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i);
            let y = b.get(i);
            match (x, y) {
                (Some(x), Some(y)) if negate_b => x - y,
                (Some(x), Some(y)) => x + y,
                (Some(x), None) => x.clone(),
                (None, Some(y)) if negate_b => -y,
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            }
        })
        .collect()
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> Self {
        iter.fold(IntPoly::one(), |acc, p| acc * p)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn add_and_absorbing_zero() {
        assert_eq!(arith(&p(&[1, 1]), &p(&[0, 1]), ArithOp::Add), p(&[1, 2]));
        assert_eq!(
            arith(&p(&[3, -2, 5]), &IntPoly::zero(), ArithOp::Mul),
            IntPoly::zero()
        );
        assert_eq!(
            arith(&p(&[1, 1]), &p(&[1, 1]), ArithOp::Sub),
            IntPoly::zero()
        );
    }

    #[test]
    fn hand_expanded_product() {
        assert_eq!(p(&[1, 0, 1]) * p(&[1, 1, 1]), p(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn long_division() {
        assert_eq!(
            p(&[1, 1, 2, 1, 1]).exact_div(&p(&[1, 1, 1])).unwrap(),
            p(&[1, 0, 1])
        );
        let a = p(&[4, -7, 0, 9]);
        assert_eq!(a.exact_div(&IntPoly::one()).unwrap(), a);
        assert!(matches!(
            p(&[1, 1]).exact_div(&p(&[1, 1, 1])),
            Err(PolyError::NotDivisible(_))
        ));
        assert!(p(&[1]).exact_div(&IntPoly::zero()).is_err());
        assert_eq!(
            IntPoly::zero().exact_div(&p(&[1, 1])).unwrap(),
            IntPoly::zero()
        );
    }

    #[test]
    fn non_integral_quotient_is_rejected() {
        // (2q + 2) / (2q + 1) would need rational coefficients.
        assert!(p(&[2, 2]).exact_div(&p(&[1, 2])).is_err());
        assert_eq!(p(&[2, 4]).exact_div(&p(&[1, 2])).unwrap(), p(&[2]));
    }

    #[test]
    fn evaluation() {
        let one = BigInt::one();
        assert_eq!(p(&[1, 1, 1]).eval_int(&one), BigInt::from(3));
        assert_eq!(IntPoly::zero().eval_int(&BigInt::from(17)), BigInt::zero());
        assert_eq!(p(&[1, 0, 1, 1, 1, 0, 1]).eval_int(&one), BigInt::from(5));
        assert_eq!(p(&[1, -2, 3]).eval_int(&BigInt::from(-2)), BigInt::from(17));
    }

    #[test]
    fn nonnegativity() {
        assert!(p(&[1, 0, 1]).is_nonneg());
        assert!(!p(&[1, 1, 0, -1]).is_nonneg());
        assert!(IntPoly::zero().is_nonneg());
    }

    #[test]
    fn powers() {
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[5, 1]).pow(0), IntPoly::one());
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..=9, 0..=13).prop_map(|v| IntPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn division_round_trip(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn evaluation_is_multiplicative(a in small_poly(), b in small_poly(), x in -5i64..=5) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval_int(&x), a.eval_int(&x) * b.eval_int(&x));
        }
    }
}
