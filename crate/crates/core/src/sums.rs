//! Alternating sums over `-n <= k <= n` and the moduli they are tested
//! against.
//!
//! Every sum weights its `k`-th term by `(-1)^k q^(e(k) + C(k,2))`. For
//! negative `k` the sign is the parity of `|k|` and `C(k,2)` is the formula
//! `k(k-1)/2`, so `C(-1,2) = 1` and `C(-2,2) = 3`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyarith::IntPoly;
use crate::qobjects::{q_binomial, q_integer, q_narayana, q_shifted_factorial};

/// Exponents above this are rejected rather than allocated.
pub const MAX_EXPONENT: i128 = 1 << 22;

/// Integer polynomial `f(k)` in the summation index, ascending coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FPoly {
    coeffs: Vec<i64>,
}

impl FPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FPoly { coeffs }
    }

    pub fn zero() -> Self {
        FPoly::default()
    }

    /// `j * k^2`, the weight used by the Narayana-power sums.
    pub fn quadratic(j: i64) -> Self {
        FPoly::new(vec![0, 0, j])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn eval(&self, k: i64) -> Option<i128> {
        let k = k as i128;
        self.coeffs
            .iter()
            .rev()
            .try_fold(0i128, |acc, &c| acc.checked_mul(k)?.checked_add(c as i128))
    }
}

/// Comma-separated ascending coefficients, e.g. `0,0,2` for `2k^2`.
impl fmt::Display for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for FPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::InvalidParameter(format!("bad f coefficient {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(FPoly::new)
    }
}

/// A sum multiplied by `q^shift` so that no exponent is negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedSum {
    pub poly: IntPoly,
    pub shift: usize,
}

/// `(-1)^k` as a sign flag: true for odd `|k|`.
fn is_odd(k: i64) -> bool {
    k.rem_euclid(2) == 1
}

/// `C(k, 2) = k(k-1)/2`, valid for negative `k` as well.
pub fn binom2(k: i64) -> i128 {
    let k = k as i128;
    k * (k - 1) / 2
}

fn checked_exponent(raw: Option<i128>, k: i64) -> Result<i128> {
    match raw {
        Some(e) if e.abs() <= MAX_EXPONENT => Ok(e),
        _ => Err(Error::InvalidParameter(format!(
            "exponent at k = {k} is outside +-{MAX_EXPONENT}"
        ))),
    }
}

fn signed_monomial_times(term: &IntPoly, k: i64, exponent: usize) -> IntPoly {
    let t = term.shift_up(exponent);
    if is_odd(k) {
        -t
    } else {
        t
    }
}

fn check_positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::InvalidParameter(format!(
            "{name} must be >= 1, got {v}"
        )));
    }
    Ok(())
}

fn check_ns(ns: &[i64]) -> Result<()> {
    if ns.is_empty() {
        return Err(Error::InvalidParameter("ns must be nonempty".into()));
    }
    for &n in ns {
        check_positive("each n_i", n)?;
    }
    Ok(())
}

/// `sum_{k=-n}^{n} (-1)^k q^(j k^2 + C(k,2)) N_q(2n+1, n+k+1)^r`.
pub fn thm12_sum(n: i64, r: i64, j: i64) -> Result<IntPoly> {
    check_positive("n", n)?;
    check_positive("r", r)?;
    if j < 0 {
        return Err(Error::InvalidParameter(format!("j must be >= 0, got {j}")));
    }
    let r = u32::try_from(r).map_err(|_| Error::InvalidParameter(format!("r = {r} too large")))?;
    let mut total = IntPoly::zero();
    for k in -n..=n {
        let e = checked_exponent(
            (j as i128)
                .checked_mul((k as i128) * (k as i128))
                .map(|v| v + binom2(k)),
            k,
        )?;
        let term = q_narayana(2 * n + 1, n + k + 1)?.pow(r);
        total = total + signed_monomial_times(&term, k, e as usize);
    }
    Ok(total)
}

/// `sum_{k=-n_1}^{n_1} (-1)^k q^(f(k) + C(k,2)) prod_i [a_i, n_i+k] [a_i, n_i+k+1]`
/// with `a_i = n_i + n_{i+1} + 1` and `n_{m+1} = n_1`.
///
/// When some `f(k) + C(k,2)` in the range is negative the result is
/// multiplied by `q^shift`, `shift = -min`, which is recorded.
pub fn cyclic_sum(ns: &[i64], f: &FPoly) -> Result<NormalizedSum> {
    check_ns(ns)?;
    let n1 = ns[0];
    let exponents = (-n1..=n1)
        .map(|k| checked_exponent(f.eval(k).and_then(|v| v.checked_add(binom2(k))), k))
        .collect::<Result<Vec<_>>>()?;
    let min = exponents.iter().copied().min().expect("range is nonempty");
    let shift = if min < 0 { (-min) as usize } else { 0 };
    let mut total = IntPoly::zero();
    for (k, e) in (-n1..=n1).zip(exponents) {
        let mut term = IntPoly::one();
        for (i, &ni) in ns.iter().enumerate() {
            let next = ns[(i + 1) % ns.len()];
            let top = ni + next + 1;
            term = term * q_binomial(top, ni + k)? * q_binomial(top, ni + k + 1)?;
            if term.is_zero() {
                break;
            }
        }
        if !term.is_zero() {
            total = total + signed_monomial_times(&term, k, (e + shift as i128) as usize);
        }
    }
    Ok(NormalizedSum { poly: total, shift })
}

/// `[n_1 + n_m + 1, n_1] * prod_{i=1}^{m-1} [n_i + n_{i+1} + 1]`.
pub fn cyclic_modulus(ns: &[i64]) -> Result<IntPoly> {
    check_ns(ns)?;
    let m = ns.len();
    let mut modulus = q_binomial(ns[0] + ns[m - 1] + 1, ns[0])?;
    for w in ns.windows(2) {
        modulus = modulus * q_integer(w[0] + w[1] + 1)?;
    }
    Ok(modulus)
}

/// The open-chain sum with `n_{m+1} = 0`:
///
/// `(q;q)_{n_1} prod_i (q;q)_{n_i+n_{i+1}} / (q;q)_{2n_i}
///   * sum_k (-1)^k q^(j k^2 + C(k,2)) prod_i [2n_i, n_i+k]`.
///
/// The division is performed once, at the end, in Z[q]; a non-polynomial
/// result surfaces as `NotDivisible`.
pub fn gjz_sum(ns: &[i64], j: i64) -> Result<IntPoly> {
    check_ns(ns)?;
    if j < 0 {
        return Err(Error::InvalidParameter(format!("j must be >= 0, got {j}")));
    }
    let n1 = ns[0];
    let mut inner = IntPoly::zero();
    for k in -n1..=n1 {
        let e = checked_exponent(
            (j as i128)
                .checked_mul((k as i128) * (k as i128))
                .map(|v| v + binom2(k)),
            k,
        )?;
        let mut term = IntPoly::one();
        for &ni in ns {
            term = term * q_binomial(2 * ni, ni + k)?;
            if term.is_zero() {
                break;
            }
        }
        if !term.is_zero() {
            inner = inner + signed_monomial_times(&term, k, e as usize);
        }
    }
    let mut numerator = q_shifted_factorial(n1)? * inner;
    let mut denominator = IntPoly::one();
    for (i, &ni) in ns.iter().enumerate() {
        let next = ns.get(i + 1).copied().unwrap_or(0);
        numerator = numerator * q_shifted_factorial(ni + next)?;
        denominator = denominator * q_shifted_factorial(2 * ni)?;
    }
    Ok(numerator.exact_div(&denominator)?)
}

/// `[2n+1]^r * thm12_sum(n, r, j)`, the right-hand side of the bridge
/// between the Narayana form and the cyclic form.
pub fn bridged_thm12(n: i64, r: i64, j: i64) -> Result<IntPoly> {
    let r32 = u32::try_from(r).map_err(|_| Error::InvalidParameter(format!("r = {r}")))?;
    Ok(q_integer(2 * n + 1)?.pow(r32) * thm12_sum(n, r, j)?)
}

/// Integer specialisation at `q = 1` of [`cyclic_sum`], computed with
/// classical binomials only.
pub fn cyclic_sum_int(ns: &[i64]) -> Result<BigInt> {
    check_ns(ns)?;
    let n1 = ns[0];
    let mut total = BigInt::from(0);
    for k in -n1..=n1 {
        let mut term = BigInt::one();
        for (i, &ni) in ns.iter().enumerate() {
            let top = ni + ns[(i + 1) % ns.len()] + 1;
            term *= crate::qobjects::binomial_int(top, ni + k)
                * crate::qobjects::binomial_int(top, ni + k + 1);
        }
        if is_odd(k) {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}

/// Integer modulus `C(n_1+n_m+1, n_1) prod (n_i + n_{i+1} + 1)`.
pub fn cyclic_modulus_int(ns: &[i64]) -> Result<BigInt> {
    check_ns(ns)?;
    let m = ns.len();
    let mut modulus = crate::qobjects::binomial_int(ns[0] + ns[m - 1] + 1, ns[0]);
    for w in ns.windows(2) {
        modulus *= BigInt::from(w[0] + w[1] + 1);
    }
    Ok(modulus)
}

/// `sum_{k=-n}^{n} (-1)^k N(2n+1, n+k+1)^r` over the integers.
pub fn thm11_sum_int(n: i64, r: i64) -> Result<BigInt> {
    check_positive("n", n)?;
    check_positive("r", r)?;
    let r = u32::try_from(r).map_err(|_| Error::InvalidParameter(format!("r = {r}")))?;
    let mut total = BigInt::from(0);
    for k in -n..=n {
        let term = num_traits::pow(
            crate::qobjects::narayana_int(2 * n + 1, n + k + 1)?,
            r as usize,
        );
        if is_odd(k) {
            total -= term;
        } else {
            total += term;
        }
    }
    Ok(total)
}
