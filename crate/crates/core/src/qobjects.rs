//! q-integers, q-shifted factorials, Gaussian binomials, q-Narayana and
//! q-Catalan polynomials, and their classical integer counterparts.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyarith::IntPoly;

fn nonneg(name: &str, v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::InvalidParameter(format!("{name} must be >= 0, got {v}")))
}

fn positive(name: &str, v: i64) -> Result<usize> {
    match usize::try_from(v) {
        Ok(u) if u >= 1 => Ok(u),
        _ => Err(Error::InvalidParameter(format!(
            "{name} must be >= 1, got {v}"
        ))),
    }
}

/// `[n] = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: i64) -> Result<IntPoly> {
    let n = positive("n", n)?;
    Ok(IntPoly::new(vec![BigInt::one(); n]))
}

/// `(q;q)_n = (1-q)(1-q^2)...(1-q^n)`, with `(q;q)_0 = 1`.
pub fn q_shifted_factorial(n: i64) -> Result<IntPoly> {
    let n = nonneg("n", n)?;
    Ok((1..=n)
        .map(|i| {
            let mut c = vec![BigInt::zero(); i + 1];
            c[0] = BigInt::one();
            c[i] = -BigInt::one();
            IntPoly::new(c)
        })
        .product())
}

/// Triangular table of Gaussian binomials filled row by row with
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
///
/// Rows are appended under a write lock and never mutated afterwards, so a
/// reader holding the read lock only ever sees complete rows.
#[derive(Default)]
pub struct QBinomialTable {
    rows: RwLock<Vec<Vec<Arc<IntPoly>>>>,
}

impl QBinomialTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `[n choose k]` for `0 <= k <= n`.
    pub fn get(&self, n: usize, k: usize) -> Arc<IntPoly> {
        debug_assert!(k <= n);
        {
            let rows = self.rows.read().expect("q-binomial table poisoned");
            if let Some(row) = rows.get(n) {
                return Arc::clone(&row[k]);
            }
        }
        let mut rows = self.rows.write().expect("q-binomial table poisoned");
        while rows.len() <= n {
            let next = match rows.last() {
                None => vec![Arc::new(IntPoly::one())],
                Some(prev) => pascal_row(prev),
            };
            rows.push(next);
        }
        Arc::clone(&rows[n][k])
    }

    pub fn rows_built(&self) -> usize {
        self.rows.read().expect("q-binomial table poisoned").len()
    }
}

fn pascal_row(prev: &[Arc<IntPoly>]) -> Vec<Arc<IntPoly>> {
    let n = prev.len();
    (0..=n)
        .map(|k| {
            if k == 0 || k == n {
                return Arc::new(IntPoly::one());
            }
            Arc::new(&*prev[k - 1] + &prev[k].shift_up(k))
        })
        .collect()
}

fn shared_table() -> &'static QBinomialTable {
    static TABLE: OnceLock<QBinomialTable> = OnceLock::new();
    TABLE.get_or_init(QBinomialTable::new)
}

/// Gaussian binomial `[n choose k]`; the zero polynomial when `k < 0` or
/// `k > n`.
pub fn q_binomial(n: i64, k: i64) -> Result<IntPoly> {
    let n = nonneg("n", n)?;
    if k < 0 || k as u64 > n as u64 {
        return Ok(IntPoly::zero());
    }
    Ok((*shared_table().get(n, k as usize)).clone())
}

/// `[n choose k]` as `(q;q)_n / ((q;q)_k (q;q)_{n-k})` by exact division.
/// Independent of the Pascal table; kept as a cross-check.
pub fn q_binomial_via_factorials(n: i64, k: i64) -> Result<IntPoly> {
    nonneg("n", n)?;
    if k < 0 || k > n {
        return Ok(IntPoly::zero());
    }
    let den = q_shifted_factorial(k)? * q_shifted_factorial(n - k)?;
    Ok(q_shifted_factorial(n)?.exact_div(&den)?)
}

/// `N_q(n, k) = [n choose k] [n choose k-1] / [n]`.
pub fn q_narayana(n: i64, k: i64) -> Result<IntPoly> {
    positive("n", n)?;
    if k <= 0 || k > n {
        return Ok(IntPoly::zero());
    }
    let num = q_binomial(n, k)? * q_binomial(n, k - 1)?;
    Ok(num.exact_div(&q_integer(n)?)?)
}

/// `C_n(q) = [2n choose n] / [n+1]`.
pub fn q_catalan(n: i64) -> Result<IntPoly> {
    positive("n", n)?;
    Ok(q_binomial(2 * n, n)?.exact_div(&q_integer(n + 1)?)?)
}

/// Classical binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // Each prefix product is itself a binomial coefficient, so every
    // division is exact.
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `N(n, k) = C(n, k) C(n, k-1) / n`; zero outside `1 <= k <= n`.
pub fn narayana_int(n: i64, k: i64) -> Result<BigInt> {
    positive("n", n)?;
    let num = binomial_int(n, k) * binomial_int(n, k - 1);
    let (quot, rem) = num.div_rem(&BigInt::from(n));
    debug_assert!(rem.is_zero());
    Ok(quot)
}

/// `C_n = C(2n, n) / (n + 1)`.
pub fn catalan_int(n: i64) -> Result<BigInt> {
    positive("n", n)?;
    let (quot, rem) = binomial_int(2 * n, n).div_rem(&BigInt::from(n + 1));
    debug_assert!(rem.is_zero());
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(1).unwrap(), IntPoly::one());
        assert_eq!(q_integer(3).unwrap(), p(&[1, 1, 1]));
        for n in 1..=50 {
            assert_eq!(q_integer(n).unwrap().eval_at_one(), BigInt::from(n));
        }
        assert!(matches!(q_integer(0), Err(Error::InvalidParameter(_))));
        assert!(q_integer(-3).is_err());
    }

    #[test]
    fn shifted_factorials() {
        assert_eq!(q_shifted_factorial(0).unwrap(), IntPoly::one());
        assert_eq!(q_shifted_factorial(1).unwrap(), p(&[1, -1]));
        assert_eq!(q_shifted_factorial(2).unwrap(), p(&[1, -1, -1, 1]));
        assert_eq!(
            q_shifted_factorial(7).unwrap().degree().finite(),
            Some(7 * 8 / 2)
        );
        assert!(q_shifted_factorial(-1).is_err());
    }

    #[test]
    fn gaussian_binomials() {
        for n in 0..6 {
            assert_eq!(q_binomial(n, 0).unwrap(), IntPoly::one());
        }
        assert_eq!(q_binomial(3, 5).unwrap(), IntPoly::zero());
        assert_eq!(q_binomial(3, -1).unwrap(), IntPoly::zero());
        assert_eq!(q_binomial(4, 2).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 2).unwrap(), p(&[1, 1, 2, 2, 2, 1, 1]));
        assert!(q_binomial(-1, 0).is_err());
    }

    #[test]
    fn narayana_polynomials() {
        for n in 1..8 {
            assert_eq!(q_narayana(n, 1).unwrap(), IntPoly::one());
            assert!(q_narayana(n, 0).unwrap().is_zero());
            assert!(q_narayana(n, n + 1).unwrap().is_zero());
        }
        assert_eq!(q_narayana(3, 2).unwrap(), p(&[1, 1, 1]));
        assert_eq!(q_narayana(5, 3).unwrap(), p(&[1, 1, 3, 3, 4, 3, 3, 1, 1]));
        assert!(q_narayana(0, 1).is_err());
    }

    #[test]
    fn catalan_polynomials() {
        assert_eq!(q_catalan(1).unwrap(), IntPoly::one());
        assert_eq!(q_catalan(2).unwrap(), p(&[1, 0, 1]));
        assert_eq!(q_catalan(3).unwrap(), p(&[1, 0, 1, 1, 1, 0, 1]));
        assert!(q_catalan(0).is_err());
    }

    #[test]
    fn classical_numbers() {
        assert_eq!(narayana_int(3, 2).unwrap(), BigInt::from(3));
        assert_eq!(catalan_int(3).unwrap(), BigInt::from(5));
        assert_eq!(narayana_int(4, 0).unwrap(), BigInt::zero());
        assert_eq!(narayana_int(4, 5).unwrap(), BigInt::zero());
        for n in 1..=20 {
            let total: BigInt = (1..=n).map(|k| narayana_int(n, k).unwrap()).sum();
            assert_eq!(total, catalan_int(n).unwrap());
        }
        assert_eq!(binomial_int(10, 3), BigInt::from(120));
    }

    #[test]
    fn private_table_matches_shared() {
        let t = QBinomialTable::new();
        assert_eq!(*t.get(9, 4), q_binomial(9, 4).unwrap());
        assert_eq!(t.rows_built(), 10);
        assert_eq!(*t.get(3, 1), p(&[1, 1, 1]));
        assert_eq!(t.rows_built(), 10);
    }

    #[test]
    fn concurrent_readers_agree() {
        let t = Arc::new(QBinomialTable::new());
        let handles: Vec<_> = (0..8)
            .map(|i| {
                let t = Arc::clone(&t);
                std::thread::spawn(move || {
                    let n = 20 + i;
                    (0..=n).map(|k| (*t.get(n, k)).clone()).collect::<Vec<_>>()
                })
            })
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            let row = h.join().unwrap();
            let n = 20 + i as i64;
            for (k, poly) in row.iter().enumerate() {
                assert_eq!(*poly, q_binomial_via_factorials(n, k as i64).unwrap());
            }
        }
    }
}
