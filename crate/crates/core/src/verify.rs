//! Divisibility and nonnegativity verdicts for each statement, and a replay
//! of the Bezout argument that deduces the Narayana-power congruence from
//! two instances of the open-chain nonnegativity theorem.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, PolyError, Result};
use crate::polyarith::{gcd_bezout, Degree, IntPoly, RatPoly};
use crate::qobjects::{catalan_int, q_binomial, q_catalan, q_integer, q_shifted_factorial};
use crate::sums::{
    binom2, cyclic_modulus, cyclic_modulus_int, cyclic_sum, cyclic_sum_int, gjz_sum, thm11_sum_int,
    thm12_sum, FPoly,
};

/// Which statement a case exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statement {
    /// Integer Narayana-power congruence modulo `C_n`.
    Thm11,
    /// q-analogue of `Thm11` modulo `C_n(q)`, `0 <= j <= 2r-1`.
    Thm12,
    /// Integer cyclic-product congruence.
    Conj31,
    /// Nonnegativity of the `Thm12` quotient.
    Conj32,
    /// Nonnegativity of the cyclic quotient with weight `j k^2`.
    Conj33,
    /// Cyclic congruence for an arbitrary integer weight `f(k)`.
    Conj34,
    /// Nonnegativity of the open-chain sum.
    Gjz,
}

impl Statement {
    pub const ALL: [Statement; 7] = [
        Statement::Thm11,
        Statement::Thm12,
        Statement::Conj31,
        Statement::Conj32,
        Statement::Conj33,
        Statement::Conj34,
        Statement::Gjz,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Thm11 => "thm11",
            Statement::Thm12 => "thm12",
            Statement::Conj31 => "conj31",
            Statement::Conj32 => "conj32",
            Statement::Conj33 => "conj33",
            Statement::Conj34 => "conj34",
            Statement::Gjz => "gjz",
        }
    }

    pub fn default_class(self) -> StatementClass {
        match self {
            Statement::Thm11 | Statement::Thm12 | Statement::Gjz => StatementClass::Theorem,
            _ => StatementClass::Conjecture,
        }
    }

    /// True when the statement is indexed by a sequence `n_1..n_m` rather
    /// than by a single `n`.
    pub fn uses_ns(self) -> bool {
        matches!(
            self,
            Statement::Conj31 | Statement::Conj33 | Statement::Conj34 | Statement::Gjz
        )
    }

    /// Statements checked over the integers (at `q = 1`).
    pub fn is_integer(self) -> bool {
        matches!(self, Statement::Thm11 | Statement::Conj31)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown statement {s:?}")))
    }
}

/// Theorem-class failures are bugs; conjecture-class failures are findings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatementClass {
    Theorem,
    Conjecture,
}

impl FromStr for StatementClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem" => Ok(StatementClass::Theorem),
            "conjecture" => Ok(StatementClass::Conjecture),
            _ => Err(Error::InvalidParameter(format!("unknown class {s:?}"))),
        }
    }
}

/// Statement-to-class table. Starts from [`Statement::default_class`];
/// sweeps may reclassify individual statements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassPolicy {
    overrides: BTreeMap<Statement, StatementClass>,
}

impl ClassPolicy {
    pub fn with_override(mut self, statement: Statement, class: StatementClass) -> Self {
        self.overrides.insert(statement, class);
        self
    }

    pub fn class_of(&self, statement: Statement) -> StatementClass {
        self.overrides
            .get(&statement)
            .copied()
            .unwrap_or_else(|| statement.default_class())
    }
}

/// One verification instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CaseSpec {
    pub statement: Statement,
    pub n: Option<i64>,
    pub r: Option<i64>,
    pub j: Option<i64>,
    pub ns: Option<Vec<i64>>,
    pub f: Option<FPoly>,
}

impl CaseSpec {
    fn blank(statement: Statement) -> Self {
        CaseSpec {
            statement,
            n: None,
            r: None,
            j: None,
            ns: None,
            f: None,
        }
    }

    pub fn thm11(n: i64, r: i64) -> Self {
        CaseSpec {
            n: Some(n),
            r: Some(r),
            ..Self::blank(Statement::Thm11)
        }
    }

    pub fn thm12(n: i64, r: i64, j: i64) -> Self {
        CaseSpec {
            n: Some(n),
            r: Some(r),
            j: Some(j),
            ..Self::blank(Statement::Thm12)
        }
    }

    pub fn conj31(ns: Vec<i64>) -> Self {
        CaseSpec {
            ns: Some(ns),
            ..Self::blank(Statement::Conj31)
        }
    }

    pub fn conj32(n: i64, r: i64, j: i64) -> Self {
        CaseSpec {
            n: Some(n),
            r: Some(r),
            j: Some(j),
            ..Self::blank(Statement::Conj32)
        }
    }

    pub fn conj33(ns: Vec<i64>, j: i64) -> Self {
        CaseSpec {
            ns: Some(ns),
            j: Some(j),
            ..Self::blank(Statement::Conj33)
        }
    }

    pub fn conj34(ns: Vec<i64>, f: FPoly) -> Self {
        CaseSpec {
            ns: Some(ns),
            f: Some(f),
            ..Self::blank(Statement::Conj34)
        }
    }

    pub fn gjz(ns: Vec<i64>, j: i64) -> Self {
        CaseSpec {
            ns: Some(ns),
            j: Some(j),
            ..Self::blank(Statement::Gjz)
        }
    }

    fn need<T: Clone>(&self, v: &Option<T>, name: &str) -> Result<T> {
        v.clone().ok_or_else(|| {
            Error::InvalidParameter(format!("{} requires parameter {name}", self.statement))
        })
    }

    fn need_ns(&self) -> Result<Vec<i64>> {
        let ns = self.need(&self.ns, "ns")?;
        if ns.is_empty() || ns.iter().any(|&x| x < 1) {
            return Err(Error::InvalidParameter(format!(
                "ns must be a nonempty list of positive integers, got {ns:?}"
            )));
        }
        Ok(ns)
    }

    /// Whether the parameters fall inside the range the statement asserts
    /// anything about. Cases outside it are exploratory.
    pub fn in_theorem_range(&self) -> bool {
        let j = self.j.unwrap_or(0);
        let m = self.ns.as_ref().map_or(0, |v| v.len() as i64);
        match self.statement {
            Statement::Thm11 | Statement::Conj31 | Statement::Conj34 => true,
            Statement::Thm12 | Statement::Conj32 => (0..2 * self.r.unwrap_or(0)).contains(&j),
            Statement::Conj33 => (0..2 * m).contains(&j),
            Statement::Gjz => (0..m).contains(&j),
        }
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.statement)?;
        if let Some(ns) = &self.ns {
            let parts: Vec<String> = ns.iter().map(i64::to_string).collect();
            write!(f, " ns={}", parts.join(","))?;
        }
        for (name, v) in [("n", self.n), ("r", self.r), ("j", self.j)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        if let Some(fp) = &self.f {
            write!(f, " f={fp}")?;
        }
        Ok(())
    }
}

/// Result of dividing a sum by a modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisibility {
    pub divisible: bool,
    pub quotient: Option<IntPoly>,
    pub quotient_nonneg: Option<bool>,
}

impl Divisibility {
    fn not_divisible() -> Self {
        Divisibility {
            divisible: false,
            quotient: None,
            quotient_nonneg: None,
        }
    }

    fn with_quotient(quotient: IntPoly) -> Self {
        let nonneg = quotient.is_nonneg();
        Divisibility {
            divisible: true,
            quotient: Some(quotient),
            quotient_nonneg: Some(nonneg),
        }
    }
}

/// Decides `sum ≡ 0 (mod modulus)` in Z[q] by exact division.
///
/// The modulus must have constant term 1: only then is the shift by a power
/// of `q` irrelevant to the verdict.
pub fn check_divisibility(sum: &IntPoly, modulus: &IntPoly) -> Result<Divisibility> {
    if modulus.constant_term() != BigInt::from(1) {
        return Err(Error::InvalidModulus(format!(
            "constant term of {modulus} is not 1"
        )));
    }
    match sum.exact_div(modulus) {
        Ok(quotient) => {
            if &quotient * modulus != *sum {
                return Err(Error::Inconsistent(format!(
                    "quotient {quotient} times modulus does not reproduce the sum"
                )));
            }
            Ok(Divisibility::with_quotient(quotient))
        }
        Err(PolyError::NotDivisible(_)) => Ok(Divisibility::not_divisible()),
        Err(e) => Err(e.into()),
    }
}

/// Integer analogue of [`check_divisibility`] for a positive modulus.
pub fn check_int_divisibility(sum: &BigInt, modulus: &BigInt) -> Result<Divisibility> {
    if !modulus.is_positive() {
        return Err(Error::InvalidModulus(format!(
            "integer modulus {modulus} is not positive"
        )));
    }
    let (quot, rem) = sum.div_rem(modulus);
    if !rem.is_zero() {
        return Ok(Divisibility::not_divisible());
    }
    Ok(Divisibility::with_quotient(IntPoly::constant(quot)))
}

/// Outcome of a case under a class policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    /// The statement's claim holds for this case.
    Pass,
    /// The claim fails for a conjecture, or outside a theorem's range.
    Finding,
    /// The claim fails for a theorem inside its proven range.
    Falsified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub case: CaseSpec,
    pub sum_degree: Degree,
    pub shift: usize,
    pub divisible: bool,
    pub quotient: Option<IntPoly>,
    pub quotient_nonneg: Option<bool>,
    pub in_theorem_range: bool,
}

impl Verdict {
    fn from_parts(case: &CaseSpec, sum: &IntPoly, shift: usize, d: Divisibility) -> Self {
        Verdict {
            in_theorem_range: case.in_theorem_range(),
            case: case.clone(),
            sum_degree: sum.degree(),
            shift,
            divisible: d.divisible,
            quotient: d.quotient,
            quotient_nonneg: d.quotient_nonneg,
        }
    }

    /// Whether the statement's assertion holds: divisibility for the
    /// congruences, divisibility plus a nonnegative quotient for the
    /// nonnegativity statements.
    pub fn claim_holds(&self) -> bool {
        match self.case.statement {
            Statement::Thm11 | Statement::Thm12 | Statement::Conj31 | Statement::Conj34 => {
                self.divisible
            }
            Statement::Conj32 | Statement::Conj33 | Statement::Gjz => {
                self.divisible && self.quotient_nonneg == Some(true)
            }
        }
    }

    pub fn outcome(&self, policy: &ClassPolicy) -> Outcome {
        if self.claim_holds() {
            Outcome::Pass
        } else if self.in_theorem_range
            && policy.class_of(self.case.statement) == StatementClass::Theorem
        {
            Outcome::Falsified
        } else {
            Outcome::Finding
        }
    }
}

fn ensure_equal<T: PartialEq + fmt::Display>(what: &str, a: &T, b: &T) -> Result<()> {
    if a != b {
        return Err(Error::Inconsistent(format!("{what}: {a} != {b}")));
    }
    Ok(())
}

/// Builds the case's sum and modulus and decides it.
///
/// Integer statements are decided over Z and cross-checked against the
/// `q = 1` value of the polynomial pipeline; a disagreement is an error.
/// Open-chain cases have no modulus: the verdict's quotient is the sum
/// itself, and `divisible` records whether the prefactor division was exact.
pub fn verify_case(case: &CaseSpec) -> Result<Verdict> {
    let st = case.statement;
    match st {
        Statement::Thm11 => {
            let n = case.need(&case.n, "n")?;
            let r = case.need(&case.r, "r")?;
            let sum = thm11_sum_int(n, r)?;
            let modulus = catalan_int(n)?;
            let qsum = thm12_sum(n, r, 0)?;
            ensure_equal(
                "q=1 value of the Narayana-power sum",
                &qsum.eval_at_one(),
                &sum,
            )?;
            ensure_equal(
                "q=1 value of C_n(q)",
                &q_catalan(n)?.eval_at_one(),
                &modulus,
            )?;
            let d = check_int_divisibility(&sum, &modulus)?;
            Ok(Verdict::from_parts(case, &qsum, 0, d))
        }
        Statement::Thm12 | Statement::Conj32 => {
            let n = case.need(&case.n, "n")?;
            let r = case.need(&case.r, "r")?;
            let j = case.need(&case.j, "j")?;
            let sum = thm12_sum(n, r, j)?;
            let d = check_divisibility(&sum, &q_catalan(n)?)?;
            Ok(Verdict::from_parts(case, &sum, 0, d))
        }
        Statement::Conj31 => {
            let ns = case.need_ns()?;
            let sum = cyclic_sum_int(&ns)?;
            let modulus = cyclic_modulus_int(&ns)?;
            let qsum = cyclic_sum(&ns, &FPoly::zero())?;
            ensure_equal(
                "q=1 value of the cyclic sum",
                &qsum.poly.eval_at_one(),
                &sum,
            )?;
            ensure_equal(
                "q=1 value of the cyclic modulus",
                &cyclic_modulus(&ns)?.eval_at_one(),
                &modulus,
            )?;
            let d = check_int_divisibility(&sum, &modulus)?;
            Ok(Verdict::from_parts(case, &qsum.poly, qsum.shift, d))
        }
        Statement::Conj33 | Statement::Conj34 => {
            let ns = case.need_ns()?;
            let f = match st {
                Statement::Conj33 => {
                    let j = case.need(&case.j, "j")?;
                    if j < 0 {
                        return Err(Error::InvalidParameter(format!("j must be >= 0, got {j}")));
                    }
                    FPoly::quadratic(j)
                }
                _ => case.need(&case.f, "f")?,
            };
            let sum = cyclic_sum(&ns, &f)?;
            let d = check_divisibility(&sum.poly, &cyclic_modulus(&ns)?)?;
            Ok(Verdict::from_parts(case, &sum.poly, sum.shift, d))
        }
        Statement::Gjz => {
            let ns = case.need_ns()?;
            let j = case.need(&case.j, "j")?;
            match gjz_sum(&ns, j) {
                Ok(poly) => {
                    let d = Divisibility::with_quotient(poly.clone());
                    Ok(Verdict::from_parts(case, &poly, 0, d))
                }
                Err(Error::Poly(PolyError::NotDivisible(_))) => Ok(Verdict::from_parts(
                    case,
                    &IntPoly::zero(),
                    0,
                    Divisibility::not_divisible(),
                )),
                Err(e) => Err(e),
            }
        }
    }
}

/// One asserted step of the proof replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

/// Every intermediate object of the replayed argument.
///
/// `modulus = [2n+1, n] [2n+1]^(r-1)`. `gjz_alternating` and `gjz_blocked`
/// are the open-chain sums with `m = 2r` for the index patterns
/// `n, n+1, n, n+1, ...` and `n, ..., n, n+1, ..., n+1`; they certify
/// `[2n+1]^(r-1) S ≡ 0` and `[2n+2]^(r-1) S ≡ 0` modulo `modulus`.
/// `bezout_u [2n+1]^(r-1) + bezout_v [2n+2]^(r-1) = 1`, so
/// `quotient_via_bezout = u * gjz_alternating + v * gjz_blocked` must equal
/// `quotient = S / modulus`, which has integer coefficients because the
/// modulus is monic.
#[derive(Debug, Clone)]
pub struct ProofTrace {
    pub n: i64,
    pub r: i64,
    pub j: i64,
    pub s: IntPoly,
    pub modulus: IntPoly,
    pub power_odd: IntPoly,
    pub power_even: IntPoly,
    pub gjz_alternating: Option<IntPoly>,
    pub gjz_blocked: Option<IntPoly>,
    pub gcd: RatPoly,
    pub bezout_u: RatPoly,
    pub bezout_v: RatPoly,
    pub quotient_via_bezout: Option<RatPoly>,
    pub quotient: Option<IntPoly>,
    pub checks: Vec<ProofCheck>,
}

impl ProofTrace {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &ProofCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    fn check(&mut self, name: &'static str, holds: bool, detail: impl Into<String>) {
        self.checks.push(ProofCheck {
            name,
            holds,
            detail: detail.into(),
        });
    }
}

/// `S(n, r, j)` in the factorial form: the `(q;q)` prefactor times the sum of
/// `[2n, n+k]^r [2n+2, n+k+1]^r`, divided exactly.
fn s_factorial_form(n: i64, r: u32, j: i64) -> Result<IntPoly> {
    let mut inner = IntPoly::zero();
    for k in -n..=n {
        let e = (j as i128) * (k as i128) * (k as i128) + binom2(k);
        let term = (q_binomial(2 * n, n + k)? * q_binomial(2 * n + 2, n + k + 1)?)
            .pow(r)
            .shift_up(e as usize);
        inner = if k.rem_euclid(2) == 1 {
            inner - term
        } else {
            inner + term
        };
    }
    let num = q_shifted_factorial(2 * n + 1)?.pow(2 * r) * inner;
    let den = q_shifted_factorial(2 * n)?.pow(r) * q_shifted_factorial(2 * n + 2)?.pow(r);
    Ok(num.exact_div(&den)?)
}

/// Replays the deduction of `S(n,r,j) ≡ 0 (mod [2n+1, n] [2n+1]^(r-1))`.
///
/// Parameter errors are returned as `Err`. Once the replay starts, every
/// assertion is recorded in [`ProofTrace::checks`]; a failing one does not
/// abort the replay, so the returned trace is always complete.
pub fn replay_proof(n: i64, r: i64, j: i64) -> Result<ProofTrace> {
    if n < 1 || r < 1 {
        return Err(Error::InvalidParameter(format!(
            "n, r must be >= 1, got n={n}, r={r}"
        )));
    }
    if !(0..2 * r).contains(&j) {
        return Err(Error::InvalidParameter(format!(
            "j must lie in [0, {}], got {j}",
            2 * r - 1
        )));
    }
    let r32 = u32::try_from(r).map_err(|_| Error::InvalidParameter(format!("r = {r}")))?;
    let central = q_binomial(2 * n + 1, n)?;
    let power_odd = q_integer(2 * n + 1)?.pow(r32 - 1);
    let power_even = q_integer(2 * n + 2)?.pow(r32 - 1);
    let modulus = &central * &power_odd;

    let cyclic = cyclic_sum(&vec![n; r as usize], &FPoly::quadratic(j))?;
    let s = cyclic.poly;

    let (a, b) = (RatPoly::from(&power_odd), RatPoly::from(&power_even));
    let (gcd, bezout_u, bezout_v) = gcd_bezout(&a, &b)?;

    let mut trace = ProofTrace {
        n,
        r,
        j,
        s: s.clone(),
        modulus: modulus.clone(),
        power_odd: power_odd.clone(),
        power_even: power_even.clone(),
        gjz_alternating: None,
        gjz_blocked: None,
        gcd: gcd.clone(),
        bezout_u: bezout_u.clone(),
        bezout_v: bezout_v.clone(),
        quotient_via_bezout: None,
        quotient: None,
        checks: Vec::new(),
    };

    trace.check(
        "no_shift",
        cyclic.shift == 0,
        format!("shift = {}", cyclic.shift),
    );
    match s_factorial_form(n, r32, j) {
        Ok(lit) => trace.check(
            "s_matches_factorial_form",
            lit == s,
            "cyclic form equals the (q;q)-prefactor form",
        ),
        Err(e) => trace.check("s_matches_factorial_form", false, e.to_string()),
    }

    let alternating: Vec<i64> = (0..2 * r).map(|i| n + (i % 2)).collect();
    let blocked: Vec<i64> = (0..2 * r).map(|i| if i < r { n } else { n + 1 }).collect();
    match gjz_sum(&alternating, j) {
        Ok(g) => {
            trace.check("gjz_alternating_nonneg", g.is_nonneg(), g.to_string());
            trace.check(
                "central_times_gjz_alternating_is_s",
                &central * &g == s,
                "S = [2n+1, n] * G_alt",
            );
            trace.gjz_alternating = Some(g);
        }
        Err(e) => trace.check("gjz_alternating_is_polynomial", false, e.to_string()),
    }
    match gjz_sum(&blocked, j) {
        Ok(g) => {
            trace.check("gjz_blocked_nonneg", g.is_nonneg(), g.to_string());
            trace.check(
                "modulus_times_gjz_blocked_is_even_power_times_s",
                &modulus * &g == &power_even * &s,
                "[2n+2]^(r-1) S = modulus * G_blk",
            );
            trace.gjz_blocked = Some(g);
        }
        Err(e) => trace.check("gjz_blocked_is_polynomial", false, e.to_string()),
    }

    trace.check("gcd_is_one", gcd == RatPoly::one(), format!("gcd = {gcd}"));
    let identity = &(&bezout_u * &a) + &(&bezout_v * &b);
    trace.check(
        "bezout_identity",
        identity == RatPoly::one(),
        format!("u*A + v*B = {identity}"),
    );

    if let (Some(g1), Some(g2)) = (&trace.gjz_alternating, &trace.gjz_blocked) {
        let via = &(&bezout_u * &RatPoly::from(g1)) + &(&bezout_v * &RatPoly::from(g2));
        trace.check(
            "modulus_times_bezout_quotient_is_s",
            &RatPoly::from(&modulus) * &via == RatPoly::from(&s),
            "S = modulus * (u G_alt + v G_blk) in Q[q]",
        );
        trace.quotient_via_bezout = Some(via);
    }

    trace.check(
        "modulus_is_monic",
        modulus.leading_coeff() == Some(&BigInt::from(1)),
        "leading coefficient of [2n+1, n][2n+1]^(r-1)",
    );
    match s.exact_div(&modulus) {
        Ok(quot) => {
            trace.check(
                "quotient_integral",
                &quot * &modulus == s,
                format!("R = {quot}"),
            );
            if let Some(via) = &trace.quotient_via_bezout {
                trace.check(
                    "quotient_matches_bezout",
                    *via == RatPoly::from(&quot),
                    "integer quotient equals the Q[q] quotient",
                );
            }
            trace.quotient = Some(quot);
        }
        Err(e) => trace.check("quotient_integral", false, e.to_string()),
    }
    Ok(trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn divisibility_examples() {
        let d = check_divisibility(&p(&[0, 0, 0, 0, 0, 0, 1, 0, 1]), &p(&[1, 0, 1])).unwrap();
        assert!(d.divisible);
        assert_eq!(d.quotient, Some(p(&[0, 0, 0, 0, 0, 0, 1])));
        assert_eq!(d.quotient_nonneg, Some(true));

        let d = check_divisibility(&p(&[1, 1, 0, -1]), &IntPoly::one()).unwrap();
        assert_eq!(d.quotient, Some(p(&[1, 1, 0, -1])));
        assert_eq!(d.quotient_nonneg, Some(false));

        let d = check_divisibility(&p(&[1, 1]), &p(&[1, 1, 1])).unwrap();
        assert!(!d.divisible);
        assert_eq!(d.quotient, None);

        assert!(matches!(
            check_divisibility(&p(&[2, 2]), &p(&[2, 1])),
            Err(Error::InvalidModulus(_))
        ));
        assert!(check_divisibility(&p(&[1]), &IntPoly::zero()).is_err());
    }

    #[test]
    fn integer_divisibility() {
        let d = check_int_divisibility(&BigInt::from(-6), &BigInt::from(3)).unwrap();
        assert_eq!(d.quotient, Some(IntPoly::constant(BigInt::from(-2))));
        assert_eq!(d.quotient_nonneg, Some(false));
        assert!(
            !check_int_divisibility(&BigInt::from(7), &BigInt::from(3))
                .unwrap()
                .divisible
        );
        assert!(check_int_divisibility(&BigInt::from(7), &BigInt::from(0)).is_err());
    }

    #[test]
    fn case_examples() {
        let v = verify_case(&CaseSpec::thm11(2, 1)).unwrap();
        assert!(v.divisible);
        assert_eq!(v.quotient, Some(IntPoly::one()));

        let v = verify_case(&CaseSpec::thm12(1, 1, 1)).unwrap();
        assert!(v.divisible && v.quotient == Some(IntPoly::one()));
        assert_eq!(v.quotient_nonneg, Some(true));

        let v = verify_case(&CaseSpec::conj31(vec![1])).unwrap();
        assert!(v.divisible);
        assert_eq!(v.quotient, Some(IntPoly::one()));

        let v = verify_case(&CaseSpec::conj32(1, 1, 2)).unwrap();
        assert!(v.divisible);
        assert_eq!(v.quotient, Some(p(&[1, 1, 0, -1])));
        assert_eq!(v.quotient_nonneg, Some(false));
        assert!(!v.in_theorem_range);
        assert!(!v.claim_holds());
        assert_eq!(v.outcome(&ClassPolicy::default()), Outcome::Finding);
    }

    #[test]
    fn open_chain_verdicts() {
        let v = verify_case(&CaseSpec::gjz(vec![1, 1], 0)).unwrap();
        assert_eq!(v.quotient, Some(p(&[0, 1])));
        assert!(v.claim_holds());
        let v = verify_case(&CaseSpec::gjz(vec![1], 0)).unwrap();
        assert_eq!(v.sum_degree, Degree::NegInfinity);
        assert!(v.claim_holds());
    }

    #[test]
    fn shifted_conj34_verdict() {
        let v = verify_case(&CaseSpec::conj34(vec![2, 1], "0,0,0,1".parse().unwrap())).unwrap();
        assert_eq!(v.shift, 5);
        assert!(v.divisible);
        assert_eq!(
            v.quotient,
            Some(p(&[0, 0, 0, 0, 0, 0, 0, 2, 3, 4, 4, 2, 1]))
        );
    }

    #[test]
    fn missing_parameters_are_rejected() {
        let mut case = CaseSpec::thm12(1, 1, 0);
        case.r = None;
        assert!(matches!(
            verify_case(&case),
            Err(Error::InvalidParameter(_))
        ));
        assert!(verify_case(&CaseSpec::conj31(vec![])).is_err());
        assert!(verify_case(&CaseSpec::gjz(vec![2, -1], 0)).is_err());
    }

    #[test]
    fn policy_reclassification() {
        let mut v = verify_case(&CaseSpec::thm12(1, 1, 0)).unwrap();
        v.divisible = false;
        assert_eq!(v.outcome(&ClassPolicy::default()), Outcome::Falsified);
        let relaxed =
            ClassPolicy::default().with_override(Statement::Thm12, StatementClass::Conjecture);
        assert_eq!(v.outcome(&relaxed), Outcome::Finding);
    }

    #[test]
    fn theorem_ranges() {
        assert!(CaseSpec::thm12(1, 2, 3).in_theorem_range());
        assert!(!CaseSpec::thm12(1, 2, 4).in_theorem_range());
        assert!(CaseSpec::conj33(vec![1, 1], 3).in_theorem_range());
        assert!(!CaseSpec::conj33(vec![1, 1], 4).in_theorem_range());
        assert!(CaseSpec::gjz(vec![1, 1], 1).in_theorem_range());
        assert!(!CaseSpec::gjz(vec![1, 1], 2).in_theorem_range());
    }

    #[test]
    fn proof_replay_small_cases() {
        let t = replay_proof(1, 2, 0).unwrap();
        assert!(t.all_hold(), "{:?}", t.failed_checks().collect::<Vec<_>>());
        assert_eq!(t.bezout_u, RatPoly::from_ints(&[0, -1]));
        assert_eq!(t.bezout_v, RatPoly::one());

        let t = replay_proof(1, 1, 0).unwrap();
        assert!(t.all_hold());
        assert_eq!(t.modulus, p(&[1, 1, 1]));
        assert_eq!(t.quotient, Some(p(&[0, 0, 1])));
        assert_eq!(t.bezout_u, RatPoly::zero());
        assert_eq!(t.bezout_v, RatPoly::one());

        assert!(replay_proof(1, 1, 2).is_err());
        assert!(replay_proof(0, 1, 0).is_err());
    }

    #[test]
    fn statement_ids_round_trip() {
        for st in Statement::ALL {
            assert_eq!(st.id().parse::<Statement>().unwrap(), st);
        }
        assert!("thm13".parse::<Statement>().is_err());
    }
}
