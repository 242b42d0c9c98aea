//! Sparse Laurent polynomials over arbitrary-precision integers.
//!
//! Two representations cover everything the library computes:
//!
//! * [`LaurentPoly1`] — one-variable Laurent polynomials with exponents on a
//!   quarter-integer grid.  The same type stores Kauffman bracket polynomials
//!   (variable `A`), Jones polynomials (variable `t`, half-integer exponents
//!   for links) and Conway polynomials (variable `z`, integer exponents).
//!   Exponents are kept as integer counts of quarter-units of the variable, so
//!   the substitution `A -> t^(-1/4)` is an exact integer remap of keys and no
//!   rational arithmetic happens inside ring operations.
//! * [`LaurentPoly2`] — two-variable HOMFLY polynomials in `(alpha, z)` with
//!   plain integer exponent pairs.  Negative `z`-exponents are allowed
//!   transiently so the skein recursion can pass through split links
//!   (`delta = (alpha - alpha^-1)/z`); final values for non-split links are
//!   polynomial in `z`.
//!
//! Coefficients are [`num_bigint::BigInt`]: bracket state sums overflow `i64`
//! well below the supported crossing caps, and exactness is non-negotiable —
//! every downstream verdict reads signs and degrees off these coefficients.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Error type for data-dependent polynomial failures.
///
/// Variable/grid mismatches in ring operations are programmer errors and
/// panic instead; these variants are reachable from well-formed but
/// unsatisfiable inputs (e.g. asking for an exact division that is not exact).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// An exponent landed off the declared grid of the target variable.
    #[error("exponent {num}/{den} is off the {var} grid (allowed step {step}/4)")]
    OffGrid { var: &'static str, num: i64, den: i64, step: i64 },
    /// Exact division failed: the divisor does not divide the dividend.
    #[error("exact polynomial division left a nonzero remainder")]
    InexactDivision,
    /// A specialization produced leftover negative powers that should have
    /// cancelled (the input was not the invariant of a genuine link).
    #[error("negative {var}-exponents did not cancel during specialization")]
    NegativeExponentResidue { var: &'static str },
}

/// The variable of a [`LaurentPoly1`], together with its exponent grid.
///
/// The grid is the set of exponents the variable may carry, expressed as a
/// step in quarter-units: `A` admits any quarter-integer exponent, `t`
/// half-integers (Jones polynomials of links), `z` whole integers (Conway).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Kauffman bracket variable.
    A,
    /// Jones variable, with `A = t^(-1/4)`.
    T,
    /// Conway/HOMFLY second variable.
    Z,
}

impl Var {
    /// Grid step in quarter-units: keys of a polynomial in this variable must
    /// be multiples of this step.
    pub fn grid_step(self) -> i64 {
        match self {
            Var::A => 1,
            Var::T => 2,
            Var::Z => 4,
        }
    }

    /// Display name used in text serializations.
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::T => "t",
            Var::Z => "z",
        }
    }
}

/// Degree summary of a nonzero one-variable Laurent polynomial.
///
/// Degrees are exact rationals (quarter-units over 4).  `second_coeff` is the
/// coefficient one whole variable-unit above the minimal degree — for a Jones
/// polynomial `V` this is the invariant `V_1` read at `min_deg + 1` — and is
/// zero when no such term exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeInfo {
    /// Minimal exponent with nonzero coefficient.
    pub min_deg: Ratio<i64>,
    /// Maximal exponent with nonzero coefficient.
    pub max_deg: Ratio<i64>,
    /// Coefficient at `min_deg`.
    pub min_coeff: BigInt,
    /// Coefficient at `max_deg`.
    pub lead_coeff: BigInt,
    /// Coefficient at `min_deg + 1` (one whole unit up), zero if absent.
    pub second_coeff: BigInt,
}

/// One-variable sparse Laurent polynomial on a quarter-integer exponent grid.
///
/// Internally a map from integer keys to coefficients, where key `k` stands
/// for the monomial `var^(k/4)`.  All ring operations require both operands to
/// share the same [`Var`]; mixing variables is a usage bug and panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly1 {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly1 {
    /// The zero polynomial in `var`.
    pub fn zero(var: Var) -> Self {
        LaurentPoly1 { var, terms: BTreeMap::new() }
    }

    /// The constant polynomial `1` in `var`.
    pub fn one(var: Var) -> Self {
        Self::monomial_units(var, 0, BigInt::one())
    }

    /// The constant polynomial `c` in `var`.
    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        Self::monomial_units(var, 0, c.into())
    }

    /// Monomial `c * var^(key/4)` from a raw quarter-unit key.
    ///
    /// Panics if `key` is off the grid of `var`: callers construct keys from
    /// integer combinatorial data, so an off-grid key is a bug.
    pub fn monomial_units(var: Var, key: i64, c: BigInt) -> Self {
        assert!(
            key % var.grid_step() == 0,
            "key {key} off the {} grid (step {})",
            var.name(),
            var.grid_step()
        );
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        LaurentPoly1 { var, terms }
    }

    /// Monomial `c * var^(num/den)` with a rational exponent; errors if the
    /// exponent is off the grid of `var`.
    pub fn monomial(var: Var, num: i64, den: i64, c: impl Into<BigInt>) -> Result<Self, PolyError> {
        assert!(den != 0, "zero exponent denominator");
        let off = PolyError::OffGrid { var: var.name(), num, den, step: var.grid_step() };
        if (4 * num) % den != 0 {
            return Err(off);
        }
        let key = 4 * num / den;
        if key % var.grid_step() != 0 {
            return Err(off);
        }
        Ok(Self::monomial_units(var, key, c.into()))
    }

    /// The variable of this polynomial.
    pub fn var(&self) -> Var {
        self.var
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate `(quarter-unit key, coefficient)` in ascending key order.
    pub fn iter_units(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Coefficient at exponent `key/4` (zero if absent).
    pub fn coeff_at_units(&self, key: i64) -> BigInt {
        self.terms.get(&key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient at rational exponent `num/den` (zero if absent or off-grid).
    pub fn coeff_at(&self, num: i64, den: i64) -> BigInt {
        assert!(den != 0, "zero exponent denominator");
        if (4 * num) % den != 0 {
            return BigInt::zero();
        }
        self.coeff_at_units(4 * num / den)
    }

    fn assert_same_var(&self, other: &Self) {
        assert!(
            self.var == other.var,
            "mixed polynomial variables: {} vs {}",
            self.var.name(),
            other.var.name()
        );
    }

    /// Add a single term in place, removing the entry if it cancels.
    pub fn add_term_units(&mut self, key: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        assert!(key % self.var.grid_step() == 0, "key {key} off grid");
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Sum of two polynomials in the same variable.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_var(other);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term_units(*k, c);
        }
        out
    }

    /// Difference of two polynomials in the same variable.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        LaurentPoly1 {
            var: self.var,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    /// Product of two polynomials in the same variable.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_var(other);
        let mut out = Self::zero(self.var);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term_units(ka + kb, &(ca * cb));
            }
        }
        out
    }

    /// Multiply in place by the monomial `c * var^(key/4)`.
    pub fn mul_monomial_units(&mut self, key: i64, c: &BigInt) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        assert!(key % self.var.grid_step() == 0, "key {key} off grid");
        self.terms = self.terms.iter().map(|(k, v)| (k + key, v * c)).collect();
    }

    /// Non-negative integer power (by repeated squaring).
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Degree summary, or `None` for the zero polynomial.
    pub fn degree_info(&self) -> Option<DegreeInfo> {
        let (&kmin, cmin) = self.terms.iter().next()?;
        let (&kmax, cmax) = self.terms.iter().next_back()?;
        Some(DegreeInfo {
            min_deg: Ratio::new(kmin, 4),
            max_deg: Ratio::new(kmax, 4),
            min_coeff: cmin.clone(),
            lead_coeff: cmax.clone(),
            second_coeff: self.coeff_at_units(kmin + 4),
        })
    }

    /// Substitute `A -> t^(-1/4)`.
    ///
    /// Requires a polynomial in `A` with whole-integer exponents (keys
    /// divisible by 4, as every bracket polynomial has) and a result on the
    /// half-integer `t` grid; errors otherwise.
    pub fn subst_a_to_t(&self) -> Result<Self, PolyError> {
        assert!(self.var == Var::A, "subst_a_to_t on a non-A polynomial");
        let mut out = Self::zero(Var::T);
        for (k, c) in &self.terms {
            if k % 4 != 0 {
                return Err(PolyError::OffGrid { var: "A", num: *k, den: 4, step: 4 });
            }
            let key = -(k / 4);
            if key % Var::T.grid_step() != 0 {
                return Err(PolyError::OffGrid { var: "t", num: key, den: 4, step: 2 });
            }
            out.add_term_units(key, c);
        }
        Ok(out)
    }

    /// Exact division by `divisor` (same variable); errors if not exact.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.assert_same_var(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let (&dk_min, dc_min) = divisor.terms.iter().next().expect("nonzero divisor");
        let &dk_max = divisor.terms.keys().next_back().expect("nonzero divisor");
        // For an exact quotient every quotient key is at most
        // max(dividend) - max(divisor); exceeding it proves inexactness and
        // bounds the loop.
        let qk_max = self.terms.keys().next_back().expect("nonzero") - dk_max;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        while let Some((&rk, rc)) = rem.terms.iter().next() {
            let (q, r) = num_integer::div_rem(rc.clone(), dc_min.clone());
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let qk = rk - dk_min;
            if qk > qk_max {
                return Err(PolyError::InexactDivision);
            }
            quot.add_term_units(qk, &q);
            for (k, c) in &divisor.terms {
                rem.add_term_units(k + qk, &(-(c * &q)));
            }
        }
        Ok(quot)
    }

    /// Canonical text form: terms in ascending exponent order with explicit
    /// signs and rational exponents in lowest terms, e.g.
    /// `1*t^(1) + 1*t^(3) - 1*t^(4)`.  The zero polynomial renders as `0`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let exp = Ratio::new(*k, 4);
            let exp_str = if exp.is_integer() {
                format!("{}", exp.numer())
            } else {
                format!("{}/{}", exp.numer(), exp.denom())
            };
            // Constant terms render as a bare coefficient.
            let body = if *k == 0 {
                String::new()
            } else {
                format!("*{}^({})", self.var.name(), exp_str)
            };
            if i == 0 {
                out.push_str(&format!("{c}{body}"));
            } else if c.is_negative() {
                out.push_str(&format!(" - {}{}", c.magnitude(), body));
            } else {
                out.push_str(&format!(" + {c}{body}"));
            }
        }
        out
    }

    /// JSON form: a list of `[exp_num, exp_den, coeff]` triples in ascending
    /// exponent order, exponents in lowest terms.  Coefficients that fit in an
    /// `i64` are JSON numbers; larger ones are decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let triples: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let exp = Ratio::new(*k, 4);
                serde_json::json!([*exp.numer(), *exp.denom(), coeff_json(c)])
            })
            .collect();
        serde_json::Value::Array(triples)
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn coeff_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(c.to_string()),
    }
}

/// Two-variable sparse HOMFLY polynomial in `(alpha, z)`.
///
/// Keys are plain integer exponent pairs `(alpha_exp, z_exp)` ordered
/// lexicographically.  The skein convention throughout the crate is
/// `alpha P(+) - alpha^-1 P(-) = z P(0)` with `P(unknot) = 1`, under which a
/// `k`-component unlink takes the value `delta^(k-1)` with
/// `delta = (alpha - alpha^-1)/z` — hence negative `z`-exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly2 { terms: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    /// Monomial `c * alpha^a * z^z_exp`.
    pub fn monomial(a: i64, z: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, z), c);
        }
        LaurentPoly2 { terms }
    }

    /// `delta = (alpha - alpha^-1) / z`, the value of a split union with an
    /// extra unknot component.
    pub fn delta() -> Self {
        let mut p = Self::monomial(1, -1, 1);
        p.add_term(-1, -1, &BigInt::from(-1));
        p
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate `((alpha_exp, z_exp), coefficient)` in ascending lexicographic
    /// order.
    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Coefficient at `alpha^a z^z_exp` (zero if absent).
    pub fn coeff_at(&self, a: i64, z: i64) -> BigInt {
        self.terms.get(&(a, z)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Add a single term in place, removing the entry if it cancels.
    pub fn add_term(&mut self, a: i64, z: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, z)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, z));
        }
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((a, z), c) in &other.terms {
            out.add_term(*a, *z, c);
        }
        out
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        LaurentPoly2 { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((aa, za), ca) in &self.terms {
            for ((ab, zb), cb) in &other.terms {
                out.add_term(aa + ab, za + zb, &(ca * cb));
            }
        }
        out
    }

    /// Multiply in place by the monomial `c * alpha^a * z^z_exp`.
    pub fn mul_monomial(&mut self, a: i64, z: i64, c: &BigInt) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        self.terms = self.terms.iter().map(|((ka, kz), v)| ((ka + a, kz + z), v * c)).collect();
    }

    /// Non-negative integer power (by repeated squaring).
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Specialize `alpha -> 1`, yielding the Conway polynomial in `z`.
    ///
    /// For the HOMFLY polynomial of a genuine link all negative `z`-exponent
    /// coefficients cancel under this substitution; a residue is reported as
    /// an error rather than silently truncated.
    pub fn specialize_conway(&self) -> Result<LaurentPoly1, PolyError> {
        let mut by_z: BTreeMap<i64, BigInt> = BTreeMap::new();
        for ((_a, z), c) in &self.terms {
            let entry = by_z.entry(*z).or_insert_with(BigInt::zero);
            *entry += c;
        }
        let mut out = LaurentPoly1::zero(Var::Z);
        for (z, c) in by_z {
            if c.is_zero() {
                continue;
            }
            if z < 0 {
                return Err(PolyError::NegativeExponentResidue { var: "z" });
            }
            out.add_term_units(4 * z, &c);
        }
        Ok(out)
    }

    /// Specialize `alpha -> t^-1`, `z -> t^(1/2) - t^(-1/2)`, yielding the
    /// Jones polynomial in `t`.
    ///
    /// Negative `z`-exponents are handled by clearing denominators and an
    /// exact division at the end; a non-exact division means the input was not
    /// the HOMFLY polynomial of a link and is reported as an error.
    pub fn specialize_jones(&self) -> Result<LaurentPoly1, PolyError> {
        let min_z = self.terms.keys().map(|(_, z)| *z).min().unwrap_or(0);
        let shift = (-min_z).max(0) as u32;
        // s = t^(1/2) - t^(-1/2) on the half-integer grid.
        let mut s = LaurentPoly1::monomial_units(Var::T, 2, BigInt::one());
        s.add_term_units(-2, &BigInt::from(-1));
        let mut spows: Vec<LaurentPoly1> = vec![LaurentPoly1::one(Var::T)];
        let mut out = LaurentPoly1::zero(Var::T);
        for ((a, z), c) in &self.terms {
            let e = (z + shift as i64) as usize;
            while spows.len() <= e {
                let next = spows.last().expect("nonempty").mul(&s);
                spows.push(next);
            }
            // alpha^a -> t^(-a): key shift of -4a quarter-units.
            let mut term = spows[e].clone();
            term.mul_monomial_units(-4 * a, c);
            out = out.add(&term);
        }
        if shift == 0 {
            Ok(out)
        } else {
            out.div_exact(&s.pow(shift))
        }
    }

    /// Canonical text form: terms ascending by `(alpha_exp, z_exp)`, explicit
    /// signs, e.g. `-1*a^(-4)*z^(0) + 2*a^(-2)*z^(0) + 1*a^(-2)*z^(2)`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((a, z), c)) in self.terms.iter().enumerate() {
            // Factors with exponent zero are omitted; the constant term is a
            // bare coefficient.
            let mut body = String::new();
            if *a != 0 {
                body.push_str(&format!("*a^({a})"));
            }
            if *z != 0 {
                body.push_str(&format!("*z^({z})"));
            }
            if i == 0 {
                out.push_str(&format!("{c}{body}"));
            } else if c.is_negative() {
                out.push_str(&format!(" - {}{}", c.magnitude(), body));
            } else {
                out.push_str(&format!(" + {c}{body}"));
            }
        }
        out
    }

    /// JSON form: a list of `[alpha_exp, z_exp, coeff]` triples in ascending
    /// lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        let triples: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|((a, z), c)| serde_json::json!([*a, *z, coeff_json(c)]))
            .collect();
        serde_json::Value::Array(triples)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn jones_trefoil() -> LaurentPoly1 {
        // V(positive trefoil) = t + t^3 - t^4.
        let mut v = LaurentPoly1::monomial(Var::T, 1, 1, 1).unwrap();
        v = v.add(&LaurentPoly1::monomial(Var::T, 3, 1, 1).unwrap());
        v = v.add(&LaurentPoly1::monomial(Var::T, 4, 1, -1).unwrap());
        v
    }

    #[test]
    fn degree_info_of_trefoil_jones() {
        let info = jones_trefoil().degree_info().unwrap();
        assert_eq!(info.min_deg, Ratio::new(1, 1));
        assert_eq!(info.max_deg, Ratio::new(4, 1));
        assert_eq!(info.min_coeff, BigInt::from(1));
        assert_eq!(info.lead_coeff, BigInt::from(-1));
        // No t^2 term: V_1 = 0.
        assert_eq!(info.second_coeff, BigInt::from(0));
    }

    #[test]
    fn text_form_is_canonical() {
        assert_eq!(jones_trefoil().to_text(), "1*t^(1) + 1*t^(3) - 1*t^(4)");
        let mut p = LaurentPoly1::monomial(Var::T, -1, 2, -2).unwrap();
        p = p.add(&LaurentPoly1::monomial(Var::T, 0, 1, 3).unwrap());
        assert_eq!(p.to_text(), "-2*t^(-1/2) + 3");
        assert_eq!(LaurentPoly1::zero(Var::T).to_text(), "0");
    }

    #[test]
    fn json_form_uses_lowest_terms() {
        let mut p = LaurentPoly1::monomial(Var::T, -1, 2, -2).unwrap();
        p = p.add(&LaurentPoly1::monomial(Var::T, 3, 1, 5).unwrap());
        assert_eq!(p.to_json(), serde_json::json!([[-1, 2, -2], [3, 1, 5]]));
    }

    #[test]
    fn monomial_rejects_off_grid_exponents() {
        assert!(LaurentPoly1::monomial(Var::Z, 1, 2, 1).is_err());
        assert!(LaurentPoly1::monomial(Var::T, 1, 4, 1).is_err());
        assert!(LaurentPoly1::monomial(Var::A, 1, 4, 1).is_ok());
    }

    #[test]
    fn subst_a_to_t_maps_bracket_exponents() {
        // -A^3 (positive kink bracket) -> -t^(-3/4)... combined with writhe
        // normalization elsewhere; here just the raw key map A^m -> t^(-m/4).
        // Use A^-4 - A^8: t^1 - t^-2.
        let mut p = LaurentPoly1::monomial(Var::A, -4, 1, 1).unwrap();
        p = p.add(&LaurentPoly1::monomial(Var::A, 8, 1, -1).unwrap());
        let t = p.subst_a_to_t().unwrap();
        assert_eq!(t.coeff_at(1, 1), BigInt::from(1));
        assert_eq!(t.coeff_at(-2, 1), BigInt::from(-1));
        assert_eq!(t.term_count(), 2);
    }

    #[test]
    fn exact_division_round_trips() {
        let mut s = LaurentPoly1::monomial_units(Var::T, 2, BigInt::one());
        s.add_term_units(-2, &BigInt::from(-1));
        let prod = jones_trefoil().mul(&s.pow(3));
        assert_eq!(prod.div_exact(&s.pow(3)).unwrap(), jones_trefoil());
        // t^(1/2) does not divide 1 + t.
        let mut p = LaurentPoly1::one(Var::T);
        p = p.add(&LaurentPoly1::monomial(Var::T, 1, 1, 1).unwrap());
        assert!(p.div_exact(&s).is_err());
    }

    #[test]
    fn homfly_trefoil_specializations() {
        // P(positive trefoil) = 2 a^-2 - a^-4 + a^-2 z^2.
        let mut p = LaurentPoly2::monomial(-2, 0, 2);
        p.add_term(-4, 0, &BigInt::from(-1));
        p.add_term(-2, 2, &BigInt::from(1));
        let conway = p.specialize_conway().unwrap();
        assert_eq!(conway.to_text(), "1 + 1*z^(2)");
        let jones = p.specialize_jones().unwrap();
        assert_eq!(jones, jones_trefoil());
    }

    #[test]
    fn homfly_hopf_specializations() {
        // P(positive Hopf) = (a^-1 - a^-3) z^-1 + a^-1 z.
        let mut p = LaurentPoly2::monomial(-1, -1, 1);
        p.add_term(-3, -1, &BigInt::from(-1));
        p.add_term(-1, 1, &BigInt::from(1));
        let conway = p.specialize_conway().unwrap();
        assert_eq!(conway.to_text(), "1*z^(1)");
        // V(positive Hopf) = -t^(1/2) - t^(5/2).
        let jones = p.specialize_jones().unwrap();
        assert_eq!(jones.to_text(), "-1*t^(1/2) - 1*t^(5/2)");
    }

    #[test]
    fn delta_powers_specialize_exactly() {
        // delta^2 has z^-2 terms; Jones specialization must clear them:
        // V(3-unlink) = (-t^(1/2) - t^(-1/2))^2.
        let p = LaurentPoly2::delta().pow(2);
        let jones = p.specialize_jones().unwrap();
        assert_eq!(jones.to_text(), "1*t^(-1) + 2 + 1*t^(1)");
        // alpha -> 1 kills delta entirely, so conway(delta^2) = 0.
        let conway = p.specialize_conway().unwrap();
        assert!(conway.is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly1> {
        proptest::collection::vec(((-20i64..20), (-50i64..50)), 0..8).prop_map(|terms| {
            let mut p = LaurentPoly1::zero(Var::T);
            for (half_exp, c) in terms {
                p.add_term_units(2 * half_exp, &BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&LaurentPoly1::zero(Var::T)), a.clone());
            prop_assert_eq!(a.mul(&LaurentPoly1::one(Var::T)), a.clone());
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }
    }
}
