//! Integer Laurent polynomials in a fixed number of variables.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration order is
//! lexicographic and structural equality/hashing is canonical. Zero
//! coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dense;
use crate::error::{Error, Result};

/// Term-count product above which the dense fixed-width paths are tried.
const DENSE_THRESHOLD: usize = 64;

/// Exponent vector of a Laurent monomial. Entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn new(exponents: Vec<i32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// Arithmetic selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// An element of `Z[x_1^{±1}, ..., x_m^{±1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

/// Negated minimal exponents of a Laurent polynomial with respect to a cluster.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenominatorVector(pub Vec<i64>);

impl DenominatorVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

impl std::ops::Add for &DenominatorVector {
    type Output = DenominatorVector;

    fn add(self, rhs: &DenominatorVector) -> DenominatorVector {
        assert_eq!(self.0.len(), rhs.0.len());
        DenominatorVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The coordinate variable `x_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Self::term(Monomial::var(nvars, i), 1)
    }

    pub fn monomial(exponents: Vec<i32>) -> Self {
        Self::term(Monomial(exponents), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let nvars = m.nvars();
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VarCountMismatch(nvars, e.len()));
            }
            accumulate(&mut out, Monomial(e), c.into());
        }
        Ok(LaurentPoly { nvars, terms: out })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every coefficient is nonnegative.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Rebuilds the canonical form; the result always equals `self`.
    pub fn normalized(&self) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            accumulate(&mut out, m.clone(), c.clone());
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), -c);
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    fn term_refs(&self) -> dense::Terms<'_> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c)).collect()
    }

    fn from_dense(nvars: usize, terms: Vec<(Vec<i32>, BigInt)>) -> Self {
        LaurentPoly {
            nvars,
            terms: terms.into_iter().map(|(e, c)| (Monomial(e), c)).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if self.terms.len() * other.terms.len() >= DENSE_THRESHOLD {
            if let Some(t) = dense::mul(&self.term_refs(), &other.term_refs(), self.nvars) {
                return Ok(Self::from_dense(self.nvars, t));
            }
        }
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    fn square(&self) -> Self {
        if self.terms.len() * self.terms.len() >= DENSE_THRESHOLD {
            if let Some(t) = dense::square(&self.term_refs(), self.nvars) {
                return Self::from_dense(self.nvars, t);
            }
        }
        self * self
    }

    pub fn pow(&self, e: u32) -> Self {
        self.pow_within(e, usize::MAX).expect("unbounded")
    }

    /// `self^e`, or `None` if some intermediate product would take more
    /// than `max_work` term multiplications.
    pub fn pow_within(&self, e: u32, max_work: usize) -> Option<Self> {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_within(&base, max_work)?;
            }
            e >>= 1;
            if e > 0 {
                if base.num_terms().saturating_mul(base.num_terms()) > max_work {
                    return None;
                }
                base = base.square();
            }
        }
        Some(acc)
    }

    /// Product, or `None` if it would take more than `max_work` term
    /// multiplications.
    pub fn mul_within(&self, other: &Self, max_work: usize) -> Option<Self> {
        if self.num_terms().saturating_mul(other.num_terms()) > max_work {
            return None;
        }
        Some(self * other)
    }

    /// Multiplies by the Laurent monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        let s = Monomial(shift.to_vec());
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.mul(&s), c.clone())).collect(),
        }
    }

    /// Componentwise minimum of the exponent vectors (`None` for zero).
    pub fn min_exponents(&self) -> Option<Vec<i32>> {
        let mut it = self.terms.keys();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |mut acc, m| {
            for (a, &b) in acc.iter_mut().zip(&m.0) {
                *a = (*a).min(b);
            }
            acc
        }))
    }

    /// Exact quotient `self / den` in the integer Laurent ring.
    ///
    /// Both sides are shifted to polynomials that no variable divides, then
    /// divided by lex-leading terms; monomials are units so the Laurent
    /// quotient exists iff the shifted polynomial quotient does.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        self.check_same(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if den.is_monomial() {
            let (dm, dc) = den.terms.iter().next().unwrap();
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return Err(Error::NonExactDivision);
                }
                terms.insert(m.div(dm), q);
            }
            return Ok(LaurentPoly {
                nvars: self.nvars,
                terms,
            });
        }

        if self.terms.len() * den.terms.len() >= DENSE_THRESHOLD {
            if let Some(t) = dense::exact_div(&self.term_refs(), &den.term_refs(), self.nvars) {
                return Ok(Self::from_dense(self.nvars, t));
            }
        }

        let num_min = self.min_exponents().unwrap();
        let den_min = den.min_exponents().unwrap();
        let neg = |v: &[i32]| v.iter().map(|e| -e).collect::<Vec<_>>();
        let mut rem = self.shift(&neg(&num_min)).terms;
        let den_poly = den.shift(&neg(&den_min));
        let (lead_m, lead_c) = den_poly.terms.iter().next_back().unwrap();

        let mut quot = BTreeMap::new();
        while let Some((rm, rc)) = rem.iter().next_back() {
            if !lead_m.divides(rm) {
                return Err(Error::NonExactDivision);
            }
            let (qc, r) = rc.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            let qm = rm.div(lead_m);
            for (m, c) in &den_poly.terms {
                accumulate(&mut rem, m.mul(&qm), -(c * &qc));
            }
            quot.insert(qm, qc);
        }

        let offset: Vec<i32> = num_min.iter().zip(&den_min).map(|(a, b)| a - b).collect();
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms: quot,
        }
        .shift(&offset))
    }

    /// Exact rational value at `point`.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return Err(Error::VarCountMismatch(self.nvars, point.len()));
        }
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, (&e, x)) in m.0.iter().zip(point).enumerate() {
                if e == 0 {
                    continue;
                }
                if x.is_zero() {
                    if e < 0 {
                        return Err(Error::ZeroAtNegativeExponent(i + 1));
                    }
                    t = BigRational::zero();
                    break;
                }
                t *= num_traits::pow::Pow::pow(x, e);
            }
            total += t;
        }
        Ok(total)
    }

    /// Denominator vector with respect to the variables `cluster` (0-based).
    ///
    /// Entry `d_i` is minus the smallest exponent of `x_{cluster[i]}`; other
    /// variables are treated as coefficients.
    pub fn denominator_vector(&self, cluster: &[usize]) -> Result<DenominatorVector> {
        let mins = self.min_exponents().ok_or(Error::ZeroPolynomial)?;
        cluster
            .iter()
            .map(|&i| {
                mins.get(i)
                    .map(|&e| -(e as i64))
                    .ok_or(Error::IndexOutOfRange(i))
            })
            .collect::<Result<Vec<_>>>()
            .map(DenominatorVector)
    }

    /// Substitutes `images[i]` for `x_{i+1}`. Each image must be a Laurent
    /// polynomial that is invertible (a monomial) wherever a negative power
    /// is needed; otherwise the result is not Laurent and `NonExactDivision`
    /// is returned.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        if images.len() != self.nvars {
            return Err(Error::VarCountMismatch(self.nvars, images.len()));
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut total = LaurentPoly::zero(target);
        for (m, c) in &self.terms {
            let mut num = LaurentPoly::constant(target, c.clone());
            let mut den = LaurentPoly::one(target);
            for (&e, img) in m.0.iter().zip(images) {
                if e > 0 {
                    num = num.checked_mul(&img.pow(e as u32))?;
                } else if e < 0 {
                    den = den.checked_mul(&img.pow((-e) as u32))?;
                }
            }
            total = total.checked_add(&num.exact_div(&den)?)?;
        }
        Ok(total)
    }

    /// Canonical text form using `x1, x2, ...` as variable names.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    /// Text form with caller-supplied variable names.
    pub fn format_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = names.get(i).copied().unwrap_or("?");
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            let s = if factors.is_empty() {
                c.to_string()
            } else if c.is_one() {
                factors.join("*")
            } else if *c == -BigInt::one() {
                format!("-{}", factors.join("*"))
            } else {
                format!("{}*{}", c, factors.join("*"))
            };
            parts.push(s);
        }
        parts.join(" + ")
    }

    /// Parses the canonical text form (`3*x1^2*x2^-1 + -1`). Binary `-` between
    /// terms and repeated monomials are also accepted.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = BTreeMap::new();
        for (sign, tok) in split_terms(s)? {
            let (m, c) = parse_term(tok, nvars)?;
            accumulate(&mut terms, m, if sign { -c } else { c });
        }
        Ok(LaurentPoly { nvars, terms })
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Splits on top-level `+`/`-` that separate terms. A `-` directly after `^`
/// or at the start of a term belongs to the term.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    let mut negate = false;
    let mut i = 0;
    let mut seen_content = false;
    while i < bytes.len() {
        let b = bytes[i];
        let prev = s[..i].trim_end().bytes().last();
        let is_sep = (b == b'+' || b == b'-')
            && seen_content
            && !matches!(prev, Some(b'^') | Some(b'*') | Some(b'+') | Some(b'-'));
        if is_sep {
            let tok = s[start..i].trim();
            if tok.is_empty() {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            out.push((negate, tok));
            negate = b == b'-';
            start = i + 1;
            seen_content = false;
        } else if !b.is_ascii_whitespace() && b != b'-' && b != b'+' {
            seen_content = true;
        }
        i += 1;
    }
    let tok = s[start..].trim();
    if tok.is_empty() {
        return Err(Error::Parse(format!("trailing operator in `{s}`")));
    }
    out.push((negate, tok));
    Ok(out)
}

fn parse_term(tok: &str, nvars: usize) -> Result<(Monomial, BigInt)> {
    let mut coeff = BigInt::one();
    let mut exps = vec![0i32; nvars];
    let mut tok = tok.trim();
    while let Some(rest) = tok.strip_prefix('-') {
        coeff = -coeff;
        tok = rest.trim_start();
    }
    for factor in tok.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{tok}`")));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (
                    i,
                    e.trim()
                        .parse::<i32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (rest, 1),
            };
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable in `{factor}`")))?;
            if idx == 0 || idx > nvars {
                return Err(Error::Parse(format!(
                    "variable x{idx} out of range 1..={nvars}"
                )));
            }
            exps[idx - 1] += exp;
        } else {
            let c: BigInt = factor
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{factor}`")))?;
            coeff *= c;
        }
    }
    Ok((Monomial(exps), coeff))
}

/// Checked arithmetic entry point.
pub fn arith(a: &LaurentPoly, b: &LaurentPoly, op: ArithOp) -> Result<LaurentPoly> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.format_with(&refs))
    }
}

// Operator impls panic on a variable-count mismatch; use the `checked_*`
// methods where that is not already guaranteed.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn cancellation() {
        assert_eq!(&p("x1 + 1", 1) + &p("-1", 1), p("x1", 1));
    }

    #[test]
    fn difference_of_squares() {
        let a = p("x1 + x2", 2);
        let b = p("x1 - x2", 2);
        assert_eq!(&a * &b, p("x1^2 + -x2^2", 2));
    }

    #[test]
    fn inverse_monomial() {
        assert!((&p("x1^-1", 1) * &p("x1", 1)).is_one());
    }

    #[test]
    fn mismatch_is_an_error() {
        let e = arith(&p("x1", 1), &p("x1", 2), ArithOp::Add).unwrap_err();
        assert_eq!(e, Error::VarCountMismatch(1, 2));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p("x1^2*x2", 2).exact_div(&p("x1", 2)).unwrap(), p("x1*x2", 2));
        assert_eq!(
            p("x2 + 1", 2).exact_div(&p("x1", 2)).unwrap(),
            p("x1^-1*x2 + x1^-1", 2)
        );
        assert_eq!(
            p("x1 + x2", 2).exact_div(&p("x1 + 1", 2)),
            Err(Error::NonExactDivision)
        );
        assert_eq!(p("x1", 1).exact_div(&LaurentPoly::zero(1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_div_rejects_rational_quotient() {
        assert_eq!(p("x1 + 1", 1).exact_div(&p("2", 1)), Err(Error::NonExactDivision));
        assert_eq!(
            p("2*x1 + 2", 1).exact_div(&p("2*x1^-1", 1)).unwrap(),
            p("x1^2 + x1", 1)
        );
    }

    #[test]
    fn exact_div_of_laurent_factors() {
        let a = p("x1^-2*x2 + 3*x2^-1 + x1", 2);
        let b = p("x1*x2^-3 + -x2 + 5", 2);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("x1 + x2", 2).eval(&[q(1, 1), q(1, 1)]).unwrap(), q(2, 1));
        assert_eq!(p("x1^-1", 1).eval(&[q(1, 2)]).unwrap(), q(2, 1));
        let y = p("x2 + 1", 2).exact_div(&p("x1", 2)).unwrap();
        assert_eq!(y.eval(&[q(2, 1), q(3, 1)]).unwrap(), q(2, 1));
        assert_eq!(
            p("x1^-1", 1).eval(&[q(0, 1)]),
            Err(Error::ZeroAtNegativeExponent(1))
        );
        assert_eq!(p("x1^2 + 1", 1).eval(&[q(0, 1)]).unwrap(), q(1, 1));
    }

    #[test]
    fn denominator_vectors() {
        assert_eq!(
            p("x1", 2).denominator_vector(&[0, 1]).unwrap(),
            DenominatorVector(vec![-1, 0])
        );
        let y = p("x2 + 1", 2).exact_div(&p("x1", 2)).unwrap();
        assert_eq!(y.denominator_vector(&[0, 1]).unwrap(), DenominatorVector(vec![1, 0]));
        let z = p("x1 + x2^2", 2).exact_div(&p("x1^2*x2", 2)).unwrap();
        assert_eq!(z.denominator_vector(&[0, 1]).unwrap(), DenominatorVector(vec![2, 1]));
        assert_eq!(
            LaurentPoly::zero(2).denominator_vector(&[0]),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn canonical_text() {
        let y = p("-1 + 3*x2^-1*x1^2", 2);
        assert_eq!(y.to_string(), "3*x1^2*x2^-1 + -1");
        assert_eq!(p("x1 - x1", 1).to_string(), "0");
        assert_eq!(p("-x1*x2 + 2", 2).to_string(), "-x1*x2 + 2");
        assert_eq!(p(&y.to_string(), 2), y);
    }

    #[test]
    fn parse_errors() {
        assert!(LaurentPoly::parse("x3", 2).is_err());
        assert!(LaurentPoly::parse("x1 +", 2).is_err());
        assert!(LaurentPoly::parse("", 2).is_err());
        assert!(LaurentPoly::parse("2*y", 2).is_err());
    }

    #[test]
    fn substitution_into_monomial_images() {
        let f = p("x1^-1*x2 + x1", 2);
        let imgs = [p("x1*x2", 2), p("x2^2", 2)];
        assert_eq!(f.substitute(&imgs).unwrap(), p("x1^-1*x2 + x1*x2", 2));
    }
}
