//! Seeds attached to reduced words for pairs `(u, v)` of permutations, the
//! double Bruhat cell setting for `SL_{r+1}`.
//!
//! Words are 1-based as written by hand: `(1, 2, 1, 2, 1, -1, -2, -1)`.
//! Internally permutations act on `0..=r`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exchange::{ExtendedExchangeMatrix, Seed};
use crate::graph::{classify_finite_type, cluster_variables, explore_with_jobs, Bounds, ClassificationResult};
use crate::linalg::{self, q, QMatrix};

/// A permutation of `0..=r`, `w[i]` is the image of `i`.
pub type Perm = Vec<usize>;

fn identity(size: usize) -> Perm {
    (0..size).collect()
}

/// `w * s_a` for the 1-based simple transposition `s_a`.
fn right_mul_simple(w: &mut Perm, a: usize) {
    w.swap(a - 1, a);
}

pub fn inversions(w: &[usize]) -> usize {
    (0..w.len())
        .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
        .sum()
}

fn apply(w: &[usize], set: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = set.into_iter().map(|i| w[i]).collect();
    out.sort_unstable();
    out
}

/// Row and column sets of a minor, 0-based and sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MinorIndex {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorIndex {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        rows.sort_unstable();
        cols.sort_unstable();
        if rows.len() != cols.len() || rows.is_empty() {
            return Err(Error::SizeMismatch(format!(
                "{} rows vs {} columns",
                rows.len(),
                cols.len()
            )));
        }
        if rows.windows(2).any(|w| w[0] == w[1]) || cols.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::SizeMismatch("repeated index in a minor".into()));
        }
        Ok(MinorIndex { rows, cols })
    }

    /// From 1-based index lists, e.g. `(&[1, 2], &[2, 3])` for `Δ_{12,23}`.
    pub fn from_one_based(rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.iter().chain(cols).any(|&i| i == 0) {
            return Err(Error::SizeMismatch("minor indices are 1-based".into()));
        }
        Self::new(rows.iter().map(|i| i - 1).collect(), cols.iter().map(|i| i - 1).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Exact value at a square rational matrix.
    pub fn eval(&self, x: &QMatrix) -> Result<BigRational> {
        let n = x.len();
        if x.iter().any(|row| row.len() != n) {
            return Err(Error::SizeMismatch("matrix is not square".into()));
        }
        if self.rows.iter().chain(&self.cols).any(|&i| i >= n) {
            return Err(Error::SizeMismatch(format!("minor {self} of a {n}x{n} matrix")));
        }
        let sub: QMatrix = self
            .rows
            .iter()
            .map(|&i| self.cols.iter().map(|&j| x[i][j].clone()).collect())
            .collect();
        Ok(linalg::det(&sub))
    }
}

impl fmt::Display for MinorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.rows.iter().chain(&self.cols).all(|&i| i < 9) { "" } else { "." };
        let show = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(sep);
        write!(f, "Δ_{{{},{}}}", show(&self.rows), show(&self.cols))
    }
}

/// A reduced word for a pair `(u, v)` of permutations of `r + 1` letters,
/// with its derived index data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    r: usize,
    entries: Vec<i32>,
    u: Perm,
    v: Perm,
    k_plus: Vec<usize>,
    k_minus: Vec<usize>,
    ex: Vec<usize>,
}

impl ReducedWord {
    pub fn new(r: usize, entries: Vec<i32>) -> Result<Self> {
        if r == 0 {
            return Err(Error::BadPrefix);
        }
        if let Some(&e) = entries.iter().find(|&&e| e == 0 || e.unsigned_abs() as usize > r) {
            return Err(Error::BadEntry(e));
        }
        if entries.len() < r || (0..r).any(|j| entries[j] != j as i32 + 1) {
            return Err(Error::BadPrefix);
        }
        let mut u = identity(r + 1);
        let mut v = identity(r + 1);
        let (mut lu, mut lv) = (0, 0);
        for &e in &entries[r..] {
            if e < 0 {
                right_mul_simple(&mut u, (-e) as usize);
                lu += 1;
            } else {
                right_mul_simple(&mut v, e as usize);
                lv += 1;
            }
        }
        if inversions(&u) != lu || inversions(&v) != lv {
            return Err(Error::NotReduced);
        }
        let m = entries.len();
        // 1-based positions, with m + 1 and 0 as the sentinels
        let mut k_plus = vec![m + 1; m + 1];
        let mut k_minus = vec![0; m + 2];
        for k in 1..=m {
            if let Some(l) = (k + 1..=m).find(|&l| entries[l - 1].abs() == entries[k - 1].abs()) {
                k_plus[k] = l;
                k_minus[l] = k;
            }
        }
        let ex = (r + 1..=m).filter(|&k| k_plus[k] <= m).collect();
        Ok(ReducedWord {
            r,
            entries,
            u,
            v,
            k_plus,
            k_minus,
            ex,
        })
    }

    /// Parses a comma-separated word; `r` is the largest absolute entry.
    pub fn parse(s: &str) -> Result<Self> {
        let entries: Vec<i32> = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<i32>().map_err(|_| Error::Parse(format!("bad word entry `{t}`")))
            })
            .collect::<Result<_>>()?;
        let r = entries.iter().map(|e| e.unsigned_abs() as usize).max().unwrap_or(0);
        Self::new(r, entries)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn u(&self) -> &Perm {
        &self.u
    }

    pub fn v(&self) -> &Perm {
        &self.v
    }

    /// `k^+` for 1-based `k`, `m + 1` if `|i_k|` does not recur.
    pub fn k_plus(&self, k: usize) -> usize {
        self.k_plus[k]
    }

    /// `k^-` for 1-based `k`, `0` if there is no earlier occurrence.
    pub fn k_minus(&self, k: usize) -> usize {
        self.k_minus[k]
    }

    /// Exchangeable indices, 1-based and increasing.
    pub fn ex(&self) -> &[usize] {
        &self.ex
    }

    fn letter(&self, k: usize) -> usize {
        self.entries[k - 1].unsigned_abs() as usize
    }

    fn eps(&self, k: usize) -> i64 {
        self.entries[k - 1].signum() as i64
    }

    /// The minor `f_k = Δ_{γ_k, δ_k}` for 1-based `k`.
    pub fn gamma_delta(&self, k: usize) -> Result<MinorIndex> {
        if k == 0 || k > self.m() {
            return Err(Error::IndexOutOfRange(k));
        }
        let size = self.r + 1;
        let omega = 0..self.letter(k);
        let mut g = identity(size);
        for &e in &self.entries[..k] {
            if e < 0 {
                right_mul_simple(&mut g, (-e) as usize);
            }
        }
        let mut d = identity(size);
        for &e in self.entries[k..].iter().rev() {
            if e > 0 {
                right_mul_simple(&mut d, e as usize);
            }
        }
        MinorIndex::new(apply(&g, omega.clone()), apply(&d, omega))
    }

    /// `F_i`, in order `f_1, ..., f_m`.
    pub fn minors(&self) -> Vec<MinorIndex> {
        (1..=self.m()).map(|k| self.gamma_delta(k).expect("k in range")).collect()
    }

    /// 1-based indices outside `ex`.
    pub fn frozen_indices(&self) -> Vec<usize> {
        (1..=self.m()).filter(|k| !self.ex.contains(k)).collect()
    }

    pub fn frozen_set(&self) -> BTreeSet<MinorIndex> {
        self.frozen_indices()
            .into_iter()
            .map(|k| self.gamma_delta(k).expect("k in range"))
            .collect()
    }

    /// The frozen minors computed from `u` and `v` alone:
    /// `Δ_{ω_j, v^{-1} ω_j}` for every `j` and `Δ_{u ω_i, ω_i}` for every
    /// letter that recurs after the prefix.
    pub fn frozen_set_closed_form(&self) -> BTreeSet<MinorIndex> {
        let mut v_inv = vec![0; self.r + 1];
        for (i, &w) in self.v.iter().enumerate() {
            v_inv[w] = i;
        }
        let mut out = BTreeSet::new();
        for j in 1..=self.r {
            out.insert(MinorIndex::new((0..j).collect(), apply(&v_inv, 0..j)).expect("valid"));
            if self.entries[self.r..].iter().any(|e| e.unsigned_abs() as usize == j) {
                out.insert(MinorIndex::new(apply(&self.u, 0..j), (0..j).collect()).expect("valid"));
            }
        }
        out
    }

    /// `B̃(i)`: rows `1..m` (stored 0-based), one column per element of `ex`.
    pub fn b_matrix(&self) -> Vec<Vec<i64>> {
        let m = self.m();
        let cartan = |a: usize, b: usize| -> i64 {
            match a.abs_diff(b) {
                0 => 2,
                1 => -1,
                _ => 0,
            }
        };
        let mut b = vec![vec![0i64; self.ex.len()]; m];
        for (col, &k) in self.ex.iter().enumerate() {
            let kp = self.k_plus(k);
            for p in 1..=m {
                let pp = self.k_plus(p);
                let a = cartan(self.letter(p), self.letter(k));
                b[p - 1][col] = if p == self.k_minus(k) {
                    -self.eps(k)
                } else if p == kp {
                    self.eps(p)
                } else if (p < k && k < pp && pp < kp && self.eps(k) == self.eps(pp))
                    || (p < k && k < kp && kp < pp && self.eps(k) == -self.eps(kp))
                {
                    -self.eps(k) * a
                } else if (k < p && p < kp && kp < pp && self.eps(p) == self.eps(kp))
                    || (k < p && p < pp && pp < kp && self.eps(p) == -self.eps(pp))
                {
                    self.eps(p) * a
                } else {
                    0
                };
            }
        }
        b
    }

    pub fn exchange_matrix(&self) -> Result<ExtendedExchangeMatrix> {
        ExtendedExchangeMatrix::validate(self.b_matrix(), self.ex.iter().map(|k| k - 1).collect())
    }

    /// The seed `(F_i, B̃(i))` with `x_k` standing for `f_k`.
    pub fn seed(&self) -> Result<Seed> {
        Ok(Seed::initial(self.exchange_matrix()?))
    }

    /// `f_1(x), ..., f_m(x)`.
    pub fn evaluate(&self, x: &QMatrix) -> Result<Vec<BigRational>> {
        self.check_size(x)?;
        self.minors().iter().map(|mi| mi.eval(x)).collect()
    }

    fn check_size(&self, x: &QMatrix) -> Result<()> {
        let n = self.r + 1;
        if x.len() != n || x.iter().any(|row| row.len() != n) {
            return Err(Error::SizeMismatch(format!("expected a {n}x{n} matrix")));
        }
        Ok(())
    }

    /// Whether every minor of `F_i` is positive at `x`, which must have
    /// determinant 1.
    pub fn tp_test(&self, x: &QMatrix) -> Result<bool> {
        self.check_size(x)?;
        if !linalg::det(x).is_one() {
            return Err(Error::NotUnimodular);
        }
        Ok(self.evaluate(x)?.iter().all(|v| v.is_positive()))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(i32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Every minor of an `n x n` matrix, sorted by size then index.
pub fn all_minor_indices(n: usize) -> Vec<MinorIndex> {
    let subsets = |k: usize| -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
            .collect()
    };
    let mut out = Vec::new();
    for k in 1..=n {
        let sets = subsets(k);
        for rows in &sets {
            for cols in &sets {
                out.push(MinorIndex::new(rows.clone(), cols.clone()).expect("valid"));
            }
        }
    }
    out
}

pub fn all_minors_positive(x: &QMatrix) -> Result<bool> {
    for mi in all_minor_indices(x.len()) {
        if !mi.eval(x)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn rand_positive(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(1..=9)), BigInt::from(rng.gen_range(1..=4)))
}

/// A totally positive matrix of determinant 1: lower bidiagonal factors
/// along a reduced word for the longest permutation, a positive diagonal,
/// then upper bidiagonal factors, all with positive rational parameters.
pub fn tp_sample(n: usize, rng: &mut ChaCha8Rng) -> QMatrix {
    let mut word = Vec::new();
    for i in 1..n {
        for j in (1..=i).rev() {
            word.push(j);
        }
    }
    let mut x: QMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect();
    // x <- x (I + t E_{a+1,a}): column a += t * column a+1
    for &a in &word {
        let t = rand_positive(rng);
        for row in x.iter_mut() {
            let add = &row[a] * &t;
            row[a - 1] += add;
        }
    }
    let mut prod = q(1);
    for j in 0..n {
        let d = if j + 1 < n { rand_positive(rng) } else { prod.recip() };
        if j + 1 < n {
            prod *= &d;
        }
        for row in x.iter_mut() {
            row[j] *= &d;
        }
    }
    // x <- x (I + t E_{a,a+1}): column a+1 += t * column a
    for &a in &word {
        let t = rand_positive(rng);
        for row in x.iter_mut() {
            let add = &row[a - 1] * &t;
            row[a] += add;
        }
    }
    x
}

/// A random rational matrix of determinant 1, or `None` if the integer
/// draw was singular.
pub fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Option<QMatrix> {
    let mut x: QMatrix = (0..n)
        .map(|_| (0..n).map(|_| q(rng.gen_range(-9..=9))).collect())
        .collect();
    let d = linalg::det(&x);
    if d.is_zero() {
        return None;
    }
    for v in x[0].iter_mut() {
        *v /= &d;
    }
    Some(x)
}

/// The word `(1, 2, 1, 2, 1, -1, -2, -1)` for `u = v = w0` in `S_3`.
pub fn sl3_w0w0_word() -> ReducedWord {
    ReducedWord::new(2, vec![1, 2, 1, 2, 1, -1, -2, -1]).expect("valid word")
}

/// `f_k'` computed from the exchange relation at the evaluated `f` values,
/// or `None` when `f_k(x) = 0`.
pub fn exchanged_value(b: &[Vec<i64>], col: usize, k: usize, f: &[BigRational]) -> Option<BigRational> {
    if f[k - 1].is_zero() {
        return None;
    }
    let mut pos = q(1);
    let mut neg = q(1);
    for (i, row) in b.iter().enumerate() {
        let e = row[col];
        if e > 0 {
            pos *= num_traits::pow(f[i].clone(), e as usize);
        } else if e < 0 {
            neg *= num_traits::pow(f[i].clone(), (-e) as usize);
        }
    }
    Some((pos + neg) / &f[k - 1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub attempts: usize,
    pub checked: usize,
    /// Samples discarded because a denominator vanished or the integer
    /// draw was singular.
    pub skipped: usize,
}

impl IdentityReport {
    pub fn skip_rate(&self) -> f64 {
        self.skipped as f64 / self.attempts.max(1) as f64
    }
}

fn minor(rows: &[usize], cols: &[usize]) -> MinorIndex {
    MinorIndex::from_one_based(rows, cols).expect("valid minor")
}

/// The closed forms of `f_3', ..., f_6'` for [`sl3_w0w0_word`], as
/// functions of the matrix.
pub fn sl3_expected_exchanges(x: &QMatrix) -> Result<[BigRational; 4]> {
    Ok([
        minor(&[1, 2], &[1, 3]).eval(x)?,
        minor(&[1], &[1]).eval(x)? * minor(&[2, 3], &[2, 3]).eval(x)? - q(1),
        minor(&[2], &[2]).eval(x)?,
        minor(&[1, 3], &[1, 2]).eval(x)?,
    ])
}

/// Checks the four exchange identities of [`sl3_w0w0_word`] exactly on
/// `samples` random unimodular rational matrices, skipping draws where a
/// denominator vanishes (at most `10 * samples` draws). Other words are
/// unsupported.
pub fn exchange_identity_check(w: &ReducedWord, samples: usize, rng_seed: u64) -> Result<IdentityReport> {
    if *w != sl3_w0w0_word() {
        return Err(Error::Unsupported(format!(
            "closed-form exchange identities are only known for 1,2,1,2,1,-1,-2,-1, not {w}"
        )));
    }
    let b = w.b_matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut report = IdentityReport {
        attempts: 0,
        checked: 0,
        skipped: 0,
    };
    while report.checked < samples && report.attempts < 10 * samples {
        report.attempts += 1;
        let Some(x) = random_unimodular(3, &mut rng) else {
            report.skipped += 1;
            continue;
        };
        let f = w.evaluate(&x)?;
        let expected = sl3_expected_exchanges(&x)?;
        let got: Option<Vec<BigRational>> = w
            .ex()
            .iter()
            .enumerate()
            .map(|(col, &k)| exchanged_value(&b, col, k, &f))
            .collect();
        let Some(got) = got else {
            report.skipped += 1;
            continue;
        };
        for ((g, e), k) in got.iter().zip(&expected).zip(w.ex()) {
            if g != e {
                return Err(Error::IdentityViolated(format!("f{k}' = {g}, expected {e}")));
            }
        }
        report.checked += 1;
    }
    Ok(report)
}

/// A named polynomial function of a matrix.
pub type Candidate = (String, Box<dyn Fn(&QMatrix) -> BigRational + Send + Sync>);

/// Candidate closed forms for the cluster variables of
/// [`sl3_w0w0_word`]: the 14 minors other than the determinant and the
/// four frozen minors, plus two cubic polynomials.
pub fn sl3_w0w0_candidates() -> Vec<Candidate> {
    let frozen = sl3_w0w0_word().frozen_set();
    let mut out: Vec<Candidate> = Vec::new();
    for mi in all_minor_indices(3) {
        if mi.size() == 3 || frozen.contains(&mi) {
            continue;
        }
        let name = mi.to_string();
        out.push((name, Box::new(move |x: &QMatrix| mi.eval(x).expect("3x3 matrix"))));
    }
    let e = |x: &QMatrix, i: usize, j: usize| x[i - 1][j - 1].clone();
    out.push((
        "x12x21x33-x12x23x31-x13x21x32+x13x22x31".into(),
        Box::new(move |x: &QMatrix| {
            e(x, 1, 2) * e(x, 2, 1) * e(x, 3, 3) - e(x, 1, 2) * e(x, 2, 3) * e(x, 3, 1)
                - e(x, 1, 3) * e(x, 2, 1) * e(x, 3, 2)
                + e(x, 1, 3) * e(x, 2, 2) * e(x, 3, 1)
        }),
    ));
    out.push((
        "x11x23x32-x12x23x31-x13x21x32+x13x22x31".into(),
        Box::new(move |x: &QMatrix| {
            e(x, 1, 1) * e(x, 2, 3) * e(x, 3, 2) - e(x, 1, 2) * e(x, 2, 3) * e(x, 3, 1)
                - e(x, 1, 3) * e(x, 2, 1) * e(x, 3, 2)
                + e(x, 1, 3) * e(x, 2, 2) * e(x, 3, 1)
        }),
    ));
    out
}

/// Result of exploring the seed of [`sl3_w0w0_word`].
#[derive(Clone, Debug)]
pub struct DoubleCellReport {
    pub seeds: usize,
    pub cluster_variables: usize,
    pub principal: ClassificationResult,
    /// For each cluster variable, the candidate closed form it agrees with
    /// at every sample point, if exactly one does.
    pub identified: Vec<Option<String>>,
}

impl DoubleCellReport {
    /// Every cluster variable matches a distinct candidate.
    pub fn fully_identified(&self) -> bool {
        let names: BTreeSet<&String> = self.identified.iter().flatten().collect();
        self.identified.iter().all(Option::is_some) && names.len() == self.identified.len()
    }
}

/// Explores the exchange graph of [`sl3_w0w0_word`] and identifies its
/// cluster variables with minors and cubics by exact evaluation at
/// `points` random unimodular matrices.
pub fn explore_sl3_double_cell(points: usize, jobs: usize, rng_seed: u64) -> Result<DoubleCellReport> {
    let w = sl3_w0w0_word();
    let seed = w.seed()?;
    let principal = classify_finite_type(&seed.matrix().principal_part(), Bounds::default())?;
    let g = explore_with_jobs(&seed, Bounds::seeds(10_000), jobs)?;
    let vars = cluster_variables(&g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut samples = Vec::with_capacity(points);
    while samples.len() < points {
        let Some(x) = random_unimodular(3, &mut rng) else { continue };
        let f = w.evaluate(&x)?;
        if f.iter().any(Zero::is_zero) {
            continue;
        }
        samples.push((x, f));
    }
    let candidates = sl3_w0w0_candidates();
    let cand_values: Vec<Vec<BigRational>> = candidates
        .iter()
        .map(|(_, func)| samples.iter().map(|(x, _)| func(x)).collect())
        .collect();
    let mut identified = Vec::with_capacity(vars.len());
    for var in &vars {
        let values: Vec<BigRational> = samples.iter().map(|(_, f)| var.eval(f)).collect::<Result<_>>()?;
        let hits: Vec<usize> = (0..candidates.len()).filter(|&c| cand_values[c] == values).collect();
        identified.push(match hits[..] {
            [c] => Some(candidates[c].0.clone()),
            _ => None,
        });
    }
    Ok(DoubleCellReport {
        seeds: g.len(),
        cluster_variables: vars.len(),
        principal,
        identified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[MinorIndex]) -> Vec<String> {
        v.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn sl3_word_data() {
        let w = sl3_w0w0_word();
        assert_eq!(w.u(), &vec![2, 1, 0]);
        assert_eq!(w.v(), &vec![2, 1, 0]);
        assert_eq!(w.ex(), &[3, 4, 5, 6]);
        assert_eq!(w.m(), w.r() + inversions(w.u()) + inversions(w.v()));
        assert_eq!(
            names(&w.minors()),
            [
                "Δ_{1,3}", "Δ_{12,23}", "Δ_{1,2}", "Δ_{12,12}", "Δ_{1,1}", "Δ_{2,1}", "Δ_{23,12}",
                "Δ_{3,1}"
            ]
        );
        let frozen: BTreeSet<MinorIndex> =
            [minor(&[1], &[3]), minor(&[1, 2], &[2, 3]), minor(&[2, 3], &[1, 2]), minor(&[3], &[1])].into();
        assert_eq!(w.frozen_set(), frozen);
        assert_eq!(w.frozen_set(), w.frozen_set_closed_form());
    }

    #[test]
    fn golden_b_matrix() {
        let expected = vec![
            vec![-1, 0, 0, 0],
            vec![1, -1, 0, 0],
            vec![0, 1, -1, 0],
            vec![-1, 0, 1, -1],
            vec![1, -1, 0, 1],
            vec![0, 1, -1, 0],
            vec![0, -1, 0, 1],
            vec![0, 0, 0, -1],
        ];
        assert_eq!(sl3_w0w0_word().b_matrix(), expected);
        assert!(sl3_w0w0_word().exchange_matrix().is_ok());
    }

    #[test]
    fn rank_one_word() {
        let w = ReducedWord::new(1, vec![1, 1, -1]).unwrap();
        assert_eq!((w.m(), w.ex()), (3, &[2usize][..]));
        assert_eq!(w.frozen_indices(), vec![1, 3]);
        assert_eq!(w.frozen_set(), w.frozen_set_closed_form());
        let b = w.exchange_matrix().unwrap();
        assert_eq!(b.m(), 3);
        assert_eq!(b.mutate(1).unwrap().mutate(1).unwrap(), b);
    }

    #[test]
    fn word_errors() {
        assert_eq!(ReducedWord::new(2, vec![1, 2, 1, 1]), Err(Error::NotReduced));
        assert_eq!(ReducedWord::new(2, vec![2, 1, 1]), Err(Error::BadPrefix));
        assert_eq!(ReducedWord::new(2, vec![1, 2, 3]), Err(Error::BadEntry(3)));
        assert_eq!(ReducedWord::new(2, vec![1, 2, 0]), Err(Error::BadEntry(0)));
        assert!(matches!(ReducedWord::parse("1,x"), Err(Error::Parse(_))));
        assert_eq!(ReducedWord::parse("1,2,1,2,1,-1,-2,-1").unwrap(), sl3_w0w0_word());
        assert_eq!(sl3_w0w0_word().gamma_delta(9), Err(Error::IndexOutOfRange(9)));
    }

    #[test]
    fn prefix_minors_are_initial() {
        let w = ReducedWord::parse("1,2,3,-1,-2,-1").unwrap();
        for k in 1..=3 {
            assert_eq!(w.gamma_delta(k).unwrap().rows, (0..k).collect::<Vec<_>>());
        }
    }

    #[test]
    fn minor_values() {
        let id: QMatrix = linalg::from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(minor(&[1], &[3]).eval(&id).unwrap(), q(0));
        assert_eq!(minor(&[1, 2], &[1, 2]).eval(&id).unwrap(), q(1));
        let x = linalg::from_int_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]);
        assert_eq!(minor(&[1, 2], &[2, 3]).eval(&x).unwrap(), q(1));
        assert!(matches!(minor(&[4], &[1]).eval(&x), Err(Error::SizeMismatch(_))));
        assert_eq!(all_minor_indices(3).len(), 19);
    }

    #[test]
    fn tp_criterion() {
        let w = sl3_w0w0_word();
        let id = linalg::from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(!w.tp_test(&id).unwrap());
        let two = linalg::from_int_rows(&[vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(w.tp_test(&two), Err(Error::NotUnimodular));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x = tp_sample(3, &mut rng);
            assert!(linalg::det(&x).is_one(), "{x:?} {}", linalg::det(&x));
            assert!(w.tp_test(&x).unwrap());
            assert!(all_minors_positive(&x).unwrap());
        }
    }

    #[test]
    fn exchange_identities() {
        let report = exchange_identity_check(&sl3_w0w0_word(), 100, 0).unwrap();
        assert_eq!(report.checked, 100);
        assert_eq!(report.checked + report.skipped, report.attempts);
        let other = ReducedWord::new(1, vec![1, 1, -1]).unwrap();
        assert!(matches!(exchange_identity_check(&other, 1, 0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn f3_prime_is_not_the_frozen_minor() {
        // f3' equals Δ_{12,13}; Δ_{12,23} is f2 and differs at a generic point.
        let w = sl3_w0w0_word();
        let x = linalg::from_int_rows(&[vec![1, 1, 1], vec![1, 2, 3], vec![1, 3, 6]]);
        assert!(linalg::det(&x).is_one());
        let f = w.evaluate(&x).unwrap();
        let f3 = exchanged_value(&w.b_matrix(), 0, 3, &f).unwrap();
        assert_eq!(f3, minor(&[1, 2], &[1, 3]).eval(&x).unwrap());
        assert_ne!(f3, minor(&[1, 2], &[2, 3]).eval(&x).unwrap());
    }

    #[test]
    fn d4_double_cell() {
        let report = explore_sl3_double_cell(3, 2, 0).unwrap();
        assert_eq!((report.seeds, report.cluster_variables), (50, 16));
        match &report.principal.verdict {
            crate::graph::Verdict::FiniteType(t) => assert_eq!(t.to_string(), "D4"),
            other => panic!("{other:?}"),
        }
        assert!(report.fully_identified(), "{:?}", report.identified);
    }

    #[test]
    fn skipped_when_denominator_vanishes() {
        let w = sl3_w0w0_word();
        // Δ_{1,2} = 0
        let x = linalg::from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let f = w.evaluate(&x).unwrap();
        assert_eq!(exchanged_value(&w.b_matrix(), 0, 3, &f), None);
    }
}
