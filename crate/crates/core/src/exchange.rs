//! Extended exchange matrices, seeds, and mutation.
//!
//! Row indices run over `0..m`; the exchangeable rows `ex` are stored sorted,
//! and column `j` of the matrix belongs to row `ex[j]`. Public APIs take
//! mutation directions as 0-based row indices; the JSON format is 1-based.

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg;

/// An `m x n` integer matrix whose principal part is skew-symmetrizable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedExchangeMatrix {
    entries: Vec<Vec<i64>>,
    ex: Vec<usize>,
    symmetrizer: Vec<i64>,
}

impl ExtendedExchangeMatrix {
    /// Validates `entries` (rows `0..m`, one column per element of `ex`):
    /// skew-symmetrizability of the principal part and full rank `n`.
    pub fn validate(entries: Vec<Vec<i64>>, ex: Vec<usize>) -> Result<Self> {
        let m = Self::validate_skew_only(entries, ex)?;
        let rank = linalg::rank_int(&m.entries);
        if rank < m.n() {
            return Err(Error::RankDeficient { rank, n: m.n() });
        }
        Ok(m)
    }

    /// Like [`validate`](Self::validate) but skips the rank condition. Used
    /// for degenerate seeds such as the `1 x 1` zero matrix.
    pub fn validate_skew_only(entries: Vec<Vec<i64>>, ex: Vec<usize>) -> Result<Self> {
        let m = entries.len();
        let n = ex.len();
        if n == 0 {
            return Err(Error::MalformedSeed("no exchangeable indices".into()));
        }
        if let Some(row) = entries.iter().position(|r| r.len() != n) {
            return Err(Error::MalformedSeed(format!(
                "row {} has {} entries, expected {n}",
                row + 1,
                entries[row].len()
            )));
        }
        if ex.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedSeed("ex must be strictly increasing".into()));
        }
        if ex.last().is_some_and(|&k| k >= m) {
            return Err(Error::MalformedSeed("ex index exceeds row count".into()));
        }
        let principal: Vec<Vec<i64>> = ex.iter().map(|&i| entries[i].clone()).collect();
        let symmetrizer = skew_symmetrizer(&principal)?;
        Ok(ExtendedExchangeMatrix {
            entries,
            ex,
            symmetrizer,
        })
    }

    /// Square matrix with every index exchangeable.
    pub fn from_principal(b: Vec<Vec<i64>>) -> Result<Self> {
        let n = b.len();
        Self::validate(b, (0..n).collect())
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.ex.len()
    }

    pub fn ex(&self) -> &[usize] {
        &self.ex
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Entry `b_{i,k}` for row `i` and exchangeable row index `k`.
    pub fn get(&self, i: usize, k: usize) -> Option<i64> {
        let col = self.column_of(k)?;
        Some(self.entries[i][col])
    }

    pub fn is_exchangeable(&self, k: usize) -> bool {
        self.column_of(k).is_some()
    }

    pub fn column_of(&self, k: usize) -> Option<usize> {
        self.ex.binary_search(&k).ok()
    }

    pub fn principal_part(&self) -> Vec<Vec<i64>> {
        self.ex.iter().map(|&i| self.entries[i].clone()).collect()
    }

    /// Column of `k`, indexed by row.
    pub fn column(&self, k: usize) -> Result<Vec<i64>> {
        let col = self.column_of(k).ok_or(Error::NotExchangeable(k))?;
        Ok(self.entries.iter().map(|r| r[col]).collect())
    }

    /// Matrix mutation in direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let kc = self.column_of(k).ok_or(Error::NotExchangeable(k))?;
        let mut out = self.entries.clone();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                if i == k || j == kc {
                    *entry = -self.entries[i][j];
                } else {
                    let b_ik = self.entries[i][kc];
                    let b_kj = self.entries[k][j];
                    // |b_ik| b_kj + b_ik |b_kj| is 0 or +-2 b_ik b_kj.
                    let twice = b_ik.abs() * b_kj + b_ik * b_kj.abs();
                    debug_assert!(twice == 0 || twice.abs() == 2 * (b_ik * b_kj).abs());
                    *entry = self.entries[i][j] + twice / 2;
                }
            }
        }
        Ok(ExtendedExchangeMatrix {
            entries: out,
            ex: self.ex.clone(),
            symmetrizer: self.symmetrizer.clone(),
        })
    }

    /// Relabels exchangeable positions: position `ex[perm[j]]` moves to
    /// `ex[j]`, permuting rows and columns together.
    pub fn permute_exchangeable(&self, perm: &[usize]) -> Self {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut entries = self.entries.clone();
        for (j, &src) in perm.iter().enumerate() {
            let (dst_row, src_row) = (self.ex[j], self.ex[src]);
            for c in 0..n {
                entries[dst_row][c] = self.entries[src_row][perm[c]];
            }
        }
        for (i, row) in entries.iter_mut().enumerate() {
            if self.ex.binary_search(&i).is_err() {
                *row = perm.iter().map(|&c| self.entries[i][c]).collect();
            }
        }
        ExtendedExchangeMatrix {
            entries,
            ex: self.ex.clone(),
            symmetrizer: perm.iter().map(|&c| self.symmetrizer[c]).collect(),
        }
    }

    /// Re-checks the seed conditions (used after long mutation sequences).
    pub fn check_invariants(&self) -> Result<()> {
        let principal = self.principal_part();
        for (a, row) in principal.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if self.symmetrizer[a] * v != -self.symmetrizer[b] * principal[b][a] {
                    return Err(Error::NotSkewSymmetrizable(format!(
                        "d_{} b_{},{} != -d_{} b_{},{}",
                        a + 1,
                        a + 1,
                        b + 1,
                        b + 1,
                        b + 1,
                        a + 1
                    )));
                }
            }
        }
        let rank = linalg::rank_int(&self.entries);
        if rank < self.n() {
            return Err(Error::RankDeficient { rank, n: self.n() });
        }
        Ok(())
    }
}

/// Least positive integer skew-symmetrizer of a square matrix.
///
/// Propagates ratios `d_k / d_i = |b_ik| / |b_ki|` along the nonzero pattern,
/// then scales each connected component to coprime positive integers.
pub fn skew_symmetrizer(b: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = b.len();
    if b.iter().any(|r| r.len() != n) {
        return Err(Error::MalformedSeed("principal part is not square".into()));
    }
    for i in 0..n {
        if b[i][i] != 0 {
            return Err(Error::NotSkewSymmetrizable(format!(
                "diagonal entry b_{},{} is nonzero",
                i + 1,
                i + 1
            )));
        }
        for k in 0..n {
            let (x, y) = (b[i][k], b[k][i]);
            if (x == 0) != (y == 0) || (x != 0 && x.signum() == y.signum()) {
                return Err(Error::NotSkewSymmetrizable(format!(
                    "b_{},{} = {x} and b_{},{} = {y} violate the sign condition",
                    i + 1,
                    k + 1,
                    k + 1,
                    i + 1
                )));
            }
        }
    }

    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        d[start] = Some(Ratio::from_integer(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for k in 0..n {
                if b[i][k] == 0 {
                    continue;
                }
                let want = d[i].unwrap() * Ratio::new(b[i][k].abs(), b[k][i].abs());
                match d[k] {
                    None => {
                        d[k] = Some(want);
                        component.push(k);
                        stack.push(k);
                    }
                    Some(have) if have != want => {
                        return Err(Error::NotSkewSymmetrizable(format!(
                            "inconsistent symmetrizer ratios around index {}",
                            k + 1
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let lcm = component
            .iter()
            .fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        let gcd = component
            .iter()
            .fold(0i64, |acc, &i| acc.gcd(&(d[i].unwrap() * lcm).to_integer()));
        for &i in &component {
            d[i] = Some(d[i].unwrap() * lcm / gcd);
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

/// A seed: `m` Laurent polynomials in the initial variables plus a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Seed {
    variables: Vec<LaurentPoly>,
    matrix: ExtendedExchangeMatrix,
}

impl Seed {
    /// Initial seed whose variables are the coordinate variables `x1..xm`.
    pub fn initial(matrix: ExtendedExchangeMatrix) -> Self {
        let m = matrix.m();
        Seed {
            variables: (0..m).map(|i| LaurentPoly::var(m, i)).collect(),
            matrix,
        }
    }

    pub fn new(variables: Vec<LaurentPoly>, matrix: ExtendedExchangeMatrix) -> Result<Self> {
        if variables.len() != matrix.m() {
            return Err(Error::MalformedSeed(format!(
                "{} variables for a matrix with {} rows",
                variables.len(),
                matrix.m()
            )));
        }
        if let Some(v) = variables.iter().find(|v| v.nvars() != matrix.m()) {
            return Err(Error::VarCountMismatch(matrix.m(), v.nvars()));
        }
        Ok(Seed { variables, matrix })
    }

    /// The rank-2 seed with `B = [[0, b], [-c, 0]]`.
    pub fn rank2(b: i64, c: i64) -> Result<Self> {
        Ok(Self::initial(ExtendedExchangeMatrix::from_principal(vec![
            vec![0, b],
            vec![-c, 0],
        ])?))
    }

    pub fn variables(&self) -> &[LaurentPoly] {
        &self.variables
    }

    pub fn matrix(&self) -> &ExtendedExchangeMatrix {
        &self.matrix
    }

    pub fn m(&self) -> usize {
        self.matrix.m()
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    /// The exchangeable variables, in `ex` order.
    pub fn cluster(&self) -> Vec<&LaurentPoly> {
        self.matrix.ex().iter().map(|&i| &self.variables[i]).collect()
    }

    /// `(prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}) / x_k`.
    pub fn exchange_partner(&self, k: usize) -> Result<LaurentPoly> {
        Ok(self.exchange_partner_within(k, usize::MAX)?.expect("unbounded"))
    }

    /// Like [`exchange_partner`](Self::exchange_partner), but gives up with
    /// `Ok(None)` when a product or the final division would take more than
    /// `max_work` term operations (the division is estimated by the sizes of
    /// numerator and divisor).
    pub fn exchange_partner_within(&self, k: usize, max_work: usize) -> Result<Option<LaurentPoly>> {
        let column = self.matrix.column(k)?;
        let nvars = self.variables[k].nvars();
        let mut plus = LaurentPoly::one(nvars);
        let mut minus = LaurentPoly::one(nvars);
        for (x, &b) in self.variables.iter().zip(&column) {
            let side = if b > 0 { &mut plus } else { &mut minus };
            if b != 0 {
                let Some(p) = x.pow_within(b.unsigned_abs() as u32, max_work) else {
                    return Ok(None);
                };
                let Some(prod) = side.mul_within(&p, max_work) else {
                    return Ok(None);
                };
                *side = prod;
            }
        }
        let num = &plus + &minus;
        if num.num_terms().saturating_mul(self.variables[k].num_terms()) > max_work {
            return Ok(None);
        }
        num.exact_div(&self.variables[k]).map(Some)
    }

    /// Seed mutation with the work bound of
    /// [`exchange_partner_within`](Self::exchange_partner_within).
    pub fn mutate_within(&self, k: usize, max_work: usize) -> Result<Option<Seed>> {
        let Some(partner) = self.exchange_partner_within(k, max_work)? else {
            return Ok(None);
        };
        let mut variables = self.variables.clone();
        variables[k] = partner;
        Ok(Some(Seed {
            variables,
            matrix: self.matrix.mutate(k)?,
        }))
    }

    /// Seed mutation in direction `k`.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        Ok(self.mutate_within(k, usize::MAX)?.expect("unbounded"))
    }

    /// Mutates along `dirs` in order.
    pub fn mutate_path(&self, dirs: &[usize]) -> Result<Seed> {
        dirs.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Relabels exchangeable positions (see
    /// [`ExtendedExchangeMatrix::permute_exchangeable`]).
    pub fn permute_exchangeable(&self, perm: &[usize]) -> Seed {
        let ex = self.matrix.ex();
        let mut variables = self.variables.clone();
        for (j, &src) in perm.iter().enumerate() {
            variables[ex[j]] = self.variables[ex[src]].clone();
        }
        Seed {
            variables,
            matrix: self.matrix.permute_exchangeable(perm),
        }
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson {
            m: self.m(),
            n: self.n(),
            ex: self.matrix.ex().iter().map(|&k| k + 1).collect(),
            matrix: self.matrix.entries().to_vec(),
            variables: self.variables.iter().map(|v| v.to_string()).collect(),
        }
    }

    pub fn from_json(json: &SeedJson) -> Result<Seed> {
        if json.matrix.len() != json.m || json.ex.len() != json.n {
            return Err(Error::MalformedSeed(
                "m/n do not match the matrix and ex".into(),
            ));
        }
        if json.ex.contains(&0) {
            return Err(Error::MalformedSeed("ex indices are 1-based".into()));
        }
        let ex = json.ex.iter().map(|&k| k - 1).collect();
        let matrix = ExtendedExchangeMatrix::validate(json.matrix.clone(), ex)?;
        if json.variables.is_empty() {
            return Ok(Seed::initial(matrix));
        }
        let variables = json
            .variables
            .iter()
            .map(|s| LaurentPoly::parse(s, json.m))
            .collect::<Result<Vec<_>>>()?;
        Seed::new(variables, matrix)
    }
}

/// JSON seed format shared by the CLI and golden files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub m: usize,
    pub n: usize,
    pub ex: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
    #[serde(default)]
    pub variables: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn validate_examples() {
        let m = ExtendedExchangeMatrix::from_principal(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        assert_eq!(m.symmetrizer(), &[1, 1]);
        let m = ExtendedExchangeMatrix::from_principal(vec![vec![0, 2], vec![-1, 0]]).unwrap();
        assert_eq!(m.symmetrizer(), &[1, 2]);
        assert!(matches!(
            ExtendedExchangeMatrix::from_principal(vec![vec![0, 1], vec![1, 0]]),
            Err(Error::NotSkewSymmetrizable(_))
        ));
        assert!(matches!(
            ExtendedExchangeMatrix::from_principal(vec![vec![0]]),
            Err(Error::RankDeficient { rank: 0, n: 1 })
        ));
        assert!(ExtendedExchangeMatrix::validate_skew_only(vec![vec![0]], vec![0]).is_ok());
    }

    #[test]
    fn symmetrizer_is_minimal_per_component() {
        // B2 block plus an isolated vertex, G2-like ratio 3.
        let b = vec![
            vec![0, 3, 0],
            vec![-1, 0, 0],
            vec![0, 0, 0],
        ];
        assert_eq!(skew_symmetrizer(&b).unwrap(), vec![1, 3, 1]);
        let cyc = vec![vec![0, 2, 0], vec![-1, 0, 1], vec![0, -1, 0]];
        assert_eq!(skew_symmetrizer(&cyc).unwrap(), vec![1, 2, 2]);
        let bad = vec![vec![0, 2, -1], vec![-1, 0, 1], vec![1, -1, 0]];
        assert!(skew_symmetrizer(&bad).is_err());
    }

    #[test]
    fn mutation_of_rank_two() {
        let m = ExtendedExchangeMatrix::from_principal(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let mu = m.mutate(0).unwrap();
        assert_eq!(mu.entries(), &[vec![0, -1], vec![1, 0]]);
        assert_eq!(mu.mutate(0).unwrap(), m);
        assert_eq!(m.mutate(2), Err(Error::NotExchangeable(2)));
    }

    #[test]
    fn frozen_row_mutation() {
        // 3x2, frozen third row.
        let m = ExtendedExchangeMatrix::validate(
            vec![vec![0, 1], vec![-1, 0], vec![1, -1]],
            vec![0, 1],
        )
        .unwrap();
        let mu = m.mutate(0).unwrap();
        // b'_{3,2} = -1 + (|1|*1 + 1*|1|)/2 = 0
        assert_eq!(mu.entries(), &[vec![0, -1], vec![1, 0], vec![-1, 0]]);
    }

    #[test]
    fn exchange_partners_rank_two() {
        let s = Seed::rank2(1, 1).unwrap();
        assert_eq!(s.exchange_partner(0).unwrap(), lp("x1^-1*x2 + x1^-1", 2));
        // b = 2, c = 3: column 1 is (0, -3), column 2 is (2, 0).
        let s = Seed::rank2(2, 3).unwrap();
        assert_eq!(s.exchange_partner(0).unwrap(), lp("x1^-1*x2^3 + x1^-1", 2));
        assert_eq!(s.exchange_partner(1).unwrap(), lp("x1^2*x2^-1 + x2^-1", 2));
    }

    #[test]
    fn empty_column_gives_two_over_x() {
        let m = ExtendedExchangeMatrix::validate_skew_only(vec![vec![0]], vec![0]).unwrap();
        let s = Seed::initial(m);
        assert_eq!(s.exchange_partner(0).unwrap(), lp("2*x1^-1", 1));
    }

    #[test]
    fn seed_mutation_is_involutive_and_pentagonal() {
        let s = Seed::rank2(1, 1).unwrap();
        assert_eq!(s.mutate_path(&[0, 0]).unwrap(), s);
        let t = s.mutate_path(&[0, 1, 0, 1, 0]).unwrap();
        // Cluster {y2, y1}: same variables with positions swapped.
        assert_eq!(t.variables()[0], lp("x2", 2));
        assert_eq!(t.variables()[1], lp("x1", 2));
        assert_eq!(t.permute_exchangeable(&[1, 0]), s);
    }

    #[test]
    fn permutation_matches_relabeling() {
        let m = ExtendedExchangeMatrix::validate(
            vec![vec![0, 2, 0], vec![-1, 0, 1], vec![0, -1, 0], vec![1, 0, 1]],
            vec![0, 1, 2],
        )
        .unwrap();
        let p = m.permute_exchangeable(&[2, 0, 1]);
        // entry (j, c) equals the old entry (perm[j], perm[c]).
        assert_eq!(p.entries()[0][1], m.entries()[2][0]);
        assert_eq!(p.entries()[1][0], m.entries()[0][2]);
        assert_eq!(p.entries()[3], vec![1, 1, 0]);
        p.check_invariants().unwrap();
        // Mutation commutes with relabeling.
        assert_eq!(
            p.mutate(0).unwrap(),
            m.mutate(2).unwrap().permute_exchangeable(&[2, 0, 1])
        );
    }

    #[test]
    fn json_round_trip() {
        let s = Seed::rank2(1, 2).unwrap().mutate_path(&[0, 1]).unwrap();
        let json = serde_json::to_string(&s.to_json()).unwrap();
        let back: SeedJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Seed::from_json(&back).unwrap(), s);
        let bare: SeedJson =
            serde_json::from_str(r#"{"m":2,"n":2,"ex":[1,2],"matrix":[[0,1],[-1,0]]}"#).unwrap();
        assert_eq!(Seed::from_json(&bare).unwrap(), Seed::rank2(1, 1).unwrap());
    }
}
