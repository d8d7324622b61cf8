//! Finite crystallographic root systems and their cluster combinatorics.
//!
//! Roots are integer vectors in the basis of simple roots. The Cartan matrix
//! follows `alpha_j = sum_i a_ij omega_i`, so `s_i(beta) = beta - (sum_j a_ij
//! beta_j) alpha_i`. Simple roots are numbered as in Bourbaki.
//!
//! Almost positive roots are indexed with the `n` negative simple roots first
//! (`-alpha_i` has index `i`), followed by the positive roots sorted by height
//! and then lexicographically.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exchange::{skew_symmetrizer, ExtendedExchangeMatrix, Seed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// An irreducible Cartan-Killing type such as `A3` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::UnknownType(format!("{family:?}{rank}")));
        }
        Ok(CartanType { family, rank })
    }

    /// Cartan matrix in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            Family::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -3, -1),
        }
        a
    }

    /// Exponents of the Weyl group (classical tables).
    pub fn exponents(&self) -> Vec<u64> {
        let n = self.rank as u64;
        match self.family {
            Family::A => (1..=n).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i - 1).collect(),
            Family::D => {
                let mut e: Vec<u64> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            Family::E => match n {
                6 => vec![1, 4, 5, 7, 8, 11],
                7 => vec![1, 5, 7, 9, 11, 13, 17],
                _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
            },
            Family::F => vec![1, 5, 7, 11],
            Family::G => vec![1, 5],
        }
    }

    /// Coxeter number `h` (classical table).
    pub fn coxeter_number(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => n + 1,
            Family::B | Family::C => 2 * n,
            Family::D => 2 * n - 2,
            Family::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 12,
            Family::G => 6,
        }
    }

    /// `N(Phi) = prod (e_i + h + 1) / (e_i + 1)`, computed exactly.
    pub fn cluster_count(&self) -> Result<BigInt> {
        let h = self.coxeter_number();
        let mut acc = BigRational::one();
        for e in self.exponents() {
            acc *= BigRational::new(BigInt::from(e + h + 1), BigInt::from(e + 1));
        }
        if !acc.is_integer() {
            return Err(Error::NonIntegerResult);
        }
        Ok(acc.to_integer())
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank).map_err(|_| Error::UnknownType(s.to_string()))
    }
}

/// A possibly reducible Cartan-Killing type, e.g. `A1xA2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanKillingType(pub Vec<CartanType>);

impl fmt::Display for CartanKillingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

/// Positive roots generated from the simple roots by simple reflections.
/// Returns `None` if more than `cap` roots appear (not of finite type).
pub fn positive_roots_by_closure(a: &[Vec<i64>], cap: usize) -> Option<Vec<Vec<i64>>> {
    let n = a.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut next = 0;
    while next < roots.len() {
        let beta = roots[next].clone();
        next += 1;
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut r = beta.clone();
            r[i] -= pairing;
            if r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0) && seen.insert(r.clone()) {
                roots.push(r);
                if roots.len() > cap {
                    return None;
                }
            }
        }
    }
    roots.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| y.cmp(x))
    });
    Some(roots)
}

fn components(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && a[i][j] != 0 && comp[j] == usize::MAX {
                    comp[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Recognizes a Cartan matrix of finite type up to relabeling. Returns the
/// components' types (sorted) or `None` if some component is not finite type.
pub fn identify_cartan(a: &[Vec<i64>]) -> Option<CartanKillingType> {
    let n = a.len();
    for i in 0..n {
        if a[i][i] != 2 {
            return None;
        }
        for j in 0..n {
            if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                return None;
            }
        }
    }
    let mut types = Vec::new();
    for members in components(a) {
        let sub: Vec<Vec<i64>> = members
            .iter()
            .map(|&i| members.iter().map(|&j| a[i][j]).collect())
            .collect();
        types.push(identify_irreducible(&sub)?);
    }
    types.sort();
    Some(CartanKillingType(types))
}

fn identify_irreducible(a: &[Vec<i64>]) -> Option<CartanType> {
    let n = a.len();
    let cap = (n * n).max(120) + 1;
    let count = positive_roots_by_closure(a, cap)?.len();
    let mut max_bond = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                max_bond = max_bond.max(a[i][j] * a[j][i]);
            }
        }
    }
    let ty = match max_bond {
        0 | 1 => {
            if count == n * (n + 1) / 2 {
                CartanType::new(Family::A, n).ok()?
            } else if n >= 4 && count == n * (n - 1) {
                CartanType::new(Family::D, n).ok()?
            } else {
                match (n, count) {
                    (6, 36) => CartanType::new(Family::E, 6).ok()?,
                    (7, 63) => CartanType::new(Family::E, 7).ok()?,
                    (8, 120) => CartanType::new(Family::E, 8).ok()?,
                    _ => return None,
                }
            }
        }
        2 => {
            if n == 4 && count == 24 {
                CartanType::new(Family::F, 4).ok()?
            } else if count == n * n {
                let d = symmetrizer_of_cartan(a)?;
                let min = *d.iter().min()?;
                let short = d.iter().filter(|&&x| x == min).count();
                if n == 2 || short == 1 {
                    CartanType::new(Family::B, n).ok()?
                } else if short == n - 1 {
                    CartanType::new(Family::C, n).ok()?
                } else {
                    return None;
                }
            } else {
                return None;
            }
        }
        3 if n == 2 && count == 6 => CartanType::new(Family::G, 2).ok()?,
        _ => return None,
    };
    let expected = ty.rank * ty.coxeter_number() as usize / 2;
    (count == expected).then_some(ty)
}

/// Positive `d` with `d_i a_ij = d_j a_ji`, proportional to squared root
/// lengths.
pub fn symmetrizer_of_cartan(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    // d_i a_ij = d_j a_ji is the skew-symmetrizer condition for the matrix
    // with the diagonal removed and the lower triangle negated.
    let n = a.len();
    let skew: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => -a[i][j],
                    std::cmp::Ordering::Greater => a[i][j],
                    std::cmp::Ordering::Equal => 0,
                })
                .collect()
        })
        .collect();
    skew_symmetrizer(&skew).ok()
}

/// An element of `Phi_{>=-1}` in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlmostPositiveRoot(pub Vec<i64>);

impl AlmostPositiveRoot {
    pub fn neg_simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = -1;
        AlmostPositiveRoot(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `Some(i)` when this is `-alpha_i`.
    pub fn as_neg_simple(&self) -> Option<usize> {
        let mut idx = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                -1 if idx.is_none() => idx = Some(i),
                _ => return None,
            }
        }
        idx
    }
}

impl fmt::Display for AlmostPositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(i) = self.as_neg_simple() {
            return write!(f, "-a{}", i + 1);
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { format!("a{}", i + 1) } else { format!("{c}a{}", i + 1) })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

/// The sign used to select `tau_+` or `tau_-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A finite irreducible root system with its cluster-theoretic data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    almost_positive: Vec<AlmostPositiveRoot>,
    index: HashMap<Vec<i64>, usize>,
    exponents: Vec<u64>,
    h: u64,
    w0_perm: Vec<usize>,
    signs: Vec<i64>,
    tau_plus: Vec<usize>,
    tau_minus: Vec<usize>,
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Result<Self> {
        let cartan = ty.cartan_matrix();
        let n = ty.rank;
        let positive = positive_roots_by_closure(&cartan, n * n.max(16) * 4)
            .ok_or_else(|| Error::UnknownType(ty.to_string()))?;
        let exponents = ty.exponents();
        let h = ty.coxeter_number();
        let half = n as u64 * h;
        assert_eq!(positive.len() as u64 * 2, half, "|Phi+| = nh/2 fails for {ty}");
        assert_eq!(exponents.iter().sum::<u64>() * 2, half, "sum e_i = nh/2 fails for {ty}");

        let mut almost_positive: Vec<AlmostPositiveRoot> =
            (0..n).map(|i| AlmostPositiveRoot::neg_simple(n, i)).collect();
        almost_positive.extend(positive.iter().cloned().map(AlmostPositiveRoot));
        let index = almost_positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i))
            .collect();

        let w0_perm = longest_element_permutation(&cartan);
        let signs = sign_function(&cartan);
        let mut rs = RootSystem {
            ty,
            cartan,
            positive,
            almost_positive,
            index,
            exponents,
            h,
            w0_perm,
            signs,
            tau_plus: Vec::new(),
            tau_minus: Vec::new(),
        };
        rs.tau_plus = rs.tau_table(Sign::Plus);
        rs.tau_minus = rs.tau_table(Sign::Minus);
        Ok(rs)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Self::new(label.parse()?)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn almost_positive_roots(&self) -> &[AlmostPositiveRoot] {
        &self.almost_positive
    }

    pub fn root(&self, idx: usize) -> &AlmostPositiveRoot {
        &self.almost_positive[idx]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> u64 {
        self.h
    }

    /// `w0(alpha_i) = -alpha_{perm[i]}`.
    pub fn longest_element_permutation(&self) -> &[usize] {
        &self.w0_perm
    }

    pub fn w0_is_minus_one(&self) -> bool {
        self.w0_perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// The sign function `epsilon` (values `+1` / `-1`).
    pub fn signs(&self) -> &[i64] {
        &self.signs
    }

    pub fn symmetrizer(&self) -> Vec<i64> {
        symmetrizer_of_cartan(&self.cartan).expect("finite-type Cartan matrix is symmetrizable")
    }

    /// The skew-symmetrizable matrix `B(A)`: `b_ij = epsilon(i) a_ij` off the
    /// diagonal.
    pub fn b_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 0 } else { self.signs[i] * self.cartan[i][j] })
                    .collect()
            })
            .collect()
    }

    /// Coefficient-free initial seed with exchange matrix `B(A)`. `B(A)` is
    /// singular for some types (e.g. `A_n`, `n` odd), so the rank condition
    /// is not imposed here.
    pub fn distinguished_seed(&self) -> Seed {
        let n = self.rank();
        Seed::initial(
            ExtendedExchangeMatrix::validate_skew_only(self.b_matrix(), (0..n).collect())
                .expect("B(A) is skew-symmetrizable"),
        )
    }

    fn reflect(&self, i: usize, beta: &mut [i64]) {
        let pairing: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * beta[j]).sum();
        beta[i] -= pairing;
    }

    fn tau_table(&self, sign: Sign) -> Vec<usize> {
        let eps = sign.value();
        let n = self.rank();
        let chosen: Vec<usize> = (0..n).filter(|&i| self.signs[i] == eps).collect();
        self.almost_positive
            .iter()
            .map(|root| {
                if let Some(i) = root.as_neg_simple() {
                    if self.signs[i] == -eps {
                        return self.index[&root.0];
                    }
                }
                let mut v = root.0.clone();
                for &i in &chosen {
                    self.reflect(i, &mut v);
                }
                let mut w = root.0.clone();
                for &i in chosen.iter().rev() {
                    self.reflect(i, &mut w);
                }
                assert_eq!(v, w, "reflections of one color must commute");
                *self
                    .index
                    .get(&v)
                    .unwrap_or_else(|| panic!("tau maps {root} outside Phi_(>=-1)"))
            })
            .collect()
    }

    /// `tau_+` or `tau_-` applied to the root with index `idx`.
    pub fn tau(&self, sign: Sign, idx: usize) -> usize {
        match sign {
            Sign::Plus => self.tau_plus[idx],
            Sign::Minus => self.tau_minus[idx],
        }
    }

    pub fn tau_root(&self, sign: Sign, root: &AlmostPositiveRoot) -> Option<AlmostPositiveRoot> {
        let idx = self.index_of(&root.0)?;
        Some(self.almost_positive[self.tau(sign, idx)].clone())
    }

    /// Order of `tau_- tau_+` as a permutation of `Phi_{>=-1}`.
    pub fn tau_orbit_order(&self) -> u64 {
        let len = self.almost_positive.len();
        let mut seen = vec![false; len];
        let mut order = 1u64;
        for s in 0..len {
            if seen[s] {
                continue;
            }
            let mut cycle = 0u64;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.tau_minus[self.tau_plus[x]];
                cycle += 1;
            }
            order = order.lcm(&cycle);
        }
        order
    }

    /// The `<tau_-, tau_+>`-orbits of `Phi_{>=-1}`, each sorted.
    pub fn tau_orbits(&self) -> Vec<Vec<usize>> {
        let len = self.almost_positive.len();
        let mut seen = vec![false; len];
        let mut out = Vec::new();
        for s in 0..len {
            if seen[s] {
                continue;
            }
            let mut orbit = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in [self.tau_plus[x], self.tau_minus[x]] {
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                        stack.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Compatibility of two almost positive roots (by index). A root is
    /// compatible with itself.
    ///
    /// Walks the dihedral orbit with alternating `tau_+`, `tau_-` until one
    /// argument becomes a negative simple root `-alpha_i`; the other is then
    /// compatible iff its expansion does not involve `alpha_i`.
    pub fn compatible(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let (mut x, mut y) = (a, b);
        let limit = 2 * self.almost_positive.len() + 2;
        for step in 0..=limit {
            if let Some(i) = self.almost_positive[x].as_neg_simple() {
                return self.almost_positive[y].0[i] <= 0;
            }
            if let Some(i) = self.almost_positive[y].as_neg_simple() {
                return self.almost_positive[x].0[i] <= 0;
            }
            let table = if step % 2 == 0 { &self.tau_plus } else { &self.tau_minus };
            x = table[x];
            y = table[y];
        }
        unreachable!("every tau-orbit meets -Pi")
    }

    pub fn compatible_roots(&self, a: &AlmostPositiveRoot, b: &AlmostPositiveRoot) -> Option<bool> {
        Some(self.compatible(self.index_of(&a.0)?, self.index_of(&b.0)?))
    }

    /// Symmetric compatibility table over all almost positive roots.
    pub fn compatibility_table(&self) -> Vec<Vec<bool>> {
        let len = self.almost_positive.len();
        (0..len)
            .map(|a| (0..len).map(|b| self.compatible(a, b)).collect())
            .collect()
    }

    /// All maximal sets of pairwise compatible roots, as sorted index lists in
    /// sorted order. `jobs > 1` splits the search over the first vertex.
    pub fn enumerate_clusters(&self, jobs: usize) -> Vec<Vec<usize>> {
        let table = self.compatibility_table();
        let len = table.len();
        let adj: Vec<Vec<usize>> = (0..len)
            .map(|a| (0..len).filter(|&b| b != a && table[a][b]).collect())
            .collect();
        let search = |v: usize| {
            let mut out = Vec::new();
            let p: Vec<usize> = adj[v].iter().copied().filter(|&u| u > v).collect();
            let x: Vec<usize> = adj[v].iter().copied().filter(|&u| u < v).collect();
            bron_kerbosch(&adj, &mut vec![v], p, x, &mut out);
            out
        };
        let mut all: Vec<Vec<usize>> = if jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool");
            pool.install(|| (0..len).into_par_iter().flat_map_iter(search).collect())
        } else {
            (0..len).flat_map(search).collect()
        };
        for c in &mut all {
            c.sort_unstable();
        }
        all.sort();
        all
    }

    /// `N(Phi)` from the exponents.
    pub fn count_clusters(&self) -> Result<BigInt> {
        self.ty.cluster_count()
    }

    /// Positive coroots in the basis of simple coroots.
    pub fn positive_coroots(&self) -> Vec<Vec<i64>> {
        let t: Vec<Vec<i64>> = crate::linalg::transpose(&self.cartan);
        positive_roots_by_closure(&t, self.positive.len()).expect("dual system is finite")
    }

    /// Coefficients of the half-sum of positive coroots in the simple coroots.
    pub fn half_sum_of_positive_coroots(&self) -> Vec<BigRational> {
        let n = self.rank();
        let mut sum = vec![0i64; n];
        for r in self.positive_coroots() {
            for (s, c) in sum.iter_mut().zip(r) {
                *s += c;
            }
        }
        sum.into_iter()
            .map(|s| BigRational::new(BigInt::from(s), BigInt::from(2)))
            .collect()
    }

    /// Determinant-free check that `indices` form a Z-basis: the matrix of
    /// root coordinates has determinant +-1.
    pub fn cluster_determinant(&self, cluster: &[usize]) -> BigRational {
        let rows: Vec<Vec<i64>> = cluster.iter().map(|&i| self.almost_positive[i].0.clone()).collect();
        crate::linalg::det(&crate::linalg::from_int_rows(&rows))
    }
}

fn bron_kerbosch(
    adj: &[Vec<usize>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|v| adj[u].binary_search(v).is_ok()).count())
        .unwrap();
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|v| adj[pivot].binary_search(v).is_err())
        .collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np = p.iter().copied().filter(|u| adj[v].binary_search(u).is_ok()).collect();
        let nx = x.iter().copied().filter(|u| adj[v].binary_search(u).is_ok()).collect();
        r.push(v);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// Greedy descent from `rho` to `-rho` gives a reduced word for `w0`; the
/// word is then applied to each simple root.
fn longest_element_permutation(a: &[Vec<i64>]) -> Vec<usize> {
    let n = a.len();
    // Weights in the fundamental-weight basis: alpha_j has coordinates a_{.j}.
    let mut weight = vec![1i64; n];
    let mut word = Vec::new();
    while let Some(i) = (0..n).find(|&i| weight[i] > 0) {
        let c = weight[i];
        for (k, w) in weight.iter_mut().enumerate() {
            *w -= c * a[k][i];
        }
        word.push(i);
    }
    (0..n)
        .map(|j| {
            let mut beta = vec![0i64; n];
            beta[j] = 1;
            for &i in &word {
                let pairing: i64 = (0..n).map(|k| a[i][k] * beta[k]).sum();
                beta[i] -= pairing;
            }
            let target = beta.iter().position(|&c| c == -1).expect("w0 maps Pi to -Pi");
            assert!(
                beta.iter().enumerate().all(|(k, &c)| c == if k == target { -1 } else { 0 }),
                "w0 maps Pi to -Pi"
            );
            target
        })
        .collect()
}

/// Two-coloring of the Dynkin diagram with `+1` on the lowest index of each
/// component.
fn sign_function(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut signs = vec![0i64; n];
    for s in 0..n {
        if signs[s] != 0 {
            continue;
        }
        signs[s] = 1;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && a[i][j] != 0 {
                    if signs[j] == 0 {
                        signs[j] = -signs[i];
                        stack.push(j);
                    } else {
                        assert_eq!(signs[j], -signs[i], "Dynkin diagram is not bipartite");
                    }
                }
            }
        }
    }
    signs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    fn idx(r: &RootSystem, coords: &[i64]) -> usize {
        r.index_of(coords).unwrap()
    }

    #[test]
    fn a2_basics() {
        let a2 = rs("A2");
        assert_eq!(a2.positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(a2.coxeter_number(), 3);
        assert_eq!(a2.exponents(), &[1, 2]);
        assert_eq!(a2.b_matrix(), vec![vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn snake_signs_for_a5() {
        assert_eq!(rs("A5").signs(), &[1, -1, 1, -1, 1]);
    }

    #[test]
    fn g2_root_count_and_bond() {
        let g2 = rs("G2");
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.coxeter_number(), 6);
        assert_eq!(g2.exponents(), &[1, 5]);
        let b = g2.b_matrix();
        assert_eq!((b[0][1] * b[1][0]).abs(), 3);
    }

    #[test]
    fn unknown_types() {
        for bad in ["D3", "E9", "F5", "G3", "X2", "A0", "B1", ""] {
            assert!(matches!(RootSystem::from_label(bad), Err(Error::UnknownType(_))), "{bad}");
        }
    }

    #[test]
    fn identify_all_types_under_relabeling() {
        for label in ["A1", "A4", "B2", "B3", "C3", "B4", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let ty: CartanType = label.parse().unwrap();
            let a = ty.cartan_matrix();
            let n = a.len();
            // reverse the labels
            let p: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| a[n - 1 - i][n - 1 - j]).collect())
                .collect();
            assert_eq!(identify_cartan(&p), Some(CartanKillingType(vec![ty])), "{label}");
        }
        // affine A2 (triangle) and affine C2 are rejected
        let tri = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert_eq!(identify_cartan(&tri), None);
        let c2aff = vec![vec![2, -1, 0], vec![-2, 2, -2], vec![0, -1, 2]];
        assert_eq!(identify_cartan(&c2aff), None);
        let prod = vec![vec![2, 0, 0], vec![0, 2, -1], vec![0, -1, 2]];
        assert_eq!(identify_cartan(&prod).unwrap().to_string(), "A1xA2");
    }

    #[test]
    fn tau_on_a2_matches_the_pentagon_chain() {
        let a2 = rs("A2");
        let t = |s, c: &[i64]| a2.root(a2.tau(s, idx(&a2, c))).0.clone();
        assert_eq!(t(Sign::Plus, &[-1, 0]), vec![1, 0]);
        assert_eq!(t(Sign::Minus, &[1, 0]), vec![1, 1]);
        assert_eq!(t(Sign::Plus, &[1, 1]), vec![0, 1]);
        assert_eq!(t(Sign::Minus, &[0, 1]), vec![0, -1]);
        assert_eq!(t(Sign::Minus, &[-1, 0]), vec![-1, 0]);
        assert_eq!(t(Sign::Plus, &[0, -1]), vec![0, -1]);
    }

    #[test]
    fn tau_orders() {
        assert_eq!(rs("A2").tau_orbit_order(), 5);
        assert_eq!(rs("B2").tau_orbit_order(), 3);
        assert_eq!(rs("A3").tau_orbit_order(), 6);
    }

    #[test]
    fn w0_action() {
        assert!(!rs("A3").w0_is_minus_one());
        assert_eq!(rs("A3").longest_element_permutation(), &[2, 1, 0]);
        assert!(rs("B3").w0_is_minus_one());
        assert!(rs("D4").w0_is_minus_one());
        assert!(!rs("D5").w0_is_minus_one());
        assert!(!rs("E6").w0_is_minus_one());
        assert!(rs("E7").w0_is_minus_one());
    }

    #[test]
    fn a2_compatibility() {
        let a2 = rs("A2");
        let c = |x: &[i64], y: &[i64]| a2.compatible(idx(&a2, x), idx(&a2, y));
        assert!(c(&[-1, 0], &[0, 1]));
        assert!(c(&[1, 0], &[1, 1]));
        assert!(!c(&[1, 0], &[0, 1]));
        assert!(!c(&[-1, 0], &[1, 1]));
        assert!(c(&[-1, 0], &[0, -1]));
    }

    #[test]
    fn a2_clusters_are_the_five_cones() {
        let a2 = rs("A2");
        let mut got: Vec<Vec<Vec<i64>>> = a2
            .enumerate_clusters(1)
            .into_iter()
            .map(|c| {
                let mut v: Vec<Vec<i64>> = c.iter().map(|&i| a2.root(i).0.clone()).collect();
                v.sort();
                v
            })
            .collect();
        got.sort();
        let mut want = vec![
            vec![vec![-1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 1]],
            vec![vec![1, 0], vec![1, 1]],
            vec![vec![0, -1], vec![1, 0]],
            vec![vec![-1, 0], vec![0, -1]],
        ];
        for w in &mut want {
            w.sort();
        }
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn counts() {
        let n = |l: &str| l.parse::<CartanType>().unwrap().cluster_count().unwrap();
        assert_eq!(n("F4"), 105.into());
        assert_eq!(n("E6"), 833.into());
        assert_eq!(n("B3"), 20.into());
        assert_eq!(n("A3"), 14.into());
    }

    #[test]
    fn half_sum_of_coroots() {
        let half = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(rs("A3").half_sum_of_positive_coroots(), vec![half(3, 2), half(2, 1), half(3, 2)]);
        assert_eq!(rs("A2").half_sum_of_positive_coroots(), vec![half(1, 1), half(1, 1)]);
    }

    #[test]
    fn parallel_enumeration_is_deterministic() {
        let d4 = rs("D4");
        assert_eq!(d4.enumerate_clusters(1), d4.enumerate_clusters(4));
    }
}
