//! Triangulations of the `(n+3)`-gon, flips, their exchange matrices, the
//! snake dictionary for type `A_n`, and Plücker coordinates.
//!
//! Vertices are numbered `1..=n+3` clockwise. Chords are labeled `0..2n+3`:
//! the diagonals first (in the triangulation's order), then the sides
//! `[1,2], [2,3], ..., [n+2,n+3]`, and last `[1,n+3]`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exchange::ExtendedExchangeMatrix;
use crate::roots::{AlmostPositiveRoot, Family, RootSystem};

/// A chord `[i, j]` with `i < j`.
pub type Chord = (usize, usize);

fn norm(a: usize, b: usize) -> Chord {
    (a.min(b), a.max(b))
}

/// Whether two chords cross in the interior of the polygon.
pub fn crosses(x: Chord, y: Chord) -> bool {
    let (a, b) = norm(x.0, x.1);
    let (c, d) = norm(y.0, y.1);
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |v: usize| a < v && v < b;
    inside(c) != inside(d)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Chord>,
}

impl Triangulation {
    /// Validates `n` pairwise non-crossing diagonals of the `(n+3)`-gon.
    pub fn new(n: usize, diagonals: Vec<Chord>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTriangulation("rank must be at least 1".into()));
        }
        if diagonals.len() != n {
            return Err(Error::InvalidTriangulation(format!(
                "expected {n} diagonals, got {}",
                diagonals.len()
            )));
        }
        let v = n + 3;
        let diagonals: Vec<Chord> = diagonals.into_iter().map(|(a, b)| norm(a, b)).collect();
        for &(a, b) in &diagonals {
            if a < 1 || b > v || b - a < 2 || (a == 1 && b == v) {
                return Err(Error::InvalidTriangulation(format!("[{a},{b}] is not a diagonal")));
            }
        }
        for (i, &x) in diagonals.iter().enumerate() {
            for &y in &diagonals[i + 1..] {
                if x == y {
                    return Err(Error::InvalidTriangulation(format!("[{},{}] repeated", x.0, x.1)));
                }
                if crosses(x, y) {
                    return Err(Error::InvalidTriangulation(format!(
                        "[{},{}] crosses [{},{}]",
                        x.0, x.1, y.0, y.1
                    )));
                }
            }
        }
        Ok(Triangulation { n, diagonals })
    }

    /// The fan of diagonals from vertex 1.
    pub fn fan(n: usize) -> Result<Self> {
        Self::new(n, (3..n + 3).map(|j| (1, j)).collect())
    }

    /// The snake: a zig-zag path `n+3, 2, n+2, 3, ...` whose consecutive
    /// vertices span the diagonals.
    pub fn snake(n: usize) -> Result<Self> {
        let path: Vec<usize> = (0..=n)
            .map(|t| if t % 2 == 0 { n + 3 - t / 2 } else { 2 + t / 2 })
            .collect();
        Self::new(n, path.windows(2).map(|w| norm(w[0], w[1])).collect())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n + 3
    }

    pub fn diagonals(&self) -> &[Chord] {
        &self.diagonals
    }

    /// All `2n+3` chords in label order.
    pub fn chords(&self) -> Vec<Chord> {
        let v = self.n + 3;
        let mut out = self.diagonals.clone();
        out.extend((1..v).map(|i| (i, i + 1)));
        out.push((1, v));
        out
    }

    pub fn label_of(&self, c: Chord) -> Option<usize> {
        let c = norm(c.0, c.1);
        self.chords().iter().position(|&x| x == c)
    }

    /// The `n+1` triangles as sorted vertex triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let chords: BTreeSet<Chord> = self.chords().into_iter().collect();
        let v = self.n + 3;
        let mut out = Vec::new();
        for a in 1..=v {
            for b in a + 1..=v {
                if !chords.contains(&(a, b)) {
                    continue;
                }
                for c in b + 1..=v {
                    if chords.contains(&(b, c)) && chords.contains(&(a, c)) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Replaces diagonal `k` by the other diagonal of its quadrilateral.
    pub fn flip(&self, k: usize) -> Result<Self> {
        let (a, c) = *self.diagonals.get(k).ok_or(Error::NotADiagonal(k))?;
        let apex: Vec<usize> = self
            .triangles()
            .into_iter()
            .filter(|t| t.contains(&a) && t.contains(&c))
            .map(|t| t.into_iter().find(|&x| x != a && x != c).unwrap())
            .collect();
        assert_eq!(apex.len(), 2, "a diagonal borders two triangles");
        let mut diagonals = self.diagonals.clone();
        diagonals[k] = norm(apex[0], apex[1]);
        Ok(Triangulation { n: self.n, diagonals })
    }

    /// Diagonal set, forgetting the labeling.
    pub fn diagonal_set(&self) -> BTreeSet<Chord> {
        self.diagonals.iter().copied().collect()
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for (i, (a, b)) in self.diagonals.iter().enumerate() {
            write!(f, "; d{}=[{a},{b}]", i + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Triangulation {
    type Err = Error;

    /// Parses `n; d1=[i,j]; d2=[k,l]; ...`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidTriangulation(format!("{msg}: `{s}`"));
        let mut parts = s.split(';').map(str::trim).filter(|p| !p.is_empty());
        let n: usize = parts
            .next()
            .ok_or_else(|| bad("empty"))?
            .parse()
            .map_err(|_| bad("bad rank"))?;
        let mut diagonals = Vec::new();
        for (idx, part) in parts.enumerate() {
            let (name, chord) = part.split_once('=').ok_or_else(|| bad("expected dK=[i,j]"))?;
            if name.trim() != format!("d{}", idx + 1) {
                return Err(bad("diagonals must be named d1, d2, ... in order"));
            }
            let inner = chord
                .trim()
                .strip_prefix('[')
                .and_then(|c| c.strip_suffix(']'))
                .ok_or_else(|| bad("expected [i,j]"))?;
            let (i, j) = inner.split_once(',').ok_or_else(|| bad("expected [i,j]"))?;
            let i: usize = i.trim().parse().map_err(|_| bad("bad vertex"))?;
            let j: usize = j.trim().parse().map_err(|_| bad("bad vertex"))?;
            diagonals.push((i, j));
        }
        Triangulation::new(n, diagonals)
    }
}

/// The `(2n+3) x n` matrix of a triangulation. Within each triangle with
/// vertices `u < v < w`, the sides `[u,v], [v,w], [u,w]` are taken in this
/// cyclic order and each one gets `+1` against the next (`-1` the other
/// way); only columns of diagonals are kept.
pub fn b_from_triangulation(t: &Triangulation) -> Result<ExtendedExchangeMatrix> {
    let n = t.rank();
    let m = 2 * n + 3;
    let labels: HashMap<Chord, usize> = t.chords().into_iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut b = vec![vec![0i64; n]; m];
    for [u, v, w] in t.triangles() {
        let sides = [labels[&(u, v)], labels[&(v, w)], labels[&(u, w)]];
        for s in 0..3 {
            let (x, y) = (sides[s], sides[(s + 1) % 3]);
            if y < n {
                b[x][y] += 1;
            }
            if x < n {
                b[y][x] -= 1;
            }
        }
    }
    ExtendedExchangeMatrix::validate(b, (0..n).collect())
}

/// Whether flipping diagonal `k` agrees with mutating the matrix at `k`.
pub fn flip_mutation_commutes(t: &Triangulation, k: usize) -> Result<bool> {
    let flipped = b_from_triangulation(&t.flip(k)?)?;
    let mutated = b_from_triangulation(t)?.mutate(k)?;
    Ok(flipped == mutated)
}

/// The flip graph on triangulations of the `(n+3)`-gon (labels forgotten),
/// discovered by BFS from the fan.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub triangulations: Vec<Triangulation>,
    pub edges: Vec<(usize, usize)>,
}

impl FlipGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph flips {\n");
        for (i, t) in self.triangulations.iter().enumerate() {
            let label: Vec<String> = t.diagonals().iter().map(|(a, b)| format!("[{a},{b}]")).collect();
            let _ = writeln!(out, "  {i} [label=\"{}\"];", label.join(" "));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn flip_graph(n: usize) -> Result<FlipGraph> {
    let start = Triangulation::fan(n)?;
    let mut index: HashMap<BTreeSet<Chord>, usize> = HashMap::new();
    index.insert(start.diagonal_set(), 0);
    let mut triangulations = vec![start];
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for k in 0..n {
            let f = triangulations[v].flip(k)?;
            let key = f.diagonal_set();
            let w = match index.get(&key) {
                Some(&w) => w,
                None => {
                    let w = triangulations.len();
                    index.insert(key, w);
                    triangulations.push(f);
                    queue.push_back(w);
                    w
                }
            };
            edges.insert(norm(v, w));
        }
    }
    Ok(FlipGraph {
        triangulations,
        edges: edges.into_iter().collect(),
    })
}

/// All diagonals of the `(n+3)`-gon.
pub fn all_diagonals(n: usize) -> Vec<Chord> {
    let v = n + 3;
    let mut out = Vec::new();
    for a in 1..=v {
        for b in a + 2..=v {
            if !(a == 1 && b == v) {
                out.push((a, b));
            }
        }
    }
    out
}

/// The bijection between almost positive roots of `A_n` and diagonals:
/// `-alpha_i` goes to the `i`-th snake diagonal, `alpha_i + ... + alpha_j`
/// to the diagonal crossing exactly snake diagonals `i..=j`. Entries follow
/// the root system's indexing of `Phi_{>=-1}`.
pub fn snake_dictionary(rs: &RootSystem) -> Result<Vec<(AlmostPositiveRoot, Chord)>> {
    let ty = rs.cartan_type();
    if ty.family != Family::A {
        return Err(Error::WrongType {
            expected: "A".into(),
            got: ty.to_string(),
        });
    }
    let n = ty.rank;
    let snake = Triangulation::snake(n)?;
    let diagonals = all_diagonals(n);
    rs.almost_positive_roots()
        .iter()
        .map(|root| {
            if let Some(i) = root.as_neg_simple() {
                return Ok((root.clone(), snake.diagonals()[i]));
            }
            let support: Vec<bool> = root.coords().iter().map(|&c| c != 0).collect();
            let found = diagonals.iter().copied().find(|&d| {
                snake
                    .diagonals()
                    .iter()
                    .zip(&support)
                    .all(|(&s, &inside)| crosses(d, s) == inside)
            });
            found
                .map(|d| (root.clone(), d))
                .ok_or_else(|| Error::RelationViolated(format!("no diagonal for root {root}")))
        })
        .collect()
}

/// A `2 x (n+3)` integer matrix and its `2 x 2` minors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerConfig {
    z: [Vec<BigInt>; 2],
}

impl PluckerConfig {
    pub fn new(top: Vec<i64>, bottom: Vec<i64>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::SizeMismatch("rows of a 2-row matrix differ in length".into()));
        }
        Ok(PluckerConfig {
            z: [
                top.into_iter().map(BigInt::from).collect(),
                bottom.into_iter().map(BigInt::from).collect(),
            ],
        })
    }

    pub fn random(columns: usize, rng: &mut impl Rng) -> Self {
        let mut row = || (0..columns).map(|_| BigInt::from(rng.gen_range(-20i64..=20))).collect();
        PluckerConfig { z: [row(), row()] }
    }

    pub fn columns(&self) -> usize {
        self.z[0].len()
    }

    /// `P_ij` for 1-based column indices.
    pub fn p(&self, i: usize, j: usize) -> BigInt {
        let (i, j) = (i - 1, j - 1);
        &self.z[0][i] * &self.z[1][j] - &self.z[0][j] * &self.z[1][i]
    }

    fn generic(&self) -> bool {
        let v = self.columns();
        (1..=v).all(|i| (i + 1..=v).all(|j| !self.p(i, j).is_zero()))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PluckerReport {
    pub trials: usize,
    pub quadruples_checked: usize,
    pub exchanges_checked: usize,
    pub resampled: usize,
}

/// Checks `P_ik P_jl = P_ij P_kl + P_il P_jk` for all `i<j<k<l`.
pub fn check_ptolemy(cfg: &PluckerConfig) -> Result<usize> {
    let v = cfg.columns();
    let mut count = 0;
    for i in 1..=v {
        for j in i + 1..=v {
            for k in j + 1..=v {
                for l in k + 1..=v {
                    let lhs = cfg.p(i, k) * cfg.p(j, l);
                    let rhs = cfg.p(i, j) * cfg.p(k, l) + cfg.p(i, l) * cfg.p(j, k);
                    if lhs != rhs {
                        return Err(Error::RelationViolated(format!("Ptolemy at ({i},{j},{k},{l})")));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// Checks the exchange relation of every diagonal of `t` with the chords
/// evaluated as Plücker coordinates.
pub fn check_exchanges(t: &Triangulation, cfg: &PluckerConfig) -> Result<usize> {
    let b = b_from_triangulation(t)?;
    let chords = t.chords();
    let x: Vec<BigInt> = chords.iter().map(|&(i, j)| cfg.p(i, j)).collect();
    for k in 0..t.rank() {
        let col = b.column(k)?;
        let mut plus = BigInt::from(1);
        let mut minus = BigInt::from(1);
        for (xi, &e) in x.iter().zip(&col) {
            if e > 0 {
                plus *= num_traits::pow(xi.clone(), e as usize);
            } else if e < 0 {
                minus *= num_traits::pow(xi.clone(), (-e) as usize);
            }
        }
        let (a, c) = t.flip(k)?.diagonals()[k];
        let lhs = &x[k] * cfg.p(a, c);
        if lhs != plus + minus {
            return Err(Error::RelationViolated(format!(
                "exchange at diagonal {} of {t}",
                k + 1
            )));
        }
    }
    Ok(t.rank())
}

/// Random Plücker checks: the Ptolemy identities and the exchange relations
/// of every triangulation of the `(n+3)`-gon (all of them for `n <= 4`,
/// otherwise those reached by a random walk of flips).
pub fn plucker_verify(n: usize, trials: usize, rand_seed: u64) -> Result<PluckerReport> {
    if n == 0 {
        return Err(Error::InvalidTriangulation("rank must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rand_seed);
    let all = if n <= 4 { Some(flip_graph(n)?.triangulations) } else { None };
    let mut report = PluckerReport::default();
    for _ in 0..trials {
        let cfg = loop {
            let c = PluckerConfig::random(n + 3, &mut rng);
            if c.generic() {
                break c;
            }
            report.resampled += 1;
        };
        report.quadruples_checked += check_ptolemy(&cfg)?;
        match &all {
            Some(ts) => {
                for t in ts {
                    report.exchanges_checked += check_exchanges(t, &cfg)?;
                }
            }
            None => {
                let mut t = Triangulation::snake(n)?;
                for _ in 0..2 * n {
                    report.exchanges_checked += check_exchanges(&t, &cfg)?;
                    t = t.flip(rng.gen_range(0..n))?;
                }
            }
        }
        report.trials += 1;
    }
    Ok(report)
}

/// Sign-insensitive comparison helper: `a == b` or `a == -b` entrywise.
pub fn equal_up_to_sign(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let same = a == b;
    let neg = a.len() == b.len()
        && a.iter().zip(b).all(|(x, y)| x.len() == y.len() && x.iter().zip(y).all(|(p, q)| *p == -q));
    same || neg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon() -> Triangulation {
        "3; d1=[1,3]; d2=[3,6]; d3=[4,6]".parse().unwrap()
    }

    #[test]
    fn hexagon_matrix() {
        let b = b_from_triangulation(&hexagon()).unwrap();
        let want = vec![
            vec![0, 1, 0],
            vec![-1, 0, -1],
            vec![0, 1, 0],
            vec![-1, 0, 0],
            vec![1, 0, 0],
            vec![0, -1, 1],
            vec![0, 0, -1],
            vec![0, 0, 1],
            vec![1, -1, 0],
        ];
        assert_eq!(b.entries(), want.as_slice());
    }

    #[test]
    fn square() {
        let t = Triangulation::snake(1).unwrap();
        assert_eq!(t.diagonals(), &[(2, 4)]);
        let b = b_from_triangulation(&t).unwrap();
        assert_eq!(b.m(), 5);
        assert_eq!(b.principal_part(), vec![vec![0]]);
        assert!(flip_mutation_commutes(&t, 0).unwrap());
    }

    #[test]
    fn snake_principal_part_is_b_of_a() {
        for n in 1..=6 {
            let t = Triangulation::snake(n).unwrap();
            let b = b_from_triangulation(&t).unwrap().principal_part();
            let rs = RootSystem::from_label(&format!("A{n}")).unwrap();
            assert!(equal_up_to_sign(&b, &rs.b_matrix()), "n={n}");
        }
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(hexagon().to_string(), "3; d1=[1,3]; d2=[3,6]; d3=[4,6]");
        for bad in [
            "2; d1=[1,3]; d2=[2,4]",
            "2; d1=[1,3]",
            "2; d1=[1,2]; d2=[1,3]",
            "2; d1=[1,5]; d2=[1,3]",
            "2; d1=[1,3]; d1=[1,4]",
            "x",
            "0",
        ] {
            assert!(
                matches!(bad.parse::<Triangulation>(), Err(Error::InvalidTriangulation(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn flips() {
        let t = hexagon();
        for k in 0..3 {
            assert_eq!(t.flip(k).unwrap().flip(k).unwrap(), t);
            assert!(flip_mutation_commutes(&t, k).unwrap());
        }
        assert_eq!(t.flip(3), Err(Error::NotADiagonal(3)));
        // pentagon: alternating flips return after 5 steps
        let mut p = Triangulation::fan(2).unwrap();
        let start = p.clone();
        for s in 0..5 {
            p = p.flip(s % 2).unwrap();
        }
        assert_eq!(p.diagonal_set(), start.diagonal_set());
    }

    #[test]
    fn catalan_counts() {
        for (n, want) in [(1, 2), (2, 5), (3, 14), (4, 42), (5, 132), (6, 429)] {
            let g = flip_graph(n).unwrap();
            assert_eq!(g.triangulations.len(), want);
            assert_eq!(g.edges.len(), want * n / 2);
        }
    }

    #[test]
    fn crossing() {
        assert!(crosses((1, 3), (2, 4)));
        assert!(!crosses((1, 3), (3, 5)));
        assert!(!crosses((1, 4), (2, 3)));
        assert!(crosses((2, 5), (1, 3)));
    }

    #[test]
    fn a2_dictionary() {
        let rs = RootSystem::from_label("A2").unwrap();
        let dict = snake_dictionary(&rs).unwrap();
        let snake = Triangulation::snake(2).unwrap();
        let top = dict.iter().find(|(r, _)| r.coords() == [1, 1]).unwrap().1;
        assert!(snake.diagonals().iter().all(|&s| crosses(top, s)));
        assert!(matches!(
            snake_dictionary(&RootSystem::from_label("B2").unwrap()),
            Err(Error::WrongType { .. })
        ));
    }

    #[test]
    fn ptolemy_degenerate() {
        let cfg = PluckerConfig::new(vec![1, 2, 2, 5, 1], vec![3, 1, 1, 4, 7]).unwrap();
        assert!(cfg.p(2, 3).is_zero());
        assert_eq!(check_ptolemy(&cfg).unwrap(), 5);
    }

    #[test]
    fn plucker_small() {
        let r = plucker_verify(2, 100, 0).unwrap();
        assert_eq!(r.trials, 100);
        assert_eq!(r.quadruples_checked, 500);
    }
}
