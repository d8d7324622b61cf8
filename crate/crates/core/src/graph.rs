//! Breadth-first exploration of a mutation class and checks on the result.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exchange::{skew_symmetrizer, Seed, SeedJson};
use crate::laurent::{DenominatorVector, LaurentPoly};
use crate::linalg;
use crate::roots::{identify_cartan, CartanKillingType};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_seeds: usize,
    pub max_depth: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_seeds: 100_000,
            max_depth: usize::MAX,
        }
    }
}

impl Bounds {
    pub fn seeds(max_seeds: usize) -> Self {
        Bounds {
            max_seeds,
            ..Bounds::default()
        }
    }
}

/// A seed with its exchangeable positions sorted by the canonical order on
/// Laurent polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSeed {
    seed: Seed,
    key: u64,
}

impl CanonicalSeed {
    pub fn new(seed: &Seed) -> Self {
        let ex = seed.matrix().ex();
        let vars = seed.variables();
        let mut perm: Vec<usize> = (0..ex.len()).collect();
        perm.sort_by(|&a, &b| vars[ex[a]].cmp(&vars[ex[b]]));
        let seed = seed.permute_exchangeable(&perm);
        let mut h = DefaultHasher::new();
        seed.hash(&mut h);
        CanonicalSeed {
            key: h.finish(),
            seed,
        }
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    pub fn key(&self) -> u64 {
        self.key
    }

    /// Sorted exchangeable variables.
    pub fn cluster(&self) -> Vec<LaurentPoly> {
        self.seed.cluster().into_iter().cloned().collect()
    }
}

/// An edge of the exchange graph. `slots` are the exchangeable positions (in
/// `0..n`) of the exchanged variables in the two endpoint seeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub slots: (usize, usize),
}

#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    nodes: Vec<CanonicalSeed>,
    depth: Vec<usize>,
    edges: Vec<Edge>,
    complete: bool,
    start: Seed,
    identity_conflicts: usize,
}

impl ExchangeGraph {
    pub fn nodes(&self) -> &[CanonicalSeed] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// BFS distance of each node from the start seed.
    pub fn depths(&self) -> &[usize] {
        &self.depth
    }

    pub fn start(&self) -> &Seed {
        &self.start
    }

    /// Pairs of seeds with equal clusters but different exchange matrices.
    /// Such seeds are identified; a nonzero count means the cluster does not
    /// determine the seed.
    pub fn identity_conflicts(&self) -> usize {
        self.identity_conflicts
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.a == node) + usize::from(e.b == node))
            .sum()
    }

    pub fn is_regular(&self) -> bool {
        let n = self.start.n();
        (0..self.len()).all(|v| self.degree(v) == n)
    }

    /// Checks that the endpoints of every edge share exactly `n - 1`
    /// exchangeable variables.
    pub fn edges_share_n_minus_1(&self) -> bool {
        let n = self.start.n();
        self.edges.iter().all(|e| {
            let a: HashSet<LaurentPoly> = self.nodes[e.a].cluster().into_iter().collect();
            let b: HashSet<LaurentPoly> = self.nodes[e.b].cluster().into_iter().collect();
            a.intersection(&b).count() + 1 == n
        })
    }

    fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::IncompleteGraph)
        }
    }

    /// Adjacency lists (sorted).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    fn names(&self) -> Vec<String> {
        (1..=self.start.m()).map(|i| format!("x{i}")).collect()
    }

    /// Graphviz export: nodes labeled by their cluster, edges by the
    /// exchanged pair.
    pub fn to_dot(&self) -> String {
        let names = self.names();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut out = String::from("graph exchange {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let label: Vec<String> = node.cluster().iter().map(|v| v.format_with(&refs)).collect();
            let _ = writeln!(out, "  {i} [label=\"{}\"];", label.join("\\n"));
        }
        for e in &self.edges {
            let ex = self.start.matrix().ex();
            let x = self.nodes[e.a].seed.variables()[ex[e.slots.0]].format_with(&refs);
            let y = self.nodes[e.b].seed.variables()[ex[e.slots.1]].format_with(&refs);
            let _ = writeln!(out, "  {} -- {} [label=\"{x} / {y}\"];", e.a, e.b);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            complete: self.complete,
            seeds: self.nodes.iter().map(|n| n.seed.to_json()).collect(),
            edges: self.edges.iter().map(|e| [e.a, e.b]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub complete: bool,
    pub seeds: Vec<SeedJson>,
    pub edges: Vec<[usize; 2]>,
}

/// Single-threaded exploration.
pub fn explore(start: &Seed, bounds: Bounds) -> Result<ExchangeGraph> {
    explore_with_jobs(start, bounds, 1)
}

/// Level-by-level BFS. Each level's mutations are computed in parallel when
/// `jobs > 1`; insertion is sequential in a fixed order, so the result does
/// not depend on `jobs`. Seeds are identified by their cluster.
pub fn explore_with_jobs(start: &Seed, bounds: Bounds, jobs: usize) -> Result<ExchangeGraph> {
    let n = start.n();
    let first = CanonicalSeed::new(start);
    let mut index: HashMap<Vec<LaurentPoly>, usize> = HashMap::new();
    index.insert(first.cluster(), 0);
    let mut graph = ExchangeGraph {
        nodes: vec![first],
        depth: vec![0],
        edges: Vec::new(),
        complete: true,
        start: start.clone(),
        identity_conflicts: 0,
    };
    if bounds.max_seeds == 0 {
        graph.complete = false;
        return Ok(graph);
    }
    let pool = (jobs > 1)
        .then(|| rayon::ThreadPoolBuilder::new().num_threads(jobs).build())
        .transpose()
        .map_err(|e| Error::Unsupported(e.to_string()))?;
    let mut edge_set: BTreeSet<Edge> = BTreeSet::new();
    // Slot of each node that leads back to the node it was discovered from;
    // that mutation is known and skipped.
    let mut back: Vec<Option<usize>> = vec![None];
    let mut level: Vec<usize> = vec![0];
    let mut d = 0usize;
    while !level.is_empty() {
        let expand = |&(v, k): &(usize, usize)| -> Result<(usize, usize, CanonicalSeed, usize)> {
            let mutated = graph.nodes[v].seed.mutate(graph.nodes[v].seed.matrix().ex()[k])?;
            let new_var = mutated.variables()[mutated.matrix().ex()[k]].clone();
            let canon = CanonicalSeed::new(&mutated);
            let ex = canon.seed.matrix().ex();
            let slot = (0..n)
                .find(|&j| canon.seed.variables()[ex[j]] == new_var)
                .expect("new variable is in the mutated cluster");
            Ok((v, k, canon, slot))
        };
        let tasks: Vec<(usize, usize)> = level
            .iter()
            .flat_map(|&v| (0..n).map(move |k| (v, k)))
            .filter(|&(v, k)| back[v] != Some(k))
            .collect();
        let results: Vec<(usize, usize, CanonicalSeed, usize)> = match &pool {
            Some(p) => p.install(|| tasks.par_iter().map(expand).collect::<Result<_>>())?,
            None => tasks.iter().map(expand).collect::<Result<_>>()?,
        };
        let mut next = Vec::new();
        for (v, k, canon, slot) in results {
            let cluster = canon.cluster();
            let target = match index.get(&cluster) {
                Some(&t) => {
                    if graph.nodes[t].seed != canon.seed {
                        graph.identity_conflicts += 1;
                    }
                    t
                }
                None => {
                    if d >= bounds.max_depth || graph.nodes.len() >= bounds.max_seeds {
                        graph.complete = false;
                        continue;
                    }
                    let t = graph.nodes.len();
                    index.insert(cluster, t);
                    graph.nodes.push(canon);
                    graph.depth.push(d + 1);
                    back.push(Some(slot));
                    next.push(t);
                    t
                }
            };
            let e = if v <= target {
                Edge { a: v, b: target, slots: (k, slot) }
            } else {
                Edge { a: target, b: v, slots: (slot, k) }
            };
            edge_set.insert(e);
        }
        level = next;
        d += 1;
    }
    graph.edges = edge_set.into_iter().collect();
    Ok(graph)
}

/// All distinct exchangeable variables across the seeds, sorted.
pub fn cluster_variables(g: &ExchangeGraph) -> Result<Vec<LaurentPoly>> {
    g.require_complete()?;
    let set: BTreeSet<LaurentPoly> = g.nodes.iter().flat_map(|s| s.cluster()).collect();
    Ok(set.into_iter().collect())
}

/// Denominator vectors of all cluster variables with respect to the start
/// seed's exchangeable variables `x_i, i in ex` (in `ex` order). The start
/// seed should carry the coordinate variables.
pub fn denominator_table(g: &ExchangeGraph) -> Result<Vec<(LaurentPoly, DenominatorVector)>> {
    let ex = g.start.matrix().ex().to_vec();
    cluster_variables(g)?
        .into_iter()
        .map(|v| {
            let d = v.denominator_vector(&ex)?;
            Ok((v, d))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    FiniteType(CartanKillingType),
    InfiniteType,
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::FiniteType(t) => write!(f, "FiniteType {t}"),
            Verdict::InfiniteType => write!(f, "InfiniteType"),
            Verdict::Unknown => write!(f, "Unknown"),
        }
    }
}

/// Outcome of [`classify_finite_type`]. `path` is a mutation sequence (in the
/// input's labeling) taking the input to `witness`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub witness: Vec<Vec<i64>>,
    pub path: Vec<usize>,
    pub explored: usize,
}

fn matrix_mutate(b: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let n = b.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == k || j == k {
                        -b[i][j]
                    } else {
                        b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                    }
                })
                .collect()
        })
        .collect()
}

/// Off-diagonal entries of each row share a sign.
fn is_bipartite_signed(b: &[Vec<i64>]) -> bool {
    b.iter().enumerate().all(|(i, row)| {
        let pos = row.iter().enumerate().any(|(j, &x)| j != i && x > 0);
        let neg = row.iter().enumerate().any(|(j, &x)| j != i && x < 0);
        !(pos && neg)
    })
}

/// Canonical representative of `b` under simultaneous row/column permutation
/// and global sign. Vertices are first split by color refinement; the
/// minimum is taken over orderings within color classes. When that set of
/// orderings is too large, a fixed tie-break is used instead (which may
/// only make the search visit duplicates).
fn matrix_canonical_key(b: &[Vec<i64>]) -> Vec<i64> {
    let n = b.len();
    let mut color: Vec<usize> = vec![0; n];
    type Signature = (usize, Vec<(usize, i64, i64)>);
    loop {
        let sigs: Vec<Signature> = (0..n)
            .map(|i| {
                let mut s: Vec<(usize, i64, i64)> = (0..n)
                    .filter(|&j| j != i && b[i][j] != 0)
                    .map(|j| (color[j], b[i][j].abs(), b[j][i].abs()))
                    .collect();
                s.sort_unstable();
                (color[i], s)
            })
            .collect();
        let mut distinct: Vec<&Signature> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let new: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).unwrap())
            .collect();
        let stable = distinct.len() == color.iter().collect::<BTreeSet<_>>().len();
        color = new;
        if stable {
            break;
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &c) in color.iter().enumerate() {
        classes.entry(c).or_default().push(i);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let mut count: u64 = 1;
    for c in &classes {
        for k in 1..=c.len() as u64 {
            count = count.saturating_mul(k);
        }
    }
    let flatten = |order: &[usize], sign: i64| -> Vec<i64> {
        order
            .iter()
            .flat_map(|&i| order.iter().map(move |&j| sign * b[i][j]))
            .collect()
    };
    let mut best: Option<Vec<i64>> = None;
    let mut consider = |order: &[usize]| {
        for sign in [1, -1] {
            let key = flatten(order, sign);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
    };
    if count > 5_000 {
        let order: Vec<usize> = classes.concat();
        consider(&order);
    } else {
        let mut perms: Vec<Vec<Vec<usize>>> = classes.iter().map(|c| permutations(c)).collect();
        let mut idx = vec![0usize; perms.len()];
        loop {
            let order: Vec<usize> = idx
                .iter()
                .enumerate()
                .flat_map(|(c, &p)| perms[c][p].iter().copied())
                .collect();
            consider(&order);
            let mut c = 0;
            while c < idx.len() {
                idx[c] += 1;
                if idx[c] < perms[c].len() {
                    break;
                }
                idx[c] = 0;
                c += 1;
            }
            if c == idx.len() {
                break;
            }
        }
        perms.clear();
    }
    best.expect("at least one ordering")
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Searches the mutation class of the principal matrix `b` (up to
/// simultaneous permutation and global sign) for a bipartite member whose
/// Cartan counterpart is of finite type, or for an entry pair with
/// `|b_ij b_ji| >= 4`.
pub fn classify_finite_type(b: &[Vec<i64>], bounds: Bounds) -> Result<ClassificationResult> {
    skew_symmetrizer(b)?;
    let n = b.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<(Vec<Vec<i64>>, Vec<usize>)> = VecDeque::new();
    seen.insert(matrix_canonical_key(b));
    queue.push_back((b.to_vec(), Vec::new()));
    let mut explored = 0;
    let mut last = (b.to_vec(), Vec::new());
    while let Some((m, path)) = queue.pop_front() {
        explored += 1;
        let obstruction = (0..n).any(|i| (0..n).any(|j| (m[i][j] * m[j][i]).abs() >= 4));
        if obstruction {
            return Ok(ClassificationResult {
                verdict: Verdict::InfiniteType,
                witness: m,
                path,
                explored,
            });
        }
        if is_bipartite_signed(&m) {
            let a: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { 2 } else { -m[i][j].abs() }).collect())
                .collect();
            if let Some(ty) = identify_cartan(&a) {
                return Ok(ClassificationResult {
                    verdict: Verdict::FiniteType(ty),
                    witness: m,
                    path,
                    explored,
                });
            }
        }
        if path.len() < bounds.max_depth {
            for k in 0..n {
                let next = matrix_mutate(&m, k);
                if seen.len() < bounds.max_seeds && seen.insert(matrix_canonical_key(&next)) {
                    let mut p = path.clone();
                    p.push(k);
                    queue.push_back((next, p));
                }
            }
        }
        last = (m, path);
    }
    Ok(ClassificationResult {
        verdict: Verdict::Unknown,
        witness: last.0,
        path: last.1,
        explored,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub seed_determined_by_cluster: CheckOutcome,
    pub monomials_independent: CheckOutcome,
    pub distinct_denominators: CheckOutcome,
    pub nonnegative_coefficients: CheckOutcome,
}

impl ConjectureReport {
    pub fn all_passed(&self) -> bool {
        [
            &self.seed_determined_by_cluster,
            &self.monomials_independent,
            &self.distinct_denominators,
            &self.nonnegative_coefficients,
        ]
        .iter()
        .all(|c| c.passed)
    }
}

/// Exponent vectors of total degree `1..=max_degree` in `n` variables.
fn exponent_vectors(n: usize, max_degree: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_degree, &mut Vec::new(), &mut out);
    out.retain(|v| v.iter().any(|&e| e > 0));
    out
}

/// Runs the four desk-scale checks on a complete graph. `rng_seed` drives
/// the random evaluation points.
pub fn conjecture_checks(g: &ExchangeGraph, max_degree: u32, rng_seed: u64) -> Result<ConjectureReport> {
    g.require_complete()?;
    let seed_check = CheckOutcome::new(
        g.identity_conflicts == 0,
        format!("{} conflicting seed pairs", g.identity_conflicts),
    );

    let variables = cluster_variables(g)?;
    let var_index: HashMap<&LaurentPoly, usize> =
        variables.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let ex = g.start.matrix().ex().to_vec();
    let n = ex.len();

    // Cluster monomials as sparse exponent maps over `variables`.
    let exps = exponent_vectors(n, max_degree);
    let mut monomials: BTreeSet<Vec<(usize, u32)>> = BTreeSet::new();
    for node in &g.nodes {
        let ids: Vec<usize> = node.cluster().iter().map(|v| var_index[v]).collect();
        for e in &exps {
            let mut m: Vec<(usize, u32)> = ids
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(&i, &k)| (i, k))
                .collect();
            m.sort_unstable();
            monomials.insert(m);
        }
    }
    let monomials: Vec<Vec<(usize, u32)>> = monomials.into_iter().collect();

    let denominators: Vec<DenominatorVector> = variables
        .iter()
        .map(|v| v.denominator_vector(&ex))
        .collect::<Result<_>>()?;
    let mut by_den: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut collisions = 0;
    for (i, m) in monomials.iter().enumerate() {
        let mut d = vec![0i64; n];
        for &(v, k) in m {
            for (acc, x) in d.iter_mut().zip(denominators[v].entries()) {
                *acc += i64::from(k) * x;
            }
        }
        if by_den.insert(d, i).is_some() {
            collisions += 1;
        }
    }
    let den_check = CheckOutcome::new(
        collisions == 0,
        format!("{} cluster monomials, {collisions} denominator collisions", monomials.len()),
    );

    let negative = variables.iter().filter(|v| !v.has_nonnegative_coefficients()).count();
    let pos_check = CheckOutcome::new(
        negative == 0,
        format!("{} cluster variables, {negative} with a negative coefficient", variables.len()),
    );

    let indep_check = independence_check(&variables, &monomials, g.start.m(), rng_seed)?;

    Ok(ConjectureReport {
        seed_determined_by_cluster: seed_check,
        monomials_independent: indep_check,
        distinct_denominators: den_check,
        nonnegative_coefficients: pos_check,
    })
}

fn independence_check(
    variables: &[LaurentPoly],
    monomials: &[Vec<(usize, u32)>],
    m: usize,
    rng_seed: u64,
) -> Result<CheckOutcome> {
    const ATTEMPTS: usize = 3;
    let count = monomials.len();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut best = 0;
    for _ in 0..ATTEMPTS {
        let points = count + 4;
        let mut columns: Vec<Vec<BigRational>> = Vec::with_capacity(points);
        for _ in 0..points {
            let point: Vec<BigRational> = (0..m)
                .map(|_| {
                    let num: i64 = rng.gen_range(1..=40);
                    let den: i64 = rng.gen_range(1..=7);
                    BigRational::new(BigInt::from(num), BigInt::from(den))
                })
                .collect();
            let values: Vec<BigRational> =
                variables.iter().map(|v| v.eval(&point)).collect::<Result<_>>()?;
            columns.push(
                monomials
                    .iter()
                    .map(|mono| {
                        mono.iter()
                            .fold(linalg::q(1), |acc, &(v, k)| acc * num_traits::pow(values[v].clone(), k as usize))
                    })
                    .collect(),
            );
        }
        let rank = linalg::rank(&columns);
        best = best.max(rank);
        if rank == count {
            break;
        }
    }
    Ok(CheckOutcome::new(
        best == count,
        format!("rank {best} of {count} cluster monomials"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::ExtendedExchangeMatrix;

    fn lp(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn rank2_seed_counts() {
        for (b, c, want) in [(1, 1, 5), (1, 2, 6), (2, 1, 6), (1, 3, 8), (3, 1, 8)] {
            let g = explore(&Seed::rank2(b, c).unwrap(), Bounds::default()).unwrap();
            assert!(g.is_complete());
            assert_eq!(g.len(), want, "A({b},{c})");
            assert_eq!(g.edges().len(), want);
            assert!(g.is_regular());
            assert!(g.edges_share_n_minus_1());
            assert_eq!(g.identity_conflicts(), 0);
        }
        let g = explore(&Seed::rank2(2, 2).unwrap(), Bounds::seeds(100)).unwrap();
        assert!(!g.is_complete());
        assert_eq!(g.len(), 100);
    }

    #[test]
    fn pentagon_variables() {
        let g = explore(&Seed::rank2(1, 1).unwrap(), Bounds::default()).unwrap();
        let vars = cluster_variables(&g).unwrap();
        let mut want = vec![
            lp("x1", 2),
            lp("x2", 2),
            lp("x1^-1*x2 + x1^-1", 2),
            lp("x1*x2^-1 + x2^-1", 2),
            lp("x2^-1 + x1^-1*x2^-1 + x1^-1", 2),
        ];
        want.sort();
        assert_eq!(vars, want);
    }

    #[test]
    fn a2_denominators_are_almost_positive_roots() {
        let g = explore(&Seed::rank2(1, 1).unwrap(), Bounds::default()).unwrap();
        let mut dens: Vec<Vec<i64>> = denominator_table(&g)
            .unwrap()
            .into_iter()
            .map(|(_, d)| d.0)
            .collect();
        dens.sort();
        assert_eq!(dens, vec![vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn incomplete_graph_is_rejected() {
        let g = explore(&Seed::rank2(2, 2).unwrap(), Bounds::seeds(10)).unwrap();
        assert_eq!(cluster_variables(&g), Err(Error::IncompleteGraph));
        assert_eq!(denominator_table(&g).err(), Some(Error::IncompleteGraph));
        assert_eq!(conjecture_checks(&g, 1, 0).err(), Some(Error::IncompleteGraph));
    }

    #[test]
    fn depth_bound() {
        let g = explore(
            &Seed::rank2(1, 1).unwrap(),
            Bounds { max_seeds: 100, max_depth: 1 },
        )
        .unwrap();
        assert_eq!(g.len(), 3);
        assert!(!g.is_complete());
        assert_eq!(g.depths(), &[0, 1, 1]);
    }

    #[test]
    fn canonical_form_ignores_relabeling() {
        let s = Seed::rank2(1, 2).unwrap().mutate(0).unwrap();
        let p = s.permute_exchangeable(&[1, 0]);
        assert_eq!(CanonicalSeed::new(&s), CanonicalSeed::new(&p));
    }

    #[test]
    fn parallel_matches_sequential() {
        let s = crate::roots::RootSystem::from_label("A3").unwrap().distinguished_seed();
        let a = explore_with_jobs(&s, Bounds::default(), 1).unwrap();
        let c = explore_with_jobs(&s, Bounds::default(), 4).unwrap();
        assert_eq!(a.len(), 14);
        assert_eq!(a.to_json(), c.to_json());
    }

    #[test]
    fn classification_examples() {
        let r = classify_finite_type(&[vec![0, 1], vec![-3, 0]], Bounds::default()).unwrap();
        assert_eq!(r.verdict, Verdict::FiniteType(CartanKillingType(vec!["G2".parse().unwrap()])));
        let r = classify_finite_type(&[vec![0, 2], vec![-2, 0]], Bounds::default()).unwrap();
        assert_eq!(r.verdict, Verdict::InfiniteType);
        // An oriented 3-cycle is mutation equivalent to a path.
        let cyc = vec![vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]];
        let r = classify_finite_type(&cyc, Bounds::default()).unwrap();
        assert_eq!(r.verdict, Verdict::FiniteType(CartanKillingType(vec!["A3".parse().unwrap()])));
        let mut w = cyc.clone();
        for &k in &r.path {
            w = matrix_mutate(&w, k);
        }
        assert_eq!(w, r.witness);
        // Markov quiver: mutation class is itself, entries 2, never bipartite.
        let markov = vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]];
        let r = classify_finite_type(&markov, Bounds::default()).unwrap();
        assert_eq!(r.verdict, Verdict::InfiniteType);
    }

    #[test]
    fn canonical_key_is_permutation_and_sign_invariant() {
        let b = vec![vec![0, 1, 0, 0], vec![-1, 0, -1, -1], vec![0, 1, 0, 0], vec![0, 1, 0, 0]];
        let perm = [2, 0, 3, 1];
        let p: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| -b[perm[i]][perm[j]]).collect()).collect();
        assert_eq!(matrix_canonical_key(&b), matrix_canonical_key(&p));
    }

    #[test]
    fn conjectures_hold_for_pentagon() {
        let g = explore(&Seed::rank2(1, 1).unwrap(), Bounds::default()).unwrap();
        let r = conjecture_checks(&g, 3, 0).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn degenerate_rank_one() {
        let matrix = ExtendedExchangeMatrix::validate_skew_only(vec![vec![0]], vec![0]).unwrap();
        let g = explore(&Seed::initial(matrix), Bounds::default()).unwrap();
        assert!(g.is_complete());
        assert_eq!(g.len(), 2);
        let vars = cluster_variables(&g).unwrap();
        assert!(vars.contains(&lp("2*x1^-1", 1)));
        assert!(conjecture_checks(&g, 2, 0).unwrap().all_passed());
    }
}
