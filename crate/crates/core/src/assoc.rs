//! Generalized associahedra as polytopes with facet normals in
//! `Phi_{>=-1}`.
//!
//! Normals are written in simple-root coordinates and points in the dual
//! (fundamental coweight) coordinates, so `<z, alpha>` is a dot product.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::ExchangeGraph;
use crate::linalg::{self, q};
use crate::roots::RootSystem;

/// Values `F(alpha)` on `Phi_{>=-1}`, indexed like
/// [`RootSystem::almost_positive_roots`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportFunction {
    values: Vec<BigRational>,
}

impl SupportFunction {
    /// The default choice: `F(-alpha_i)` is the coefficient of the simple
    /// coroot `alpha_i^vee` in half the sum of the positive coroots.
    pub fn half_sum_of_coroots(rs: &RootSystem) -> Result<Self> {
        Self::from_negative_simple(rs, &rs.half_sum_of_positive_coroots())
    }

    /// Extends values on `-Pi` to `Phi_{>=-1}` by constancy on
    /// `<tau_-, tau_+>`-orbits and checks the polytope hypothesis
    /// `sum_i a_ij F(-alpha_i) > 0` for every `j`.
    pub fn from_negative_simple(rs: &RootSystem, neg_simple: &[BigRational]) -> Result<Self> {
        let n = rs.rank();
        if neg_simple.len() != n {
            return Err(Error::SizeMismatch(format!(
                "{} values for rank {n}",
                neg_simple.len()
            )));
        }
        let mut values: Vec<Option<BigRational>> = vec![None; rs.almost_positive_roots().len()];
        for orbit in rs.tau_orbits() {
            let mut value: Option<&BigRational> = None;
            for &idx in &orbit {
                if let Some(i) = rs.root(idx).as_neg_simple() {
                    match value {
                        None => value = Some(&neg_simple[i]),
                        Some(v) if *v != neg_simple[i] => {
                            return Err(Error::HypothesisViolated(format!(
                                "F is not constant on the tau-orbit of -a{}",
                                i + 1
                            )))
                        }
                        Some(_) => {}
                    }
                }
            }
            let value = value.expect("every tau-orbit meets -Pi");
            for &idx in &orbit {
                values[idx] = Some(value.clone());
            }
        }
        let a = rs.cartan();
        for j in 0..n {
            let s: BigRational = (0..n).map(|i| q(a[i][j]) * &neg_simple[i]).sum();
            if !s.is_positive() {
                return Err(Error::HypothesisViolated(format!(
                    "sum_i a_i{} F(-a_i) = {s} is not positive",
                    j + 1
                )));
            }
        }
        Ok(SupportFunction {
            values: values.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, idx: usize) -> &BigRational {
        &self.values[idx]
    }
}

/// A simple polytope given by both representations.
#[derive(Clone, Debug)]
pub struct Polytope {
    /// `(normal, bound)` with `<z, normal> <= bound`.
    pub h_rep: Vec<(Vec<i64>, BigRational)>,
    /// One vertex per cluster, in the order of `clusters`.
    pub vertices: Vec<Vec<BigRational>>,
    pub clusters: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

fn pairing(z: &[BigRational], alpha: &[i64]) -> BigRational {
    z.iter().zip(alpha).map(|(x, &a)| x * q(a)).sum()
}

/// Solves `<z, alpha> = F(alpha)` for each cluster and checks that every
/// other inequality is strict at the solution.
pub fn build_polytope(rs: &RootSystem, f: &SupportFunction, jobs: usize) -> Result<Polytope> {
    let roots = rs.almost_positive_roots();
    let clusters = rs.enumerate_clusters(jobs);
    let solve = |c: &Vec<usize>| -> Result<Vec<BigRational>> {
        let rows: Vec<Vec<i64>> = c.iter().map(|&i| roots[i].coords().to_vec()).collect();
        let rhs: Vec<BigRational> = c.iter().map(|&i| f.value(i).clone()).collect();
        let z = linalg::solve(&linalg::from_int_rows(&rows), &rhs).ok_or(Error::SingularClusterSystem)?;
        for (idx, root) in roots.iter().enumerate() {
            let lhs = pairing(&z, root.coords());
            let tight = lhs == *f.value(idx);
            if tight != c.contains(&idx) || lhs > *f.value(idx) {
                return Err(Error::HypothesisViolated(format!(
                    "vertex of cluster {c:?} is not simple at {root}"
                )));
            }
        }
        Ok(z)
    };
    let vertices: Vec<Vec<BigRational>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Unsupported(e.to_string()))?;
        pool.install(|| clusters.par_iter().map(solve).collect::<Result<_>>())?
    } else {
        clusters.iter().map(solve).collect::<Result<_>>()?
    };
    let n = rs.rank();
    // Two clusters are adjacent iff they share n - 1 roots; bucket by the
    // cluster with one root removed.
    let mut faces: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (ci, c) in clusters.iter().enumerate() {
        for skip in 0..n {
            let mut face = c.clone();
            face.remove(skip);
            faces.entry(face).or_default().push(ci);
        }
    }
    let mut edges: Vec<(usize, usize)> = faces
        .into_values()
        .filter(|v| v.len() == 2)
        .map(|v| (v[0].min(v[1]), v[0].max(v[1])))
        .collect();
    edges.sort_unstable();
    let h_rep = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.coords().to_vec(), f.value(i).clone()))
        .collect();
    Ok(Polytope {
        h_rep,
        vertices,
        clusters,
        edges,
    })
}

impl Polytope {
    /// Inequalities that are tight on at least `dim` vertices.
    pub fn facets(&self) -> Vec<usize> {
        let dim = self.h_rep.first().map_or(0, |(v, _)| v.len());
        (0..self.h_rep.len())
            .filter(|&i| {
                let (normal, bound) = &self.h_rep[i];
                self.vertices.iter().filter(|z| pairing(z, normal) == *bound).count() >= dim
            })
            .collect()
    }

    /// Every vertex satisfies all inequalities, tightly exactly on its own
    /// cluster.
    pub fn is_simple_realization(&self) -> bool {
        self.vertices.iter().zip(&self.clusters).all(|(z, c)| {
            self.h_rep.iter().enumerate().all(|(i, (normal, bound))| {
                let lhs = pairing(z, normal);
                lhs <= *bound && (lhs == *bound) == c.contains(&i)
            })
        })
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// One `<normal> <= <bound>` line per inequality.
    pub fn h_text(&self) -> String {
        let mut out = String::new();
        for (normal, bound) in &self.h_rep {
            let v: Vec<String> = normal.iter().map(i64::to_string).collect();
            let _ = writeln!(out, "{} <= {bound}", v.join(" "));
        }
        out
    }

    /// One vertex per line, exact rationals.
    pub fn v_text(&self) -> String {
        let mut out = String::new();
        for z in &self.vertices {
            let v: Vec<String> = z.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{}", v.join(" "));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph skeleton {\n");
        for (i, z) in self.vertices.iter().enumerate() {
            let v: Vec<String> = z.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "  {i} [label=\"({})\"];", v.join(", "));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Whether the 1-skeleton of `p` is isomorphic to `g`, the exchange graph
/// of `rs.distinguished_seed()`, via denominator vectors: each seed maps to
/// the vertex of the cluster formed by its variables' denominators.
pub fn skeleton_matches_exchange_graph(rs: &RootSystem, p: &Polytope, g: &ExchangeGraph) -> Result<bool> {
    let vertex_of: HashMap<&[usize], usize> =
        p.clusters.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let ex = g.start().matrix().ex().to_vec();
    let mut map = Vec::with_capacity(g.len());
    for node in g.nodes() {
        let mut cluster = Vec::new();
        for var in node.cluster() {
            let d = var.denominator_vector(&ex)?;
            match rs.index_of(d.entries()) {
                Some(i) => cluster.push(i),
                None => return Ok(false),
            }
        }
        cluster.sort_unstable();
        match vertex_of.get(cluster.as_slice()) {
            Some(&v) => map.push(v),
            None => return Ok(false),
        }
    }
    let image: BTreeSet<usize> = map.iter().copied().collect();
    if image.len() != map.len() || map.len() != p.vertices.len() {
        return Ok(false);
    }
    let mapped: BTreeSet<(usize, usize)> = g
        .adjacency()
        .iter()
        .enumerate()
        .flat_map(|(a, nb)| nb.iter().map(move |&b| (a, b)))
        .map(|(a, b)| (map[a].min(map[b]), map[a].max(map[b])))
        .collect();
    let edges: BTreeSet<(usize, usize)> = p.edges.iter().copied().collect();
    Ok(mapped == edges)
}

/// Convenience: the polytope for the default support function.
pub fn default_polytope(rs: &RootSystem, jobs: usize) -> Result<Polytope> {
    build_polytope(rs, &SupportFunction::half_sum_of_coroots(rs)?, jobs)
}
