//! Ground truth and synthetic inputs.
//!
//! [`brute_force_mce`] checks every vertex subset and shares no code with the
//! search engines. The generators are deterministic; [`gen_gnp`] draws from
//! ChaCha8 seeded with `seed_from_u64(seed)` and visits pairs `(u, v)`, `u < v`,
//! in lexicographic order, one uniform `f64` per pair.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};
use crate::{Error, Result};

/// Largest graph [`brute_force_mce`] accepts.
pub const ORACLE_MAX_VERTICES: usize = 25;

/// A deduplicated family of cliques, each an ascending vertex list, in
/// lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CliqueFamily(Vec<Vec<VertexId>>);

impl CliqueFamily {
    pub fn from_cliques<I>(cliques: I) -> Self
    where
        I: IntoIterator<Item = Vec<VertexId>>,
    {
        let mut all: Vec<Vec<VertexId>> = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        all.sort_unstable();
        all.dedup();
        CliqueFamily(all)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn cliques(&self) -> &[Vec<VertexId>] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vec<VertexId>> {
        self.0.iter()
    }

    /// `true` if no member is a subset of another member.
    pub fn is_antichain(&self) -> bool {
        let subset = |a: &[VertexId], b: &[VertexId]| a.iter().all(|x| b.binary_search(x).is_ok());
        self.0.iter().enumerate().all(|(i, a)| {
            self.0
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !subset(a, b))
        })
    }
}

/// All maximal cliques by subset enumeration. Refuses graphs with more than
/// [`ORACLE_MAX_VERTICES`] vertices.
pub fn brute_force_mce(g: &Graph) -> Result<CliqueFamily> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::OracleTooLarge {
            n,
            limit: ORACLE_MAX_VERTICES,
        });
    }

    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };

    let mut cliques = Vec::new();
    for mask in 1..=full {
        let members = (0..n).filter(|&v| mask & (1 << v) != 0);
        let is_clique = members.clone().all(|v| (mask & !(1 << v)) & !adj[v] == 0);
        if !is_clique {
            continue;
        }
        let extendable = (0..n).any(|w| mask & (1 << w) == 0 && mask & !adj[w] == 0);
        if !extendable {
            cliques.push(members.map(|v| v as VertexId).collect());
        }
    }
    Ok(CliqueFamily::from_cliques(cliques))
}

/// Complete `k`-partite graph with parts `{3i, 3i+1, 3i+2}`. Its maximal
/// cliques are the `3^k` transversals, each of size `k`.
pub fn gen_moon_moser(k: usize) -> Graph {
    let n = 3 * k;
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| u / 3 != v / 3)
            .map(move |v| (u as VertexId, v as VertexId))
    });
    Graph::from_edges(n, edges)
}

/// Erdős–Rényi `G(n, p)`, reproducible from `seed`.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u as VertexId, v as VertexId));
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn gen_complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u as VertexId, v as VertexId)));
    Graph::from_edges(n, edges)
}

/// A named generator: `moonmoser:K`, `gnp:N,P,SEED` or `complete:N`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GeneratorSpec {
    MoonMoser { k: usize },
    Gnp { n: usize, p: f64, seed: u64 },
    Complete { n: usize },
}

impl GeneratorSpec {
    pub fn build(&self) -> Graph {
        match *self {
            GeneratorSpec::MoonMoser { k } => gen_moon_moser(k),
            GeneratorSpec::Gnp { n, p, seed } => gen_gnp(n, p, seed),
            GeneratorSpec::Complete { n } => gen_complete(n),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::MoonMoser { k } => write!(f, "moonmoser:{k}"),
            GeneratorSpec::Gnp { n, p, seed } => write!(f, "gnp:{n},{p},{seed}"),
            GeneratorSpec::Complete { n } => write!(f, "complete:{n}"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = |reason: &str| Error::GeneratorSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let (kind, args) = spec
            .split_once(':')
            .ok_or_else(|| bad("expected KIND:ARGS"))?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |s: &str| s.parse::<usize>().map_err(|_| bad("expected an integer"));

        match (kind, args.as_slice()) {
            ("moonmoser", [k]) => Ok(GeneratorSpec::MoonMoser { k: int(k)? }),
            ("complete", [n]) => Ok(GeneratorSpec::Complete { n: int(n)? }),
            ("gnp", [n, p, seed]) => {
                let p: f64 = p.parse().map_err(|_| bad("expected a probability"))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad("probability must lie in [0, 1]"));
                }
                let seed = seed.parse().map_err(|_| bad("expected an integer seed"))?;
                Ok(GeneratorSpec::Gnp {
                    n: int(n)?,
                    p,
                    seed,
                })
            }
            ("moonmoser" | "complete" | "gnp", _) => Err(bad("wrong number of arguments")),
            _ => Err(bad("unknown generator (moonmoser, gnp, complete)")),
        }
    }
}
