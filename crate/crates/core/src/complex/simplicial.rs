use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;

use super::fvector::FVector;
use super::sieve::build_sieve;
use crate::{Error, Result};

/// Largest `n` for which [`explicit_complex`] materializes `Δ_n`.
pub const DEFAULT_EXPLICIT_BOUND: u64 = 10_000;
/// Cap on the number of simplices [`barycentric_subdivide`] will produce.
pub const DEFAULT_MAX_SIMPLICES: usize = 1_000_000;

/// Vertex label: a prime for `Δ_n`, and for a subdivision the sorted tuple
/// of labels of the parent simplex the vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Atom(u64),
    Simplex(Vec<VertexLabel>),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Atom(v) => write!(f, "{v}"),
            VertexLabel::Simplex(parts) => {
                write!(f, "(")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A finite abstract simplicial complex, always containing `∅`.
///
/// Vertices are kept sorted by label; simplices are sorted vectors of vertex
/// indices, ordered by size and then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<VertexLabel>,
    simplices: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// The downward closure of `facets`, plus `∅`.
    pub fn from_facets(facets: &[Vec<VertexLabel>]) -> Result<Self> {
        let labels: Vec<VertexLabel> = facets
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<&VertexLabel, u32> = labels.iter().zip(0..).collect();
        let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
        all.insert(Vec::new());
        for facet in facets {
            let mut ids: Vec<u32> = facet.iter().map(|l| index[l]).collect();
            ids.sort_unstable();
            ids.dedup();
            if ids.len() > 24 {
                return Err(Error::ResourceLimit {
                    what: "facet size",
                    requested: ids.len() as u128,
                    limit: 24,
                });
            }
            for mask in 1u32..(1 << ids.len()) {
                let face: Vec<u32> = (0..ids.len())
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| ids[b])
                    .collect();
                all.insert(face);
            }
        }
        Ok(Self::from_sorted_parts(labels, all.into_iter().collect()))
    }

    fn from_sorted_parts(labels: Vec<VertexLabel>, mut simplices: Vec<Vec<u32>>) -> Self {
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Self { labels, simplices }
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// All simplices as vertex-index vectors, `∅` first.
    pub fn simplex_indices(&self) -> &[Vec<u32>] {
        &self.simplices
    }

    /// All simplices as label sets, `∅` first.
    pub fn simplices(&self) -> Vec<Vec<VertexLabel>> {
        self.simplices
            .iter()
            .map(|s| s.iter().map(|&v| self.labels[v as usize].clone()).collect())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.simplices.last().map_or(-1, |s| s.len() as isize - 1)
    }

    pub fn contains(&self, simplex: &[VertexLabel]) -> bool {
        let mut ids = Vec::with_capacity(simplex.len());
        for l in simplex {
            match self.labels.binary_search(l) {
                Ok(k) => ids.push(k as u32),
                Err(_) => return false,
            }
        }
        ids.sort_unstable();
        ids.dedup();
        let probe = ids;
        self.simplices
            .binary_search_by(|s| s.len().cmp(&probe.len()).then_with(|| s.cmp(&probe)))
            .is_ok()
    }

    /// Every subset of a simplex is a simplex, and `∅` is present.
    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<&Vec<u32>> = self.simplices.iter().collect();
        set.contains(&Vec::new())
            && self.simplices.iter().all(|s| {
                (0..s.len()).all(|skip| {
                    let face: Vec<u32> = s
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    set.contains(&face)
                })
            })
    }
}

/// `Δ_n` with every simplex `P(k)` for squarefree `k <= n` listed explicitly.
pub fn explicit_complex(n: u64) -> Result<SimplicialComplex> {
    explicit_complex_bounded(n, DEFAULT_EXPLICIT_BOUND)
}

pub fn explicit_complex_bounded(n: u64, bound: u64) -> Result<SimplicialComplex> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if n > bound {
        return Err(Error::ResourceLimit {
            what: "explicit complex n",
            requested: n.into(),
            limit: bound.into(),
        });
    }
    let sieve = build_sieve(n)?;
    let mut facets = Vec::new();
    for k in 1..=n {
        if sieve.moebius(k)? != 0 {
            facets.push(
                sieve
                    .factor(k)?
                    .into_iter()
                    .map(VertexLabel::Atom)
                    .collect::<Vec<_>>(),
            );
        }
    }
    // the divisors of a squarefree k <= n are squarefree and <= n, so the
    // closure adds nothing
    SimplicialComplex::from_facets(&facets)
}

/// Face counts by cardinality.
pub fn f_vector(k: &SimplicialComplex) -> FVector {
    let mut counts = vec![BigInt::from(0); (k.dim() + 2) as usize];
    for s in &k.simplices {
        counts[s.len()] += 1;
    }
    FVector::from_counts_unchecked(counts)
}

/// `χ̃(K) = sum_{σ ∈ K} (-1)^{#σ - 1}`.
pub fn euler_char(k: &SimplicialComplex) -> i64 {
    k.simplices
        .iter()
        .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

/// Barycentric subdivision: one vertex per nonempty simplex of `k`, one
/// simplex per chain `σ_0 ⊊ σ_1 ⊊ ... ⊊ σ_m`, plus `∅`.
pub fn barycentric_subdivide(k: &SimplicialComplex) -> Result<SimplicialComplex> {
    barycentric_subdivide_bounded(k, DEFAULT_MAX_SIMPLICES)
}

pub fn barycentric_subdivide_bounded(
    k: &SimplicialComplex,
    max_simplices: usize,
) -> Result<SimplicialComplex> {
    let mut parents: Vec<(VertexLabel, &Vec<u32>)> = k
        .simplices
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| {
            (
                VertexLabel::Simplex(s.iter().map(|&v| k.labels[v as usize].clone()).collect()),
                s,
            )
        })
        .collect();
    parents.sort();
    let vertex_of: HashMap<&Vec<u32>, u32> = parents
        .iter()
        .zip(0..)
        .map(|((_, s), id)| (*s, id))
        .collect();

    let mut chains: Vec<Vec<u32>> = vec![Vec::new()];
    let mut stack: Vec<u32> = Vec::new();
    for (_, top) in &parents {
        collect_chains(top, &vertex_of, &mut stack, &mut chains, max_simplices)?;
    }
    for chain in &mut chains {
        chain.sort_unstable();
    }
    let labels = parents.into_iter().map(|(l, _)| l).collect();
    Ok(SimplicialComplex::from_sorted_parts(labels, chains))
}

/// Pushes every chain whose largest element is `top` (elements below `top`
/// are drawn from its proper nonempty faces).
fn collect_chains(
    top: &[u32],
    vertex_of: &HashMap<&Vec<u32>, u32>,
    stack: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    max: usize,
) -> Result<()> {
    stack.push(vertex_of[&top.to_vec()]);
    if out.len() >= max {
        return Err(Error::ResourceLimit {
            what: "subdivision simplices",
            requested: out.len() as u128 + 1,
            limit: max as u128,
        });
    }
    out.push(stack.clone());
    let n = top.len();
    for mask in 1u32..((1 << n) - 1) {
        let face: Vec<u32> = (0..n)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| top[b])
            .collect();
        collect_chains(&face, vertex_of, stack, out, max)?;
    }
    stack.pop();
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_sieve;
    use crate::exact::transfer_matrix;

    fn atoms(v: &[u64]) -> Vec<VertexLabel> {
        v.iter().map(|&x| VertexLabel::Atom(x)).collect()
    }

    #[test]
    fn delta_six() {
        let k = explicit_complex(6).unwrap();
        let expected: Vec<Vec<VertexLabel>> = vec![
            vec![],
            atoms(&[2]),
            atoms(&[3]),
            atoms(&[5]),
            atoms(&[2, 3]),
        ];
        assert_eq!(k.simplices(), expected);
        assert!(k.is_closed());
        assert_eq!(
            explicit_complex(2).unwrap().simplices(),
            vec![vec![], atoms(&[2])]
        );
        assert!(explicit_complex(30).unwrap().contains(&atoms(&[2, 3, 5])));
        assert!(!explicit_complex(29).unwrap().contains(&atoms(&[2, 3, 5])));
        assert!(explicit_complex(10_001).is_err());
    }

    #[test]
    fn subdivision_of_delta_six() {
        let k = explicit_complex(6).unwrap();
        let sd = barycentric_subdivide(&k).unwrap();
        assert_eq!(f_vector(&sd), FVector::from_u64(&[1, 4, 2]).unwrap());
        assert_eq!(euler_char(&sd), 1);
        let s1 = VertexLabel::Simplex(atoms(&[2]));
        let s4 = VertexLabel::Simplex(atoms(&[2, 3]));
        let s3 = VertexLabel::Simplex(atoms(&[5]));
        assert!(sd.contains(&[s1.clone(), s4.clone()]));
        assert!(!sd.contains(&[s3, s4]));
        assert!(sd.is_closed());
        assert_eq!(s1.to_string(), "(2)");
    }

    #[test]
    fn point_is_fixed_up_to_relabeling() {
        let point = SimplicialComplex::from_facets(&[atoms(&[7])]).unwrap();
        let sd = barycentric_subdivide(&point).unwrap();
        assert_eq!(f_vector(&sd), f_vector(&point));
        assert_eq!(sd.vertices(), &[VertexLabel::Simplex(atoms(&[7]))]);
    }

    #[test]
    fn subdivision_of_delta_thirty() {
        let k = explicit_complex(30).unwrap();
        let sd = barycentric_subdivide(&k).unwrap();
        assert_eq!(f_vector(&sd), FVector::from_u64(&[1, 18, 20, 6]).unwrap());
        let sd2 = barycentric_subdivide(&sd).unwrap();
        let f = transfer_matrix(2);
        assert_eq!(
            f_vector(&sd2).counts(),
            f.mul_vec(f_vector(&sd).counts()).as_slice()
        );
        assert_eq!(euler_char(&sd2), 3);
    }

    #[test]
    fn explicit_matches_weight_counts() {
        let sieve = build_sieve(400).unwrap();
        for n in 1..=400 {
            let k = explicit_complex(n).unwrap();
            let s = sieve.summary(n).unwrap();
            assert_eq!(f_vector(&k), s.f_vector, "n = {n}");
            assert_eq!(k.dim(), s.dim);
            assert_eq!(euler_char(&k), s.euler_char);
        }
    }

    #[test]
    fn resource_bound() {
        let k = explicit_complex(30).unwrap();
        assert!(matches!(
            barycentric_subdivide_bounded(&k, 10),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
