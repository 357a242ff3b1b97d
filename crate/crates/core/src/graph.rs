//! Circuit families from finite undirected multigraphs.
//!
//! Edge `i` of the graph is bound to the index `i` of `E±n`; an admissible
//! set `S` signs the edges it touches (`+` for `i`, `−` for `i*`). A set is
//! a member of `C(G)` when its edges form one cycle carrying an even number
//! of negative edges, or an edge-disjoint union of two or more cycles each
//! carrying an odd number of negative edges. Non-minimal members are dropped.

use std::collections::HashSet;
use std::fmt;

use crate::axioms::{check_bases, check_circuit_axioms};
use crate::cryptomorphism::bases_from_circuits;
use crate::error::{Error, Result};
use crate::ground::{AdmissibleSet, Kind, SetCollection};
use crate::{EXHAUSTIVE_LIMIT, MAX_N};

/// A set of edge indices `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(u32);

impl EdgeSet {
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        EdgeSet(indices.into_iter().fold(0, |m, i| {
            assert!((1..=MAX_N).contains(&i), "edge index {i} out of range");
            m | 1 << (i - 1)
        }))
    }

    pub(crate) fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, edge: usize) -> bool {
        (1..=MAX_N).contains(&edge) && self.0 & 1 << (edge - 1) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |b| self.0 & 1 << b != 0).map(|b| b + 1)
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// The signed edge set an admissible set picks out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedSigning {
    pub support: EdgeSet,
    pub negative: EdgeSet,
}

impl InducedSigning {
    pub fn from_set(s: &AdmissibleSet) -> Self {
        InducedSigning {
            support: EdgeSet(s.support_mask()),
            negative: EdgeSet(s.negative_mask()),
        }
    }

    pub fn sign(&self, edge: usize) -> Option<Sign> {
        if !self.support.contains(edge) {
            None
        } else if self.negative.contains(edge) {
            Some(Sign::Negative)
        } else {
            Some(Sign::Positive)
        }
    }
}

/// A finite undirected multigraph. Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    /// Edge `i` (1-based) is the `i`-th pair of labels.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        if let Some(dup) = vertices.iter().find(|v| !seen.insert(v.as_str())) {
            return Err(Error::DuplicateVertex(dup.clone()));
        }
        let lookup = |edge: usize, label: &str| {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::UnknownVertex {
                    edge,
                    vertex: label.to_owned(),
                })
        };
        let mut indexed = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            indexed.push((lookup(i + 1, u.as_ref())?, lookup(i + 1, v.as_ref())?));
        }
        if indexed.len() > MAX_N {
            return Err(Error::GroundTooLarge {
                n: indexed.len(),
                max: MAX_N,
            });
        }
        Ok(Multigraph {
            vertices,
            edges: indexed,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoint vertex indices of edge `edge` (1-based).
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge - 1]
    }

    fn all_edges(&self) -> u32 {
        if self.edges.len() == 32 {
            u32::MAX
        } else {
            (1u32 << self.edges.len()) - 1
        }
    }

    fn degrees(&self, edges: EdgeSet) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertices.len()];
        for e in edges.iter() {
            let (u, v) = self.endpoints(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Component label per vertex of the subgraph on `edges` (untouched vertices are singletons).
    fn components(&self, edges: EdgeSet) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in edges.iter() {
            let (u, v) = self.endpoints(e);
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
        (0..self.vertices.len())
            .map(|v| find(&mut parent, v))
            .collect()
    }

    fn is_cycle(&self, edges: EdgeSet) -> bool {
        if edges.is_empty() {
            return false;
        }
        let deg = self.degrees(edges);
        if deg.iter().any(|&d| d != 0 && d != 2) {
            return false;
        }
        let comp = self.components(edges);
        let (first, _) = self.endpoints(edges.iter().next().expect("non-empty"));
        edges
            .iter()
            .all(|e| comp[self.endpoints(e).0] == comp[first])
    }
}

/// All edge sets forming a single cycle, sorted by their index lists.
///
/// Exponential in the number of edges.
pub fn enumerate_cycles(g: &Multigraph) -> Vec<EdgeSet> {
    let mut cycles: Vec<EdgeSet> = (1..=g.all_edges() as u64)
        .map(|m| EdgeSet(m as u32))
        .filter(|&s| g.is_cycle(s))
        .collect();
    cycles.sort_by_key(|s| s.indices());
    cycles
}

/// Whether `edges` splits into edge-disjoint cycles, each with an odd number
/// of negative edges.
fn splits_into_unbalanced(edges: u32, negative: u32, cycles: &[u32]) -> bool {
    if edges == 0 {
        return true;
    }
    let lowest = edges & edges.wrapping_neg();
    cycles.iter().any(|&c| {
        c & lowest != 0
            && c & !edges == 0
            && (c & negative).count_ones() % 2 == 1
            && splits_into_unbalanced(edges & !c, negative, cycles)
    })
}

/// The circuit family `C(G)` over `E±n`, `n` = number of edges.
pub fn circuits_from_graph(g: &Multigraph) -> SetCollection {
    let n = g.edge_count();
    let cycles: Vec<u32> = enumerate_cycles(g).into_iter().map(EdgeSet::mask).collect();
    let single: HashSet<u32> = cycles.iter().copied().collect();
    let mut members: Vec<AdmissibleSet> = AdmissibleSet::all(n)
        .filter(|s| {
            let signing = InducedSigning::from_set(s);
            let (support, negative) = (signing.support.mask(), signing.negative.mask());
            if support == 0 || negative.count_ones() % 2 == 1 {
                return false;
            }
            // a single cycle never splits into two or more cycles
            single.contains(&support) || splits_into_unbalanced(support, negative, &cycles)
        })
        .collect();
    members.sort_unstable();
    let minimal: Vec<AdmissibleSet> = members
        .iter()
        .filter(|s| !members.iter().any(|t| t.is_proper_subset(s)))
        .copied()
        .collect();
    SetCollection::new(n, Kind::Circuits, minimal).expect("sets built over n")
}

/// Independence in the signed-graph matroid: every component of the
/// subgraph on `edges` is a tree or has exactly one cycle, and that cycle
/// has negative sign product.
pub fn signed_independent(g: &Multigraph, signs: &[Sign], edges: EdgeSet) -> Result<bool> {
    if signs.len() != g.edge_count() {
        return Err(Error::SigningLength {
            expected: g.edge_count(),
            found: signs.len(),
        });
    }
    if edges.mask() & !g.all_edges() != 0 {
        return Ok(false);
    }
    let comp = g.components(edges);
    let vcount = g.vertex_count();
    let mut edge_count = vec![0usize; vcount];
    let mut vertex_count = vec![0usize; vcount];
    for &c in &comp {
        vertex_count[c] += 1;
    }
    for e in edges.iter() {
        edge_count[comp[g.endpoints(e).0]] += 1;
    }
    if (0..vcount).any(|c| edge_count[c] > vertex_count[c]) {
        return Ok(false);
    }

    // strip pendant edges; what survives is one cycle per unicyclic component
    let mut remaining = edges.mask();
    let mut deg = g.degrees(edges);
    while let Some(leaf_edge) = EdgeSet(remaining).iter().find(|&e| {
        let (u, v) = g.endpoints(e);
        u != v && (deg[u] == 1 || deg[v] == 1)
    }) {
        let (u, v) = g.endpoints(leaf_edge);
        deg[u] -= 1;
        deg[v] -= 1;
        remaining &= !(1 << (leaf_edge - 1));
    }
    let mut negative_parity = vec![false; vcount];
    for e in EdgeSet(remaining).iter() {
        if signs[e - 1] == Sign::Negative {
            let c = comp[g.endpoints(e).0];
            negative_parity[c] = !negative_parity[c];
        }
    }
    Ok((0..vcount)
        .filter(|&c| edge_count[c] > 0 && edge_count[c] == vertex_count[c])
        .all(|c| negative_parity[c]))
}

/// `C(G)` together with its bases, both verified by the checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMatroid {
    pub circuits: SetCollection,
    pub bases: SetCollection,
}

impl GraphMatroid {
    pub fn rank(&self) -> usize {
        self.bases.max_cardinality().unwrap_or(0)
    }
}

/// Builds `C(G)` and its bases, failing loudly if either SC1–SC4 or the
/// Maximality Property does not hold.
pub fn matroid_from_graph(g: &Multigraph) -> Result<GraphMatroid> {
    let n = g.edge_count();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::GuardExceeded {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let circuits = circuits_from_graph(g);
    let report = check_circuit_axioms(&circuits);
    if let Some(v) = report.first_failure() {
        return Err(Error::Construction(Box::new(v.clone())));
    }
    let bases = bases_from_circuits(&circuits)?;
    let verdict = check_bases(&bases)?;
    if !verdict.passed() {
        return Err(Error::Construction(Box::new(verdict)));
    }
    Ok(GraphMatroid { circuits, bases })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> Multigraph {
        Multigraph::new(vertices.iter().copied(), edges.iter().copied()).unwrap()
    }

    fn triangle() -> Multigraph {
        graph(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
    }

    fn two_loops() -> Multigraph {
        graph(&["a", "b"], &[("a", "a"), ("b", "b")])
    }

    fn theta() -> Multigraph {
        graph(&["a", "b"], &[("a", "b"), ("a", "b"), ("a", "b")])
    }

    fn values(c: &SetCollection) -> Vec<Vec<i32>> {
        c.iter().map(AdmissibleSet::values).collect()
    }

    #[test]
    fn cycle_examples() {
        let idx = |g: &Multigraph| -> Vec<Vec<usize>> {
            enumerate_cycles(g)
                .into_iter()
                .map(EdgeSet::indices)
                .collect()
        };
        assert_eq!(idx(&triangle()), vec![vec![1, 2, 3]]);
        assert_eq!(idx(&two_loops()), vec![vec![1], vec![2]]);
        assert_eq!(idx(&theta()), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let path = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert!(idx(&path).is_empty());
        // two triangles sharing a vertex: their union has a degree-4 vertex
        let bowtie = graph(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b"),
                ("b", "c"),
                ("a", "c"),
                ("a", "d"),
                ("d", "e"),
                ("a", "e"),
            ],
        );
        assert_eq!(idx(&bowtie), vec![vec![1, 2, 3], vec![4, 5, 6]]);
    }

    #[test]
    fn graph_circuit_examples() {
        assert_eq!(
            values(&circuits_from_graph(&triangle())),
            vec![
                vec![1, 2, 3],
                vec![1, -2, -3],
                vec![-1, 2, -3],
                vec![-1, -2, 3]
            ]
        );
        assert_eq!(
            values(&circuits_from_graph(&two_loops())),
            vec![vec![1], vec![-1, -2], vec![2]]
        );
        let path = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert!(circuits_from_graph(&path).is_empty());
    }

    #[test]
    fn signed_independence_examples() {
        let g = triangle();
        let all = EdgeSet::from_indices([1, 2, 3]);
        let plus = [Sign::Positive; 3];
        assert_eq!(signed_independent(&g, &plus, all), Ok(false));
        let one_minus = [Sign::Negative, Sign::Positive, Sign::Positive];
        assert_eq!(signed_independent(&g, &one_minus, all), Ok(true));
        assert_eq!(
            signed_independent(&g, &plus, EdgeSet::from_indices([1, 2])),
            Ok(true)
        );
        assert!(signed_independent(&g, &plus[..2], all).is_err());
    }

    #[test]
    fn signed_independence_with_loops_and_pendants() {
        // loop on a with a pendant edge a-b
        let g = graph(&["a", "b"], &[("a", "a"), ("a", "b")]);
        let f = EdgeSet::from_indices([1, 2]);
        assert_eq!(
            signed_independent(&g, &[Sign::Negative, Sign::Positive], f),
            Ok(true)
        );
        assert_eq!(
            signed_independent(&g, &[Sign::Positive, Sign::Negative], f),
            Ok(false)
        );
        // two cycles in one component
        let t = theta();
        assert_eq!(
            signed_independent(&t, &[Sign::Negative; 3], EdgeSet::from_indices([1, 2, 3])),
            Ok(false)
        );
    }

    #[test]
    fn matroid_examples() {
        let m = matroid_from_graph(&triangle()).unwrap();
        assert_eq!(
            values(&m.bases),
            vec![
                vec![1, 2, -3],
                vec![1, -2, 3],
                vec![-1, 2, 3],
                vec![-1, -2, -3]
            ]
        );
        assert_eq!(m.rank(), 3);

        let m = matroid_from_graph(&two_loops()).unwrap();
        assert_eq!(values(&m.bases), vec![vec![-1], vec![-2]]);

        let digon = graph(&["a", "b"], &[("a", "b"), ("a", "b")]);
        let m = matroid_from_graph(&digon).unwrap();
        assert_eq!(values(&m.circuits), vec![vec![1, 2], vec![-1, -2]]);
        assert_eq!(values(&m.bases), vec![vec![1, -2], vec![-1, 2]]);
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(matches!(
            Multigraph::new(["a"], [("a", "b")]),
            Err(Error::UnknownVertex { edge: 1, .. })
        ));
        assert!(matches!(
            Multigraph::new(["a", "a"], Vec::<(&str, &str)>::new()),
            Err(Error::DuplicateVertex(_))
        ));
        let big = Multigraph::new(["a"], vec![("a", "a"); 11]).unwrap();
        assert!(matches!(
            matroid_from_graph(&big),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
