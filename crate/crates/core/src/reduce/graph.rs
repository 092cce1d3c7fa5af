use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `1..=n`. Edge `j` (from 1) joins
/// `l_j < r_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Endpoints may be given in either order; they are stored as `(min, max)`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (a, b) in edges {
            let (l, r) = (a.min(b), a.max(b));
            if l == 0 || r > n {
                return Err(Error::invalid(format!(
                    "edge ({a},{b}) leaves vertex range 1..={n}"
                )));
            }
            if l == r {
                return Err(Error::invalid(format!("self-loop at vertex {l}")));
            }
            if !seen.insert((l, r)) {
                return Err(Error::invalid(format!("duplicate edge ({l},{r})")));
            }
            out.push((l, r));
        }
        Ok(Graph { n, edges: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(l_j, r_j)`; edge `j` is at index `j − 1`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(l, r)| l == v || r == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for &(l, r) in &self.edges {
            deg[l] += 1;
            deg[r] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Fails with the first vertex of degree above 3.
    pub fn check_max_degree_3(&self) -> Result<()> {
        match self.degrees().iter().enumerate().find(|&(_, &d)| d > 3) {
            Some((vertex, &degree)) => Err(Error::DegreeViolation { vertex, degree }),
            None => Ok(()),
        }
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(l, r)| match (l == v, r == v) {
                (true, _) => Some(r),
                (_, true) => Some(l),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn incidence(&self) -> VertexIncidence {
        let mut left = vec![Vec::new(); self.n];
        let mut right = vec![Vec::new(); self.n];
        for (j, &(l, r)) in self.edges.iter().enumerate() {
            left[l - 1].push(j + 1);
            right[r - 1].push(j + 1);
        }
        VertexIncidence { left, right }
    }

    pub fn is_independent(&self, vertices: &BTreeSet<usize>) -> bool {
        self.edges
            .iter()
            .all(|(l, r)| !(vertices.contains(l) && vertices.contains(r)))
    }
}

/// Per vertex `i`, the edges with `l_j = i` and those with `r_j = i`, each in
/// ascending edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexIncidence {
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl VertexIncidence {
    /// Edges whose smaller endpoint is `i`.
    pub fn left_of(&self, i: usize) -> &[usize] {
        &self.left[i - 1]
    }

    /// Edges whose larger endpoint is `i`.
    pub fn right_of(&self, i: usize) -> &[usize] {
        &self.right[i - 1]
    }
}

/// An independent vertex set, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IndependentSet(BTreeSet<usize>);

impl IndependentSet {
    pub fn new(graph: &Graph, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = vertices.into_iter().collect();
        if let Some(&v) = set.iter().find(|&&v| v == 0 || v > graph.vertex_count()) {
            return Err(Error::invalid(format!("vertex {v} is not in the graph")));
        }
        if let Some(&(l, r)) = graph
            .edges()
            .iter()
            .find(|(l, r)| set.contains(l) && set.contains(r))
        {
            return Err(Error::invalid(format!(
                "vertices {l} and {r} are adjacent; the set is not independent"
            )));
        }
        Ok(IndependentSet(set))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.0
    }
}
