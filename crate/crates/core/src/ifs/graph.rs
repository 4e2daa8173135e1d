//! Simple undirected graphs and the generators used throughout: truncated
//! homogeneous trees, cycles, paths, complete graphs.

use super::IfsError;
use crate::matrix::IntMatrix;
use serde::{Deserialize, Serialize};

/// Undirected simple graph with a dense 0/1 adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: IntMatrix,
    degrees: Vec<usize>,
}

impl Graph {
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, IfsError> {
        if vertex_count == 0 {
            return Err(IfsError::EmptyGraph);
        }
        let mut adjacency = IntMatrix::zeros(vertex_count, vertex_count);
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(IfsError::VertexOutOfRange { vertex: u.max(v), vertex_count });
            }
            if u == v {
                return Err(IfsError::SelfLoop(u));
            }
            adjacency[(u, v)] = 1;
            adjacency[(v, u)] = 1;
        }
        Ok(Self::from_adjacency(adjacency))
    }

    fn from_adjacency(adjacency: IntMatrix) -> Self {
        let degrees =
            (0..adjacency.rows()).map(|r| adjacency.row_sum(r) as usize).collect();
        Self { adjacency, degrees }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.rows()
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.row(v).iter().enumerate().filter(|(_, &a)| a == 1).map(|(u, _)| u)
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    /// Directed arcs (u, v), lexicographically ordered.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut arcs = Vec::with_capacity(2 * self.edge_count());
        for u in 0..n {
            for v in self.neighbors(u) {
                arcs.push((u, v));
            }
        }
        arcs
    }
}

/// Homogeneous tree of the given degree, truncated at `depth` (vertices at
/// distance ≤ depth from the root). BFS vertex order: the root is 0 and
/// children are appended level by level.
pub fn truncated_tree(degree: usize, depth: usize) -> Result<Graph, IfsError> {
    if degree == 0 {
        return Err(IfsError::BadGenerator("tree degree must be >= 1".into()));
    }
    let mut edges = Vec::new();
    let mut next = 1usize;
    let mut frontier = vec![0usize];
    for level in 0..depth {
        let mut new_frontier = Vec::new();
        for &v in &frontier {
            let children = if level == 0 { degree } else { degree - 1 };
            for _ in 0..children {
                edges.push((v, next));
                new_frontier.push(next);
                next += 1;
            }
        }
        frontier = new_frontier;
    }
    Graph::from_edges(next, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, IfsError> {
    if n < 3 {
        return Err(IfsError::BadGenerator("cycle needs n >= 3".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph, IfsError> {
    if n == 0 {
        return Err(IfsError::EmptyGraph);
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, IfsError> {
    if n == 0 {
        return Err(IfsError::EmptyGraph);
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `{"vertex_count": n, "edges": [[u, v], ...]}` or a generator shorthand
/// such as `{"family": "tree", "degree": 3, "depth": 4}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphJson {
    Explicit { vertex_count: usize, edges: Vec<(usize, usize)> },
    Generator(GeneratorJson),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum GeneratorJson {
    Tree { degree: usize, depth: usize },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
}

impl GraphJson {
    pub fn build(&self) -> Result<Graph, IfsError> {
        match self {
            GraphJson::Explicit { vertex_count, edges } => Graph::from_edges(*vertex_count, edges),
            GraphJson::Generator(g) => g.build(),
        }
    }

    pub fn from_graph(graph: &Graph) -> Self {
        let edges = graph
            .arcs()
            .into_iter()
            .filter(|&(u, v)| u < v)
            .collect();
        GraphJson::Explicit { vertex_count: graph.vertex_count(), edges }
    }
}

impl GeneratorJson {
    pub fn build(&self) -> Result<Graph, IfsError> {
        match *self {
            GeneratorJson::Tree { degree, depth } => truncated_tree(degree, depth),
            GeneratorJson::Cycle { n } => cycle(n),
            GeneratorJson::Path { n } => path(n),
            GeneratorJson::Complete { n } => complete(n),
        }
    }
}
