//! Simply-laced generalized Cartan matrices and recognition of finite type.

use std::fmt;

use serde::Serialize;

/// Generalized Cartan matrix: `a_ii = 2`, `a_ij ∈ {0, −1}` off the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanGraph {
    pub a: Vec<Vec<i32>>,
}

/// Finite-type component names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(m) => write!(f, "A_{m}"),
            DynkinType::D(m) => write!(f, "D_{m}"),
            DynkinType::E(m) => write!(f, "E_{m}"),
        }
    }
}

impl CartanGraph {
    /// Builds the matrix of a simple graph given as an adjacency relation.
    pub fn from_adjacency(adj: &[Vec<bool>]) -> Self {
        let k = adj.len();
        let a = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| match (i == j, adj[i][j]) {
                        (true, _) => 2,
                        (false, true) => -1,
                        (false, false) => 0,
                    })
                    .collect()
            })
            .collect();
        CartanGraph { a }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.a[i][j] != 0
    }

    pub fn edge_count(&self) -> usize {
        let k = self.len();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent(i, j))
            .count()
    }

    /// Connected components as sorted node lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let k = self.len();
        let mut comp = vec![usize::MAX; k];
        let mut out = Vec::new();
        for start in 0..k {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut nodes = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                nodes.push(v);
                for w in 0..k {
                    if self.adjacent(v, w) && comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            nodes.sort_unstable();
            out.push(nodes);
        }
        out
    }

    /// Type of one connected component, if it is finite.
    pub fn component_type(&self, nodes: &[usize]) -> Option<DynkinType> {
        let k = nodes.len();
        let deg = |v: usize| nodes.iter().filter(|&&w| self.adjacent(v, w)).count();
        let edges: usize = nodes.iter().map(|&v| deg(v)).sum::<usize>() / 2;
        if edges + 1 != k {
            return None;
        }
        let branch: Vec<usize> = nodes.iter().copied().filter(|&v| deg(v) >= 3).collect();
        match branch.as_slice() {
            [] => Some(DynkinType::A(k)),
            [c] if deg(*c) == 3 => {
                let mut legs: Vec<usize> = nodes
                    .iter()
                    .copied()
                    .filter(|&w| self.adjacent(*c, w))
                    .map(|w| self.leg_length(*c, w))
                    .collect();
                legs.sort_unstable();
                match legs.as_slice() {
                    [1, 1, _] => Some(DynkinType::D(k)),
                    [1, 2, 2..=4] => Some(DynkinType::E(k)),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    /// Number of nodes on the path leaving `center` through `first`.
    fn leg_length(&self, center: usize, first: usize) -> usize {
        let (mut prev, mut cur, mut len) = (center, first, 1);
        loop {
            let next: Vec<usize> = (0..self.len())
                .filter(|&w| w != prev && self.adjacent(cur, w))
                .collect();
            match next.as_slice() {
                [w] => {
                    prev = cur;
                    cur = *w;
                    len += 1;
                }
                _ => return len,
            }
        }
    }

    /// Component types, or `None` if some component is not of finite type.
    pub fn finite_types(&self) -> Option<Vec<DynkinType>> {
        self.components()
            .iter()
            .map(|c| self.component_type(c))
            .collect()
    }

    /// Every component is `A_m`, `D_m` or `E_{6,7,8}`.
    pub fn is_finite_type(&self) -> bool {
        self.finite_types().is_some()
    }
}

/// Positive definiteness of a symmetric integer matrix via leading
/// principal minors, each computed exactly by fraction-free elimination.
pub fn is_positive_definite(m: &[Vec<i32>]) -> bool {
    (1..=m.len()).all(|k| {
        let sub: Vec<Vec<i128>> = m[..k]
            .iter()
            .map(|row| row[..k].iter().map(|&x| x as i128).collect())
            .collect();
        bareiss_det(sub) > 0
    })
}

/// Exact determinant by the Bareiss algorithm.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(k: usize, edges: &[(usize, usize)]) -> CartanGraph {
        let mut adj = vec![vec![false; k]; k];
        for &(i, j) in edges {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        CartanGraph::from_adjacency(&adj)
    }

    #[test]
    fn catalog_examples() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(g.finite_types(), Some(vec![DynkinType::A(3)]));
        assert!(!graph(3, &[(0, 1), (1, 2), (0, 2)]).is_finite_type());
        let d4 = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(d4.finite_types(), Some(vec![DynkinType::D(4)]));
        let e8 = graph(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]);
        assert_eq!(e8.finite_types(), Some(vec![DynkinType::E(8)]));
        let e9 = graph(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)]);
        assert!(!e9.is_finite_type());
        let d4_tilde = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert!(!d4_tilde.is_finite_type());
        assert!(graph(0, &[]).is_finite_type());
    }

    #[test]
    fn determinants() {
        assert_eq!(bareiss_det(vec![vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(bareiss_det(vec![vec![0, 1], vec![1, 0]]), -1);
        let a3 = graph(3, &[(0, 1), (1, 2)]);
        assert!(is_positive_definite(&a3.a));
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(!is_positive_definite(&tri.a));
    }
}
