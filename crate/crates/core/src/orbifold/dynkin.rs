//! Resolution graphs of surface quotient singularities with a graph automorphism.

use std::collections::BTreeSet;

use serde::Serialize;

use super::OrbifoldError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DynkinGraph {
    pub name: String,
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
    /// Image of each node.
    pub automorphism: Vec<usize>,
}

impl DynkinGraph {
    pub fn new(
        name: impl Into<String>,
        nodes: usize,
        edges: Vec<(usize, usize)>,
        automorphism: Vec<usize>,
    ) -> Result<Self, OrbifoldError> {
        let name = name.into();
        let bad = |msg: &str| Err(OrbifoldError::BadGraph(format!("{name}: {msg}")));
        if automorphism.len() != nodes
            || automorphism.iter().collect::<BTreeSet<_>>().len() != nodes
            || automorphism.iter().any(|&v| v >= nodes)
        {
            return bad("automorphism is not a permutation of the nodes");
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let set: BTreeSet<(usize, usize)> = edges.iter().map(|&(a, b)| key(a, b)).collect();
        if edges
            .iter()
            .any(|&(a, b)| a >= nodes || b >= nodes || a == b)
        {
            return bad("edge endpoint out of range");
        }
        if edges
            .iter()
            .any(|&(a, b)| !set.contains(&key(automorphism[a], automorphism[b])))
        {
            return bad("automorphism does not preserve the edges");
        }
        Ok(Self {
            name,
            nodes,
            edges,
            automorphism,
        })
    }

    /// Chain A_k; `reverse` flips it end to end.
    pub fn a_chain(k: usize, reverse: bool) -> Self {
        let edges = (1..k).map(|i| (i - 1, i)).collect();
        let aut = (0..k)
            .map(|i| if reverse { k - 1 - i } else { i })
            .collect();
        let tag = if reverse { "reversal" } else { "identity" };
        Self::new(format!("A{k}/{tag}"), k, edges, aut).expect("valid chain")
    }

    /// D_r: chain 0..r-3 with two leaves r-2, r-1 on node r-3; `swap` exchanges
    /// the leaves and fixes the chain.
    pub fn d_graph(r: usize, swap: bool) -> Self {
        assert!(r >= 3);
        let mut edges: Vec<(usize, usize)> = (1..r - 2).map(|i| (i - 1, i)).collect();
        edges.push((r - 3, r - 2));
        edges.push((r - 3, r - 1));
        let mut aut: Vec<usize> = (0..r).collect();
        if swap {
            aut.swap(r - 2, r - 1);
        }
        let tag = if swap { "leaf-swap" } else { "identity" };
        Self::new(format!("D{r}/{tag}"), r, edges, aut).expect("valid D graph")
    }

    /// D_4 with the order-3 rotation of its three legs.
    pub fn d4_triality() -> Self {
        Self::new(
            "D4/triality",
            4,
            vec![(0, 1), (0, 2), (0, 3)],
            vec![0, 2, 3, 1],
        )
        .expect("valid D4")
    }

    /// E_6: chain 0-1-2-3-4 with node 5 on 2; `flip` reverses the chain.
    pub fn e6(flip: bool) -> Self {
        let aut = if flip {
            vec![4, 3, 2, 1, 0, 5]
        } else {
            (0..6).collect()
        };
        let tag = if flip { "flip" } else { "identity" };
        Self::new(
            format!("E6/{tag}"),
            6,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
            aut,
        )
        .expect("valid E6")
    }

    pub fn fixed_nodes(&self) -> usize {
        (0..self.nodes)
            .filter(|&v| self.automorphism[v] == v)
            .count()
    }
}

/// Trace on H^0 ⊕ H^2 of the minimal resolution: 1 + number of fixed curves.
pub fn dynkin_lefschetz(g: &DynkinGraph) -> usize {
    1 + g.fixed_nodes()
}
