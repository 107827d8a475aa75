//! Wirtinger presentations of link groups from planar diagrams.
//!
//! Arcs are maximal runs of edges joined through over-passages; each arc
//! yields one meridian generator. Every crossing contributes the relator
//! `x_over^s * x_in * x_over^-s * x_out^-1` where `s` is the crossing sign,
//! `x_in`/`x_out` are the under-strand arcs and `x_over` the over-strand arc.

use std::collections::BTreeMap;

use super::pd::PDCode;
use super::presentation::{rank_q, GroupPresentation};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct WirtingerPresentation {
    presentation: GroupPresentation,
    arc_of_edge: BTreeMap<u64, usize>,
    arc_component: Vec<usize>,
}

impl WirtingerPresentation {
    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    /// Arc index (= generator index, 0-based) carrying the given edge.
    pub fn arc_of_edge(&self, e: u64) -> Option<usize> {
        self.arc_of_edge.get(&e).copied()
    }

    /// For each generator, the link component its meridian encircles. This is
    /// the abelianization map onto Z^(number of components).
    pub fn meridian_components(&self) -> &[usize] {
        &self.arc_component
    }

    pub fn num_arcs(&self) -> usize {
        self.arc_component.len()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.parent[ri.max(rj)] = ri.min(rj);
        }
    }
}

/// Build the Wirtinger presentation of the link group of `pd`.
pub fn wirtinger_presentation(pd: &PDCode) -> Result<WirtingerPresentation> {
    // Index all edges.
    let mut edges: Vec<u64> = pd.components().iter().flatten().copied().collect();
    edges.sort_unstable();
    let edge_index: BTreeMap<u64, usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    // Merge the two over-strand edges at each crossing.
    let mut uf = UnionFind::new(edges.len());
    for &[_, b, _, d] in pd.crossings() {
        uf.union(edge_index[&b], edge_index[&d]);
    }
    // Arcs in order of their smallest edge label.
    let mut arc_index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut arc_of_edge: BTreeMap<u64, usize> = BTreeMap::new();
    let mut arc_component = vec![];
    for &e in &edges {
        let root = uf.find(edge_index[&e]);
        let next_arc = arc_index.len();
        let arc = *arc_index.entry(root).or_insert(next_arc);
        arc_of_edge.insert(e, arc);
        if arc == arc_component.len() {
            arc_component.push(pd.component_of_edge(e).expect("edge has a component"));
        }
    }
    let num_arcs = arc_component.len();
    let names = (1..=num_arcs).map(|i| format!("x{i}")).collect();
    let mut relators = vec![];
    for (i, &[a, b, c, _]) in pd.crossings().iter().enumerate() {
        let s = pd.signs()[i] as i32;
        let over = (arc_of_edge[&b] + 1) as i32;
        let input = (arc_of_edge[&a] + 1) as i32;
        let output = (arc_of_edge[&c] + 1) as i32;
        relators.push(vec![s * over, input, -s * over, -output]);
    }
    let presentation = GroupPresentation::new(names, relators)?;
    // Consistency: the abelianized relation matrix must cut the free group
    // down to exactly Z^(number of components).
    let mu = pd.num_components();
    let rank = rank_q(&presentation.abelianized_matrix());
    if num_arcs - rank != mu {
        return Err(Error::BadAbelianization {
            expected: mu,
            detail: format!("{num_arcs} generators with relation rank {rank}"),
        });
    }
    Ok(WirtingerPresentation {
        presentation,
        arc_of_edge,
        arc_component,
    })
}
