//! Planar diagram codes for oriented links.
//!
//! A crossing is a tuple `(a, b, c, d)` listing the four incident edge labels
//! counterclockwise, starting from the incoming under-edge `a`; the
//! under-strand leaves at `c`. Components list their edge labels in traversal
//! order (cyclically). Edges are split at every crossing passage, so each
//! label on a component that meets crossings occurs exactly twice in the
//! crossing list. A component consisting of a single label that occurs in no
//! crossing is a crossing-free circle.
//!
//! The sign of a crossing is `+1` when the over-strand runs `d -> b` and `-1`
//! when it runs `b -> d`. Over-strand directions are recovered globally by
//! matching each component's edge transitions to the unique crossing where
//! they occur; diagrams whose data admit two matchings are rejected as
//! ambiguous.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PdRepr", into = "PdRepr")]
pub struct PDCode {
    crossings: Vec<[u64; 4]>,
    components: Vec<Vec<u64>>,
    signs: Vec<i8>,
    edge_component: BTreeMap<u64, usize>,
}

#[derive(Serialize, Deserialize)]
struct PdRepr {
    crossings: Vec<[u64; 4]>,
    components: Vec<Vec<u64>>,
}

impl TryFrom<PdRepr> for PDCode {
    type Error = Error;
    fn try_from(r: PdRepr) -> Result<Self> {
        PDCode::new(r.crossings, r.components)
    }
}

impl From<PDCode> for PdRepr {
    fn from(pd: PDCode) -> Self {
        PdRepr {
            crossings: pd.crossings,
            components: pd.components,
        }
    }
}

impl PDCode {
    pub fn new(crossings: Vec<[u64; 4]>, components: Vec<Vec<u64>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::BadPd("no components".into()));
        }
        let mut edge_component: BTreeMap<u64, usize> = BTreeMap::new();
        for (ci, comp) in components.iter().enumerate() {
            if comp.is_empty() {
                return Err(Error::BadPd(format!("component {ci} is empty")));
            }
            for &e in comp {
                if edge_component.insert(e, ci).is_some() {
                    return Err(Error::BadPd(format!("edge label {e} listed twice")));
                }
            }
        }
        // Successor along the (cyclic) component traversal.
        let mut next: BTreeMap<u64, u64> = BTreeMap::new();
        for comp in &components {
            let m = comp.len();
            for i in 0..m {
                next.insert(comp[i], comp[(i + 1) % m]);
            }
        }
        // Occurrence counts: every edge of a component that meets crossings
        // occurs exactly twice; crossing-free circles are singleton components.
        let mut occurrences: BTreeMap<u64, usize> = BTreeMap::new();
        for x in &crossings {
            for &e in x {
                if !edge_component.contains_key(&e) {
                    return Err(Error::BadPd(format!(
                        "crossing references unknown edge {e}"
                    )));
                }
                *occurrences.entry(e).or_insert(0) += 1;
            }
        }
        for comp in &components {
            if comp.len() == 1 {
                let e = comp[0];
                if occurrences.get(&e).copied().unwrap_or(0) != 0 {
                    return Err(Error::BadPd(format!(
                        "single-edge component through a crossing (edge {e})"
                    )));
                }
            } else {
                for &e in comp {
                    let n = occurrences.get(&e).copied().unwrap_or(0);
                    if n != 2 {
                        return Err(Error::BadPd(format!(
                            "edge {e} occurs {n} times in crossings (expected 2)"
                        )));
                    }
                }
            }
        }
        // Consume each component transition exactly once: the under-pass of a
        // crossing is forced to be a -> c; the over-pass is d -> b or b -> d,
        // resolved against the remaining unconsumed transitions.
        let mut remaining: BTreeMap<(u64, u64), usize> = BTreeMap::new();
        for comp in &components {
            if comp.len() < 2 {
                continue;
            }
            let m = comp.len();
            for i in 0..m {
                *remaining.entry((comp[i], comp[(i + 1) % m])).or_insert(0) += 1;
            }
        }
        for (i, &[a, _, c, _]) in crossings.iter().enumerate() {
            if next.get(&a) != Some(&c) {
                return Err(Error::BadPd(format!(
                    "crossing {i}: under-strand {a} does not continue to {c}"
                )));
            }
            let slot = remaining.get_mut(&(a, c)).filter(|n| **n > 0);
            match slot {
                Some(n) => *n -= 1,
                None => {
                    return Err(Error::BadPd(format!(
                        "crossing {i}: under transition {a}->{c} unavailable"
                    )))
                }
            }
        }
        let mut signs: Vec<Option<i8>> = vec![None; crossings.len()];
        loop {
            let mut progressed = false;
            for (i, &[_, b, _, d]) in crossings.iter().enumerate() {
                if signs[i].is_some() {
                    continue;
                }
                let db = remaining.get(&(d, b)).copied().unwrap_or(0) > 0;
                let bd = remaining.get(&(b, d)).copied().unwrap_or(0) > 0;
                let sign = match (db, bd) {
                    (true, false) => 1,
                    (false, true) => -1,
                    (false, false) => {
                        return Err(Error::BadPd(format!(
                            "crossing {i}: no over transition available for ({b}, {d})"
                        )))
                    }
                    (true, true) => continue,
                };
                let key = if sign == 1 { (d, b) } else { (b, d) };
                *remaining.get_mut(&key).unwrap() -= 1;
                signs[i] = Some(sign);
                progressed = true;
            }
            if signs.iter().all(|s| s.is_some()) {
                break;
            }
            if !progressed {
                let i = signs.iter().position(|s| s.is_none()).unwrap();
                return Err(Error::BadPd(format!(
                    "crossing {i}: over-strand orientation is ambiguous"
                )));
            }
        }
        if remaining.values().any(|&n| n > 0) {
            return Err(Error::BadPd(
                "component transitions not all realized by crossings".into(),
            ));
        }
        let signs = signs.into_iter().map(|s| s.unwrap()).collect();
        Ok(PDCode {
            crossings,
            components,
            signs,
            edge_component,
        })
    }

    /// The crossing-free unknot diagram.
    pub fn unknot() -> Self {
        PDCode::new(vec![], vec![vec![1]]).expect("unknot diagram is valid")
    }

    /// Positive trefoil: three positive crossings.
    pub fn trefoil() -> Self {
        PDCode::new(
            vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]],
            vec![vec![1, 2, 3, 4, 5, 6]],
        )
        .expect("trefoil diagram is valid")
    }

    /// Figure-eight knot (amphichiral, writhe 0).
    pub fn figure_eight() -> Self {
        PDCode::new(
            vec![[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
            vec![vec![1, 2, 3, 4, 5, 6, 7, 8]],
        )
        .expect("figure-eight diagram is valid")
    }

    /// Hopf link with linking number +1.
    pub fn positive_hopf() -> Self {
        PDCode::new(
            vec![[1, 3, 2, 4], [3, 1, 4, 2]],
            vec![vec![1, 2], vec![3, 4]],
        )
        .expect("hopf diagram is valid")
    }

    /// Hopf link with linking number -1.
    pub fn negative_hopf() -> Self {
        PDCode::new(
            vec![[1, 4, 2, 3], [3, 2, 4, 1]],
            vec![vec![1, 2], vec![3, 4]],
        )
        .expect("hopf diagram is valid")
    }

    pub fn crossings(&self) -> &[[u64; 4]] {
        &self.crossings
    }

    pub fn components(&self) -> &[Vec<u64>] {
        &self.components
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    /// Crossing signs, aligned with `crossings()`.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn component_of_edge(&self, e: u64) -> Option<usize> {
        self.edge_component.get(&e).copied()
    }

    /// Linking number of two distinct components: half the signed count of
    /// crossings between them.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64> {
        let n = self.components.len();
        if i == j || i >= n || j >= n {
            return Err(Error::BadInput(format!(
                "linking number needs two distinct components < {n}, got {i}, {j}"
            )));
        }
        let mut total = 0i64;
        for (x, &[a, b, _, _]) in self.crossings.iter().enumerate() {
            let under = self.edge_component[&a];
            let over = self.edge_component[&b];
            if (under == i && over == j) || (under == j && over == i) {
                total += self.signs[x] as i64;
            }
        }
        if total % 2 != 0 {
            return Err(Error::Inconsistent(
                "odd signed crossing count between components".into(),
            ));
        }
        Ok(total / 2)
    }

    /// Symmetric matrix of pairwise linking numbers (zero diagonal).
    pub fn linking_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.components.len();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let l = self.linking_number(i, j)?;
                m[i][j] = l;
                m[j][i] = l;
            }
        }
        Ok(m)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::BadPd(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("PD code serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_links_are_signed_correctly() {
        let pos = PDCode::positive_hopf();
        assert_eq!(pos.signs(), &[1, 1]);
        assert_eq!(pos.linking_number(0, 1).unwrap(), 1);
        assert_eq!(pos.writhe(), 2);
        let neg = PDCode::negative_hopf();
        assert_eq!(neg.signs(), &[-1, -1]);
        assert_eq!(neg.linking_number(0, 1).unwrap(), -1);
    }

    #[test]
    fn trefoil_is_positive() {
        let t = PDCode::trefoil();
        assert_eq!(t.signs(), &[1, 1, 1]);
        assert_eq!(t.writhe(), 3);
        assert!(t.is_knot());
    }

    #[test]
    fn figure_eight_has_zero_writhe() {
        let k = PDCode::figure_eight();
        assert_eq!(k.writhe(), 0);
        assert_eq!(k.num_crossings(), 4);
        let plus: i64 = k.signs().iter().filter(|&&s| s == 1).count() as i64;
        assert_eq!(plus, 2);
    }

    #[test]
    fn unknot_is_a_free_circle() {
        let u = PDCode::unknot();
        assert_eq!(u.num_crossings(), 0);
        assert!(u.is_knot());
    }

    #[test]
    fn rejects_malformed_diagrams() {
        // duplicate label across components
        assert!(PDCode::new(vec![], vec![vec![1], vec![1]]).is_err());
        // unknown edge in crossing
        assert!(PDCode::new(vec![[1, 9, 2, 9]], vec![vec![1, 2]]).is_err());
        // under-strand discontinuity: a and c swapped in one crossing
        let r = PDCode::new(
            vec![[5, 2, 4, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
            vec![vec![1, 2, 3, 4, 5, 6, 7, 8]],
        );
        match r {
            Err(Error::BadPd(msg)) => assert!(msg.contains("under-strand"), "{msg}"),
            other => panic!("expected under-strand error, got {other:?}"),
        }
        // label occurring once
        assert!(PDCode::new(vec![[1, 3, 2, 4]], vec![vec![1, 2], vec![3, 4]]).is_err());
        // crossing through a singleton component
        assert!(PDCode::new(vec![[1, 2, 1, 2]], vec![vec![1], vec![2]]).is_err());
    }

    #[test]
    fn opposite_clasp_is_valid_with_zero_linking() {
        // Two crossings of opposite sign between the components: a
        // Reidemeister-II pair, linking number zero.
        let pd = PDCode::new(
            vec![[1, 3, 2, 4], [3, 2, 4, 1]],
            vec![vec![1, 2], vec![3, 4]],
        )
        .unwrap();
        let mut s = pd.signs().to_vec();
        s.sort_unstable();
        assert_eq!(s, vec![-1, 1]);
        assert_eq!(pd.linking_number(0, 1).unwrap(), 0);
    }

    #[test]
    fn rejects_ambiguous_over_orientation() {
        // Both crossings carry the over pair {3,4} and both transitions 3->4,
        // 4->3 remain, so the sign assignment is underdetermined.
        let r = PDCode::new(
            vec![[1, 3, 2, 4], [2, 4, 1, 3]],
            vec![vec![1, 2], vec![3, 4]],
        );
        match r {
            Err(Error::BadPd(msg)) => assert!(msg.contains("ambiguous"), "{msg}"),
            other => panic!("expected ambiguity error, got {other:?}"),
        }
    }

    #[test]
    fn kink_diagram_resolves() {
        // One-crossing unknot: the over-strand direction is forced because the
        // under transition already consumed 2->1.
        let pd = PDCode::new(vec![[2, 1, 1, 2]], vec![vec![1, 2]]).unwrap();
        assert_eq!(pd.signs(), &[-1]);
        assert_eq!(pd.writhe(), -1);
    }

    #[test]
    fn json_round_trip() {
        let pd = PDCode::positive_hopf();
        let s = pd.to_json();
        assert_eq!(
            s,
            r#"{"crossings":[[1,3,2,4],[3,1,4,2]],"components":[[1,2],[3,4]]}"#
        );
        let back = PDCode::from_json(&s).unwrap();
        assert_eq!(back, pd);
        assert!(PDCode::from_json(r#"{"crossings":[[1,1,1,1]],"components":[[1]]}"#).is_err());
    }
}
