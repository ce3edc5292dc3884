//! Standard Dynkin diagrams of simple Lie algebras, used to check that the
//! white part of a catalog diagram has the recorded type.

use crate::diagram::{Diagram, NodeId};
use crate::error::{Error, Result};
use crate::iso::{are_isomorphic, LabeledGraph};

/// Connected standard diagrams making up a type such as `"D5"`. Low-rank
/// coincidences are unfolded: `D2 = A1 + A1`, `D3 = A3`, `B1 = C1 = A1`.
pub fn standard_components(name: &str) -> Result<Vec<LabeledGraph<()>>> {
    let bad = || Error::InvalidParams(format!("unknown Dynkin type {name:?}"));
    let (letter, rank) = name.split_at(1);
    let rank: usize = rank.parse().map_err(|_| bad())?;
    let chain = |n: usize| {
        let mut g = LabeledGraph::new(vec![(); n]);
        for i in 1..n {
            g.connect(i - 1, i, 1, None);
        }
        g
    };
    let graphs = match (letter, rank) {
        (_, 0) => vec![],
        ("A", n) => vec![chain(n)],
        ("B" | "C", 1) => vec![chain(1)],
        ("B", n) => {
            // short simple root at the end
            let mut g = chain(n - 1);
            g = append(g, n - 2, 2, Some(n - 2));
            vec![g]
        }
        ("C", n) => {
            // long simple root at the end
            let mut g = chain(n - 1);
            g = append(g, n - 2, 2, Some(n - 1));
            vec![g]
        }
        ("D", 2) => vec![chain(1), chain(1)],
        ("D", 3) => vec![chain(3)],
        ("D", n) => {
            let mut g = chain(n - 1);
            g = append(g, n - 3, 1, None);
            vec![g]
        }
        ("G", 2) => {
            let mut g = LabeledGraph::new(vec![(); 2]);
            g.connect(0, 1, 3, Some(0));
            vec![g]
        }
        ("F", 4) => {
            let mut g = chain(2);
            g = append(g, 1, 2, Some(1));
            g = append(g, 2, 1, None);
            vec![g]
        }
        _ => return Err(bad()),
    };
    Ok(graphs)
}

/// Copy of `g` with one more vertex attached to `to`.
fn append(g: LabeledGraph<()>, to: usize, multiplicity: u8, longer: Option<usize>) -> LabeledGraph<()> {
    let n = g.len();
    let mut out = LabeledGraph::new(vec![(); n + 1]);
    for i in 0..n {
        for j in (i + 1)..n {
            if let Some(key) = g.edge(i, j) {
                let longer = key.from_longer.map(|from_i| if from_i { i } else { j });
                out.connect(i, j, key.multiplicity, longer);
            }
        }
    }
    out.connect(to, n, multiplicity, longer);
    out
}

/// White part of the diagram, one labeled graph per connected component.
pub fn white_components(diagram: &Diagram) -> Vec<(Vec<NodeId>, LabeledGraph<()>)> {
    diagram
        .components_of(|n| !n.color.is_dark())
        .into_iter()
        .map(|ids| {
            let mut g = LabeledGraph::new(vec![(); ids.len()]);
            for (i, &a) in ids.iter().enumerate() {
                for (j, &b) in ids.iter().enumerate().skip(i + 1) {
                    if let Some(e) = diagram.edge_between(a, b) {
                        let longer = e.longer_id().map(|l| if l == a { i } else { j });
                        g.connect(i, j, e.multiplicity, longer);
                    }
                }
            }
            (ids, g)
        })
        .collect()
}

/// True iff the white components match the listed types up to isomorphism,
/// as a multiset.
pub fn white_part_has_type(diagram: &Diagram, types: &[&str]) -> Result<bool> {
    let mut expected = Vec::new();
    for t in types {
        expected.extend(standard_components(t)?);
    }
    let actual = white_components(diagram);
    if actual.len() != expected.len() {
        return Ok(false);
    }
    let mut taken = vec![false; expected.len()];
    for (_, g) in &actual {
        let slot = (0..expected.len()).find(|&k| !taken[k] && are_isomorphic(g, &expected[k]));
        match slot {
            Some(k) => taken[k] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_rank_coincidences() {
        let b2 = standard_components("B2").unwrap();
        let c2 = standard_components("C2").unwrap();
        assert!(are_isomorphic(&b2[0], &c2[0]));
        let b3 = standard_components("B3").unwrap();
        let c3 = standard_components("C3").unwrap();
        assert!(!are_isomorphic(&b3[0], &c3[0]));
        let d3 = standard_components("D3").unwrap();
        let a3 = standard_components("A3").unwrap();
        assert!(are_isomorphic(&d3[0], &a3[0]));
        assert_eq!(standard_components("D2").unwrap().len(), 2);
        assert!(standard_components("E6").is_err());
        assert!(standard_components("Q2").is_err());
    }

    #[test]
    fn d4_is_not_a4() {
        let d4 = standard_components("D4").unwrap();
        let a4 = standard_components("A4").unwrap();
        assert!(!are_isomorphic(&d4[0], &a4[0]));
    }
}
