//! Cross-check of a press against the odd reflection it models.

use serde::Serialize;

use crate::diagram::{Diagram, NodeId};
use crate::engine::circling::Circling;
use crate::engine::press::press;
use crate::error::{Error, Result};
use crate::family::Parity;
use crate::realization::RootRealization;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborReflection {
    pub neighbor: NodeId,
    /// `2 B(beta, alpha) / B(alpha, alpha)`.
    pub n: String,
    pub n_in_range: bool,
    pub parity_preserved: bool,
    /// `None` for odd neighbors, which presses never touch.
    pub expected_toggle: Option<bool>,
    pub toggled: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionReport {
    pub vertex: NodeId,
    pub neighbors: Vec<NeighborReflection>,
}

impl ReflectionReport {
    pub fn all_ok(&self) -> bool {
        self.neighbors.iter().all(|n| n.n_in_range && n.parity_preserved && n.agrees)
    }
}

/// For each neighbor `beta` of the pressed vertex `alpha`, reflects `beta` in
/// `alpha` and compares the parity of `n` with what the press did.
pub fn reflection_report(
    diagram: &Diagram,
    realization: &RootRealization,
    c: &Circling,
    i: NodeId,
) -> Result<ReflectionReport> {
    if realization.len() != diagram.len() {
        return Err(Error::DimensionMismatch { expected: diagram.len(), found: realization.len() });
    }
    let pressed = press(diagram, c, i)?;
    let norm = realization.norm(i)?;
    if norm == Rational::from_integer(0) {
        return Err(Error::ZeroNorm(i));
    }
    let alpha = realization.root(i)?.to_vec();
    let mut neighbors: Vec<NodeId> = diagram.neighbors(i).collect();
    neighbors.sort_unstable();
    let mut out = Vec::new();
    for b in neighbors {
        let n = Rational::from_integer(2) * realization.form(b, i)? / norm;
        let beta = realization.root(b)?;
        let reflected: Vec<Rational> = beta.iter().zip(&alpha).map(|(&x, &y)| x - n * y).collect();
        let parity_preserved = realization.parity_of(beta).is_some()
            && realization.parity_of(beta) == realization.parity_of(&reflected);
        let n_in_range = n.is_integer() && (-3..=-1).contains(&n.to_integer());
        let even = diagram.node(b)?.is_even();
        let toggled = c.contains(b) != pressed.contains(b);
        let expected_toggle = even.then(|| n.is_integer() && Parity::of(n.to_integer()) == Parity::Odd);
        let agrees = expected_toggle.map_or(!toggled, |e| e == toggled);
        out.push(NeighborReflection {
            neighbor: b,
            n: n.to_string(),
            n_in_range,
            parity_preserved,
            expected_toggle,
            toggled,
            agrees,
        });
    }
    Ok(ReflectionReport { vertex: i, neighbors: out })
}
