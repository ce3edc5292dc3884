//! The press operation `F_i` and its bit-mask compilation.

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, NodeId};
use crate::error::{Error, Result};
use crate::engine::circling::Circling;

/// Ordered list of pressed vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PressSequence {
    pub steps: Vec<NodeId>,
}

impl PressSequence {
    pub fn new(steps: Vec<NodeId>) -> Self {
        PressSequence { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies the presses in order; fails at the first illegal step.
    pub fn replay(&self, diagram: &Diagram, start: &Circling) -> Result<Circling> {
        self.steps.iter().try_fold(start.clone(), |c, &i| press(diagram, &c, i))
    }

    pub fn then(mut self, other: &PressSequence) -> PressSequence {
        self.steps.extend_from_slice(&other.steps);
        self
    }

    /// Presses are involutions, so the reversed sequence undoes this one.
    pub fn reversed(&self) -> PressSequence {
        PressSequence { steps: self.steps.iter().rev().copied().collect() }
    }
}

/// Neighbors of `i` whose circling flips when `i` is pressed: every
/// neighbor except odd ones and except the longer end of a double edge.
pub fn toggled_neighbors(diagram: &Diagram, i: NodeId) -> Result<Vec<NodeId>> {
    diagram.node(i)?;
    let mut out = Vec::new();
    for edge in diagram.incident(i) {
        let j = edge.other(i);
        if !diagram.node(j)?.is_even() {
            continue;
        }
        if edge.multiplicity == 2 && edge.longer_id() == Some(j) {
            continue;
        }
        out.push(j);
    }
    out.sort_unstable();
    Ok(out)
}

/// Whether `i` may be pressed in `c`: it must be an even, circled vertex.
pub fn check_pressable(diagram: &Diagram, c: &Circling, i: NodeId) -> Result<()> {
    let node = diagram.node(i)?;
    if !node.is_even() {
        return Err(Error::NotPressable { vertex: i, reason: "vertex is odd" });
    }
    if !c.contains(i) {
        return Err(Error::NotPressable { vertex: i, reason: "vertex is not circled" });
    }
    Ok(())
}

/// `F_i`: flips the circling of the toggled neighbors of `i`; `i` itself and
/// every other vertex keep theirs.
pub fn press(diagram: &Diagram, c: &Circling, i: NodeId) -> Result<Circling> {
    c.validate(diagram)?;
    check_pressable(diagram, c, i)?;
    let mut out = c.clone();
    for j in toggled_neighbors(diagram, i)? {
        out.toggle(j);
    }
    Ok(out)
}

/// Vertices that may be pressed in `c`, ascending.
pub fn pressable(diagram: &Diagram, c: &Circling) -> Result<Vec<NodeId>> {
    c.validate(diagram)?;
    Ok(c.to_vec())
}

/// Presses over circlings encoded as bit masks, bit `id - 1` per vertex.
#[derive(Debug, Clone)]
pub(crate) struct PressTable {
    pub toggles: Vec<u64>,
    pub even_positions: Vec<u32>,
}

pub(crate) const MAX_VERTICES: usize = 64;

impl PressTable {
    pub fn new(diagram: &Diagram) -> Result<Self> {
        if diagram.len() > MAX_VERTICES {
            return Err(Error::InvalidDiagram(format!(
                "orbit search supports at most {MAX_VERTICES} vertices, diagram has {}",
                diagram.len()
            )));
        }
        let mut even_mask = 0u64;
        let mut toggles = vec![0u64; diagram.len()];
        for node in diagram.nodes() {
            if node.is_even() {
                even_mask |= bit(node.id);
                for j in toggled_neighbors(diagram, node.id)? {
                    toggles[(node.id - 1) as usize] |= bit(j);
                }
            }
        }
        let even_positions = (0..diagram.len() as u32).filter(|k| even_mask >> k & 1 == 1).collect();
        Ok(PressTable { toggles, even_positions })
    }

    /// Number of circlings of the diagram.
    pub fn circling_count(&self) -> u128 {
        1u128 << self.even_positions.len()
    }

    #[inline]
    pub fn press(&self, mask: u64, position: u32) -> u64 {
        mask ^ self.toggles[position as usize]
    }

    /// Dense index of a circling among all `2^k` circlings.
    pub fn compress(&self, mask: u64) -> usize {
        self.even_positions
            .iter()
            .enumerate()
            .fold(0usize, |acc, (k, &p)| acc | (((mask >> p & 1) as usize) << k))
    }

    pub fn expand(&self, index: usize) -> u64 {
        self.even_positions
            .iter()
            .enumerate()
            .fold(0u64, |acc, (k, &p)| acc | (((index >> k & 1) as u64) << p))
    }
}

#[inline]
pub(crate) fn bit(id: NodeId) -> u64 {
    1u64 << (id - 1)
}

pub(crate) fn to_mask(c: &Circling) -> u64 {
    c.ids().fold(0, |m, id| m | bit(id))
}

pub(crate) fn from_mask(mask: u64) -> Circling {
    (0..64u32).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect()
}

/// Set bit positions of `mask`, ascending.
pub(crate) fn positions(mask: u64) -> impl Iterator<Item = u32> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let p = rest.trailing_zeros();
            rest &= rest - 1;
            Some(p)
        }
    })
}

/// Size first, then lexicographic on sorted id lists.
pub(crate) fn mask_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let diff = a ^ b;
        if diff == 0 {
            std::cmp::Ordering::Equal
        } else if a & (diff & diff.wrapping_neg()) != 0 {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    })
}
