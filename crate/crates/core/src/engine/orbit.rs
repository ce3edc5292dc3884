//! Press orbits, F-relatedness and reduction.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::diagram::{Diagram, NodeId};
use crate::error::Result;
use crate::engine::circling::{require_admissible, Circling};
use crate::engine::press::{from_mask, mask_cmp, positions, to_mask, PressSequence, PressTable};

/// One step of the breadth-first search: the circling it came from and the
/// vertex pressed there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub predecessor: Circling,
    pub pressed: NodeId,
}

#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub seed: Circling,
    /// Members in discovery order, seed first.
    pub members: Vec<Circling>,
    /// Every member except the seed, keyed by circling.
    pub generator_log: BTreeMap<Circling, Step>,
    pub min_size: usize,
}

impl OrbitReport {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &Circling) -> bool {
        *c == self.seed || self.generator_log.contains_key(c)
    }

    /// Presses leading from the seed to `target`, if it is in the orbit.
    pub fn path_to(&self, target: &Circling) -> Option<PressSequence> {
        if !self.contains(target) {
            return None;
        }
        let mut steps = Vec::new();
        let mut at = target;
        while let Some(step) = self.generator_log.get(at) {
            steps.push(step.pressed);
            at = &step.predecessor;
        }
        steps.reverse();
        Some(PressSequence::new(steps))
    }

    /// Smallest member in the (size, lexicographic) order.
    pub fn minimum(&self) -> &Circling {
        self.members.iter().min().expect("an orbit contains its seed")
    }
}

/// Breadth-first search over masks. Pressable vertices are expanded in
/// ascending order, so the recorded paths are deterministic and shortest.
pub(crate) struct MaskSearch {
    pub order: Vec<u64>,
    pub parent: HashMap<u64, (u64, u32)>,
}

impl MaskSearch {
    pub fn run(table: &PressTable, seed: u64, stop_at: Option<u64>) -> Self {
        let mut parent = HashMap::new();
        let mut order = vec![seed];
        let mut queue = VecDeque::from([seed]);
        if stop_at == Some(seed) {
            return MaskSearch { order, parent };
        }
        while let Some(mask) = queue.pop_front() {
            for p in positions(mask) {
                let next = table.press(mask, p);
                if next == seed || parent.contains_key(&next) {
                    continue;
                }
                parent.insert(next, (mask, p));
                order.push(next);
                if stop_at == Some(next) {
                    return MaskSearch { order, parent };
                }
                queue.push_back(next);
            }
        }
        MaskSearch { order, parent }
    }

    pub fn path_to(&self, target: u64) -> Option<PressSequence> {
        if target != self.order[0] && !self.parent.contains_key(&target) {
            return None;
        }
        let mut steps = Vec::new();
        let mut at = target;
        while let Some(&(prev, p)) = self.parent.get(&at) {
            steps.push(p + 1);
            at = prev;
        }
        steps.reverse();
        Some(PressSequence::new(steps))
    }
}

/// Every circling reachable from `c` by presses. Presses are involutions, so
/// this is the F-equivalence class of `c`.
pub fn f_orbit(diagram: &Diagram, c: &Circling) -> Result<OrbitReport> {
    c.validate(diagram)?;
    let table = PressTable::new(diagram)?;
    let search = MaskSearch::run(&table, to_mask(c), None);
    let mut generator_log = BTreeMap::new();
    for (&mask, &(prev, p)) in &search.parent {
        generator_log.insert(from_mask(mask), Step { predecessor: from_mask(prev), pressed: p + 1 });
    }
    let members: Vec<Circling> = search.order.iter().map(|&m| from_mask(m)).collect();
    let min_size = members.iter().map(Circling::len).min().unwrap_or(0);
    Ok(OrbitReport { seed: c.clone(), members, generator_log, min_size })
}

/// A press sequence taking `c1` to `c2`, or `None` when they lie in
/// different orbits.
pub fn f_related(diagram: &Diagram, c1: &Circling, c2: &Circling) -> Result<Option<PressSequence>> {
    c1.validate(diagram)?;
    c2.validate(diagram)?;
    let table = PressTable::new(diagram)?;
    let target = to_mask(c2);
    Ok(MaskSearch::run(&table, to_mask(c1), Some(target)).path_to(target))
}

/// The (size, lexicographic) minimum of the orbit of an admissible circling,
/// with presses reaching it.
pub fn reduce(diagram: &Diagram, c: &Circling) -> Result<(Circling, PressSequence)> {
    require_admissible(diagram, c)?;
    let table = PressTable::new(diagram)?;
    let search = MaskSearch::run(&table, to_mask(c), None);
    let best = search.order.iter().copied().min_by(|&a, &b| mask_cmp(a, b)).expect("orbit is non-empty");
    let path = search.path_to(best).expect("minimum lies in the orbit");
    Ok((from_mask(best), path))
}

/// Number of connected components left after deleting the odd vertices.
pub fn odd_removed_components(diagram: &Diagram) -> usize {
    diagram.components_of(|n| n.is_even()).len()
}
