//! Equivalence of circlings up to presses and diagram symmetries.

use std::collections::HashSet;

use serde::Serialize;

use crate::diagram::Diagram;
use crate::engine::circling::{is_admissible, require_admissible, Circling};
use crate::engine::orbit::{f_related, MaskSearch};
use crate::engine::press::{from_mask, mask_cmp, positions, to_mask, PressSequence, PressTable};
use crate::engine::symmetry::{automorphisms, Symmetry};
use crate::error::{Error, Result};

/// Default limit on the number of circlings a full classification may visit.
pub const DEFAULT_ORBIT_CAP: u128 = 1 << 22;

/// Environment variable overriding [`DEFAULT_ORBIT_CAP`].
pub const ORBIT_CAP_VAR: &str = "VOGAN_ORBIT_CAP";

/// The cap from the environment, falling back to the default when unset or
/// unparsable.
pub fn orbit_cap_from_env() -> u128 {
    std::env::var(ORBIT_CAP_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ORBIT_CAP)
}

/// How `c1` becomes `c2`: apply the symmetry once, then the presses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub symmetry: Symmetry,
    pub steps: PressSequence,
}

impl Witness {
    pub fn replay(&self, diagram: &Diagram, c: &Circling) -> Result<Circling> {
        self.steps.replay(diagram, &self.symmetry.apply_circling(c))
    }
}

/// Whether two admissible circlings give the same real form, with a witness.
pub fn equivalent(diagram: &Diagram, c1: &Circling, c2: &Circling) -> Result<Option<Witness>> {
    require_admissible(diagram, c1)?;
    require_admissible(diagram, c2)?;
    let table = PressTable::new(diagram)?;
    let target = to_mask(c2);
    let orbit: HashSet<u64> = MaskSearch::run(&table, target, None).order.into_iter().collect();
    for symmetry in automorphisms(diagram) {
        let moved = symmetry.apply_circling(c1);
        if orbit.contains(&to_mask(&moved)) {
            let steps = f_related(diagram, &moved, c2)?.expect("orbit membership was checked");
            return Ok(Some(Witness { symmetry, steps }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceClass {
    /// Admissible circlings of the class, ascending.
    pub members: Vec<Circling>,
    /// Smallest member.
    pub representative: Circling,
    /// Some press orbit in the class also reaches inadmissible circlings.
    pub parity_mixed: bool,
}

impl EquivalenceClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// How `member` becomes the representative.
    pub fn witness(&self, diagram: &Diagram, member: &Circling) -> Result<Witness> {
        if self.members.binary_search(member).is_err() {
            return Err(Error::InvalidCircling(format!("{member} is not in the class of {}", self.representative)));
        }
        equivalent(diagram, member, &self.representative)?
            .ok_or_else(|| Error::InvalidCircling(format!("{member} is not equivalent to {}", self.representative)))
    }
}

/// Class without its member list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub representative: Circling,
    pub size: usize,
    pub parity_mixed: bool,
}

/// Every circling of the diagram grouped into press orbits, with the orbits
/// then merged along diagram symmetries.
pub(crate) struct Partition {
    pub table: PressTable,
    pub orbit_of: Vec<u32>,
    pub orbits: Vec<Vec<u64>>,
}

impl Partition {
    pub fn build(diagram: &Diagram, cap: u128) -> Result<Self> {
        let table = PressTable::new(diagram)?;
        let requested = table.circling_count();
        if requested > cap {
            return Err(Error::CapExceeded { requested, cap });
        }
        let total = requested as usize;
        let mut orbit_of = vec![u32::MAX; total];
        let mut orbits = Vec::new();
        let mut stack = Vec::new();
        for index in 0..total {
            if orbit_of[index] != u32::MAX {
                continue;
            }
            let id = orbits.len() as u32;
            let mut members = Vec::new();
            orbit_of[index] = id;
            stack.push(table.expand(index));
            while let Some(mask) = stack.pop() {
                members.push(mask);
                for p in positions(mask) {
                    let next = table.press(mask, p);
                    let k = table.compress(next);
                    if orbit_of[k] == u32::MAX {
                        orbit_of[k] = id;
                        stack.push(next);
                    }
                }
            }
            members.sort_by(|&a, &b| mask_cmp(a, b));
            orbits.push(members);
        }
        Ok(Partition { table, orbit_of, orbits })
    }

    pub fn orbit_of_mask(&self, mask: u64) -> usize {
        self.orbit_of[self.table.compress(mask)] as usize
    }

    /// Orbit ids grouped by diagram symmetry, each group ascending.
    pub fn symmetry_groups(&self, symmetries: &[Symmetry]) -> Vec<Vec<usize>> {
        let n = self.orbits.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for s in symmetries.iter().filter(|s| !s.is_identity()) {
            for o in 0..n {
                let image = to_mask(&s.apply_circling(&from_mask(self.orbits[o][0])));
                let (a, b) = (find(&mut parent, o), find(&mut parent, self.orbit_of_mask(image)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for o in 0..n {
            let root = find(&mut parent, o);
            groups[root].push(o);
        }
        groups.into_iter().filter(|g| !g.is_empty()).collect()
    }
}

fn build_classes(diagram: &Diagram, cap: u128) -> Result<Vec<(Vec<u64>, bool)>> {
    let partition = Partition::build(diagram, cap)?;
    let groups = partition.symmetry_groups(&automorphisms(diagram));
    let mut classes = Vec::new();
    for group in groups {
        let mut members = Vec::new();
        let mut mixed = false;
        for &o in &group {
            let mut admissible = 0usize;
            for &mask in &partition.orbits[o] {
                if is_admissible(diagram, &from_mask(mask))? {
                    members.push(mask);
                    admissible += 1;
                }
            }
            if admissible > 0 && admissible < partition.orbits[o].len() {
                mixed = true;
            }
        }
        if !members.is_empty() {
            members.sort_by(|&a, &b| mask_cmp(a, b));
            classes.push((members, mixed));
        }
    }
    classes.sort_by(|a, b| mask_cmp(a.0[0], b.0[0]));
    Ok(classes)
}

/// All admissible circlings partitioned into equivalence classes, ordered by
/// representative. Fails with `CapExceeded` when the diagram has more than
/// `cap` circlings.
pub fn classify(diagram: &Diagram, cap: u128) -> Result<Vec<EquivalenceClass>> {
    Ok(build_classes(diagram, cap)?
        .into_iter()
        .map(|(members, parity_mixed)| {
            let members: Vec<Circling> = members.into_iter().map(from_mask).collect();
            EquivalenceClass { representative: members[0].clone(), members, parity_mixed }
        })
        .collect())
}

/// Like [`classify`] but without materializing member lists.
pub fn classify_summary(diagram: &Diagram, cap: u128) -> Result<Vec<ClassSummary>> {
    Ok(build_classes(diagram, cap)?
        .into_iter()
        .map(|(members, parity_mixed)| ClassSummary {
            representative: from_mask(members[0]),
            size: members.len(),
            parity_mixed,
        })
        .collect())
}

/// Largest reduced size found in a sweep over every circling of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionSweep {
    /// Over admissible circlings; `None` when there are none.
    pub admissible_max: Option<(usize, Circling)>,
    /// Over all circlings, admissible or not.
    pub overall_max: (usize, Circling),
    pub admissible_count: usize,
    pub circling_count: usize,
}

/// Reduces every circling at once: the reduction of a circling is the
/// minimum of its press orbit, so one pass over the orbit partition suffices.
pub fn reduction_sweep(diagram: &Diagram, cap: u128) -> Result<ReductionSweep> {
    let partition = Partition::build(diagram, cap)?;
    let larger = |a: &(usize, u64), b: &(usize, u64)| a.0.cmp(&b.0).then_with(|| mask_cmp(b.1, a.1));
    let mut overall: Option<(usize, u64)> = None;
    let mut admissible_best: Option<(usize, u64)> = None;
    let mut admissible_count = 0;
    for orbit in &partition.orbits {
        let reduced = (orbit[0].count_ones() as usize, orbit[0]);
        if overall.map_or(true, |o| larger(&reduced, &o).is_gt()) {
            overall = Some(reduced);
        }
        let mut any = false;
        for &mask in orbit {
            if is_admissible(diagram, &from_mask(mask))? {
                admissible_count += 1;
                any = true;
            }
        }
        if any && admissible_best.map_or(true, |o| larger(&reduced, &o).is_gt()) {
            admissible_best = Some(reduced);
        }
    }
    let overall = overall.expect("the empty circling always exists");
    Ok(ReductionSweep {
        admissible_max: admissible_best.map(|(k, m)| (k, from_mask(m))),
        overall_max: (overall.0, from_mask(overall.1)),
        admissible_count,
        circling_count: partition.orbit_of.len(),
    })
}
