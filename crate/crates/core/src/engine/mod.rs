//! Circlings and the push-the-button calculus.

mod circling;
mod classify;
mod orbit;
mod press;
mod reflection;
mod symmetry;

pub use circling::{is_admissible, label_sum, require_admissible, Circling};
pub use classify::{
    classify, classify_summary, equivalent, orbit_cap_from_env, reduction_sweep, ClassSummary, EquivalenceClass,
    ReductionSweep, Witness, DEFAULT_ORBIT_CAP, ORBIT_CAP_VAR,
};
pub use orbit::{f_orbit, f_related, odd_removed_components, reduce, OrbitReport, Step};
pub use press::{check_pressable, press, pressable, toggled_neighbors, PressSequence};
pub use reflection::{reflection_report, NeighborReflection, ReflectionReport};
pub use symmetry::{automorphisms, Symmetry};
