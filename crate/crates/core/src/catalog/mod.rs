//! Preferred extended Dynkin diagrams of the contragredient families.
//!
//! Each entry is written down twice and independently: once as a graph with
//! colors, edges and a-labels ([`build_preferred_diagram`]), once as explicit
//! root coordinates ([`root_realization`]). [`audit`] checks that the two
//! descriptions agree: labels balance the roots exactly, parities and colors
//! match the form, edges match the nonzero entries of the Gram matrix, and the
//! white part has the recorded type of `g_0^ss`.
//!
//! Vertex numbering follows the drawings where one exists (`SL(3,2)` is the
//! 7-cycle of the `sl(3|2)` figure, `D(5,3)` the fork-chain-double-edge with
//! the grey vertex 6). Otherwise vertices run left to right, fork tips first,
//! the lowest root last.

mod dynkin;

pub use dynkin::{standard_components, white_components, white_part_has_type};
pub use crate::realization::verify_marks;

use num_traits::{Signed, Zero};

use crate::diagram::{Color, Diagram, Edge, Node, NodeId};
use crate::error::{Error, Result};
use crate::family::{Family, FamilySpec, Parity};
use crate::realization::RootRealization;
use crate::Rational;

pub fn build_preferred_diagram(spec: &FamilySpec) -> Result<Diagram> {
    spec.validate()?;
    let layout = match spec.family {
        Family::SL => sl_layout(spec.m, spec.n),
        Family::B => b_layout(spec.m, spec.n),
        Family::C => c_layout(spec.n),
        Family::D => d_layout(spec.m, spec.n),
        Family::D21A => Layout {
            nodes: vec![white(1, 1), white(2, 1), grey(3, 2), white(4, 1)],
            edges: vec![Edge::single(1, 3), Edge::single(2, 3), Edge::single(3, 4)],
        },
        Family::F4 => Layout {
            nodes: vec![white(1, 1), white(2, 2), white(3, 3), grey(4, 2), white(5, 1)],
            edges: vec![Edge::single(1, 2), Edge::multiple(2, 3, 2, 2), Edge::single(3, 4), Edge::single(4, 5)],
        },
        Family::G3 => Layout {
            nodes: vec![white(1, 2), white(2, 4), grey(3, 2), white(4, 1)],
            edges: vec![Edge::multiple(1, 2, 3, 1), Edge::single(2, 3), Edge::single(3, 4)],
        },
    };
    let lowest = layout.nodes.len() as NodeId;
    Diagram::new(spec.clone(), layout.nodes, layout.edges, lowest)
}

pub fn root_realization(spec: &FamilySpec) -> Result<RootRealization> {
    spec.validate()?;
    match spec.family {
        Family::SL => sl_roots(spec.m, spec.n),
        Family::B => b_roots(spec.m, spec.n),
        Family::C => c_roots(spec.n),
        Family::D => d_roots(spec.m, spec.n),
        Family::D21A => d21a_roots(spec.alpha),
        Family::F4 => f4_roots(),
        Family::G3 => g3_roots(),
    }
}

/// Dynkin type of `g_0^ss`, one entry per simple summand.
pub fn expected_even_type(spec: &FamilySpec) -> Vec<String> {
    let (m, n) = (spec.m, spec.n);
    let summands: Vec<(&str, u32)> = match spec.family {
        Family::SL => vec![("A", m), ("A", n)],
        Family::B => vec![("B", m), ("C", n)],
        Family::C => vec![("C", n - 1)],
        Family::D => vec![("D", m), ("C", n)],
        Family::D21A => vec![("A", 1), ("A", 1), ("A", 1)],
        Family::F4 => vec![("B", 3), ("A", 1)],
        Family::G3 => vec![("G", 2), ("A", 1)],
    };
    summands
        .into_iter()
        .filter(|&(_, rank)| rank > 0)
        .map(|(letter, rank)| format!("{letter}{rank}"))
        .collect()
}

/// Dimension of the center of `g_0`.
pub fn center_dimension(spec: &FamilySpec) -> usize {
    match spec.family {
        Family::SL | Family::C => 1,
        _ => 0,
    }
}

/// A catalog diagram with its realization.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub diagram: Diagram,
    pub realization: RootRealization,
}

impl CatalogEntry {
    pub fn build(spec: &FamilySpec) -> Result<Self> {
        Ok(CatalogEntry {
            diagram: build_preferred_diagram(spec)?,
            realization: root_realization(spec)?,
        })
    }
}

/// Every disagreement between the diagram data and its realization. Empty
/// means the entry is consistent.
pub fn audit(spec: &FamilySpec) -> Result<Vec<String>> {
    let CatalogEntry { diagram, realization } = CatalogEntry::build(spec)?;
    let mut problems = Vec::new();

    if !verify_marks(&diagram, &realization)? {
        problems.push("a-labels do not balance the roots".to_string());
    }
    if diagram.dark_count() != center_dimension(spec) + 1 {
        problems.push(format!(
            "{} dark vertices but center of dimension {}",
            diagram.dark_count(),
            center_dimension(spec)
        ));
    }
    let types = expected_even_type(spec);
    let type_refs: Vec<&str> = types.iter().map(String::as_str).collect();
    if !white_part_has_type(&diagram, &type_refs)? {
        problems.push(format!("white part is not of type {}", types.join("+")));
    }

    for node in diagram.nodes() {
        let id = node.id;
        match realization.parity(id)? {
            Some(p) if p == node.parity => {}
            other => problems.push(format!("vertex {id}: parity {:?} in realization, {} in diagram", other, node.parity)),
        }
        let norm = realization.norm(id)?;
        let color = match (node.parity, norm.is_zero()) {
            (Parity::Even, _) => Color::White,
            (Parity::Odd, true) => Color::Grey,
            (Parity::Odd, false) => Color::Black,
        };
        if color != node.color {
            problems.push(format!("vertex {id}: color {:?}, form says {:?}", node.color, color));
        }
    }

    for a in diagram.ids() {
        for b in diagram.ids().filter(|&b| b > a) {
            let expected = expected_edge(&realization, a, b)?;
            let actual = diagram.edge_between(a, b).map(|e| (e.multiplicity, e.longer_id()));
            if expected != actual {
                problems.push(format!("edge ({a},{b}): diagram has {actual:?}, form gives {expected:?}"));
            }
        }
    }
    Ok(problems)
}

/// Edge between two vertices as dictated by the form: none when orthogonal;
/// for two non-isotropic roots the product of the Cartan integers, the longer
/// root being the one of larger absolute norm; when one end is isotropic the
/// absolute Cartan integer seen from the other end.
pub fn expected_edge(r: &RootRealization, a: NodeId, b: NodeId) -> Result<Option<(u8, Option<NodeId>)>> {
    let ab = r.form(a, b)?;
    if ab.is_zero() {
        return Ok(None);
    }
    let (na, nb) = (r.norm(a)?, r.norm(b)?);
    let two = Rational::from_integer(2);
    let (mult, longer) = match (na.is_zero(), nb.is_zero()) {
        (true, true) => (Rational::from_integer(1), None),
        (false, false) => {
            let m = (two * ab / na) * (two * ab / nb);
            let longer = match na.abs().cmp(&nb.abs()) {
                std::cmp::Ordering::Greater => Some(a),
                std::cmp::Ordering::Less => Some(b),
                std::cmp::Ordering::Equal => None,
            };
            (m, longer)
        }
        (false, true) => ((two * ab / na).abs(), Some(a)),
        (true, false) => ((two * ab / nb).abs(), Some(b)),
    };
    if !mult.is_integer() || mult < Rational::from_integer(1) || mult > Rational::from_integer(4) {
        return Err(Error::InvalidDiagram(format!("vertices {a},{b} give edge multiplicity {mult}")));
    }
    let mult = mult.to_integer() as u8;
    Ok(Some((mult, if mult > 1 { longer } else { None })))
}

struct Layout {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
}

fn white(id: NodeId, a: u32) -> Node {
    Node::new(id, Color::White, a)
}

fn grey(id: NodeId, a: u32) -> Node {
    Node::new(id, Color::Grey, a)
}

fn black(id: NodeId, a: u32) -> Node {
    Node::new(id, Color::Black, a)
}

fn chain_edges(from: NodeId, to: NodeId) -> impl Iterator<Item = Edge> {
    (from..to).map(|k| Edge::single(k, k + 1))
}

fn sl_layout(m: u32, n: u32) -> Layout {
    let odd = m + 1;
    let lowest = m + n + 2;
    let nodes = (1..=lowest)
        .map(|id| if id == odd || id == lowest { grey(id, 1) } else { white(id, 1) })
        .collect();
    let mut edges: Vec<Edge> = chain_edges(1, lowest).collect();
    edges.push(Edge::single(1, lowest));
    Layout { nodes, edges }
}

/// Odd vertex, then the `C_n` chain ending in a double edge into the lowest
/// root `-2 delta_1`. Shared by `B(m,n)` and `D(m,n)`, where `odd = m + 1`.
fn c_tail(odd: NodeId, n: u32, edges: &mut Vec<Edge>) {
    let lowest = odd + n;
    if n == 1 {
        return;
    }
    edges.extend(chain_edges(odd, lowest - 1));
    edges.push(Edge::multiple(lowest - 1, lowest, 2, lowest));
}

fn b_layout(m: u32, n: u32) -> Layout {
    let odd = m + 1;
    let lowest = m + n + 1;
    let mut nodes: Vec<Node> = (1..=lowest).map(|id| white(id, 2)).collect();
    nodes[(odd - 1) as usize] = if m == 0 { black(odd, 2) } else { grey(odd, 2) };
    nodes[(lowest - 1) as usize] = white(lowest, 1);

    let mut edges = Vec::new();
    match m {
        0 => {}
        1 => edges.push(Edge::multiple(1, 2, 2, 1)),
        _ => {
            edges.push(Edge::multiple(1, 2, 2, 2));
            edges.extend(chain_edges(2, odd));
        }
    }
    if m == 0 {
        // black delta_n: double edge to delta_{n-1} - delta_n, quadruple to -2 delta_1 when n = 1
        if n == 1 {
            edges.push(Edge::multiple(odd, lowest, 4, lowest));
        } else {
            edges.push(Edge::multiple(odd, odd + 1, 2, odd + 1));
            edges.extend(chain_edges(odd + 1, lowest - 1));
            edges.push(Edge::multiple(lowest - 1, lowest, 2, lowest));
        }
    } else if n == 1 {
        edges.push(Edge::single(odd, lowest));
    } else {
        c_tail(odd, n, &mut edges);
    }
    Layout { nodes, edges }
}

fn c_layout(n: u32) -> Layout {
    let odd = n;
    let lowest = n + 1;
    let mut nodes: Vec<Node> = (1..n).map(|id| white(id, if id == 1 { 1 } else { 2 })).collect();
    nodes.push(grey(odd, 1));
    nodes.push(grey(lowest, 1));
    let mut edges = Vec::new();
    if n >= 3 {
        edges.push(Edge::multiple(1, 2, 2, 1));
        edges.extend(chain_edges(2, n - 1));
    }
    edges.push(Edge::single(n - 1, odd));
    edges.push(Edge::single(n - 1, lowest));
    edges.push(Edge::single(odd, lowest));
    Layout { nodes, edges }
}

fn d_layout(m: u32, n: u32) -> Layout {
    let odd = m + 1;
    let lowest = m + n + 1;
    let nodes = (1..=lowest)
        .map(|id| match id {
            1 | 2 => white(id, 1),
            _ if id == odd => grey(id, 2),
            _ if id == lowest => white(id, 1),
            _ => white(id, 2),
        })
        .collect();
    // fork tips 1 and 2 hang off vertex 3, which is the odd vertex when m = 2
    let mut edges = vec![Edge::single(1, 3), Edge::single(2, 3)];
    edges.extend(chain_edges(3, odd));
    if n == 1 {
        edges.push(Edge::single(odd, lowest));
    } else {
        c_tail(odd, n, &mut edges);
    }
    Layout { nodes, edges }
}

/// Builds coordinate vectors over a fixed basis.
struct Frame {
    basis: Vec<String>,
    metric: Vec<Rational>,
    grading: Vec<Rational>,
    coords: Vec<Vec<Rational>>,
}

impl Frame {
    /// `p` epsilons of norm +1 and `q` deltas of norm -1; the grading sums
    /// delta coefficients.
    fn eps_delta(p: u32, q: u32) -> Self {
        let basis = (1..=p).map(|i| format!("e{i}")).chain((1..=q).map(|j| format!("d{j}"))).collect();
        let metric = (0..p).map(|_| q_int(1)).chain((0..q).map(|_| q_int(-1))).collect();
        let grading = (0..p).map(|_| q_int(0)).chain((0..q).map(|_| q_int(1))).collect();
        Frame { basis, metric, grading, coords: Vec::new() }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Appends the root `sum coeff * basis[index]`.
    fn push(&mut self, terms: &[(usize, Rational)]) {
        let mut v = vec![Rational::zero(); self.dim()];
        for (k, c) in terms {
            v[*k] += c;
        }
        self.coords.push(v);
    }

    fn finish(self) -> Result<RootRealization> {
        RootRealization::new(self.basis, self.metric, self.grading, self.coords)
    }
}

fn q_int(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn sl_roots(m: u32, n: u32) -> Result<RootRealization> {
    let (p, q) = ((m + 1) as usize, (n + 1) as usize);
    let eps = |i: usize| i - 1;
    let delta = |j: usize| p + j - 1;
    let mut f = Frame::eps_delta(p as u32, q as u32);
    for k in 1..=m as usize {
        f.push(&[(eps(k), q_int(1)), (eps(k + 1), q_int(-1))]);
    }
    f.push(&[(eps(p), q_int(1)), (delta(1), q_int(-1))]);
    for j in 1..=n as usize {
        f.push(&[(delta(j), q_int(1)), (delta(j + 1), q_int(-1))]);
    }
    f.push(&[(delta(q), q_int(1)), (eps(1), q_int(-1))]);
    f.finish()
}

/// `delta_{n-1} - delta_n, ..., delta_1 - delta_2, -2 delta_1`.
fn push_c_tail(f: &mut Frame, delta: impl Fn(usize) -> usize, n: usize) {
    for t in 1..n {
        f.push(&[(delta(n - t), q_int(1)), (delta(n - t + 1), q_int(-1))]);
    }
    f.push(&[(delta(1), q_int(-2))]);
}

fn b_roots(m: u32, n: u32) -> Result<RootRealization> {
    let (m, n) = (m as usize, n as usize);
    let eps = |i: usize| i - 1;
    let delta = |j: usize| m + j - 1;
    let mut f = Frame::eps_delta(m as u32, n as u32);
    if m >= 1 {
        f.push(&[(eps(m), q_int(1))]);
        for k in 2..=m {
            f.push(&[(eps(m - k + 1), q_int(1)), (eps(m - k + 2), q_int(-1))]);
        }
        f.push(&[(delta(n), q_int(1)), (eps(1), q_int(-1))]);
    } else {
        f.push(&[(delta(n), q_int(1))]);
    }
    push_c_tail(&mut f, delta, n);
    f.finish()
}

fn c_roots(n: u32) -> Result<RootRealization> {
    let n = n as usize;
    let delta = |j: usize| j;
    let mut f = Frame::eps_delta(1, (n - 1) as u32);
    f.push(&[(delta(n - 1), q_int(2))]);
    for k in 2..n {
        f.push(&[(delta(n - k), q_int(1)), (delta(n - k + 1), q_int(-1))]);
    }
    f.push(&[(0, q_int(1)), (delta(1), q_int(-1))]);
    f.push(&[(0, q_int(-1)), (delta(1), q_int(-1))]);
    f.finish()
}

fn d_roots(m: u32, n: u32) -> Result<RootRealization> {
    let (m, n) = (m as usize, n as usize);
    let eps = |i: usize| i - 1;
    let delta = |j: usize| m + j - 1;
    let mut f = Frame::eps_delta(m as u32, n as u32);
    f.push(&[(eps(m - 1), q_int(1)), (eps(m), q_int(1))]);
    f.push(&[(eps(m - 1), q_int(1)), (eps(m), q_int(-1))]);
    for k in 3..=m {
        f.push(&[(eps(m - k + 1), q_int(1)), (eps(m - k + 2), q_int(-1))]);
    }
    f.push(&[(delta(n), q_int(1)), (eps(1), q_int(-1))]);
    push_c_tail(&mut f, delta, n);
    f.finish()
}

/// Diagonal form `(-(1+alpha), 1, alpha)`; odd roots are `(+-1, +-1, +-1)`.
fn d21a_roots(alpha: Rational) -> Result<RootRealization> {
    let one = q_int(1);
    let mut f = Frame {
        basis: vec!["e1".into(), "e2".into(), "e3".into()],
        metric: vec![-(one + alpha), one, alpha],
        grading: vec![one, q_int(0), q_int(0)],
        coords: Vec::new(),
    };
    f.push(&[(1, q_int(2))]);
    f.push(&[(2, q_int(2))]);
    f.push(&[(0, one), (1, -one), (2, -one)]);
    f.push(&[(0, q_int(-2))]);
    f.finish()
}

/// Epsilons of norm 1 and delta of norm -3; odd roots are
/// `(+-e1 +-e2 +-e3 +-d) / 2`.
fn f4_roots() -> Result<RootRealization> {
    let half = Rational::new(1, 2);
    let mut f = Frame {
        basis: vec!["e1".into(), "e2".into(), "e3".into(), "d".into()],
        metric: vec![q_int(1), q_int(1), q_int(1), q_int(-3)],
        grading: vec![q_int(0), q_int(0), q_int(0), q_int(2)],
        coords: Vec::new(),
    };
    f.push(&[(0, q_int(1)), (1, q_int(-1))]);
    f.push(&[(1, q_int(1)), (2, q_int(-1))]);
    f.push(&[(2, q_int(1))]);
    f.push(&[(0, -half), (1, -half), (2, -half), (3, -half)]);
    f.push(&[(3, q_int(1))]);
    f.finish()
}

/// Ambient `e1, e2, e3` of norm -3 with `eps_i = e_i - (e1+e2+e3)/3`, so that
/// `(eps_i, eps_j) = 1 - 3 delta_ij`, and `d` of norm 2.
fn g3_roots() -> Result<RootRealization> {
    let third = Rational::new(1, 3);
    let eps = |i: usize| -> Vec<(usize, Rational)> {
        (0..3).map(|k| (k, if k == i { q_int(1) - third } else { -third })).collect()
    };
    let mut f = Frame {
        basis: vec!["e1".into(), "e2".into(), "e3".into(), "d".into()],
        metric: vec![q_int(-3), q_int(-3), q_int(-3), q_int(2)],
        grading: vec![q_int(0), q_int(0), q_int(0), q_int(1)],
        coords: Vec::new(),
    };
    f.push(&[(0, q_int(1)), (1, q_int(-1))]);
    f.push(&eps(1));
    let mut odd = eps(2);
    odd.push((3, q_int(-1)));
    f.push(&odd);
    f.push(&[(3, q_int(2))]);
    f.finish()
}

/// Catalog instances with at most `max_even` white vertices: `SL(m,n)` with
/// `m + n <= 9`, `B`, `C`, `D` up to total rank 8, and the three exceptional
/// entries.
pub fn small_instances(max_even: usize) -> Vec<FamilySpec> {
    let k = max_even as u32;
    let mut specs = Vec::new();
    for m in 2..=k {
        for n in (1..=k - m).filter(|&n| n != m) {
            specs.extend(FamilySpec::sl(m, n));
        }
    }
    for m in 0..k {
        for n in 1..=k - m {
            specs.extend(FamilySpec::b(m, n));
        }
    }
    for n in 2..=k + 1 {
        specs.extend(FamilySpec::c(n));
    }
    for m in 2..k {
        for n in 1..=k - m {
            specs.extend(FamilySpec::d(m, n));
        }
    }
    specs.extend(FamilySpec::d21a(q_int(2)));
    specs.push(FamilySpec::f4());
    specs.push(FamilySpec::g3());
    specs
        .into_iter()
        .filter(|s| build_preferred_diagram(s).map(|d| d.even_ids().len() <= max_even).unwrap_or(false))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(d: &Diagram, pred: impl Fn(&Node) -> bool) -> Vec<NodeId> {
        d.nodes().iter().filter(|n| pred(n)).map(|n| n.id).collect()
    }

    #[test]
    fn sl_3_2_is_the_seven_cycle() {
        let d = build_preferred_diagram(&FamilySpec::sl(3, 2).unwrap()).unwrap();
        assert_eq!(d.len(), 7);
        assert_eq!(ids(&d, |n| !n.is_even()), vec![4, 7]);
        assert!(d.nodes().iter().all(|n| n.a_label == 1));
        assert!(d.nodes().iter().all(|n| n.color != Color::Black));
        assert!(d.ids().all(|id| d.neighbors(id).count() == 2));
        assert_eq!(d.lowest(), 7);
    }

    #[test]
    fn d_5_3_matches_the_drawing() {
        let d = build_preferred_diagram(&FamilySpec::d(5, 3).unwrap()).unwrap();
        assert_eq!(d.len(), 9);
        assert_eq!(ids(&d, |n| !n.is_even()), vec![6]);
        assert_eq!(d.node(6).unwrap().color, Color::Grey);
        let pairs: Vec<_> = d.edges().iter().map(|e| (e.u, e.v, e.multiplicity, e.longer_id())).collect();
        assert_eq!(
            pairs,
            vec![
                (1, 3, 1, None),
                (2, 3, 1, None),
                (3, 4, 1, None),
                (4, 5, 1, None),
                (5, 6, 1, None),
                (6, 7, 1, None),
                (7, 8, 1, None),
                (8, 9, 2, Some(9)),
            ]
        );
        assert_eq!(d.lowest(), 9);
        let labels: Vec<u32> = d.nodes().iter().map(|n| n.a_label).collect();
        assert_eq!(labels, vec![1, 1, 2, 2, 2, 2, 2, 2, 1]);
    }

    #[test]
    fn d_4_2_matches_fig_two() {
        let d = build_preferred_diagram(&FamilySpec::d(4, 2).unwrap()).unwrap();
        assert_eq!(d.len(), 7);
        assert_eq!(ids(&d, |n| n.color == Color::Grey), vec![5]);
        assert_eq!(d.node(4).unwrap().a_label, 2);
        let double = d.edges().iter().find(|e| e.multiplicity == 2).unwrap();
        assert_eq!((double.u, double.v, double.longer_id()), (6, 7, Some(7)));
        assert_eq!(d.lowest(), 7);
    }

    #[test]
    fn sl_realization_balances() {
        let spec = FamilySpec::sl(3, 2).unwrap();
        let r = root_realization(&spec).unwrap();
        assert_eq!(r.signature(), vec![1, 1, 1, 1, -1, -1, -1]);
        let sum = r.weighted_sum(&[1; 7]).unwrap();
        assert!(sum.iter().all(Zero::is_zero));
        let g = r.gram();
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(g[i][j], g[j][i]);
            }
        }
    }

    #[test]
    fn verify_marks_rejects_bad_labels() {
        let spec = FamilySpec::sl(3, 2).unwrap();
        let entry = CatalogEntry::build(&spec).unwrap();
        assert!(verify_marks(&entry.diagram, &entry.realization).unwrap());

        let d = &entry.diagram;
        let relabel = |f: &dyn Fn(&Node) -> u32| -> Vec<Node> {
            d.nodes().iter().map(|n| Node { a_label: f(n), ..n.clone() }).collect()
        };
        // doubled labels still balance the roots; only the gcd rule rejects them
        let doubled = relabel(&|n| 2 * n.a_label);
        let labels: Vec<u32> = doubled.iter().map(|n| n.a_label).collect();
        assert!(entry.realization.weighted_sum(&labels).unwrap().iter().all(Zero::is_zero));
        assert!(Diagram::new(spec.clone(), doubled, d.edges().to_vec(), d.lowest()).is_err());

        let bumped = relabel(&|n| if n.id == 1 { 2 } else { n.a_label });
        let bumped = Diagram::new(spec, bumped, d.edges().to_vec(), d.lowest()).unwrap();
        assert!(!verify_marks(&bumped, &entry.realization).unwrap());

        let other = root_realization(&FamilySpec::d(5, 3).unwrap()).unwrap();
        assert!(matches!(verify_marks(&bumped, &other), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn double_edge_length_ratio() {
        let spec = FamilySpec::d(5, 3).unwrap();
        let r = root_realization(&spec).unwrap();
        let (short, long) = (r.norm(8).unwrap(), r.norm(9).unwrap());
        assert_eq!(long / short, q_int(2));
        assert!(long.abs() > short.abs());
    }

    #[test]
    fn every_small_instance_passes_the_audit() {
        let specs = small_instances(14);
        assert!(specs.len() > 60, "{} instances", specs.len());
        for spec in specs {
            let problems = audit(&spec).unwrap();
            assert!(problems.is_empty(), "{spec}: {problems:?}");
        }
    }

    #[test]
    fn d21a_structure_is_independent_of_alpha() {
        let a = build_preferred_diagram(&FamilySpec::d21a(q_int(2)).unwrap()).unwrap();
        for alpha in [Rational::new(1, 3), q_int(-3), Rational::new(-1, 2), q_int(7)] {
            let spec = FamilySpec::d21a(alpha).unwrap();
            let b = build_preferred_diagram(&spec).unwrap();
            assert_eq!(a.nodes(), b.nodes());
            assert_eq!(a.edges(), b.edges());
            assert!(audit(&spec).unwrap().is_empty(), "alpha = {alpha}");
        }
    }

    #[test]
    fn deterministic() {
        for spec in small_instances(14) {
            let a = build_preferred_diagram(&spec).unwrap();
            let b = build_preferred_diagram(&spec).unwrap();
            assert_eq!(a.to_json(), b.to_json());
        }
    }

    #[test]
    fn exceptional_even_types() {
        assert_eq!(expected_even_type(&FamilySpec::f4()), vec!["B3", "A1"]);
        assert_eq!(expected_even_type(&FamilySpec::b(0, 2).unwrap()), vec!["C2"]);
        assert_eq!(expected_even_type(&FamilySpec::c(2).unwrap()), vec!["C1"]);
    }
}
