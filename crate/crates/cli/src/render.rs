//! Text renderings of a diagram with a circling.
//!
//! ASCII: white vertices are `O`, grey and black ones `X`, circled ids are in
//! parentheses. The longest simple path is drawn on one line; remaining edges
//! are listed underneath. Multiple edges are drawn as `=k>` with the arrow
//! pointing at the shorter root.

use std::fmt::Write;

use vogan_core::engine::Circling;
use vogan_core::{Color, Diagram, Edge, NodeId};

fn glyph(d: &Diagram, id: NodeId, c: &Circling) -> String {
    let node = d.node(id).expect("ids come from the diagram");
    let mark = if node.color == Color::White { 'O' } else { 'X' };
    if c.contains(id) {
        format!("{mark}({id})")
    } else {
        format!("{mark}{id}")
    }
}

/// Connector drawn from `a` (left) to `b` (right).
fn connector(e: &Edge, a: NodeId) -> String {
    match e.longer_id() {
        None => "---".to_string(),
        Some(long) if long == a => format!("={}>", e.multiplicity),
        Some(_) => format!("<{}=", e.multiplicity),
    }
}

fn longest_path(d: &Diagram) -> Vec<NodeId> {
    fn extend(d: &Diagram, path: &mut Vec<NodeId>, best: &mut Vec<NodeId>) {
        if path.len() > best.len() {
            *best = path.clone();
        }
        let last = *path.last().unwrap();
        let mut next: Vec<NodeId> = d.neighbors(last).filter(|n| !path.contains(n)).collect();
        next.sort_unstable();
        for n in next {
            path.push(n);
            extend(d, path, best);
            path.pop();
        }
    }
    let mut best = Vec::new();
    for start in d.ids() {
        extend(d, &mut vec![start], &mut best);
    }
    best
}

pub fn ascii(d: &Diagram, c: &Circling) -> String {
    let spine = longest_path(d);
    let mut out = String::new();
    let _ = writeln!(out, "{}  lowest root: {}  parity rule: {}", d.spec(), d.lowest(), d.parity_rule());
    let mut line = glyph(d, spine[0], c);
    for pair in spine.windows(2) {
        let e = d.edge_between(pair[0], pair[1]).expect("consecutive path vertices are adjacent");
        line.push_str(&connector(e, pair[0]));
        line.push_str(&glyph(d, pair[1], c));
    }
    let _ = writeln!(out, "{line}");
    let on_spine = |e: &Edge| spine.windows(2).any(|p| (p[0], p[1]) == (e.u, e.v) || (p[1], p[0]) == (e.u, e.v));
    for e in d.edges().iter().filter(|e| !on_spine(e)) {
        let _ = writeln!(out, "  {}{}{}", glyph(d, e.u, c), connector(e, e.u), glyph(d, e.v, c));
    }
    let labels: Vec<String> = d.nodes().iter().map(|n| format!("{}:{}", n.id, n.a_label)).collect();
    let _ = writeln!(out, "a-labels {}", labels.join(" "));
    out
}

pub fn dot(d: &Diagram, c: &Circling) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", d.spec());
    let _ = writeln!(out, "  node [shape=circle, style=filled];");
    for n in d.nodes() {
        let (fill, font) = match n.color {
            Color::White => ("white", "black"),
            Color::Grey => ("grey", "black"),
            Color::Black => ("black", "white"),
        };
        let mut attrs = format!("label=\"{}\", xlabel=\"a={}\", fillcolor={fill}, fontcolor={font}", n.id, n.a_label);
        if c.contains(n.id) {
            attrs.push_str(", peripheries=2");
        }
        if n.id == d.lowest() {
            attrs.push_str(", shape=doublecircle");
        }
        let _ = writeln!(out, "  {} [{attrs}];", n.id);
    }
    for e in d.edges() {
        match e.longer_id() {
            None => {
                let _ = writeln!(out, "  {} -- {};", e.u, e.v);
            }
            Some(long) => {
                let short = e.other(long);
                let strands = vec!["black"; e.multiplicity as usize].join(":invis:");
                let _ = writeln!(out, "  {long} -- {short} [dir=forward, color=\"{strands}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use vogan_core::catalog::build_preferred_diagram;
    use vogan_core::FamilySpec;

    #[test]
    fn d53_ascii() {
        let d = build_preferred_diagram(&FamilySpec::d(5, 3).unwrap()).unwrap();
        let text = ascii(&d, &Circling::from([2, 4, 9]));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "O1---O3---O(4)---O5---X6---O7---O8<2=O(9)");
        assert_eq!(lines[2], "  O(2)---O3");
    }

    #[test]
    fn cycle_lists_the_closing_edge() {
        let d = build_preferred_diagram(&FamilySpec::sl(3, 2).unwrap()).unwrap();
        let text = ascii(&d, &Circling::from([3, 5]));
        assert_eq!(text.lines().nth(1).unwrap(), "O1---O2---O(3)---X4---O(5)---O6---X7");
        assert_eq!(text.lines().nth(2).unwrap(), "  O1---X7");
    }

    #[test]
    fn dot_marks_circles_and_arrows() {
        let d = build_preferred_diagram(&FamilySpec::d(5, 3).unwrap()).unwrap();
        let text = dot(&d, &Circling::from([9]));
        assert!(text.starts_with("graph \"D(5,3)\" {"));
        assert!(text.contains("9 -- 8 [dir=forward"));
        assert!(text.contains("peripheries=2"));
        assert!(text.trim_end().ends_with('}'));
    }
}
