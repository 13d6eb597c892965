//! Render-only exports: Graphviz DOT and a plain edge list. Parallel edges
//! and loops are expanded line by line up to a per-pair cap; the
//! `multiplicity` attribute always carries the true count regardless of how
//! many lines were drawn.

use std::fmt::Write;

use crate::document::GraphDocument;

/// At most this many parallel lines are drawn per vertex pair (or loop
/// vertex) so dense graphs stay viewable.
pub const DOT_RENDER_CAP: u32 = 10;

fn header_comment(doc: &GraphDocument) -> String {
    let mut line = format!("family={}", doc.family);
    if let Some(n) = doc.n {
        write!(line, " n={n}").unwrap();
    }
    if let Some(host) = &doc.host {
        write!(line, " host={host}").unwrap();
    }
    if let Some(sem) = &doc.semantics {
        write!(line, " semantics={sem}").unwrap();
    }
    if let Some(seq) = &doc.sequence {
        write!(line, " sequence={seq}").unwrap();
    }
    line
}

pub fn to_dot(doc: &GraphDocument) -> String {
    let mut out = String::new();
    let name = doc.identity().replace(['(', ')', '=', '[', ']', ','], "_");
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  // {}", header_comment(doc)).unwrap();
    for v in &doc.vertices {
        writeln!(
            out,
            "  v{} [label=\"{}\"];",
            v.index,
            doc.vertex_label(v.index)
        )
        .unwrap();
    }
    for e in &doc.edges {
        for _ in 0..e.multiplicity.min(DOT_RENDER_CAP) {
            writeln!(
                out,
                "  v{} -- v{} [multiplicity={}];",
                e.u, e.v, e.multiplicity
            )
            .unwrap();
        }
    }
    for l in &doc.loops {
        for _ in 0..l.count.min(DOT_RENDER_CAP) {
            writeln!(out, "  v{} -- v{} [multiplicity={}];", l.v, l.v, l.count).unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Plain text: one `u v multiplicity` row per adjacent pair, loops as
/// `v v count` rows.
pub fn to_edge_list(doc: &GraphDocument) -> String {
    let mut out = String::new();
    writeln!(out, "# {}", header_comment(doc)).unwrap();
    writeln!(out, "# u v multiplicity (loops listed as v v count)").unwrap();
    for e in &doc.edges {
        writeln!(out, "{} {} {}", e.u, e.v, e.multiplicity).unwrap();
    }
    for l in &doc.loops {
        writeln!(out, "{} {} {}", l.v, l.v, l.count).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fibsum::generators::{gen_fib_sum_set_graph, EdgeSemantics};
    use fibsum::numseq::{SequenceKind, SumSequence};

    fn n3_inclusive_doc() -> GraphDocument {
        let seq = SumSequence::for_ground_set(SequenceKind::Fibonacci, 3).unwrap();
        let mut doc = GraphDocument::from_multigraph(
            &gen_fib_sum_set_graph(3, &seq, EdgeSemantics::Inclusive).unwrap(),
            "fib_sum_set",
            Some(3),
        );
        doc.semantics = Some("inclusive".into());
        doc.sequence = Some("fibonacci".into());
        doc
    }

    #[test]
    fn dot_expands_parallel_edges_and_loops() {
        let dot = to_dot(&n3_inclusive_doc());
        let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
        assert_eq!(nodes, 7);
        let edge_lines: Vec<&str> = dot.lines().filter(|l| l.contains(" -- ")).collect();
        let self_loops = edge_lines
            .iter()
            .filter(|l| {
                let parts: Vec<&str> = l.trim().split(" -- ").collect();
                parts[0] == parts[1].split_whitespace().next().unwrap()
            })
            .count();
        assert_eq!(edge_lines.len(), 34 + 4);
        assert_eq!(self_loops, 4);
        assert!(dot.contains("semantics=inclusive"));
    }

    #[test]
    fn render_cap_preserves_the_true_multiplicity() {
        let mut doc = n3_inclusive_doc();
        doc.edges[0].multiplicity = 25;
        let dot = to_dot(&doc);
        let capped = dot
            .lines()
            .filter(|l| l.contains("[multiplicity=25]"))
            .count();
        assert_eq!(capped, DOT_RENDER_CAP as usize);
    }

    #[test]
    fn edge_list_has_multiplicity_column() {
        let text = to_edge_list(&n3_inclusive_doc());
        assert!(text.lines().any(|l| l == "3 6 4")); // {1,2} - {1,2,3}
        assert!(text.lines().any(|l| l == "6 6 2")); // double loop at the full set
    }
}
