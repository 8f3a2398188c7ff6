//! Graphviz rendering of the atoms below a simple.
//!
//! The root node is the simple itself; each atom dividing it on the left is a
//! node, with the infinite family of `t_i` collapsed into a single `t[*]` node
//! when all of them divide. Two atoms are joined by an edge labeled with their
//! join whenever that join still divides the simple. For the collapsed class
//! the representative `t_k` is used, and a loop on `t[*]` carries the common
//! join `t_k t_0` of two distinct `t` atoms.

use std::fmt::Write;

use crate::geodesic::{left_descents, TPart};
use crate::interval::{join_left, simple_left_divides, IntervalCtx, Simple};
use crate::word::Generator;

struct Node {
    id: String,
    label: String,
    gen: Generator,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn word_label(s: &Simple) -> String {
    if s.is_identity() {
        "1".to_string()
    } else {
        s.word().to_string()
    }
}

fn atom_nodes(a: &Simple, ctx: &IntervalCtx) -> Vec<Node> {
    let d = left_descents(a.matrix());
    let mut out = Vec::new();
    match d.t_part {
        TPart::None => {}
        TPart::One(i) => out.push(Node {
            id: format!("t{i}").replace('-', "m"),
            label: format!("t[{i}]"),
            gen: Generator::T(i),
        }),
        TPart::All => out.push(Node {
            id: "tall".into(),
            label: "t[*]".into(),
            gen: Generator::T(ctx.k()),
        }),
    }
    for &j in &d.s_part {
        out.push(Node {
            id: format!("s{j}"),
            label: format!("s{j}"),
            gen: Generator::S(j),
        });
    }
    out
}

/// The atom graph of `a` in DOT syntax.
pub fn atom_graph_dot(a: &Simple, ctx: &IntervalCtx) -> String {
    let mut out = String::new();
    let nodes = atom_nodes(a, ctx);
    let atom = |g: Generator| ctx.atom(g).expect("left divisor of a simple is simple");
    writeln!(out, "digraph atoms {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  root [label={}, shape=box];", quote(&word_label(a))).unwrap();
    for v in &nodes {
        let shape = if v.label == "t[*]" {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(
            out,
            "  {} [label={}, shape={shape}];",
            v.id,
            quote(&v.label)
        )
        .unwrap();
        writeln!(out, "  {} -> root;", v.id).unwrap();
    }
    if let Some(v) = nodes.iter().find(|v| v.label == "t[*]") {
        let j = join_left(&atom(Generator::T(ctx.k())), &atom(Generator::T(0)), ctx);
        if simple_left_divides(&j, a) {
            writeln!(
                out,
                "  {0} -> {0} [label={1}, dir=none];",
                v.id,
                quote(&word_label(&j))
            )
            .unwrap();
        }
    }
    for (x, u) in nodes.iter().enumerate() {
        for v in &nodes[x + 1..] {
            let j = join_left(&atom(u.gen), &atom(v.gen), ctx);
            if simple_left_divides(&j, a) {
                writeln!(
                    out,
                    "  {} -> {} [label={}, dir=none];",
                    u.id,
                    v.id,
                    quote(&word_label(&j))
                )
                .unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
