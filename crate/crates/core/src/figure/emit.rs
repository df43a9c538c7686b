//! TikZ and DOT text for a weighted ring drawing.
//!
//! The TikZ output keeps the loop structure of a hand-written picture:
//! nodes and edges as `\foreach` loops over the five ring positions, and
//! labels grouped into loops wherever consecutive slots share a value.

use std::fmt::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::drawing::{unit, DrawnGraph, DrawnWeight};
use crate::field::{format_scalar, QuadraticScalar as Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Tikz,
    Dot,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tikz" => Ok(Format::Tikz),
            "dot" => Ok(Format::Dot),
            _ => Err(format!("unknown format '{s}' (expected tikz or dot)")),
        }
    }
}

const GREEK: [&str; 8] = ["alpha", "beta", "gamma", "delta", "epsilon", "phi", "psi", "tau"];

fn tex_name(name: &str) -> String {
    if GREEK.contains(&name) {
        format!("\\{name}")
    } else {
        name.to_string()
    }
}

/// TeX for an exact value, without math delimiters: `\frac{\sqrt{5}-1}{2}`.
pub fn tex_value(x: &Q) -> String {
    let den: BigInt = x.rational_part().denom().lcm(x.surd_part().denom());
    let p = (x.rational_part() * num_rational::BigRational::from_integer(den.clone())).to_integer();
    let q = (x.surd_part() * num_rational::BigRational::from_integer(den.clone())).to_integer();
    let surd = |c: &BigInt| {
        let root = format!("\\sqrt{{{}}}", x.radicand());
        if c.abs().is_one() {
            root
        } else {
            format!("{}{root}", c.abs())
        }
    };
    let (numerator, negative) = if q.is_zero() {
        (p.abs().to_string(), p.is_negative())
    } else if p.is_zero() {
        (surd(&q), q.is_negative())
    } else if p.is_positive() {
        (format!("{p}{}{}", if q.is_negative() { "-" } else { "+" }, surd(&q)), false)
    } else if q.is_positive() {
        (format!("{}-{}", surd(&q), p.abs()), false)
    } else {
        (format!("{}+{}", p.abs(), surd(&q)), true)
    };
    let body = if !den.is_one() {
        format!("\\frac{{{numerator}}}{{{den}}}")
    } else if negative && numerator.contains('+') {
        format!("({numerator})")
    } else {
        numerator
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn tikz_label(x: &Q, legend: &[(String, Q)]) -> String {
    if let Some((name, _)) = legend.iter().find(|(_, v)| v == x) {
        return format!("${}$", tex_name(name));
    }
    match x.to_rational() {
        Some(r) if r.is_integer() => r.to_integer().to_string(),
        _ => format!("${}$", tex_value(x)),
    }
}

fn dot_label(x: &Q, legend: &[(String, Q)]) -> String {
    legend.iter().find(|(_, v)| v == x).map_or_else(|| format_scalar(x), |(name, _)| name.clone())
}

/// `{1,2,...,5}` for runs of four or more, otherwise explicit.
fn slot_list(slots: &[usize]) -> String {
    let run = slots.windows(2).all(|w| w[1] == w[0] + 1);
    if run && slots.len() >= 4 {
        format!("{{{},{},...,{}}}", slots[0], slots[1], slots[slots.len() - 1])
    } else {
        let items: Vec<String> = slots.iter().map(usize::to_string).collect();
        format!("{{{}}}", items.join(","))
    }
}

// polar position of each label group, with `\p` standing for the slot
const LABEL_AT: [&str; 5] = ["\\p*72+36:6.8", "\\p*72+4:7", "\\p*36+18:5", "\\p*72+43:3", "\\p*72:1.3"];

const NODE_RINGS: [&str; 4] = ["\\p*72:8", "\\p*72:6", "\\p*72+36:4", "\\p*72+36:2"];

const EDGE_LOOP: &str = "(\\p*72:8)--(\\p*72+72:8) (\\p*72:8)--(\\p*72:6) (\\p*72:6)--(\\p*72+36:4) \
(\\p*72:6)--(\\p*72-36:4) (\\p*72+36:4)--(\\p*72+36:2) (\\p*72+36:2)--(\\p*72-36:2)";

fn emit_tikz(drawing: &DrawnGraph, dw: &DrawnWeight, legend: &[(String, Q)], caption: &[String]) -> String {
    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}\n\\begin{scope}[scale=0.4]\n");
    for (i, line) in caption.iter().enumerate() {
        let y = -9.0 - 0.8 * i as f64;
        writeln!(out, "\\node at (0,{y}) {{{line}}};").unwrap();
    }
    out.push('\n');
    for ring in NODE_RINGS {
        writeln!(out, "    \\foreach \\p in {{1,2,...,5}}\n        \\draw[fill=black] ({ring}) circle (.05);").unwrap();
    }
    out.push('\n');
    writeln!(out, "    \\foreach \\p in {{1,2,...,5}}\n        \\draw {EDGE_LOOP};").unwrap();
    out.push('\n');

    for (group, at) in LABEL_AT.iter().enumerate() {
        let mut slots: Vec<(usize, String)> = drawing
            .edges()
            .iter()
            .zip(&dw.values)
            .filter(|(e, _)| e.class.group() == group)
            .map(|(e, v)| (e.slot(), tikz_label(v, legend)))
            .collect();
        slots.sort_by_key(|(s, _)| *s);
        let mut labels: Vec<&String> = Vec::new();
        for (_, l) in &slots {
            if !labels.contains(&l) {
                labels.push(l);
            }
        }
        for label in labels {
            let members: Vec<usize> = slots.iter().filter(|(_, l)| l == label).map(|(s, _)| *s).collect();
            if let [single] = members[..] {
                let pos = at.replace("\\p", &single.to_string());
                writeln!(out, "    \\node[red] at ({pos}) {{{label}}};").unwrap();
            } else {
                writeln!(
                    out,
                    "    \\foreach \\p in {}\n        \\node[red] at ({at}) {{{label}}};",
                    slot_list(&members)
                )
                .unwrap();
            }
        }
    }

    if !legend.is_empty() {
        let n = legend.len();
        let half = 0.75 * (n as f64 - 1.0) + 1.0;
        out.push_str("\n\\begin{scope}[xshift=5.7cm,yshift=6.5cm]\n");
        for (i, (name, value)) in legend.iter().enumerate() {
            let y = 1.5 * ((n as f64 - 1.0) / 2.0 - i as f64);
            writeln!(out, " \\node[right] at (0,{y}) {{${}={}$}};", tex_name(name), tex_value(value)).unwrap();
        }
        writeln!(out, " \\draw (0,{}) --(0,{half})--(4.2,{half})--(4.2,{})--cycle;", -half, -half).unwrap();
        out.push_str("\\end{scope}\n");
    }
    out.push_str("\\end{scope}\n\\end{tikzpicture}\n");
    out
}

fn emit_dot(drawing: &DrawnGraph, dw: &DrawnWeight, legend: &[(String, Q)], caption: &[String]) -> String {
    let mut out = String::from("graph ring_drawing {\n");
    if !caption.is_empty() {
        writeln!(out, "  label=\"{}\";", caption.join("\\n")).unwrap();
    }
    out.push_str("  node [shape=point];\n");
    for (name, value) in legend {
        writeln!(out, "  // {name} = {}", format_scalar(value)).unwrap();
    }
    for n in drawing.nodes() {
        let (c, s) = unit(n.angle());
        let r = n.ring.radius() as f64;
        writeln!(out, "  {} [pos=\"{:.3},{:.3}!\"];", n.label(), r * c, r * s).unwrap();
    }
    for (e, v) in drawing.edges().iter().zip(&dw.values) {
        let (a, b) = (&drawing.nodes()[e.from], &drawing.nodes()[e.to]);
        writeln!(out, "  {} -- {} [label=\"{}\"];", a.label(), b.label(), dot_label(v, legend)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Renders the drawing with the given edge values. Values equal to a legend
/// entry are labelled with its name.
pub fn emit(
    drawing: &DrawnGraph,
    dw: &DrawnWeight,
    legend: &[(String, Q)],
    format: Format,
    caption: &[String],
) -> String {
    assert_eq!(dw.values.len(), drawing.edges().len(), "one value per drawn edge");
    match format {
        Format::Tikz => emit_tikz(drawing, dw, legend, caption),
        Format::Dot => emit_dot(drawing, dw, legend, caption),
    }
}
