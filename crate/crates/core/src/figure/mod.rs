//! The two weighted ring drawings of the icosahedral fan: the five-fold
//! symmetric weight vanishing on the two ring classes, and a weight vanishing
//! on a single edge.

mod drawing;
mod emit;

pub use drawing::{dodecahedral_drawing, DrawnEdge, DrawnGraph, DrawnNode, DrawnWeight, EdgeClass, Ring};
pub use emit::{emit, tex_value, Format};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::balance::{is_balanced, WeightVector};
use crate::field::QuadraticScalar as Q;
use crate::linalg::Vec3;
use crate::skeleton::{builtin_polytope, classify_edges_by_axis, link_cycle, PolytopeSkeleton, SkeletonError, Solid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FigureError {
    #[error("the ring drawing needs the icosahedron (12 vertices of degree 5)")]
    NotIcosahedron,
    #[error("axis vertex has no antipode")]
    NoAntipode,
    #[error("seed must be a triangle containing the axis vertex")]
    BadSeed,
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
}

/// Legend values of the two drawings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureConstants {
    /// `(√5 − 1)/2`, the inverse golden ratio.
    pub phi_fig: Q,
    pub beta: Q,
    pub gamma: Q,
    /// `(3 + √5)/2`, as printed in the legend of the single-edge drawing.
    pub alpha_printed: Q,
    /// `(3 + √5)/4 = φ²·β`, the value balancing forces at the inner face.
    pub alpha_corrected: Q,
}

impl Default for FigureConstants {
    fn default() -> Self {
        FigureConstants {
            phi_fig: Q::from_fracs((-1, 2), (1, 2)),
            beta: Q::from_fracs((1, 2), (0, 1)),
            gamma: Q::from_fracs((5, 4), (1, 4)),
            alpha_printed: Q::from_fracs((3, 2), (1, 2)),
            alpha_corrected: Q::from_fracs((3, 4), (1, 4)),
        }
    }
}

impl FigureConstants {
    pub fn alpha(&self, choice: AlphaChoice) -> &Q {
        match choice {
            AlphaChoice::Printed => &self.alpha_printed,
            AlphaChoice::Corrected => &self.alpha_corrected,
        }
    }

    pub fn left_legend(&self) -> Vec<(String, Q)> {
        vec![("phi".into(), self.phi_fig.clone())]
    }

    pub fn right_legend(&self, choice: AlphaChoice) -> Vec<(String, Q)> {
        vec![
            ("alpha".into(), self.alpha(choice).clone()),
            ("beta".into(), self.beta.clone()),
            ("gamma".into(), self.gamma.clone()),
        ]
    }
}

/// Which value of α the single-edge drawing uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AlphaChoice {
    /// The legend value `(3 + √5)/2`; not balanced.
    Printed,
    /// `(3 + √5)/4`; balanced.
    #[default]
    Corrected,
}

impl FromStr for AlphaChoice {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "printed" => Ok(AlphaChoice::Printed),
            "corrected" => Ok(AlphaChoice::Corrected),
            _ => Err(format!("unknown alpha choice '{s}' (expected printed or corrected)")),
        }
    }
}

impl fmt::Display for AlphaChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlphaChoice::Printed => "printed",
            AlphaChoice::Corrected => "corrected",
        })
    }
}

/// 1 on the edges at the axis and at its antipode, 0 on the two rings of
/// edges joining their neighbours, `(√5 − 1)/2` on the ten equatorial edges.
pub fn figure_left_weight(icosa: &PolytopeSkeleton<Q>, axis: usize) -> Result<WeightVector<Q>, FigureError> {
    let classes = classify_edges_by_axis(icosa, axis)?;
    let constants = FigureConstants::default();
    let mut w = WeightVector::zero(icosa.edge_count());
    for &e in classes.polar_north.iter().chain(&classes.polar_south) {
        w.set(e, Q::from_int(1));
    }
    for &e in &classes.equatorial {
        w.set(e, constants.phi_fig.clone());
    }
    Ok(w)
}

/// The single-edge drawing's labels on the drawn edges.
pub fn right_drawn_weight(drawing: &DrawnGraph, alpha: AlphaChoice) -> DrawnWeight {
    let c = FigureConstants::default();
    let one = Q::from_int(1);
    let (a, b, g) = (c.alpha(alpha).clone(), c.beta.clone(), c.gamma.clone());
    DrawnWeight::from_fn(drawing, |e| {
        use EdgeClass::*;
        match (e.class, e.p) {
            (Outer, _) => one.clone(),
            (Spoke, 5) => g.clone(),
            (Spoke, _) => one.clone(),
            (MiddlePrev, 1) | (MiddleNext, 4) => g.clone(),
            (MiddlePrev, 5) | (MiddleNext, 5) => b.clone(),
            (MiddlePrev, _) | (MiddleNext, _) => one.clone(),
            (InnerSpoke, 1..=3) => g.clone(),
            (InnerSpoke, _) => a.clone(),
            (Inner, 1) | (Inner, 4) => a.clone(),
            (Inner, 2) | (Inner, 3) => b.clone(),
            (Inner, _) => Q::from_int(0),
        }
    })
}

pub fn figure_right_weight(drawing: &DrawnGraph, alpha: AlphaChoice) -> WeightVector<Q> {
    drawing.transfer(&right_drawn_weight(drawing, alpha))
}

/// The builtin icosahedron's vertex at `(0, 1, φ)`.
pub fn default_axis(icosa: &PolytopeSkeleton<Q>) -> Option<usize> {
    let target = Vec3::new(Q::from_int(0), Q::from_int(1), Q::golden_ratio());
    icosa.vertices().iter().position(|v| v.position == target)
}

/// Drawing about `axis` seeded by the first triangle of its link.
pub fn drawing_about(icosa: &PolytopeSkeleton<Q>, axis: usize) -> Result<DrawnGraph, FigureError> {
    let link = link_cycle(icosa, axis)?;
    if link.len() < 2 {
        return Err(FigureError::NotIcosahedron);
    }
    dodecahedral_drawing(icosa, axis, [axis, link[0], link[1]])
}

/// Which of the two drawings to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Panel {
    /// Five-fold symmetric, vanishing on the two rings about the axis.
    Left,
    /// Vanishing on a single inner edge.
    Right,
}

impl FromStr for Panel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Panel::Left),
            "right" => Ok(Panel::Right),
            _ => Err(format!("unknown panel '{s}' (expected left or right)")),
        }
    }
}

/// One line summarising a weight: its verdict and number of zero edges.
pub fn caption(icosa: &PolytopeSkeleton<Q>, w: &WeightVector<Q>) -> String {
    let zeros = w.zero_set().len();
    format!(
        "{} weight, {zeros} zero edge{}.",
        if is_balanced(icosa, w).is_balanced() { "Balanced" } else { "Unbalanced" },
        if zeros == 1 { "" } else { "s" }
    )
}

/// A rendered drawing together with the weight it shows.
#[derive(Clone, Debug)]
pub struct Rendered {
    pub text: String,
    pub weight: WeightVector<Q>,
    pub balanced: bool,
}

/// Renders a panel on the builtin icosahedron about its default axis.
pub fn render(panel: Panel, alpha: AlphaChoice, format: Format) -> Result<Rendered, FigureError> {
    let icosa = builtin_polytope(Solid::Icosahedron);
    let axis = default_axis(&icosa).ok_or(FigureError::NotIcosahedron)?;
    let drawing = drawing_about(&icosa, axis)?;
    let constants = FigureConstants::default();
    let (dw, legend) = match panel {
        Panel::Left => (drawing.pull(&figure_left_weight(&icosa, axis)?), constants.left_legend()),
        Panel::Right => (right_drawn_weight(&drawing, alpha), constants.right_legend(alpha)),
    };
    let weight = drawing.transfer(&dw);
    let cap = caption(&icosa, &weight);
    Ok(Rendered {
        text: emit(&drawing, &dw, &legend, format, &[cap]),
        balanced: is_balanced(&icosa, &weight).is_balanced(),
        weight,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::Verdict;
    use std::collections::HashMap;

    fn multiset(w: &WeightVector<Q>) -> HashMap<Q, usize> {
        let mut m = HashMap::new();
        for v in w.values() {
            *m.entry(v.clone()).or_default() += 1;
        }
        m
    }

    #[test]
    fn alpha_relation() {
        let c = FigureConstants::default();
        let phi = Q::golden_ratio();
        assert_eq!(c.alpha_corrected, &phi * &phi * c.beta.clone());
        assert_eq!(c.alpha_printed, &c.alpha_corrected * &Q::from_int(2));
    }

    #[test]
    fn left_weight_balances_and_vanishes_on_ten_edges() {
        let ico = builtin_polytope(Solid::Icosahedron);
        let axis = default_axis(&ico).unwrap();
        let w = figure_left_weight(&ico, axis).unwrap();
        assert_eq!(is_balanced(&ico, &w), Verdict::Balanced);
        assert_eq!(w.zero_set().len(), 10);
        let m = multiset(&w);
        assert_eq!(m[&Q::from_int(1)], 10);
        assert_eq!(m[&Q::from_int(0)], 10);
        assert_eq!(m[&FigureConstants::default().phi_fig], 10);
    }

    #[test]
    fn right_weight_balances_with_corrected_alpha() {
        let ico = builtin_polytope(Solid::Icosahedron);
        let d = drawing_about(&ico, default_axis(&ico).unwrap()).unwrap();
        let w = figure_right_weight(&d, AlphaChoice::Corrected);
        assert!(is_balanced(&ico, &w).is_balanced());
        assert_eq!(w.support().len(), 29);
        let c = FigureConstants::default();
        let m = multiset(&w);
        assert_eq!(
            (m[&Q::from_int(1)], m[&c.gamma], m[&c.beta], m[&c.alpha_corrected], m[&Q::from_int(0)]),
            (15, 6, 4, 4, 1)
        );
    }

    #[test]
    fn right_weight_with_printed_alpha_fails_at_four_rays() {
        let ico = builtin_polytope(Solid::Icosahedron);
        let d = drawing_about(&ico, default_axis(&ico).unwrap()).unwrap();
        let verdict = is_balanced(&ico, &figure_right_weight(&d, AlphaChoice::Printed));
        assert_eq!(verdict.failing_vertices().len(), 4);
        assert!(verdict.failing_vertices().contains(&d.antipode));
    }

    #[test]
    fn left_tikz_matches_fixture() {
        let out = render(Panel::Left, AlphaChoice::Corrected, Format::Tikz).unwrap();
        assert_eq!(out.text, include_str!("../../fixtures/left.tikz"));
    }

    #[test]
    fn right_tikz_matches_fixture() {
        let out = render(Panel::Right, AlphaChoice::Corrected, Format::Tikz).unwrap();
        assert!(out.balanced);
        assert_eq!(out.text, include_str!("../../fixtures/right.tikz"));
    }

    #[test]
    fn printed_alpha_renders_unbalanced_caption() {
        let out = render(Panel::Right, AlphaChoice::Printed, Format::Tikz).unwrap();
        assert!(!out.balanced);
        assert!(out.text.contains("{Unbalanced weight, 1 zero edge.}"));
        assert!(out.text.contains("$\\alpha=\\frac{3+\\sqrt{5}}{2}$"));
    }

    #[test]
    fn dot_matches_fixtures() {
        let left = render(Panel::Left, AlphaChoice::Corrected, Format::Dot).unwrap();
        assert_eq!(left.text, include_str!("../../fixtures/left.dot"));
        let right = render(Panel::Right, AlphaChoice::Corrected, Format::Dot).unwrap();
        assert_eq!(right.text, include_str!("../../fixtures/right.dot"));
    }
}
