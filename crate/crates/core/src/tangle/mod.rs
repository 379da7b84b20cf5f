//! Sliced tangle diagrams with blue (module-labelled) and red (surgery)
//! strands, their parser, the Reshetikhin–Turaev evaluation of blue
//! diagrams, the bead calculus on red components, and linking data.
//!
//! Slices are listed bottom to top. Blue strands are oriented upward; a
//! downward strand is written with a dual label. Red strands carry no
//! orientation: each red component is oriented by traversal.

mod cut;
mod eval;
mod parse;
mod red;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

pub use cut::{cut_candidates, cut_diagram, parse_cut, CutRef};
pub use eval::{BlueEvaluator, State};
pub use parse::{parse_diagram, parse_diagram_json, parse_diagram_with_coupons, parse_generator};
pub use red::{
    evaluate_bichrome, inertia, linking_matrix, recolor_red, red_components, universal_beads, Bead, Component, Crossing,
    RedData, RedFunctional, SurgeryData,
};

use crate::error::{Error, Result, Span};
use crate::rep::ModLabel;
use crate::scalar::{CycScalar, FieldContext};

/// Strand label: a catalogue module expression, or a red surgery strand.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectLabel {
    Blue(ModLabel),
    Red,
}

impl ObjectLabel {
    /// Dual label; red strands are self-dual since they are unoriented.
    pub fn dual(&self) -> ObjectLabel {
        match self {
            ObjectLabel::Blue(m) => ObjectLabel::Blue(m.dual()),
            ObjectLabel::Red => ObjectLabel::Red,
        }
    }

    pub fn is_red(&self) -> bool {
        matches!(self, ObjectLabel::Red)
    }

    pub fn blue(&self) -> Option<&ModLabel> {
        match self {
            ObjectLabel::Blue(m) => Some(m),
            ObjectLabel::Red => None,
        }
    }
}

/// Formats a module label in the diagram grammar (tensors parenthesised).
pub fn format_mod_label(m: &ModLabel) -> String {
    match m {
        ModLabel::V(n) => format!("V{}", n),
        ModLabel::P(n) => format!("P{}", n),
        ModLabel::Dual(x) => format!("{}*", format_mod_label(x)),
        ModLabel::Tensor(a, b) => format!("({}(x){})", format_mod_label(a), format_mod_label(b)),
        ModLabel::Other(s) => s.clone(),
    }
}

impl fmt::Display for ObjectLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectLabel::Blue(m) => write!(f, "{}", format_mod_label(m)),
            ObjectLabel::Red => write!(f, "red"),
        }
    }
}

/// Comma-separated label sequence, as used in error messages.
pub fn format_labels(labels: &[ObjectLabel]) -> String {
    labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    Id,
    /// `X* ⊗ X → 1`.
    Lev,
    /// `1 → X ⊗ X*`.
    Lcoev,
    /// `X ⊗ X* → 1`.
    Rev,
    /// `1 → X* ⊗ X`.
    Rcoev,
    /// Positive (`+1`) or negative (`-1`) crossing.
    Cross(i8),
    /// Positive (`+1`) or negative (`-1`) full twist.
    Twist(i8),
    Coupon(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub kind: GenKind,
    /// One label, two for crossings, none for coupons.
    pub labels: Vec<ObjectLabel>,
    pub span: Span,
}

impl Generator {
    pub fn new(kind: GenKind, labels: Vec<ObjectLabel>) -> Self {
        Generator { kind, labels, span: Span { line: 0, column: 0 } }
    }

    pub fn touches_red(&self) -> bool {
        self.labels.iter().any(|l| l.is_red())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.labels;
        match &self.kind {
            GenKind::Id => write!(f, "id({})", l[0]),
            GenKind::Lev => write!(f, "lev({})", l[0]),
            GenKind::Lcoev => write!(f, "lcoev({})", l[0]),
            GenKind::Rev => write!(f, "rev({})", l[0]),
            GenKind::Rcoev => write!(f, "rcoev({})", l[0]),
            GenKind::Cross(s) => write!(f, "x{}({},{})", if *s > 0 { "+" } else { "-" }, l[0], l[1]),
            GenKind::Twist(s) => write!(f, "tw{}({})", if *s > 0 { "+" } else { "-" }, l[0]),
            GenKind::Coupon(n) => write!(f, "coup({})", n),
        }
    }
}

/// A coupon's source/target labels and matrix. Entries are coordinates in
/// powers of `ζ = e^{2πi/(4r)}`, so a coupon is meaningful for any `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coupon {
    pub source: Vec<ObjectLabel>,
    pub target: Vec<ObjectLabel>,
    pub entries: Vec<Vec<Vec<BigRational>>>,
}

impl Coupon {
    /// The coupon matrix over the given field.
    pub fn matrix(&self, fl: FieldContext) -> crate::linalg::Matrix {
        let rows: Vec<Vec<CycScalar>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|coords| {
                        let mut acc = fl.zero();
                        for (k, c) in coords.iter().enumerate() {
                            if !num_traits::Zero::is_zero(c) {
                                acc += &(&fl.zeta_pow(k as i64) * &fl.from_rational(c));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.is_empty() {
            return crate::linalg::Matrix::zeros(fl, 0, ncols);
        }
        crate::linalg::Matrix::from_rows(fl, rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    pub gens: Vec<Generator>,
    pub span: Span,
}

/// A validated sliced diagram.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Diagram {
    pub slices: Vec<Slice>,
    pub coupons: BTreeMap<String, Coupon>,
}

impl Diagram {
    /// Builds and validates a diagram from slices (bottom first).
    pub fn new(slices: Vec<Vec<Generator>>, coupons: BTreeMap<String, Coupon>) -> Result<Diagram> {
        let slices = slices.into_iter().map(|gens| Slice { gens, span: Span { line: 0, column: 0 } }).collect();
        let d = Diagram { slices, coupons };
        d.validate()?;
        Ok(d)
    }

    /// Input labels of a generator.
    pub fn inputs(&self, g: &Generator) -> Result<Vec<ObjectLabel>> {
        let l = &g.labels;
        Ok(match &g.kind {
            GenKind::Id | GenKind::Twist(_) => vec![l[0].clone()],
            GenKind::Lev => vec![l[0].dual(), l[0].clone()],
            GenKind::Rev => vec![l[0].clone(), l[0].dual()],
            GenKind::Lcoev | GenKind::Rcoev => vec![],
            GenKind::Cross(_) => vec![l[0].clone(), l[1].clone()],
            GenKind::Coupon(n) => self.coupon(n)?.source.clone(),
        })
    }

    /// Output labels of a generator.
    pub fn outputs(&self, g: &Generator) -> Result<Vec<ObjectLabel>> {
        let l = &g.labels;
        Ok(match &g.kind {
            GenKind::Id | GenKind::Twist(_) => vec![l[0].clone()],
            GenKind::Lev | GenKind::Rev => vec![],
            GenKind::Lcoev => vec![l[0].clone(), l[0].dual()],
            GenKind::Rcoev => vec![l[0].dual(), l[0].clone()],
            GenKind::Cross(_) => vec![l[1].clone(), l[0].clone()],
            GenKind::Coupon(n) => self.coupon(n)?.target.clone(),
        })
    }

    pub fn coupon(&self, name: &str) -> Result<&Coupon> {
        self.coupons.get(name).ok_or_else(|| Error::UnknownCoupon(name.to_string()))
    }

    /// Labels at boundary `k` (0 = bottom, `slices.len()` = top).
    pub fn boundary(&self, k: usize) -> Result<Vec<ObjectLabel>> {
        if k < self.slices.len() {
            let mut out = Vec::new();
            for g in &self.slices[k].gens {
                out.extend(self.inputs(g)?);
            }
            Ok(out)
        } else if k == self.slices.len() && k > 0 {
            let mut out = Vec::new();
            for g in &self.slices[k - 1].gens {
                out.extend(self.outputs(g)?);
            }
            Ok(out)
        } else if k == 0 {
            Ok(Vec::new())
        } else {
            Err(Error::Invalid(format!("boundary {} out of range", k)))
        }
    }

    pub fn source(&self) -> Result<Vec<ObjectLabel>> {
        self.boundary(0)
    }

    pub fn target(&self) -> Result<Vec<ObjectLabel>> {
        self.boundary(self.slices.len())
    }

    pub fn is_closed(&self) -> Result<bool> {
        Ok(self.source()?.is_empty() && self.target()?.is_empty())
    }

    pub fn has_red(&self) -> bool {
        self.slices.iter().any(|s| s.gens.iter().any(|g| g.touches_red()))
    }

    /// Checks coupon shapes, the red-in-coupon rule and boundary
    /// compatibility between consecutive slices.
    pub fn validate(&self) -> Result<()> {
        for (name, c) in &self.coupons {
            if c.source.iter().chain(&c.target).any(|l| l.is_red()) {
                return Err(Error::RedInCoupon(name.clone()));
            }
            let ncols = c.entries.first().map_or(0, |r| r.len());
            if c.entries.iter().any(|r| r.len() != ncols) {
                return Err(Error::InvalidCoupon { name: name.clone(), message: "ragged matrix".into() });
            }
        }
        for s in &self.slices {
            for g in &s.gens {
                if let GenKind::Coupon(n) = &g.kind {
                    self.coupon(n)?;
                }
            }
        }
        for k in 1..self.slices.len() {
            let mut below = Vec::new();
            for g in &self.slices[k - 1].gens {
                below.extend(self.outputs(g)?);
            }
            let above = self.boundary(k)?;
            if below != above {
                return Err(Error::BoundaryMismatch {
                    span: self.slices[k].span,
                    below: format_labels(&below),
                    above: format_labels(&above),
                });
            }
        }
        Ok(())
    }

    /// All blue labels occurring on strands.
    pub fn blue_labels(&self) -> Vec<ModLabel> {
        let mut out: Vec<ModLabel> = Vec::new();
        for s in &self.slices {
            for g in &s.gens {
                for l in &g.labels {
                    if let ObjectLabel::Blue(m) = l {
                        if !out.contains(m) {
                            out.push(m.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// True if some blue strand carries a projective label.
    pub fn is_admissible(&self, r: u32) -> bool {
        self.blue_labels().iter().any(|m| m.is_projective(r))
    }

    /// Diagram text in the grammar accepted by [`parse_diagram`] (without
    /// coupon matrices).
    pub fn to_text(&self) -> String {
        self.slices
            .iter()
            .map(|s| s.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
            .collect::<Vec<_>>()
            .join(";\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_unknot_is_valid() {
        let d = parse_diagram("lcoev(V1); rev(V1)").unwrap();
        assert!(d.is_closed().unwrap());
        assert_eq!(d.slices.len(), 2);
        assert_eq!(d.boundary(1).unwrap().len(), 2);
    }

    #[test]
    fn mismatch_is_reported() {
        let err = parse_diagram("id(V1), id(V2);\nid(V2)").unwrap_err();
        match err {
            Error::BoundaryMismatch { span, below, above } => {
                assert_eq!(span.line, 2);
                assert_eq!(below, "V1, V2");
                assert_eq!(above, "V2");
            }
            e => panic!("unexpected {:?}", e),
        }
    }

    #[test]
    fn text_round_trip() {
        let src = "lcoev(V2), lcoev(P0*); x+(V2*,P0), id((V1(x)V2)*)";
        let g = parse_generator("id((V1(x)V2)*)").unwrap();
        assert_eq!(g.to_string(), "id((V1(x)V2)*)");
        let d = parse_diagram("lcoev(V2), lcoev(P0); id(V2), x+(V2*,P0), id(P0*); id(V2), x-(P0,V2*), id(P0*); rev(V2), rev(P0)").unwrap();
        let again = parse_diagram(&d.to_text()).unwrap();
        assert_eq!(d.to_text(), again.to_text());
        assert!(parse_diagram(src).is_err());
    }
}
