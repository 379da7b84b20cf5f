//! The modified trace on projective modules.
//!
//! It is normalized by `t_{V_{r−1}}(c·id) = c`. Each `P_n` is realised as
//! a summand of `V_{r−1} ⊗ V_{r−1−n}`, and the partial-trace property gives
//! `t_{P_n}(h) = t_{V_{r−1}}(ptr(ι h π))`. Any other projective module is
//! split into catalogue summands and the trace is summed over diagonal blocks.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hopf::QuantumGroup;
use crate::linalg::Matrix;
use crate::rep::{decompose, partial_trace_right, simple_module, tensor, ModLabel, Representation};
use crate::scalar::CycScalar;

/// Embedding `ι: P_n → V_{r−1} ⊗ V_{r−1−n}` and retraction `π`.
struct Realisation {
    inj: Matrix,
    proj: Matrix,
    aux: Representation,
}

/// Modified trace of one group, with the `P_n` realisations cached.
pub struct ModifiedTrace {
    group: &'static QuantumGroup,
    steinberg_dim: usize,
    realisations: HashMap<u32, Realisation>,
}

impl ModifiedTrace {
    pub fn new(group: &'static QuantumGroup) -> Result<ModifiedTrace> {
        let r = group.r();
        let steinberg = simple_module(group, r - 1)?;
        let mut realisations = HashMap::new();
        for n in 0..r - 1 {
            let aux = simple_module(group, r - 1 - n)?;
            let dec = decompose(&tensor(&steinberg, &aux))?;
            let s = dec
                .summands
                .into_iter()
                .find(|s| s.label == ModLabel::P(n))
                .ok_or_else(|| Error::Consistency(format!("P{} is not a summand of V{} ⊗ V{}", n, r - 1, r - 1 - n)))?;
            realisations.insert(n, Realisation { inj: s.inj, proj: s.proj, aux });
        }
        Ok(ModifiedTrace { group, steinberg_dim: steinberg.dim(), realisations })
    }

    pub fn group(&self) -> &'static QuantumGroup {
        self.group
    }

    /// `t` on an endomorphism of a catalogue projective `P_n` or `V_{r−1}`.
    pub fn catalogue(&self, label: &ModLabel, f: &Matrix) -> Result<CycScalar> {
        let r = self.group.r();
        match label {
            ModLabel::V(n) if *n == r - 1 => scalar_part(f),
            ModLabel::P(n) if *n < r - 1 => {
                let re = &self.realisations[n];
                let g = re.inj.mul(f).mul(&re.proj);
                scalar_part(&partial_trace_right(&g, self.steinberg_dim, &re.aux))
            }
            _ => Err(Error::NotProjective),
        }
    }

    /// `t_P(f)` for any projective module `P`.
    pub fn trace(&self, p: &Representation, f: &Matrix) -> Result<CycScalar> {
        if f.rows() != p.dim() || f.cols() != p.dim() {
            return Err(Error::Invalid(format!("{}x{} matrix is not an endomorphism of a {}-dimensional module", f.rows(), f.cols(), p.dim())));
        }
        let r = self.group.r();
        match p.label() {
            l @ ModLabel::P(_) => return self.catalogue(l, f),
            l @ ModLabel::V(n) if *n == r - 1 => return self.catalogue(l, f),
            _ => {}
        }
        let dec = decompose(p)?;
        let mut acc = self.group.field().zero();
        for s in &dec.summands {
            if !s.label.is_projective(r) {
                return Err(Error::NotProjective);
            }
            acc += &self.catalogue(&s.label, &s.proj.mul(f).mul(&s.inj))?;
        }
        Ok(acc)
    }
}

/// The scalar `c` of an endomorphism `c·id`.
fn scalar_part(f: &Matrix) -> Result<CycScalar> {
    let c = f[(0, 0)].clone();
    if *f != Matrix::identity(f.field(), f.rows()).scale(&c) {
        return Err(Error::Consistency("endomorphism of a simple projective is not scalar".into()));
    }
    Ok(c)
}

/// `t_P(f)` without keeping a cache.
pub fn modified_trace(p: &Representation, f: &Matrix) -> Result<CycScalar> {
    ModifiedTrace::new(p.group())?.trace(p, f)
}
