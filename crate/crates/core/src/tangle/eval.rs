//! Reshetikhin–Turaev evaluation of blue diagrams as a fold over slices.
//!
//! The running value is a [`State`]: a batch of vectors in the tensor
//! product of the current boundary modules. Each generator acts as a sparse
//! local operator on its own tensor factors.

use std::collections::HashMap;
use std::rc::Rc;

use super::{Diagram, GenKind, Generator, ObjectLabel};
use crate::error::{Error, Result};
use crate::hopf::QuantumGroup;
use crate::linalg::Matrix;
use crate::rep::{braiding, braiding_inv, catalogue_module, ModLabel, Representation};
use crate::scalar::{CycScalar, FieldContext};

/// A batch of vectors in `⊗ dims`: entry `(idx, b)` lives at
/// `idx · batch + b`, with the first factor most significant in `idx`.
#[derive(Clone, Debug)]
pub struct State {
    dims: Vec<usize>,
    batch: usize,
    data: Vec<CycScalar>,
}

/// Sparse columns of a local operator: for each input index the list of
/// `(output index, coefficient)`.
#[derive(Debug)]
pub(crate) struct LocalOp {
    out_dims: Vec<usize>,
    cols: Vec<Vec<(usize, CycScalar)>>,
}

impl LocalOp {
    pub(crate) fn from_matrix(m: &Matrix, out_dims: Vec<usize>) -> LocalOp {
        let mut cols = vec![Vec::new(); m.cols()];
        for i in 0..m.rows() {
            for (j, col) in cols.iter_mut().enumerate() {
                let c = &m[(i, j)];
                if !c.is_zero() {
                    col.push((i, c.clone()));
                }
            }
        }
        LocalOp { out_dims, cols }
    }
}

impl State {
    /// The identity on `⊗ dims`: one batch column per basis vector.
    pub fn identity(fl: FieldContext, dims: Vec<usize>) -> State {
        let n: usize = dims.iter().product();
        let mut data = vec![fl.zero(); n * n];
        for i in 0..n {
            data[i * n + i] = fl.one();
        }
        State { dims, batch: n, data }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Reads the state as a `(⊗ dims) × batch` matrix.
    pub fn to_matrix(&self, fl: FieldContext) -> Matrix {
        let n: usize = self.dims.iter().product();
        let mut m = Matrix::zeros(fl, n, self.batch);
        for i in 0..n {
            for b in 0..self.batch {
                m[(i, b)] = self.data[i * self.batch + b].clone();
            }
        }
        m
    }

    pub(crate) fn apply(&mut self, pos: usize, kin: usize, op: &LocalOp) {
        let left: usize = self.dims[..pos].iter().product();
        let din: usize = self.dims[pos..pos + kin].iter().product();
        let right: usize = self.dims[pos + kin..].iter().product::<usize>() * self.batch;
        let dout: usize = op.out_dims.iter().product();
        debug_assert_eq!(op.cols.len(), din);
        let fl = self.data.first().map(|x| x.field());
        let mut new: Vec<CycScalar> = match fl {
            Some(fl) => vec![fl.zero(); left * dout * right],
            None => Vec::new(),
        };
        if !new.is_empty() {
            for l in 0..left {
                for (i, col) in op.cols.iter().enumerate() {
                    if col.is_empty() {
                        continue;
                    }
                    let src = (l * din + i) * right;
                    for rr in 0..right {
                        let x = &self.data[src + rr];
                        if x.is_zero() {
                            continue;
                        }
                        for (o, c) in col {
                            let dst = (l * dout + o) * right + rr;
                            let t = c * x;
                            new[dst] += &t;
                        }
                    }
                }
            }
        }
        self.dims.splice(pos..pos + kin, op.out_dims.iter().copied());
        self.data = new;
    }
}

/// Evaluator with caches for modules and generator matrices.
pub struct BlueEvaluator {
    group: &'static QuantumGroup,
    modules: HashMap<ModLabel, Representation>,
    ops: HashMap<(GenKind, Vec<ObjectLabel>), Rc<LocalOp>>,
}

impl BlueEvaluator {
    pub fn new(group: &'static QuantumGroup) -> Self {
        BlueEvaluator { group, modules: HashMap::new(), ops: HashMap::new() }
    }

    pub fn group(&self) -> &'static QuantumGroup {
        self.group
    }

    /// The module of a catalogue label (cached).
    pub fn module(&mut self, m: &ModLabel) -> Result<Representation> {
        if let Some(x) = self.modules.get(m) {
            return Ok(x.clone());
        }
        let x = catalogue_module(self.group, m)?;
        self.modules.insert(m.clone(), x.clone());
        Ok(x)
    }

    fn blue(&mut self, l: &ObjectLabel) -> Result<Representation> {
        match l {
            ObjectLabel::Blue(m) => self.module(m),
            ObjectLabel::Red => Err(Error::UnexpectedRed),
        }
    }

    pub(crate) fn dim_of(&mut self, l: &ObjectLabel) -> Result<usize> {
        Ok(self.blue(l)?.dim())
    }

    /// Matrix of a blue generator (`None` for identities).
    pub fn generator_matrix(&mut self, d: &Diagram, g: &Generator) -> Result<Option<Matrix>> {
        let fl = self.group.field();
        let m = match &g.kind {
            GenKind::Id => return Ok(None),
            GenKind::Lev | GenKind::Lcoev | GenKind::Rev | GenKind::Rcoev => {
                let x = self.blue(&g.labels[0])?;
                let n = x.dim();
                let mut m = match g.kind {
                    GenKind::Lev | GenKind::Rev => Matrix::zeros(fl, 1, n * n),
                    _ => Matrix::zeros(fl, n * n, 1),
                };
                for (a, &w) in x.weights().iter().enumerate() {
                    let idx = a * n + a;
                    match g.kind {
                        GenKind::Lev => m[(0, idx)] = fl.one(),
                        GenKind::Lcoev => m[(idx, 0)] = fl.one(),
                        GenKind::Rev => m[(0, idx)] = fl.q_pow(w),
                        _ => m[(idx, 0)] = fl.q_pow(-w),
                    }
                }
                m
            }
            GenKind::Cross(s) => {
                let a = self.blue(&g.labels[0])?;
                let b = self.blue(&g.labels[1])?;
                if *s > 0 {
                    braiding(&a, &b)
                } else {
                    braiding_inv(&b, &a)
                }
            }
            GenKind::Twist(s) => {
                let x = self.blue(&g.labels[0])?;
                // the positive twist acts by v^{-1}
                if *s > 0 {
                    x.act(self.group.ribbon_inv())
                } else {
                    x.act(self.group.ribbon())
                }
            }
            GenKind::Coupon(name) => {
                let c = d.coupon(name)?;
                let m = c.matrix(fl);
                let mut din = 1;
                for l in &c.source {
                    din *= self.dim_of(l)?;
                }
                let mut dout = 1;
                for l in &c.target {
                    dout *= self.dim_of(l)?;
                }
                if m.rows() != dout || m.cols() != din {
                    return Err(Error::InvalidCoupon {
                        name: name.clone(),
                        message: format!("expected a {}x{} matrix, found {}x{}", dout, din, m.rows(), m.cols()),
                    });
                }
                m
            }
        };
        Ok(Some(m))
    }

    fn local_op(&mut self, d: &Diagram, g: &Generator) -> Result<Option<Rc<LocalOp>>> {
        let key = (g.kind.clone(), g.labels.clone());
        if !matches!(g.kind, GenKind::Coupon(_)) {
            if let Some(op) = self.ops.get(&key) {
                return Ok(Some(op.clone()));
            }
        }
        let m = match self.generator_matrix(d, g)? {
            Some(m) => m,
            None => return Ok(None),
        };
        let mut out_dims = Vec::new();
        for l in d.outputs(g)? {
            out_dims.push(self.dim_of(&l)?);
        }
        let op = Rc::new(LocalOp::from_matrix(&m, out_dims));
        if !matches!(g.kind, GenKind::Coupon(_)) {
            self.ops.insert(key, op.clone());
        }
        Ok(Some(op))
    }

    /// Runs the fold. Red strands carry no tensor factor; a crossing of a
    /// red and a blue strand acts on the blue factor by `bead(slice, gen)`.
    pub(crate) fn run(
        &mut self,
        d: &Diagram,
        bead: &mut dyn FnMut(usize, usize) -> Result<Matrix>,
    ) -> Result<Matrix> {
        let fl = self.group.field();
        let mut src_dims = Vec::new();
        for l in d.source()? {
            if !l.is_red() {
                src_dims.push(self.dim_of(&l)?);
            }
        }
        let mut state = State::identity(fl, src_dims);
        for (k, slice) in d.slices.iter().enumerate() {
            let mut pos = 0;
            for (gi, g) in slice.gens.iter().enumerate() {
                let ins = d.inputs(g)?;
                let outs = d.outputs(g)?;
                let blue_in = ins.iter().filter(|l| !l.is_red()).count();
                let blue_out = outs.iter().filter(|l| !l.is_red()).count();
                if g.touches_red() {
                    if blue_in == 1 && blue_out == 1 {
                        let m = bead(k, gi)?;
                        let n = m.rows();
                        let op = LocalOp::from_matrix(&m, vec![n]);
                        state.apply(pos, 1, &op);
                    }
                    pos += blue_out;
                    continue;
                }
                if let Some(op) = self.local_op(d, g)? {
                    state.apply(pos, blue_in, &op);
                }
                pos += blue_out;
            }
        }
        Ok(state.to_matrix(fl))
    }

    /// Evaluates a blue diagram to a `target × source` matrix.
    pub fn evaluate(&mut self, d: &Diagram) -> Result<Matrix> {
        if d.has_red() {
            return Err(Error::UnexpectedRed);
        }
        self.run(d, &mut |_, _| Err(Error::UnexpectedRed))
    }

    /// Evaluates a closed blue diagram to a scalar.
    pub fn evaluate_scalar(&mut self, d: &Diagram) -> Result<CycScalar> {
        if !d.is_closed()? {
            return Err(Error::OpenDiagram);
        }
        let m = self.evaluate(d)?;
        Ok(m[(0, 0)].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_diagram;
    use super::*;
    use crate::rep::{partial_trace_right, simple_module};

    #[test]
    fn unknots_give_quantum_dimensions() {
        let g = QuantumGroup::new(5).unwrap();
        let fl = g.field();
        let mut ev = BlueEvaluator::new(g);
        assert_eq!(ev.evaluate_scalar(&parse_diagram("").unwrap()).unwrap(), fl.one());
        for n in 0..5 {
            let cw = parse_diagram(&format!("lcoev(V{n}); rev(V{n})")).unwrap();
            let ccw = parse_diagram(&format!("rcoev(V{n}); lev(V{n})")).unwrap();
            assert_eq!(ev.evaluate_scalar(&cw).unwrap(), fl.qint(n as i64 + 1));
            assert_eq!(ev.evaluate_scalar(&ccw).unwrap(), fl.qint(n as i64 + 1));
        }
        let p = parse_diagram("lcoev(P1); rev(P1)").unwrap();
        assert!(ev.evaluate_scalar(&p).unwrap().is_zero());
    }

    #[test]
    fn zigzag_and_curl() {
        let g = QuantumGroup::new(3).unwrap();
        let mut ev = BlueEvaluator::new(g);
        let snake = parse_diagram("id(V1), rcoev(V1); rev(V1), id(V1)").unwrap();
        assert!(ev.evaluate(&snake).unwrap().is_identity());
        let snake = parse_diagram("lcoev(V2), id(V2); id(V2), lev(V2)").unwrap();
        assert!(ev.evaluate(&snake).unwrap().is_identity());
        // a positive curl is the positive twist
        let curl = parse_diagram("id(P0), lcoev(P0); x+(P0,P0), id(P0*); id(P0), rev(P0)").unwrap();
        let tw = parse_diagram("tw+(P0)").unwrap();
        assert_eq!(ev.evaluate(&curl).unwrap(), ev.evaluate(&tw).unwrap());
        let v = simple_module(g, 1).unwrap();
        let c = braiding(&v, &v);
        assert_eq!(partial_trace_right(&c, 2, &v), v.act(g.ribbon_inv()));
    }
}
