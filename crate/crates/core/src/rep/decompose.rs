//! Krull–Schmidt splitting against the catalogue `V_0..V_{r-1}, P_0..P_{r-2}`.

use super::{catalogue_module, hom_space, ModLabel, Representation};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};

/// One indecomposable summand: `proj ∘ inj = id` on the summand, and the sum
/// of all `inj ∘ proj` is the identity of the decomposed module.
#[derive(Clone, Debug)]
pub struct Summand {
    pub label: ModLabel,
    pub module: Representation,
    /// `A.dim × C.dim`.
    pub inj: Matrix,
    /// `C.dim × A.dim`.
    pub proj: Matrix,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
}

impl Decomposition {
    /// Summand labels in catalogue order.
    pub fn labels(&self) -> Vec<ModLabel> {
        self.summands.iter().map(|s| s.label.clone()).collect()
    }

    /// `Σ inj ∘ proj`, which must be the identity.
    pub fn resolution_of_identity(&self, dim: usize, fl: crate::scalar::FieldContext) -> Matrix {
        let mut acc = Matrix::zeros(fl, dim, dim);
        for s in &self.summands {
            acc = acc.add(&s.inj.mul(&s.proj));
        }
        acc
    }
}

/// The catalogue in scan order.
pub fn catalogue(r: u32) -> Vec<ModLabel> {
    let mut out: Vec<ModLabel> = (0..r).map(ModLabel::V).collect();
    out.extend((0..r - 1).map(ModLabel::P));
    out
}

/// Splits `a` into catalogue summands.
///
/// For each catalogue object `C`, the multiplicity of `C` as a direct summand
/// is the rank of the matrix `tr(π_i ∘ ι_j)` over bases `π` of `Hom(A, C)` and
/// `ι` of `Hom(C, A)`: the ordinary trace kills the radical of the local ring
/// `End(C)`. Choosing a nonsingular minor gives embeddings and retractions
/// of all copies at once, and the complement is carried forward.
pub fn decompose(a: &Representation) -> Result<Decomposition> {
    let group = a.group();
    let fl = a.field();
    let r = group.r();
    // current remainder, with embedding into and projection from `a`
    let mut cur = a.clone();
    let mut embed = Matrix::identity(fl, a.dim());
    let mut project = Matrix::identity(fl, a.dim());
    let mut summands = Vec::new();
    for label in catalogue(r) {
        if cur.dim() == 0 {
            break;
        }
        let c = catalogue_module(group, &label)?;
        if c.dim() > cur.dim() || !weights_fit(&c, &cur) {
            continue;
        }
        let iotas = hom_space(&c, &cur);
        if iotas.is_empty() {
            continue;
        }
        let pis = hom_space(&cur, &c);
        if pis.is_empty() {
            continue;
        }
        // T[i][j] = tr(π_i ι_j)
        let mut t = Matrix::zeros(fl, pis.len(), iotas.len());
        for (i, p) in pis.iter().enumerate() {
            for (j, io) in iotas.iter().enumerate() {
                t[(i, j)] = p.mul(io).trace();
            }
        }
        let (rows, cols) = nonsingular_minor(&t);
        let m = rows.len();
        if m == 0 {
            continue;
        }
        let dc = c.dim();
        // P: cur -> C^m, I: C^m -> cur, Φ = P I invertible on C^m
        let mut p_all = Matrix::zeros(fl, 0, cur.dim());
        for &i in &rows {
            p_all = p_all.vstack(&pis[i]);
        }
        let mut i_all = Matrix::zeros(fl, cur.dim(), 0);
        for &j in &cols {
            i_all = i_all.hstack(&iotas[j]);
        }
        let phi = p_all.mul(&i_all);
        let phi_inv = phi
            .inverse()
            .ok_or_else(|| Error::Consistency(format!("splitting map for {} is not invertible", label)))?;
        let retract = phi_inv.mul(&p_all);
        for k in 0..m {
            let idx: Vec<usize> = (k * dc..(k + 1) * dc).collect();
            let all_rows: Vec<usize> = (0..cur.dim()).collect();
            let all_cols: Vec<usize> = (0..cur.dim()).collect();
            let inj_k = i_all.select(&all_rows, &idx);
            let proj_k = retract.select(&idx, &all_cols);
            summands.push(Summand {
                label: label.clone(),
                module: c.clone(),
                inj: embed.mul(&inj_k),
                proj: proj_k.mul(&project),
            });
        }
        // complement: image of 1 - e with e = I Φ^{-1} P
        let e = i_all.mul(&retract);
        let comp = cur.identity().sub(&e);
        // column j of a weight-preserving map is a weight vector of weight w_j
        let (basis, left_inv, chosen) = column_basis(&comp);
        let new_dim = basis.cols();
        let weights: Vec<i64> = chosen.iter().map(|&j| cur.weights()[j]).collect();
        let p_new = left_inv.mul(&comp);
        let act_e = p_new.mul(cur.act_e()).mul(&basis);
        let act_f = p_new.mul(cur.act_f()).mul(&basis);
        debug_assert_eq!(weights.len(), new_dim);
        let next = Representation::from_parts(group, weights, act_e, act_f, ModLabel::Other("remainder".into()));
        embed = embed.mul(&basis);
        project = p_new.mul(&project);
        cur = next;
    }
    if cur.dim() != 0 {
        return Err(Error::Decomposition(cur.dim()));
    }
    Ok(Decomposition { summands })
}

/// Every weight of `c` must occur in `a` at least as often.
fn weights_fit(c: &Representation, a: &Representation) -> bool {
    let r = c.group().r() as usize;
    let mut count = vec![0i64; r];
    for &w in a.weights() {
        count[w as usize] += 1;
    }
    for &w in c.weights() {
        count[w as usize] -= 1;
    }
    count.iter().all(|&x| x >= 0)
}

/// Row and column index sets of a maximal nonsingular square minor.
fn nonsingular_minor(t: &Matrix) -> (Vec<usize>, Vec<usize>) {
    let fl = t.field();
    // independent rows
    let mut ech = Echelon::new(fl, t.cols());
    let mut rows = Vec::new();
    for (i, row) in t.sparse_rows().into_iter().enumerate() {
        if ech.insert(row) {
            rows.push(i);
        }
    }
    // independent columns of the selected rows
    let sub = t.select(&rows, &(0..t.cols()).collect::<Vec<_>>());
    let mut ech2 = Echelon::new(fl, sub.rows());
    let mut cols = Vec::new();
    for (j, col) in sub.transpose().sparse_rows().into_iter().enumerate() {
        if ech2.insert(col) {
            cols.push(j);
        }
    }
    (rows, cols)
}

/// Linearly independent columns of `m` (greedily, in order), a left inverse
/// of the resulting basis matrix, and the chosen column indices.
fn column_basis(m: &Matrix) -> (Matrix, Matrix, Vec<usize>) {
    let fl = m.field();
    let n = m.rows();
    let mut ech = Echelon::new(fl, n);
    let mut chosen = Vec::new();
    for (j, col) in m.transpose().sparse_rows().into_iter().enumerate() {
        if ech.insert(col) {
            chosen.push(j);
        }
    }
    let basis = m.select(&(0..n).collect::<Vec<_>>(), &chosen);
    // independent rows of the basis give an invertible square block
    let mut ech_rows = Echelon::new(fl, chosen.len());
    let mut rows = Vec::new();
    for (i, row) in basis.sparse_rows().into_iter().enumerate() {
        if ech_rows.insert(row) {
            rows.push(i);
        }
    }
    let block = basis.select(&rows, &(0..chosen.len()).collect::<Vec<_>>());
    let block_inv = block.inverse().expect("independent rows form an invertible block");
    let mut sel = Matrix::zeros(fl, rows.len(), n);
    for (k, &i) in rows.iter().enumerate() {
        sel[(k, i)] = fl.one();
    }
    (basis, block_inv.mul(&sel), chosen)
}

/// Expected summand labels of `V_{i'} ⊗ V_{i''}` from the fusion rule for
/// even `i'`, `i''`: `V_{2n}` for `|i'-i''|/2 ≤ n ≤ min((i'+i'')/2, r-(i'+i'')/2-2)`
/// and `P_{2n}` (with `P_{r-1} = V_{r-1}`) for `r-(i'+i'')/2-1 ≤ n ≤ (r-1)/2`.
pub fn fusion_rule(r: u32, i1: u32, i2: u32) -> Vec<ModLabel> {
    let (i1, i2, r) = (i1 as i64, i2 as i64, r as i64);
    let s = (i1 + i2) / 2;
    let mut out = Vec::new();
    let lo = (i1 - i2).abs() / 2;
    let hi = s.min(r - s - 2);
    for n in lo..=hi {
        out.push(ModLabel::V((2 * n) as u32));
    }
    for n in (r - s - 1).max(0)..=(r - 1) / 2 {
        if 2 * n == r - 1 {
            out.push(ModLabel::V((r - 1) as u32));
        } else {
            out.push(ModLabel::P((2 * n) as u32));
        }
    }
    out
}
