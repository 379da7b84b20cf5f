//! Red (surgery) components: traversal, beads, linking data and the state
//! sum that contracts each component with a linear functional.
//!
//! Each red component is oriented by traversal. Walking along it, beads are
//! collected in order and multiplied with later beads on the left:
//!
//! * a crossing puts the legs of `R` (positive) or `R^{-1}` (negative) on
//!   its two strands, the left input of a positive crossing carrying `R'`
//!   and the right input of a negative crossing carrying `(R^{-1})'`;
//! * a strand passed downward receives the antipode of its bead;
//! * a cap crossed left to right gives `K`, a cup crossed left to right
//!   gives `K^{-1}`, the other directions give nothing;
//! * a positive twist gives `v^{-1}`, a negative one `v`.
//!
//! These are exactly the rules under which contracting a component with
//! `x ↦ tr_V(x)` reproduces the blue evaluation of the same diagram with the
//! component coloured by `V` (see [`recolor_red`]). Surgery contracts with
//! `x ↦ λ(Kx)`, whose values on the `±1`-framed unknots are `λ(v^{∓1})`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{BlueEvaluator, Diagram, GenKind, Generator, ObjectLabel, Slice};
use crate::error::{Error, Result};
use crate::hopf::{AlgElem, Mono, QuantumGroup, TensorElem};
use crate::linalg::Matrix;
use crate::rep::{ModLabel, Representation};
use crate::scalar::CycScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bead {
    /// Leg `leg` of crossing `crossing`, with the antipode on downward passes.
    Leg { crossing: usize, leg: usize, antipode: bool },
    /// Twist of the given sign (the antipode is recorded but `S(v) = v`).
    Twist { sign: i8, antipode: bool },
    /// `K^e` from an extremum.
    Pivot(i64),
}

#[derive(Clone, Debug)]
pub struct Crossing {
    pub slice: usize,
    pub gen: usize,
    pub sign: i8,
    /// Left and right input strands: red component and traversal direction
    /// (`+1` upward), or `None` for a blue strand.
    pub strands: [Option<(usize, i8)>; 2],
}

impl Crossing {
    /// Tensor leg of `R` (or `R^{-1}`) carried by input strand `s`.
    pub fn leg_of(&self, s: usize) -> usize {
        if self.sign > 0 {
            s
        } else {
            1 - s
        }
    }

    /// Crossing sign with the traversal orientations taken into account.
    pub fn oriented_sign(&self) -> Option<i64> {
        match self.strands {
            [Some((_, da)), Some((_, db))] => Some(self.sign as i64 * da as i64 * db as i64),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Component {
    pub beads: Vec<Bead>,
    /// Sum of twist signs along the component.
    pub twists: i64,
}

/// Traversal data of all red components of a diagram.
#[derive(Clone, Debug)]
pub struct RedData {
    pub components: Vec<Component>,
    /// Crossings with at least one red strand, in slice order.
    pub crossings: Vec<Crossing>,
    /// Component and traversal direction at each red boundary point.
    pub points: BTreeMap<(usize, usize), (usize, i8)>,
}

#[derive(Clone, Copy, Debug)]
enum Link {
    Vert { slice: usize, gen: usize, strand: usize, to: (usize, usize) },
    Cap { to: (usize, usize) },
    Cup { to: (usize, usize) },
}

/// Traces the red components of `d`.
pub fn red_components(d: &Diagram) -> Result<RedData> {
    let mut up: HashMap<(usize, usize), Link> = HashMap::new();
    let mut down: HashMap<(usize, usize), Link> = HashMap::new();
    let mut crossing_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut crossings = Vec::new();
    let mut red_points = Vec::new();
    for k in 0..=d.slices.len() {
        for (p, l) in d.boundary(k)?.iter().enumerate() {
            if l.is_red() {
                red_points.push((k, p));
            }
        }
    }
    for (k, slice) in d.slices.iter().enumerate() {
        let (mut ip, mut op) = (0, 0);
        for (gi, g) in slice.gens.iter().enumerate() {
            let nin = d.inputs(g)?.len();
            let nout = d.outputs(g)?.len();
            if g.touches_red() {
                match &g.kind {
                    GenKind::Id | GenKind::Twist(_) => {
                        up.insert((k, ip), Link::Vert { slice: k, gen: gi, strand: 0, to: (k + 1, op) });
                        down.insert((k + 1, op), Link::Vert { slice: k, gen: gi, strand: 0, to: (k, ip) });
                    }
                    GenKind::Cross(sign) => {
                        crossing_index.insert((k, gi), crossings.len());
                        crossings.push(Crossing { slice: k, gen: gi, sign: *sign, strands: [None, None] });
                        for s in 0..2 {
                            if g.labels[s].is_red() {
                                let a = (k, ip + s);
                                let b = (k + 1, op + 1 - s);
                                up.insert(a, Link::Vert { slice: k, gen: gi, strand: s, to: b });
                                down.insert(b, Link::Vert { slice: k, gen: gi, strand: s, to: a });
                            }
                        }
                    }
                    GenKind::Lev | GenKind::Rev => {
                        up.insert((k, ip), Link::Cap { to: (k, ip + 1) });
                        up.insert((k, ip + 1), Link::Cap { to: (k, ip) });
                    }
                    GenKind::Lcoev | GenKind::Rcoev => {
                        down.insert((k + 1, op), Link::Cup { to: (k + 1, op + 1) });
                        down.insert((k + 1, op + 1), Link::Cup { to: (k + 1, op) });
                    }
                    GenKind::Coupon(n) => return Err(Error::RedInCoupon(n.clone())),
                }
            }
            ip += nin;
            op += nout;
        }
    }
    for pt in &red_points {
        if !up.contains_key(pt) || !down.contains_key(pt) {
            return Err(Error::OpenDiagram);
        }
    }
    let mut points: BTreeMap<(usize, usize), (usize, i8)> = BTreeMap::new();
    let mut components = Vec::new();
    for &start in &red_points {
        if points.contains_key(&start) {
            continue;
        }
        let c = components.len();
        let mut comp = Component::default();
        let (mut pt, mut going_up) = (start, true);
        loop {
            points.insert(pt, (c, if going_up { 1 } else { -1 }));
            let link = if going_up { up[&pt] } else { down[&pt] };
            match link {
                Link::Vert { slice, gen, strand, to } => {
                    let g = &d.slices[slice].gens[gen];
                    let antipode = !going_up;
                    match g.kind {
                        GenKind::Twist(sign) => {
                            comp.beads.push(Bead::Twist { sign, antipode });
                            comp.twists += sign as i64;
                        }
                        GenKind::Cross(_) => {
                            let ci = crossing_index[&(slice, gen)];
                            crossings[ci].strands[strand] = Some((c, if going_up { 1 } else { -1 }));
                            let leg = crossings[ci].leg_of(strand);
                            comp.beads.push(Bead::Leg { crossing: ci, leg, antipode });
                        }
                        _ => {}
                    }
                    pt = to;
                }
                Link::Cap { to } => {
                    if to.1 > pt.1 {
                        comp.beads.push(Bead::Pivot(1));
                    }
                    pt = to;
                    going_up = false;
                }
                Link::Cup { to } => {
                    if to.1 > pt.1 {
                        comp.beads.push(Bead::Pivot(-1));
                    }
                    pt = to;
                    going_up = true;
                }
            }
            if pt == start && going_up {
                break;
            }
        }
        components.push(comp);
    }
    Ok(RedData { components, crossings, points })
}

/// Framed link data of the red components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryData {
    pub ell: usize,
    /// Symmetric, framings on the diagonal.
    pub linking: Vec<Vec<i64>>,
    pub signature: i64,
}

impl SurgeryData {
    pub fn from_matrix(linking: Vec<Vec<i64>>) -> SurgeryData {
        let (pos, neg, _) = inertia(&linking);
        SurgeryData { ell: linking.len(), signature: pos as i64 - neg as i64, linking }
    }

    pub fn determinant(&self) -> BigInt {
        let n = self.ell;
        let mut m: Vec<Vec<BigRational>> = self
            .linking
            .iter()
            .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let mut det = BigRational::from_integer(BigInt::from(1));
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return BigInt::zero();
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= m[c][c].clone();
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
        det.to_integer()
    }

    /// Order of `H_1` of the surgered manifold: `|det|`, or 0 when the
    /// linking matrix is singular (infinite homology).
    pub fn h1(&self) -> BigInt {
        self.determinant().abs()
    }
}

/// Counts of positive, negative and zero eigenvalues of a symmetric integer
/// matrix, by symmetric Gaussian elimination over the rationals.
pub fn inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0, 0);
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // all diagonal entries vanish: combine two rows/columns to create one
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = pair else { break };
                // congruence: row_i += row_j, col_i += col_j
                for k in 0..n {
                    let t = a[j][k].clone();
                    a[i][k] += t;
                }
                for k in 0..n {
                    let t = a[k][j].clone();
                    a[k][i] += t;
                }
                i
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &j in &active {
                let t = &f * &a[p][j];
                a[i][j] -= t;
            }
        }
        for &i in &active {
            a[i][p] = BigRational::zero();
            a[p][i] = BigRational::zero();
        }
    }
    (pos, neg, n - pos - neg)
}

/// Linking matrix and signature of the red components: linking numbers are
/// half the signed crossings between components, framings the writhe of
/// self-crossings plus twists.
pub fn linking_matrix(d: &Diagram) -> Result<SurgeryData> {
    let rd = red_components(d)?;
    let n = rd.components.len();
    let mut twice = vec![vec![0i64; n]; n];
    for c in &rd.crossings {
        if let ([Some((a, _)), Some((b, _))], Some(s)) = (c.strands, c.oriented_sign()) {
            if a == b {
                twice[a][a] += 2 * s;
            } else {
                twice[a][b] += s;
                twice[b][a] += s;
            }
        }
    }
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = twice[i][j] / 2;
        }
        m[i][i] += rd.components[i].twists;
    }
    Ok(SurgeryData::from_matrix(m))
}

/// Replaces each red component by a blue strand labelled `labels[c]`,
/// oriented by traversal (downward passes get the dual label).
pub fn recolor_red(d: &Diagram, labels: &[ModLabel]) -> Result<Diagram> {
    let rd = red_components(d)?;
    if labels.len() != rd.components.len() {
        return Err(Error::Invalid(format!(
            "{} labels given for {} red components",
            labels.len(),
            rd.components.len()
        )));
    }
    let lab = |pt: (usize, usize)| -> ObjectLabel {
        let (c, dir) = rd.points[&pt];
        if dir > 0 {
            ObjectLabel::Blue(labels[c].clone())
        } else {
            ObjectLabel::Blue(labels[c].dual())
        }
    };
    let mut slices = Vec::new();
    for (k, slice) in d.slices.iter().enumerate() {
        let (mut ip, mut op) = (0, 0);
        let mut gens = Vec::new();
        for g in &slice.gens {
            let nin = d.inputs(g)?.len();
            let nout = d.outputs(g)?.len();
            let mut ng = g.clone();
            if g.touches_red() {
                match g.kind {
                    GenKind::Id | GenKind::Twist(_) => ng.labels = vec![lab((k, ip))],
                    GenKind::Cross(_) => {
                        for s in 0..2 {
                            if g.labels[s].is_red() {
                                ng.labels[s] = lab((k, ip + s));
                            }
                        }
                    }
                    GenKind::Lev | GenKind::Rev => {
                        // left end traversed upward means the cap runs left to right
                        let (c, dir) = rd.points[&(k, ip)];
                        let x = ObjectLabel::Blue(labels[c].clone());
                        ng = Generator { kind: if dir > 0 { GenKind::Rev } else { GenKind::Lev }, labels: vec![x], span: g.span };
                    }
                    GenKind::Lcoev | GenKind::Rcoev => {
                        let (c, dir) = rd.points[&(k + 1, op)];
                        let x = ObjectLabel::Blue(labels[c].clone());
                        ng = Generator {
                            kind: if dir > 0 { GenKind::Lcoev } else { GenKind::Rcoev },
                            labels: vec![x],
                            span: g.span,
                        };
                    }
                    GenKind::Coupon(_) => unreachable!("red coupons are rejected earlier"),
                }
            }
            gens.push(ng);
            ip += nin;
            op += nout;
        }
        slices.push(Slice { gens, span: slice.span });
    }
    let out = Diagram { slices, coupons: d.coupons.clone() };
    out.validate()?;
    Ok(out)
}

/// How a red component is turned into a scalar.
#[derive(Clone, Debug)]
pub enum RedFunctional {
    /// `x ↦ λ(Kx)`: surgery with the integral.
    Lambda,
    /// `x ↦ tr_V(x)`: the component coloured by `V`.
    Trace(Representation),
    /// `x ↦ Σ w_i tr_{V_i}(x)`: a formal combination such as the Kirby colour.
    Combination(Vec<(CycScalar, Representation)>),
}

impl RedFunctional {
    pub fn apply(&self, h: &QuantumGroup, x: &AlgElem) -> CycScalar {
        match self {
            RedFunctional::Lambda => {
                // λ is supported on E^{r-1}F^{r-1}K, and K·E^aF^aK^0 = E^aF^aK
                let r = h.r();
                let top = Mono::new(r - 1, r - 1, 0);
                match x.coeff(&top) {
                    Some(c) => c * &h.lambda_constant(),
                    None => h.field().zero(),
                }
            }
            RedFunctional::Trace(v) => v.act(x).trace(),
            RedFunctional::Combination(list) => {
                let mut acc = h.field().zero();
                for (w, v) in list {
                    acc += &(w * &v.act(x).trace());
                }
                acc
            }
        }
    }
}

/// `R`-type element split as `Σ_j x_j ⊗ y_j`, grouped by first-leg monomial,
/// together with the antipodes of all parts.
struct Split {
    parts: Vec<[AlgElem; 2]>,
    antipodes: Vec<[AlgElem; 2]>,
    /// Weights of both legs (`None` if a leg is not weight-homogeneous);
    /// the antipode preserves them.
    weights: Vec<[Option<i64>; 2]>,
}

/// The common weight of all terms, if there is one.
fn homogeneous_weight(x: &AlgElem) -> Option<i64> {
    let mut ws = x.terms().map(|(m, _)| m.weight());
    let w = ws.next().unwrap_or(0);
    ws.all(|v| v == w).then_some(w)
}

fn split(h: &QuantumGroup, t: &TensorElem) -> Split {
    let mut grouped: BTreeMap<Mono, AlgElem> = BTreeMap::new();
    for (key, c) in t.terms() {
        grouped.entry(key[0]).or_default().add_term(key[1], c.clone());
    }
    let one = h.field().one();
    let parts: Vec<[AlgElem; 2]> = grouped.into_iter().map(|(m, y)| [AlgElem::mono(m, one.clone()), y]).collect();
    let antipodes = parts.iter().map(|[x, y]| [h.antipode(x), h.antipode(y)]).collect();
    let weights = parts.iter().map(|[x, y]| [homogeneous_weight(x), homogeneous_weight(y)]).collect();
    Split { parts, antipodes, weights }
}

struct StateSum<'a> {
    h: &'a QuantumGroup,
    rd: RedData,
    splits: Vec<std::rc::Rc<Split>>,
    twist_beads: [AlgElem; 2],
}

impl<'a> StateSum<'a> {
    fn new(h: &'a QuantumGroup, rd: RedData) -> Self {
        let pos = std::rc::Rc::new(split(h, h.r_matrix()));
        let neg = std::rc::Rc::new(split(h, h.r_matrix_inv()));
        let splits = rd.crossings.iter().map(|c| if c.sign > 0 { pos.clone() } else { neg.clone() }).collect();
        StateSum { h, rd, splits, twist_beads: [h.ribbon_inv().clone(), h.ribbon().clone()] }
    }

    fn radices(&self) -> Vec<usize> {
        self.splits.iter().map(|s| s.parts.len()).collect()
    }

    fn bead(&self, b: &Bead, state: &[usize]) -> AlgElem {
        match b {
            Bead::Leg { crossing, leg, antipode } => {
                let s = &self.splits[*crossing];
                let j = state[*crossing];
                if *antipode {
                    s.antipodes[j][*leg].clone()
                } else {
                    s.parts[j][*leg].clone()
                }
            }
            Bead::Twist { sign, antipode } => {
                let v = &self.twist_beads[if *sign > 0 { 0 } else { 1 }];
                if *antipode {
                    self.h.antipode(v)
                } else {
                    v.clone()
                }
            }
            Bead::Pivot(e) => self.h.k_pow(*e),
        }
    }

    /// Weight of the bead product of `comp`, when every bead is homogeneous.
    /// Twists and pivots have weight zero.
    fn weight(&self, comp: &Component, state: &[usize]) -> Option<i64> {
        let mut total = 0;
        for b in &comp.beads {
            if let Bead::Leg { crossing, leg, .. } = b {
                total += self.splits[*crossing].weights[state[*crossing]][*leg]?;
            }
        }
        Some(total)
    }

    fn product(&self, comp: &Component, state: &[usize]) -> AlgElem {
        let mut acc = self.h.one();
        for b in &comp.beads {
            acc = self.h.mul(&self.bead(b, state), &acc);
        }
        acc
    }

    /// Calls `f` on every state (mixed-radix counter over crossings).
    fn for_each_state(&self, mut f: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
        let rad = self.radices();
        let mut state = vec![0usize; rad.len()];
        loop {
            f(&state)?;
            let mut i = 0;
            loop {
                if i == rad.len() {
                    return Ok(());
                }
                state[i] += 1;
                if state[i] < rad[i] {
                    break;
                }
                state[i] = 0;
                i += 1;
            }
        }
    }
}

/// Evaluates a diagram with red components contracted by `f` and blue
/// strands evaluated by `ev`. Returns the `target × source` matrix (1×1 for
/// closed diagrams).
pub fn evaluate_bichrome(ev: &mut BlueEvaluator, d: &Diagram, f: &RedFunctional) -> Result<Matrix> {
    let h = ev.group();
    let rd = red_components(d)?;
    let mixed: Vec<usize> =
        rd.crossings.iter().enumerate().filter(|(_, c)| c.strands.iter().any(|s| s.is_none())).map(|(i, _)| i).collect();
    let ss = StateSum::new(h, rd);
    let fl = h.field();
    let constant_blue = if mixed.is_empty() { Some(ev.run(d, &mut |_, _| Err(Error::UnexpectedRed))?) } else { None };
    let mut acc: Option<Matrix> = None;
    // blue module of each mixed crossing's blue strand
    let mut blue_ops: HashMap<usize, Vec<Matrix>> = HashMap::new();
    for &ci in &mixed {
        let c = &ss.rd.crossings[ci];
        let s = if c.strands[0].is_none() { 0 } else { 1 };
        let g = &d.slices[c.slice].gens[c.gen];
        let m = match &g.labels[s] {
            ObjectLabel::Blue(m) => ev.module(m)?,
            ObjectLabel::Red => unreachable!("blue strand of a mixed crossing"),
        };
        // the blue leg's action for every part, computed once
        let leg = ss.rd.crossings[ci].leg_of(s);
        blue_ops.insert(ci, ss.splits[ci].parts.iter().map(|p| m.act(&p[leg])).collect());
    }
    let by_position: HashMap<(usize, usize), usize> =
        mixed.iter().map(|&ci| ((ss.rd.crossings[ci].slice, ss.rd.crossings[ci].gen), ci)).collect();
    ss.for_each_state(|state| {
        // every functional vanishes on elements of nonzero weight
        if ss.rd.components.iter().any(|c| ss.weight(c, state).is_some_and(|w| w != 0)) {
            return Ok(());
        }
        let mut w = fl.one();
        for comp in &ss.rd.components {
            let x = ss.product(comp, state);
            w = &w * &f.apply(h, &x);
            if w.is_zero() {
                return Ok(());
            }
        }
        let blue = match &constant_blue {
            Some(b) => b.clone(),
            None => ev.run(d, &mut |k, gi| {
                let ci = by_position[&(k, gi)];
                Ok(blue_ops[&ci][state[ci]].clone())
            })?,
        };
        let term = blue.scale(&w);
        acc = Some(match acc.take() {
            Some(a) => a.add(&term),
            None => term,
        });
        Ok(())
    })?;
    match acc {
        Some(a) => Ok(a),
        None => {
            let mut rows = 1;
            let mut cols = 1;
            for l in d.target()? {
                if !l.is_red() {
                    rows *= ev.dim_of(&l)?;
                }
            }
            for l in d.source()? {
                if !l.is_red() {
                    cols *= ev.dim_of(&l)?;
                }
            }
            Ok(Matrix::zeros(fl, rows, cols))
        }
    }
}

/// The universal invariant of a red link: `Σ ⊗_c (bead product of c)` in
/// `H^{⊗ℓ}`. For `ℓ = 0` the result is the scalar 1 in degree 0.
pub fn universal_beads(h: &QuantumGroup, d: &Diagram) -> Result<TensorElem> {
    if d.slices.iter().any(|s| s.gens.iter().any(|g| !g.touches_red())) {
        return Err(Error::Invalid("universal beads need an all-red diagram".into()));
    }
    let rd = red_components(d)?;
    let ell = rd.components.len();
    let ss = StateSum::new(h, rd);
    let mut acc = TensorElem::zero(ell);
    if ell == 0 {
        return Ok(TensorElem::unit(0, h.field().one()));
    }
    ss.for_each_state(|state| {
        let prods: Vec<AlgElem> = ss.rd.components.iter().map(|c| ss.product(c, state)).collect();
        let refs: Vec<&AlgElem> = prods.iter().collect();
        acc = acc.add(&TensorElem::pure(&refs));
        Ok(())
    })?;
    Ok(acc)
}
