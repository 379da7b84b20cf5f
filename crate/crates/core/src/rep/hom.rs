use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Representation;
use crate::linalg::{Echelon, Matrix};

/// Basis of the intertwiner space `Hom(A, B)`, each as a `B.dim × A.dim`
/// matrix.
///
/// Only weight-preserving entries are unknowns (both modules are stored in
/// `K`-eigenbases), and the equations `f E_A = E_B f`, `f F_A = F_B f` are
/// solved by exact elimination.
pub fn hom_space(a: &Representation, b: &Representation) -> Vec<Matrix> {
    let fl = a.field();
    let (da, db) = (a.dim(), b.dim());
    let mut var = vec![vec![usize::MAX; da]; db];
    let mut vars = Vec::new();
    for i in 0..db {
        for j in 0..da {
            if b.weights()[i] == a.weights()[j] {
                var[i][j] = vars.len();
                vars.push((i, j));
            }
        }
    }
    if vars.is_empty() {
        return Vec::new();
    }
    let mut ech = Echelon::new(fl, vars.len());
    for (ma, mb) in [(a.act_e(), b.act_e()), (a.act_f(), b.act_f())] {
        // (mb f - f ma)_{k,l} = Σ_i mb[k,i] f[i,l] - Σ_j f[k,j] ma[j,l]
        for k in 0..db {
            for l in 0..da {
                let mut row: Vec<(usize, crate::scalar::CycScalar)> = Vec::new();
                for i in 0..db {
                    let c = &mb[(k, i)];
                    if !c.is_zero() && var[i][l] != usize::MAX {
                        row.push((var[i][l], c.clone()));
                    }
                }
                for j in 0..da {
                    let c = &ma[(j, l)];
                    if !c.is_zero() && var[k][j] != usize::MAX {
                        row.push((var[k][j], -c));
                    }
                }
                if row.is_empty() {
                    continue;
                }
                row.sort_by_key(|(v, _)| *v);
                let mut merged: Vec<(usize, crate::scalar::CycScalar)> = Vec::with_capacity(row.len());
                for (v, c) in row {
                    match merged.last_mut() {
                        Some((lv, lc)) if *lv == v => *lc = &*lc + &c,
                        _ => merged.push((v, c)),
                    }
                }
                ech.insert(merged);
            }
        }
    }
    ech.kernel()
        .into_iter()
        .map(|sol| {
            let mut m = Matrix::zeros(fl, db, da);
            for (idx, (i, j)) in vars.iter().enumerate() {
                m[(*i, *j)] = sol[idx].clone();
            }
            m
        })
        .collect()
}

/// Decides `A ≅ B` by looking for an invertible element of `Hom(A, B)`.
///
/// Random integer combinations of a basis of `Hom(A, B)` are tried; if an
/// isomorphism exists, a combination is invertible unless the coefficients
/// hit a proper hypersurface, so a handful of seeded attempts suffice.
pub fn is_isomorphic(a: &Representation, b: &Representation) -> Option<Matrix> {
    if a.dim() != b.dim() {
        return None;
    }
    let mut wa = a.weights().to_vec();
    let mut wb = b.weights().to_vec();
    wa.sort();
    wb.sort();
    if wa != wb {
        return None;
    }
    let basis = hom_space(a, b);
    if basis.is_empty() {
        return if a.dim() == 0 { Some(Matrix::zeros(a.field(), 0, 0)) } else { None };
    }
    let fl = a.field();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..8 {
        let mut m = Matrix::zeros(fl, b.dim(), a.dim());
        for f in &basis {
            let c = fl.int(rng.gen_range(-50..=50));
            m = m.add(&f.scale(&c));
        }
        if m.rank() == a.dim() {
            return Some(m);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::QuantumGroup;
    use crate::rep::{dual, projective_module, simple_module, tensor, unit_module};

    #[test]
    fn schur_and_radical() {
        let g = QuantumGroup::new(3).unwrap();
        let v0 = unit_module(g);
        assert_eq!(hom_space(&v0, &v0).len(), 1);
        let v1 = simple_module(g, 1).unwrap();
        let v2 = simple_module(g, 2).unwrap();
        assert_eq!(hom_space(&v1, &v2).len(), 0);
        assert_eq!(hom_space(&v0, &v1).len(), 0);
        let p0 = projective_module(g, 0).unwrap();
        assert_eq!(hom_space(&p0, &p0).len(), 2);
        for f in hom_space(&p0, &p0) {
            assert!(p0.is_intertwiner_to(&p0, &f));
        }
    }

    #[test]
    fn duals_and_units() {
        let g = QuantumGroup::new(5).unwrap();
        for n in 0..5 {
            let v = simple_module(g, n).unwrap();
            assert!(is_isomorphic(&v, &dual(&v)).is_some());
            let vv = dual(&dual(&v));
            let iso = is_isomorphic(&v, &vv).unwrap();
            assert!(v.is_intertwiner_to(&vv, &iso));
            assert!(is_isomorphic(&v, &tensor(&unit_module(g), &v)).is_some());
        }
        for n in 0..4 {
            let p = projective_module(g, n).unwrap();
            assert!(is_isomorphic(&p, &dual(&p)).is_some());
        }
        let v1 = simple_module(g, 1).unwrap();
        let v2 = simple_module(g, 2).unwrap();
        assert!(is_isomorphic(&v1, &v2).is_none());
    }

    #[test]
    fn pivotal_double_dual() {
        // K intertwines V with V** in the dual-of-dual basis.
        let g = QuantumGroup::new(5).unwrap();
        let v = simple_module(g, 3).unwrap();
        let vv = dual(&dual(&v));
        assert!(v.is_intertwiner_to(&vv, &v.act_k()));
    }
}
