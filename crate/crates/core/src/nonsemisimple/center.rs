//! Genus-one state spaces: the center and the zeroth Hochschild homology of
//! the algebra, by exact rank computations over the PBW basis.

use crate::hopf::{AlgElem, Mono, QuantumGroup};
use crate::linalg::{Echelon, SparseRow};

fn sparse(h: &QuantumGroup, x: &AlgElem, offset: usize) -> SparseRow {
    let r = h.r();
    let mut row: SparseRow = x.terms().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (offset + m.index(r), c.clone())).collect();
    row.sort_by_key(|(i, _)| *i);
    row
}

/// `dim Z`: the kernel dimension of `x ↦ ([x,E], [x,F], [x,K])`.
pub fn center_dim(h: &QuantumGroup) -> usize {
    let r = h.r();
    let n = h.dim();
    let gens = [h.e(), h.f(), h.k()];
    let mut ech = Echelon::new(h.field(), 3 * n);
    for m in Mono::all(r) {
        let x = h.basis_elem(m);
        let mut row = SparseRow::new();
        for (s, g) in gens.iter().enumerate() {
            row.extend(sparse(h, &h.commutator(&x, g), s * n));
        }
        ech.insert(row);
    }
    n - ech.rank()
}

/// `dim HH_0 = dim H/[H,H]`. Since `[ab, c] = [a, bc] + [b, ca]`, the
/// commutator space is spanned by `[g, x]` with `g` a generator and `x` a
/// basis element.
pub fn hh0_dim(h: &QuantumGroup) -> usize {
    let n = h.dim();
    let mut ech = Echelon::new(h.field(), n);
    for g in [h.e(), h.f(), h.k()] {
        for m in Mono::all(h.r()) {
            ech.insert(sparse(h, &h.commutator(&g, &h.basis_elem(m)), 0));
        }
    }
    n - ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kerler_dimension_at_three() {
        let h = QuantumGroup::new(3).unwrap();
        assert_eq!(center_dim(h), 4);
        assert_eq!(hh0_dim(h), 4);
    }

    #[test]
    fn all_commutators_span_the_same_space() {
        let h = QuantumGroup::new(3).unwrap();
        let n = h.dim();
        let mut ech = Echelon::new(h.field(), n);
        for a in Mono::all(3) {
            for b in Mono::all(3) {
                ech.insert(sparse(h, &h.commutator(&h.basis_elem(a), &h.basis_elem(b)), 0));
            }
        }
        assert_eq!(n - ech.rank(), hh0_dim(h));
    }
}
