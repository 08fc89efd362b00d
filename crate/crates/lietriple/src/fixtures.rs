//! Deterministic desk-scale fixtures used across tests and bundled with the
//! command-line tool.

use crate::lya::{lie_to_lya, reductive_to_lya, LYAlgebra, LeibnizAlgebra, LieAlgebra, ReductiveDecomposition};
use crate::exactla::{unit, Subspace};
use crate::tensor::Tensor;
use crate::{q, Q};

/// Abelian Lie-Yamaguti algebra of dimension 2.
pub fn abelian2() -> LYAlgebra {
    LYAlgebra::zero(2)
}

/// Abelian Lie-Yamaguti algebra of dimension 3.
pub fn abelian3() -> LYAlgebra {
    LYAlgebra::zero(3)
}

/// The 2-dimensional Lie algebra `[e1, e2] = e1`.
pub fn affine2_lie() -> LieAlgebra {
    let bracket = Tensor::from_entries(
        vec![2, 2, 2],
        &[(vec![0, 1, 0], q(1)), (vec![1, 0, 0], q(-1))],
    )
    .unwrap();
    LieAlgebra::new(2, bracket).unwrap()
}

/// The Lie-Yamaguti algebra of [`affine2_lie`] with iterated ternary bracket:
/// `[e1,e2] = e1`, `[e1,e2,e2] = e1`.
pub fn a2() -> LYAlgebra {
    lie_to_lya(&affine2_lie()).unwrap()
}

/// `so(3)`: `[L1,L2] = L3`, `[L2,L3] = L1`, `[L3,L1] = L2`.
pub fn so3_lie() -> LieAlgebra {
    let bracket = Tensor::from_entries(
        vec![3, 3, 3],
        &[
            (vec![0, 1, 2], q(1)),
            (vec![1, 0, 2], q(-1)),
            (vec![1, 2, 0], q(1)),
            (vec![2, 1, 0], q(-1)),
            (vec![2, 0, 1], q(1)),
            (vec![0, 2, 1], q(-1)),
        ],
    )
    .unwrap();
    LieAlgebra::new(3, bracket).unwrap()
}

/// `so(3)` viewed as a Lie-Yamaguti algebra.
pub fn so3_lya() -> LYAlgebra {
    lie_to_lya(&so3_lie()).unwrap()
}

/// The Heisenberg Lie algebra: `[e1, e2] = e3`.
pub fn heisenberg_lie() -> LieAlgebra {
    let bracket = Tensor::from_entries(
        vec![3, 3, 3],
        &[(vec![0, 1, 2], q(1)), (vec![1, 0, 2], q(-1))],
    )
    .unwrap();
    LieAlgebra::new(3, bracket).unwrap()
}

/// The reductive decomposition of `so(3)` with `h = span(L3)`,
/// `m = span(L1, L2)`.
pub fn so3_reductive() -> ReductiveDecomposition {
    let lie = so3_lie();
    let h = Subspace::new(3, vec![unit::<Q>(3, 2)]).unwrap();
    let m = Subspace::new(3, vec![unit::<Q>(3, 0), unit::<Q>(3, 1)]).unwrap();
    ReductiveDecomposition::new(lie, h, m).unwrap()
}

/// The Lie triple system on `m = span(L1, L2)` induced by [`so3_reductive`]:
/// zero binary bracket, `[L1,L2,L1] = L2`, `[L1,L2,L2] = -L1`.
pub fn so3red_lya() -> LYAlgebra {
    reductive_to_lya(&so3_reductive()).unwrap()
}

/// Nilpotent 2-dimensional Leibniz algebra: `e1 . e1 = e2`.
pub fn leib2() -> LeibnizAlgebra {
    let product =
        Tensor::from_entries(vec![2, 2, 2], &[(vec![0, 0, 1], q(1))]).unwrap();
    LeibnizAlgebra::new(2, product).unwrap()
}

/// A2 with the ternary entry `[e1,e2,e1] = e2` added, which breaks LY5
/// (skew-symmetry LY1/LY2 still holds, so construction succeeds).
pub fn a2_broken() -> LYAlgebra {
    let a = a2();
    let mut ternary = a.ternary().clone();
    ternary.set(&[0, 1, 0, 1], q(1));
    ternary.set(&[1, 0, 0, 1], q(-1));
    LYAlgebra::new(2, a.binary().clone(), ternary).unwrap()
}
