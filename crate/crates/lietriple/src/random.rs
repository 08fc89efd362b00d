//! Seeded random generation of valid inputs for property and acceptance
//! tests.
//!
//! Rejection sampling over raw structure constants essentially never
//! satisfies the higher axioms, so random algebras are produced from
//! classified low-dimensional families (abelian, the affine 2-dimensional
//! algebra, `so(3)`, Heisenberg, and direct sums) transported by a random
//! unimodular change of basis. Unimodular matrices keep entries integral and
//! small, which keeps exact arithmetic fast.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactla::Matrix;
use crate::fixtures;
use crate::lya::{lie_to_lya, LYAlgebra, LeibnizAlgebra, LieAlgebra};
use crate::q;

/// Deterministic RNG for test suites.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random unimodular integer matrix built from elementary row operations.
pub fn unimodular(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        return m;
    }
    let ops = 2 * n + rng.gen_range(0..=n);
    for _ in 0..ops {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = q(*[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap());
        // column_j += c * column_i keeps the determinant at +-1
        for r in 0..n {
            let add = c.clone() * m.get(r, i).clone();
            m.add_at(r, j, add);
        }
    }
    m
}

/// A random Lie algebra of the requested dimension (2 to 4), as a random
/// basis change of a classified family.
pub fn random_lie(rng: &mut impl Rng, dim: usize) -> LieAlgebra {
    let base = match dim {
        0 | 1 => LieAlgebra::zero(dim),
        2 => {
            if rng.gen_bool(0.3) {
                LieAlgebra::zero(2)
            } else {
                fixtures::affine2_lie()
            }
        }
        3 => match rng.gen_range(0..4) {
            0 => fixtures::so3_lie(),
            1 => fixtures::heisenberg_lie(),
            2 => fixtures::affine2_lie().direct_sum(&LieAlgebra::zero(1)),
            _ => LieAlgebra::zero(3),
        },
        4 => match rng.gen_range(0..4) {
            0 => fixtures::so3_lie().direct_sum(&LieAlgebra::zero(1)),
            1 => fixtures::heisenberg_lie().direct_sum(&LieAlgebra::zero(1)),
            2 => fixtures::affine2_lie().direct_sum(&fixtures::affine2_lie()),
            _ => fixtures::affine2_lie().direct_sum(&LieAlgebra::zero(2)),
        },
        _ => panic!("random_lie supports dimensions up to 4"),
    };
    let p = unimodular(rng, dim);
    base.change_basis(&p).expect("unimodular basis change")
}

/// A random valid Lie-Yamaguti algebra of the requested dimension (2 to 4).
pub fn random_lya(rng: &mut impl Rng, dim: usize) -> LYAlgebra {
    let base = match (dim, rng.gen_range(0..5)) {
        (2, 0) => fixtures::so3red_lya(),
        (2, _) => lie_to_lya(&random_lie(rng, 2)).unwrap(),
        (3, 0) => fixtures::so3red_lya().direct_sum(&LYAlgebra::zero(1)),
        (3, 1) => lie_to_lya(&fixtures::affine2_lie()).unwrap().direct_sum(&LYAlgebra::zero(1)),
        (3, _) => lie_to_lya(&random_lie(rng, 3)).unwrap(),
        (4, 0) => fixtures::so3red_lya().direct_sum(&fixtures::so3red_lya()),
        (4, 1) => {
            let omni = crate::lya::omni_lie(1).unwrap();
            omni.direct_sum(&fixtures::a2())
        }
        (4, _) => lie_to_lya(&random_lie(rng, 4)).unwrap(),
        (d, _) => lie_to_lya(&random_lie(rng, d)).unwrap(),
    };
    let p = unimodular(rng, base.dim());
    base.change_basis(&p).expect("unimodular basis change")
}

/// A random valid Leibniz algebra: a nilpotent family, a Lie algebra, or a
/// direct sum, transported by a random basis change.
pub fn random_leibniz(rng: &mut impl Rng, dim: usize) -> LeibnizAlgebra {
    let base = match (dim, rng.gen_range(0..3)) {
        (0 | 1, _) => LeibnizAlgebra::zero(dim),
        (2, 0) => fixtures::leib2(),
        (2, _) => lie_as_leibniz(&random_lie(rng, 2)),
        (3, 0) => fixtures::leib2().direct_sum(&LeibnizAlgebra::zero(1)),
        (3, _) => lie_as_leibniz(&random_lie(rng, 3)),
        (4, 0) => fixtures::leib2().direct_sum(&fixtures::leib2()),
        (4, _) => lie_as_leibniz(&random_lie(rng, 4)),
        (d, _) => lie_as_leibniz(&random_lie(rng, d)),
    };
    let p = unimodular(rng, base.dim());
    base.change_basis(&p).expect("unimodular basis change")
}

/// Any Lie algebra is a Leibniz algebra with the same product tensor.
pub fn lie_as_leibniz(l: &LieAlgebra) -> LeibnizAlgebra {
    LeibnizAlgebra::new(l.dim(), l.bracket_tensor().clone()).unwrap()
}

/// A random Lie-Yamaguti algebra restricted to dimensions 2-4, weighted
/// toward the cheaper small dimensions.
pub fn random_lya_desk(rng: &mut impl Rng) -> LYAlgebra {
    let dim = *[2, 2, 3, 3, 4].get(rng.gen_range(0..5)).unwrap();
    random_lya(rng, dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lya::{verify_leibniz, verify_ly};

    #[test]
    fn random_lya_passes_axioms() {
        let mut rng = rng(7);
        for _ in 0..10 {
            let a = random_lya_desk(&mut rng);
            assert!(verify_ly(&a).all_pass(), "dim {}", a.dim());
        }
    }

    #[test]
    fn random_leibniz_passes_identity() {
        let mut rng = rng(8);
        for dim in [2, 3, 4] {
            let l = random_leibniz(&mut rng, dim);
            assert!(verify_leibniz(&l).all_pass());
        }
    }

    #[test]
    fn unimodular_is_invertible() {
        let mut rng = rng(9);
        for n in 1..5 {
            let m = unimodular(&mut rng, n);
            assert!(m.inverse().is_some());
        }
    }
}
