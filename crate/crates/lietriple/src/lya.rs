//! Lie-Yamaguti algebras (Lie triple algebras) as exact structure constants.
//!
//! An algebra is a basis dimension plus two coefficient tensors: `b[i][j][k]`
//! for the binary bracket and `t[i][j][k][l]` for the ternary bracket. The
//! index skew-symmetries LY1/LY2 are enforced at construction; the remaining
//! axioms LY3-LY6 are checked by [`verify_ly`], which reports failures as
//! data rather than errors.

use crate::exactla::{unit, vec_add, vec_is_zero, vec_neg, vec_sub, Matrix, Splitting, Subspace};
use crate::report::{AxiomReport, ReportBuilder, WitnessMode};
use crate::tensor::{cube_tuples, Tensor};
use crate::{Error, Result, Q};
use num_traits::Zero;

/// A Lie-Yamaguti algebra on a finite basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LYAlgebra {
    dim: usize,
    /// `binary[i][j][k]`: coefficient of `e_k` in `[e_i, e_j]`.
    binary: Tensor,
    /// `ternary[i][j][k][l]`: coefficient of `e_l` in `[e_i, e_j, e_k]`.
    ternary: Tensor,
}

impl LYAlgebra {
    /// Builds an algebra, enforcing the index skew-symmetries
    /// `b[i][j][k] = -b[j][i][k]` and `t[i][j][k][l] = -t[j][i][k][l]`.
    pub fn new(dim: usize, binary: Tensor, ternary: Tensor) -> Result<Self> {
        if binary.shape() != [dim, dim, dim] || ternary.shape() != [dim, dim, dim, dim] {
            return Err(Error::Dim(format!(
                "structure tensors must have shapes [d,d,d]/[d,d,d,d] for d={dim}"
            )));
        }
        if let Some(idx) = binary.skew_violation(0, 1) {
            return Err(Error::Skew(format!("binary bracket at index {idx:?}")));
        }
        if let Some(idx) = ternary.skew_violation(0, 1) {
            return Err(Error::Skew(format!("ternary bracket at index {idx:?}")));
        }
        Ok(LYAlgebra { dim, binary, ternary })
    }

    /// The abelian algebra: all brackets zero.
    pub fn zero(dim: usize) -> Self {
        LYAlgebra {
            dim,
            binary: Tensor::zeros(vec![dim, dim, dim]),
            ternary: Tensor::zeros(vec![dim, dim, dim, dim]),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn binary(&self) -> &Tensor {
        &self.binary
    }

    pub fn ternary(&self) -> &Tensor {
        &self.ternary
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn b2_basis(&self, i: usize, j: usize) -> &[Q] {
        self.binary.fiber(&[i, j])
    }

    /// `[e_i, e_j, e_k]` as a coefficient vector.
    pub fn b3_basis(&self, i: usize, j: usize, k: usize) -> &[Q] {
        self.ternary.fiber(&[i, j, k])
    }

    /// Binary bracket of coordinate vectors.
    pub fn b2(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.binary.contract(&[x, y])
    }

    /// Ternary bracket of coordinate vectors.
    pub fn b3(&self, x: &[Q], y: &[Q], z: &[Q]) -> Vec<Q> {
        self.ternary.contract(&[x, y, z])
    }

    /// Transports the structure constants to the basis whose vectors are the
    /// columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let (binary, ternary) = change_basis_pair(&self.binary, &self.ternary, self.dim, p)?;
        LYAlgebra::new(self.dim, binary, ternary)
    }

    /// Direct sum, blocks ordered self-then-other.
    pub fn direct_sum(&self, other: &LYAlgebra) -> Self {
        let n = self.dim + other.dim;
        let mut binary = Tensor::zeros(vec![n, n, n]);
        let mut ternary = Tensor::zeros(vec![n, n, n, n]);
        copy_block3(&mut binary, &self.binary, 0);
        copy_block3(&mut binary, &other.binary, self.dim);
        copy_block4(&mut ternary, &self.ternary, 0);
        copy_block4(&mut ternary, &other.ternary, self.dim);
        LYAlgebra { dim: n, binary, ternary }
    }
}

fn copy_block3(dst: &mut Tensor, src: &Tensor, off: usize) {
    let d = src.shape()[0];
    for idx in cube_tuples(d, 3) {
        let v = src.get(&idx);
        if !v.is_zero() {
            dst.set(&[idx[0] + off, idx[1] + off, idx[2] + off], v.clone());
        }
    }
}

fn copy_block4(dst: &mut Tensor, src: &Tensor, off: usize) {
    let d = src.shape()[0];
    for idx in cube_tuples(d, 4) {
        let v = src.get(&idx);
        if !v.is_zero() {
            dst.set(&[idx[0] + off, idx[1] + off, idx[2] + off, idx[3] + off], v.clone());
        }
    }
}

fn change_basis_pair(
    binary: &Tensor,
    ternary: &Tensor,
    dim: usize,
    p: &Matrix,
) -> Result<(Tensor, Tensor)> {
    if p.rows() != dim || p.cols() != dim {
        return Err(Error::Dim("change-of-basis matrix must be square of the algebra dimension".into()));
    }
    let p_inv = p.inverse().ok_or_else(|| Error::invalid("change of basis (matrix is singular)"))?;
    let cols: Vec<Vec<Q>> = (0..dim).map(|i| p.column(i)).collect();
    let mut b2 = Tensor::zeros(vec![dim, dim, dim]);
    let mut b3 = Tensor::zeros(vec![dim, dim, dim, dim]);
    for i in 0..dim {
        for j in 0..dim {
            let w = p_inv.mul_vec(&binary.contract(&[&cols[i], &cols[j]]));
            for (k, v) in w.into_iter().enumerate() {
                if !v.is_zero() {
                    b2.set(&[i, j, k], v);
                }
            }
            for k in 0..dim {
                let w = p_inv.mul_vec(&ternary.contract(&[&cols[i], &cols[j], &cols[k]]));
                for (l, v) in w.into_iter().enumerate() {
                    if !v.is_zero() {
                        b3.set(&[i, j, k, l], v);
                    }
                }
            }
        }
    }
    Ok((b2, b3))
}

/// Checks axioms LY1-LY6 on all basis tuples, collecting the first failing
/// tuple per axiom (see [`verify_ly_with`] for exhaustive witnesses).
pub fn verify_ly(a: &LYAlgebra) -> AxiomReport {
    verify_ly_with(a, WitnessMode::First)
}

/// Checks axioms LY1-LY6 with the given witness collection mode.
///
/// LY1/LY2 hold by construction but are re-checked. LY3 runs over basis
/// triples, LY4 and LY5 over 4-tuples, LY6 over 5-tuples.
pub fn verify_ly_with(a: &LYAlgebra, mode: WitnessMode) -> AxiomReport {
    let d = a.dim();
    let u: Vec<Vec<Q>> = (0..d).map(|i| unit(d, i)).collect();
    let mut rb = ReportBuilder::new(mode);

    rb.axiom(
        "LY1",
        cube_tuples(d, 2).into_iter().map(|t| {
            let defect = vec_add(a.b2_basis(t[0], t[1]), a.b2_basis(t[1], t[0]));
            (t, defect)
        }),
    );
    rb.axiom(
        "LY2",
        cube_tuples(d, 3).into_iter().map(|t| {
            let defect = vec_add(a.b3_basis(t[0], t[1], t[2]), a.b3_basis(t[1], t[0], t[2]));
            (t, defect)
        }),
    );
    rb.axiom(
        "LY3",
        cube_tuples(d, 3).into_iter().map(|t| {
            let mut defect = vec![Q::zero(); d];
            for (i, j, k) in cyclic3(t[0], t[1], t[2]) {
                defect = vec_add(&defect, &a.b2(a.b2_basis(i, j), &u[k]));
                defect = vec_add(&defect, a.b3_basis(i, j, k));
            }
            (t, defect)
        }),
    );
    rb.axiom(
        "LY4",
        cube_tuples(d, 4).into_iter().map(|t| {
            let mut defect = vec![Q::zero(); d];
            for (i, j, k) in cyclic3(t[0], t[1], t[2]) {
                defect = vec_add(&defect, &a.b3(a.b2_basis(i, j), &u[k], &u[t[3]]));
            }
            (t, defect)
        }),
    );
    rb.axiom(
        "LY5",
        cube_tuples(d, 4).into_iter().map(|t| {
            let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
            let lhs = a.b3(&u[i], &u[j], a.b2_basis(k, l));
            let rhs = vec_add(
                &a.b2(a.b3_basis(i, j, k), &u[l]),
                &a.b2(&u[k], a.b3_basis(i, j, l)),
            );
            (t, vec_sub(&lhs, &rhs))
        }),
    );
    rb.axiom(
        "LY6",
        cube_tuples(d, 5).into_iter().map(|t| {
            let (i, j, k, l, m) = (t[0], t[1], t[2], t[3], t[4]);
            let mut defect = a.b3(&u[i], &u[j], a.b3_basis(k, l, m));
            defect = vec_sub(&defect, &a.b3(a.b3_basis(i, j, k), &u[l], &u[m]));
            defect = vec_sub(&defect, &a.b3(&u[k], a.b3_basis(i, j, l), &u[m]));
            defect = vec_sub(&defect, &a.b3(&u[k], &u[l], a.b3_basis(i, j, m)));
            (t, defect)
        }),
    );
    rb.finish()
}

pub(crate) fn cyclic3(a: usize, b: usize, c: usize) -> [(usize, usize, usize); 3] {
    [(a, b, c), (b, c, a), (c, a, b)]
}

/// A Lie algebra on a finite basis, with skewness enforced at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    /// `bracket[i][j][k]`: coefficient of `e_k` in `[e_i, e_j]`.
    bracket: Tensor,
}

impl LieAlgebra {
    pub fn new(dim: usize, bracket: Tensor) -> Result<Self> {
        if bracket.shape() != [dim, dim, dim] {
            return Err(Error::Dim(format!("bracket tensor must have shape [d,d,d] for d={dim}")));
        }
        if let Some(idx) = bracket.skew_violation(0, 1) {
            return Err(Error::Skew(format!("Lie bracket at index {idx:?}")));
        }
        Ok(LieAlgebra { dim, bracket })
    }

    pub fn zero(dim: usize) -> Self {
        LieAlgebra { dim, bracket: Tensor::zeros(vec![dim, dim, dim]) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_tensor(&self) -> &Tensor {
        &self.bracket
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Q] {
        self.bracket.fiber(&[i, j])
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.bracket.contract(&[x, y])
    }

    /// Jacobi identity over all basis triples.
    pub fn verify_jacobi(&self) -> AxiomReport {
        let d = self.dim;
        let u: Vec<Vec<Q>> = (0..d).map(|i| unit(d, i)).collect();
        let mut rb = ReportBuilder::new(WitnessMode::First);
        rb.axiom(
            "jacobi",
            cube_tuples(d, 3).into_iter().map(|t| {
                let mut defect = vec![Q::zero(); d];
                for (i, j, k) in cyclic3(t[0], t[1], t[2]) {
                    defect = vec_add(&defect, &self.bracket(self.bracket_basis(i, j), &u[k]));
                }
                (t, defect)
            }),
        );
        rb.finish()
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let dummy = Tensor::zeros(vec![self.dim, self.dim, self.dim, self.dim]);
        let (bracket, _) = change_basis_pair(&self.bracket, &dummy, self.dim, p)?;
        LieAlgebra::new(self.dim, bracket)
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> Self {
        let n = self.dim + other.dim;
        let mut bracket = Tensor::zeros(vec![n, n, n]);
        copy_block3(&mut bracket, &self.bracket, 0);
        copy_block3(&mut bracket, &other.bracket, self.dim);
        LieAlgebra { dim: n, bracket }
    }
}

/// A (left) Leibniz algebra: left multiplications are derivations of the
/// product. No symmetry is imposed on the product tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizAlgebra {
    dim: usize,
    /// `product[i][j][k]`: coefficient of `e_k` in `e_i . e_j`.
    product: Tensor,
}

impl LeibnizAlgebra {
    pub fn new(dim: usize, product: Tensor) -> Result<Self> {
        if product.shape() != [dim, dim, dim] {
            return Err(Error::Dim(format!("product tensor must have shape [d,d,d] for d={dim}")));
        }
        Ok(LeibnizAlgebra { dim, product })
    }

    pub fn zero(dim: usize) -> Self {
        LeibnizAlgebra { dim, product: Tensor::zeros(vec![dim, dim, dim]) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product_tensor(&self) -> &Tensor {
        &self.product
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &[Q] {
        self.product.fiber(&[i, j])
    }

    pub fn product(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.product.contract(&[x, y])
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let dummy = Tensor::zeros(vec![self.dim, self.dim, self.dim, self.dim]);
        let (product, _) = change_basis_pair(&self.product, &dummy, self.dim, p)?;
        LeibnizAlgebra::new(self.dim, product)
    }

    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> Self {
        let n = self.dim + other.dim;
        let mut product = Tensor::zeros(vec![n, n, n]);
        copy_block3(&mut product, &self.product, 0);
        copy_block3(&mut product, &other.product, self.dim);
        LeibnizAlgebra { dim: n, product }
    }
}

/// Checks `x.(y.z) = (x.y).z + y.(x.z)` over all basis triples.
pub fn verify_leibniz(l: &LeibnizAlgebra) -> AxiomReport {
    verify_leibniz_with(l, WitnessMode::First)
}

pub fn verify_leibniz_with(l: &LeibnizAlgebra, mode: WitnessMode) -> AxiomReport {
    let d = l.dim();
    let u: Vec<Vec<Q>> = (0..d).map(|i| unit(d, i)).collect();
    let mut rb = ReportBuilder::new(mode);
    rb.axiom(
        "leibniz",
        cube_tuples(d, 3).into_iter().map(|t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let lhs = l.product(&u[i], l.product_basis(j, k));
            let rhs = vec_add(
                &l.product(l.product_basis(i, j), &u[k]),
                &l.product(&u[j], l.product_basis(i, k)),
            );
            (t, vec_sub(&lhs, &rhs))
        }),
    );
    rb.finish()
}

/// Views a Lie algebra as a Lie-Yamaguti algebra with ternary bracket
/// `[x,y,z] := [[x,y],z]`. Rejects input failing the Jacobi identity.
pub fn lie_to_lya(l: &LieAlgebra) -> Result<LYAlgebra> {
    let jac = l.verify_jacobi();
    if !jac.all_pass() {
        return Err(Error::invalid_with(
            "jacobi",
            format!("witness {:?}", jac.first_failure().and_then(|c| c.witnesses.first())),
        ));
    }
    let d = l.dim();
    let u: Vec<Vec<Q>> = (0..d).map(|i| unit(d, i)).collect();
    let mut ternary = Tensor::zeros(vec![d, d, d, d]);
    for t in cube_tuples(d, 3) {
        let w = l.bracket(l.bracket_basis(t[0], t[1]), &u[t[2]]);
        for (m, v) in w.into_iter().enumerate() {
            if !v.is_zero() {
                ternary.set(&[t[0], t[1], t[2], m], v);
            }
        }
    }
    LYAlgebra::new(d, l.bracket.clone(), ternary)
}

/// The Kinyon-Weinstein Lie-Yamaguti structure underlying a Leibniz algebra:
/// `[x,y] = x.y - y.x` and `[x,y,z] = -(x.y).z`.
pub fn leibniz_to_lya(l: &LeibnizAlgebra) -> Result<LYAlgebra> {
    let rep = verify_leibniz(l);
    if !rep.all_pass() {
        return Err(Error::invalid_with(
            "leibniz identity",
            format!("witness {:?}", rep.first_failure().and_then(|c| c.witnesses.first())),
        ));
    }
    let d = l.dim();
    let u: Vec<Vec<Q>> = (0..d).map(|i| unit(d, i)).collect();
    let mut binary = Tensor::zeros(vec![d, d, d]);
    let mut ternary = Tensor::zeros(vec![d, d, d, d]);
    for t in cube_tuples(d, 2) {
        let w = vec_sub(l.product_basis(t[0], t[1]), l.product_basis(t[1], t[0]));
        for (k, v) in w.into_iter().enumerate() {
            if !v.is_zero() {
                binary.set(&[t[0], t[1], k], v);
            }
        }
    }
    for t in cube_tuples(d, 3) {
        let w = vec_neg(&l.product(l.product_basis(t[0], t[1]), &u[t[2]]));
        for (m, v) in w.into_iter().enumerate() {
            if !v.is_zero() {
                ternary.set(&[t[0], t[1], t[2], m], v);
            }
        }
    }
    LYAlgebra::new(d, binary, ternary)
}

/// A Lie algebra with a reductive decomposition `g = h ⊕ m`, i.e.
/// `[h,h] ⊆ h` and `[h,m] ⊆ m`. All containments are verified exactly.
#[derive(Clone, Debug)]
pub struct ReductiveDecomposition {
    lie: LieAlgebra,
    h_basis: Subspace,
    m_basis: Subspace,
    split: Splitting,
}

impl ReductiveDecomposition {
    pub fn new(lie: LieAlgebra, h_basis: Subspace, m_basis: Subspace) -> Result<Self> {
        let jac = lie.verify_jacobi();
        if !jac.all_pass() {
            return Err(Error::invalid("jacobi"));
        }
        if h_basis.ambient_dim() != lie.dim() || m_basis.ambient_dim() != lie.dim() {
            return Err(Error::Dim("decomposition parts must live in the algebra".into()));
        }
        let split = Splitting::new(&h_basis, &m_basis)?;
        // [h,h] ⊆ h and [h,m] ⊆ m
        for hv in h_basis.basis() {
            for hw in h_basis.basis() {
                if !h_basis.contains(&lie.bracket(hv, hw)) {
                    return Err(Error::invalid("reductive decomposition ([h,h] ⊆ h)"));
                }
            }
            for mv in m_basis.basis() {
                if !m_basis.contains(&lie.bracket(hv, mv)) {
                    return Err(Error::invalid("reductive decomposition ([h,m] ⊆ m)"));
                }
            }
        }
        Ok(ReductiveDecomposition { lie, h_basis, m_basis, split })
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn h_basis(&self) -> &Subspace {
        &self.h_basis
    }

    pub fn m_basis(&self) -> &Subspace {
        &self.m_basis
    }

    pub fn split(&self) -> &Splitting {
        &self.split
    }
}

/// The Lie-Yamaguti algebra on `m` induced by bracket projections:
/// `[x,y]_m = pi_m([x,y])` and `[x,y,z]_m = [pi_h([x,y]), z]`, expressed in
/// the coordinates of the `m` basis.
pub fn reductive_to_lya(d: &ReductiveDecomposition) -> Result<LYAlgebra> {
    let dm = d.m_basis.dim();
    let mb: Vec<&Vec<Q>> = d.m_basis.basis().iter().collect();
    let mut binary = Tensor::zeros(vec![dm, dm, dm]);
    let mut ternary = Tensor::zeros(vec![dm, dm, dm, dm]);
    let m_coords = |v: &[Q]| -> Result<Vec<Q>> {
        let (h, m) = d.split.coords(v);
        if !vec_is_zero(&h) {
            return Err(Error::Internal("projected bracket left m".into()));
        }
        Ok(m)
    };
    for i in 0..dm {
        for j in 0..dm {
            let g_bracket = d.lie.bracket(mb[i], mb[j]);
            let pm = d.split.project_second(&g_bracket);
            let ph = d.split.project_first(&g_bracket);
            let w = m_coords(&pm)?;
            for (k, v) in w.into_iter().enumerate() {
                if !v.is_zero() {
                    binary.set(&[i, j, k], v);
                }
            }
            for k in 0..dm {
                let w = m_coords(&d.lie.bracket(&ph, mb[k]))?;
                for (l, v) in w.into_iter().enumerate() {
                    if !v.is_zero() {
                        ternary.set(&[i, j, k, l], v);
                    }
                }
            }
        }
    }
    LYAlgebra::new(dm, binary, ternary)
}

/// The Leibniz algebra of fundamental objects on `T ⊗ T`, with basis
/// `e_i ⊗ e_j` at index `i*dim + j` and product
/// `X ∘ Y = ([x1,x2,y1], y2) + (y1, [x1,x2,y2])`.
pub fn fundamental_leibniz(a: &LYAlgebra) -> Result<LeibnizAlgebra> {
    let rep = verify_ly(a);
    if !rep.all_pass() {
        return Err(Error::invalid_with("LY axioms", rep.summary()));
    }
    let d = a.dim();
    let n = d * d;
    let mut product = Tensor::zeros(vec![n, n, n]);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let t = a.b3_basis(i, j, k);
                    for (m, v) in t.iter().enumerate() {
                        if !v.is_zero() {
                            product.add_at(&[i * d + j, k * d + l, m * d + l], v.clone());
                        }
                    }
                    let t = a.b3_basis(i, j, l);
                    for (m, v) in t.iter().enumerate() {
                        if !v.is_zero() {
                            product.add_at(&[i * d + j, k * d + l, k * d + m], v.clone());
                        }
                    }
                }
            }
        }
    }
    LeibnizAlgebra::new(n, product)
}

/// Checks that `ad(X) ad(Y) - ad(Y) ad(X) = ad(X ∘ Y)` on all basis
/// fundamental objects and basis arguments, where `ad(X)(w) = [x1,x2,w]`.
pub fn verify_fundamental_ad(a: &LYAlgebra) -> AxiomReport {
    let d = a.dim();
    let ad = |i: usize, j: usize| -> Matrix {
        Matrix::from_fn(d, d, |r, c| a.b3_basis(i, j, c)[r].clone())
    };
    let mut rb = ReportBuilder::new(WitnessMode::First);
    rb.axiom(
        "ad-homomorphism",
        cube_tuples(d, 4).into_iter().flat_map(|t| {
            let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
            let axy = ad(i, j).mul(&ad(k, l));
            let ayx = ad(k, l).mul(&ad(i, j));
            // ad(X∘Y) = sum_m t[i][j][k][m] ad(m,l) + t[i][j][l][m] ad(k,m)
            let mut rhs = Matrix::zero(d, d);
            for (m, v) in a.b3_basis(i, j, k).iter().enumerate() {
                if !v.is_zero() {
                    let am = ad(m, l);
                    for r in 0..d {
                        for c in 0..d {
                            rhs.add_at(r, c, v * am.get(r, c));
                        }
                    }
                }
            }
            for (m, v) in a.b3_basis(i, j, l).iter().enumerate() {
                if !v.is_zero() {
                    let am = ad(k, m);
                    for r in 0..d {
                        for c in 0..d {
                            rhs.add_at(r, c, v * am.get(r, c));
                        }
                    }
                }
            }
            (0..d).map(move |w| {
                let lhs = vec_sub(&axy.column(w), &ayx.column(w));
                let mut tuple = t.clone();
                tuple.push(w);
                (tuple, vec_sub(&lhs, &rhs.column(w)))
            })
        }),
    );
    rb.finish()
}

/// The omni-Lie algebra structure on `gl_n ⊕ k^n` (dimension `n² + n`):
/// `[(A,x),(B,y)] = (2[A,B], Ay - Bx)` and
/// `[(A,x),(B,y),(C,z)] = -([[A,B],C], [A,B]z)`.
///
/// Basis order: `E_{ab}` at `a*n + b`, then the `k^n` vectors.
pub fn omni_lie(n: usize) -> Result<LYAlgebra> {
    if n == 0 {
        return Err(Error::invalid("omni-lie size (n >= 1)"));
    }
    let gl = n * n;
    let dim = gl + n;
    let e = |a: usize, b: usize| -> Matrix {
        let mut m = Matrix::zero(n, n);
        m.set(a, b, Q::from_integer(1.into()));
        m
    };
    let comm = |x: &Matrix, y: &Matrix| -> Matrix {
        let xy = x.mul(y);
        let yx = y.mul(x);
        Matrix::from_fn(n, n, |r, c| xy.get(r, c) - yx.get(r, c))
    };
    let mat_of = |idx: usize| -> Option<Matrix> {
        (idx < gl).then(|| e(idx / n, idx % n))
    };
    let vec_of = |idx: usize| -> Option<usize> { (idx >= gl).then(|| idx - gl) };

    let mut binary = Tensor::zeros(vec![dim, dim, dim]);
    let mut ternary = Tensor::zeros(vec![dim, dim, dim, dim]);
    let two = Q::from_integer(2.into());
    for i in 0..dim {
        for j in 0..dim {
            // binary part
            match (mat_of(i), mat_of(j)) {
                (Some(a), Some(b)) => {
                    let c = comm(&a, &b);
                    for r in 0..n {
                        for s in 0..n {
                            let v = c.get(r, s);
                            if !v.is_zero() {
                                binary.set(&[i, j, r * n + s], &two * v);
                            }
                        }
                    }
                }
                (Some(a), None) => {
                    let y = vec_of(j).unwrap();
                    for r in 0..n {
                        let v = a.get(r, y);
                        if !v.is_zero() {
                            binary.set(&[i, j, gl + r], v.clone());
                        }
                    }
                }
                (None, Some(b)) => {
                    let x = vec_of(i).unwrap();
                    for r in 0..n {
                        let v = b.get(r, x);
                        if !v.is_zero() {
                            binary.set(&[i, j, gl + r], -v.clone());
                        }
                    }
                }
                (None, None) => {}
            }
            // ternary part needs matrix parts in the first two slots
            let (Some(a), Some(b)) = (mat_of(i), mat_of(j)) else { continue };
            let ab = comm(&a, &b);
            for k in 0..dim {
                match mat_of(k) {
                    Some(c) => {
                        let m = comm(&ab, &c);
                        for r in 0..n {
                            for s in 0..n {
                                let v = m.get(r, s);
                                if !v.is_zero() {
                                    ternary.set(&[i, j, k, r * n + s], -v.clone());
                                }
                            }
                        }
                    }
                    None => {
                        let z = vec_of(k).unwrap();
                        for r in 0..n {
                            let v = ab.get(r, z);
                            if !v.is_zero() {
                                ternary.set(&[i, j, k, gl + r], -v.clone());
                            }
                        }
                    }
                }
            }
        }
    }
    LYAlgebra::new(dim, binary, ternary)
}

/// Checks the homomorphism equations `phi([x,y]) = [phi x, phi y]'` and
/// `phi([x,y,z]) = [phi x, phi y, phi z]'` on all basis pairs and triples.
pub fn check_homomorphism_lya(
    source: &LYAlgebra,
    target: &LYAlgebra,
    phi: &Matrix,
) -> Result<AxiomReport> {
    if phi.rows() != target.dim() || phi.cols() != source.dim() {
        return Err(Error::Dim(format!(
            "homomorphism matrix must be {}x{}, got {}x{}",
            target.dim(),
            source.dim(),
            phi.rows(),
            phi.cols()
        )));
    }
    let cols: Vec<Vec<Q>> = (0..source.dim()).map(|i| phi.column(i)).collect();
    let mut rb = ReportBuilder::new(WitnessMode::First);
    rb.axiom(
        "homomorphism-binary",
        cube_tuples(source.dim(), 2).into_iter().map(|t| {
            let lhs = phi.mul_vec(source.b2_basis(t[0], t[1]));
            let rhs = target.b2(&cols[t[0]], &cols[t[1]]);
            (t, vec_sub(&lhs, &rhs))
        }),
    );
    rb.axiom(
        "homomorphism-ternary",
        cube_tuples(source.dim(), 3).into_iter().map(|t| {
            let lhs = phi.mul_vec(source.b3_basis(t[0], t[1], t[2]));
            let rhs = target.b3(&cols[t[0]], &cols[t[1]], &cols[t[2]]);
            (t, vec_sub(&lhs, &rhs))
        }),
    );
    Ok(rb.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::{q, Q};

    #[test]
    fn abelian2_passes_all_axioms() {
        let rep = verify_ly(&abelian2());
        assert!(rep.all_pass());
        assert_eq!(rep.checks.len(), 6);
    }

    #[test]
    fn a2_passes_all_axioms() {
        assert!(verify_ly(&a2()).all_pass());
    }

    #[test]
    fn construction_rejects_ly1_violation() {
        let binary = Tensor::from_entries(vec![2, 2, 2], &[(vec![0, 1, 0], q(1))]).unwrap();
        let err = LYAlgebra::new(2, binary, Tensor::zeros(vec![2, 2, 2, 2]));
        assert!(matches!(err, Err(Error::Skew(_))));
    }

    #[test]
    fn verify_reports_ly1_on_construction_bypass() {
        // Build a raw value with the enforcement bypassed; the defensive
        // re-check must flag LY1 with witness (0, 1).
        let binary = Tensor::from_entries(vec![2, 2, 2], &[(vec![0, 1, 0], q(1))]).unwrap();
        let a = LYAlgebra { dim: 2, binary, ternary: Tensor::zeros(vec![2, 2, 2, 2]) };
        let rep = verify_ly(&a);
        let ly1 = rep.check("LY1").unwrap();
        assert!(!ly1.pass);
        assert_eq!(ly1.witnesses[0].tuple, vec![0, 1]);
    }

    #[test]
    fn lie_to_lya_abelian3_is_zero() {
        let out = lie_to_lya(&LieAlgebra::zero(3)).unwrap();
        assert_eq!(out, LYAlgebra::zero(3));
        assert!(verify_ly(&out).all_pass());
    }

    #[test]
    fn lie_to_lya_affine2_matches_a2() {
        let out = lie_to_lya(&affine2_lie()).unwrap();
        assert!(verify_ly(&out).all_pass());
        // [e1,e2,e2] = [[e1,e2],e2] = [e1,e2] = e1
        assert_eq!(out.b3_basis(0, 1, 1), &[q(1), q(0)]);
        assert_eq!(out.b3_basis(0, 1, 0), &[q(0), q(0)]);
    }

    #[test]
    fn lie_to_lya_so3_passes_and_matches_iterated_bracket() {
        let l = so3_lie();
        let out = lie_to_lya(&l).unwrap();
        assert!(verify_ly(&out).all_pass());
        for t in cube_tuples(3, 3) {
            let iter = l.bracket(l.bracket_basis(t[0], t[1]), &unit(3, t[2]));
            assert_eq!(out.b3_basis(t[0], t[1], t[2]), &iter[..]);
        }
    }

    #[test]
    fn lie_to_lya_rejects_jacobi_failure() {
        let bracket = Tensor::from_entries(
            vec![3, 3, 3],
            &[
                (vec![0, 1, 2], q(1)),
                (vec![1, 0, 2], q(-1)),
                (vec![1, 2, 1], q(1)),
                (vec![2, 1, 1], q(-1)),
            ],
        )
        .unwrap();
        let l = LieAlgebra::new(3, bracket).unwrap();
        assert!(matches!(lie_to_lya(&l), Err(Error::Invalid { .. })));
    }

    #[test]
    fn leibniz_to_lya_leib2_is_zero() {
        let out = leibniz_to_lya(&leib2()).unwrap();
        assert_eq!(out, LYAlgebra::zero(2));
    }

    #[test]
    fn leibniz_to_lya_zero_is_zero() {
        assert_eq!(leibniz_to_lya(&LeibnizAlgebra::zero(3)).unwrap(), LYAlgebra::zero(3));
    }

    #[test]
    fn leibniz_to_lya_on_lie_input_passes() {
        let l = crate::random::lie_as_leibniz(&so3_lie());
        let out = leibniz_to_lya(&l).unwrap();
        assert!(verify_ly(&out).all_pass());
        // binary is twice the Lie bracket
        let two = q(2);
        for t in cube_tuples(3, 2) {
            let expected: Vec<Q> =
                so3_lie().bracket_basis(t[0], t[1]).iter().map(|v| &two * v).collect();
            assert_eq!(out.b2_basis(t[0], t[1]), &expected[..]);
        }
    }

    #[test]
    fn reductive_so3_gives_triple_system() {
        let out = so3red_lya();
        assert!(verify_ly(&out).all_pass());
        assert!(out.binary().is_zero());
        // [L1,L2,L1] = [L3,L1] = L2 and [L1,L2,L2] = [L3,L2] = -L1
        assert_eq!(out.b3_basis(0, 1, 0), &[q(0), q(1)]);
        assert_eq!(out.b3_basis(0, 1, 1), &[q(-1), q(0)]);
    }

    #[test]
    fn reductive_with_full_h_is_zero_dimensional() {
        let lie = so3_lie();
        let h = Subspace::new(3, (0..3).map(|i| unit(3, i)).collect()).unwrap();
        let m = Subspace::zero(3);
        let d = ReductiveDecomposition::new(lie, h, m).unwrap();
        let out = reductive_to_lya(&d).unwrap();
        assert_eq!(out.dim(), 0);
        assert!(verify_ly(&out).all_pass());
    }

    #[test]
    fn reductive_abelian_split_is_abelian() {
        let lie = LieAlgebra::zero(3);
        let h = Subspace::new(3, vec![unit(3, 0)]).unwrap();
        let m = Subspace::new(3, vec![unit(3, 1), unit(3, 2)]).unwrap();
        let d = ReductiveDecomposition::new(lie, h, m).unwrap();
        assert_eq!(reductive_to_lya(&d).unwrap(), LYAlgebra::zero(2));
    }

    #[test]
    fn reductive_rejects_non_reductive_split() {
        // A2 with h = span(e1): [h, m] = [e1, e2] = e1 is not in m.
        let lie = affine2_lie();
        let h = Subspace::new(2, vec![unit(2, 0)]).unwrap();
        let m = Subspace::new(2, vec![unit(2, 1)]).unwrap();
        assert!(ReductiveDecomposition::new(lie, h, m).is_err());
    }

    #[test]
    fn fundamental_leibniz_abelian2_is_zero() {
        let out = fundamental_leibniz(&abelian2()).unwrap();
        assert_eq!(out, LeibnizAlgebra::zero(4));
    }

    #[test]
    fn fundamental_leibniz_a2_passes_both_checks() {
        let a = a2();
        let out = fundamental_leibniz(&a).unwrap();
        assert_eq!(out.dim(), 4);
        assert!(verify_leibniz(&out).all_pass());
        assert!(verify_fundamental_ad(&a).all_pass());
    }

    #[test]
    fn fundamental_leibniz_so3_passes_both_checks() {
        let a = so3_lya();
        let out = fundamental_leibniz(&a).unwrap();
        assert_eq!(out.dim(), 9);
        assert!(verify_leibniz(&out).all_pass());
        assert!(verify_fundamental_ad(&a).all_pass());
    }

    #[test]
    fn omni_lie_1_structure() {
        let a = omni_lie(1).unwrap();
        assert_eq!(a.dim(), 2);
        // [f1, f2] = f2, [f1,f1] = [f2,f2] = 0, ternary zero
        assert_eq!(a.b2_basis(0, 1), &[q(0), q(1)]);
        assert!(crate::exactla::vec_is_zero(a.b2_basis(0, 0)));
        assert!(crate::exactla::vec_is_zero(a.b2_basis(1, 1)));
        assert!(a.ternary().is_zero());
        assert!(verify_ly(&a).all_pass());
    }

    #[test]
    fn omni_lie_2_passes_axioms() {
        let a = omni_lie(2).unwrap();
        assert_eq!(a.dim(), 6);
        assert!(verify_ly(&a).all_pass());
    }

    #[test]
    fn homomorphism_identity_on_a2_passes() {
        let a = a2();
        let rep = check_homomorphism_lya(&a, &a, &Matrix::identity(2)).unwrap();
        assert!(rep.all_pass());
    }

    #[test]
    fn homomorphism_zero_map_passes() {
        let rep =
            check_homomorphism_lya(&a2(), &so3_lya(), &Matrix::zero(3, 2)).unwrap();
        assert!(rep.all_pass());
    }

    #[test]
    fn so3red_inclusion_into_so3_fails() {
        // The inclusion of m into so(3) is not a homomorphism: the binary
        // bracket on m is the projection, so [L1,L2]_m = 0 while
        // [L1,L2] = L3 in so(3).
        let src = so3red_lya();
        let dst = so3_lya();
        let mut phi = Matrix::zero(3, 2);
        phi.set(0, 0, q(1));
        phi.set(1, 1, q(1));
        let rep = check_homomorphism_lya(&src, &dst, &phi).unwrap();
        assert!(!rep.all_pass());
        assert!(!rep.check("homomorphism-binary").unwrap().pass);
    }

    #[test]
    fn change_basis_preserves_axioms() {
        let mut rng = crate::random::rng(3);
        let p = crate::random::unimodular(&mut rng, 3);
        let a = so3_lya().change_basis(&p).unwrap();
        assert!(verify_ly(&a).all_pass());
    }
}
