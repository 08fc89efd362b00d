//! Representations `(rho, D, theta)` of a Lie-Yamaguti algebra, the adjoint
//! representation, actions, and semidirect products.
//!
//! `D` and `theta` are stored on all ordered basis pairs. Skew-symmetry of
//! `D` is not assumed at construction: it is a consequence of condition R31
//! and is checked, which lets deliberately broken representations be
//! represented and then rejected.

use crate::exactla::{unit, vec_add, vec_neg, vec_sub, Matrix};
use crate::lya::{cyclic3, verify_ly, LYAlgebra};
use crate::report::{AxiomReport, ReportBuilder, WitnessMode};
use crate::tensor::{cube_tuples, Tensor};
use crate::{Error, Result, Q};
use num_traits::Zero;

/// A representation of a Lie-Yamaguti algebra of dimension `algebra_dim` on a
/// module of dimension `module_dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    algebra_dim: usize,
    module_dim: usize,
    /// `rho[i]`: the operator of `e_i`.
    rho: Vec<Matrix>,
    /// `d_ops[i * algebra_dim + j]`: the operator `D(e_i, e_j)`.
    d_ops: Vec<Matrix>,
    /// `theta_ops[i * algebra_dim + j]`: the operator `theta(e_i, e_j)`.
    theta_ops: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        algebra_dim: usize,
        module_dim: usize,
        rho: Vec<Matrix>,
        d_ops: Vec<Matrix>,
        theta_ops: Vec<Matrix>,
    ) -> Result<Self> {
        if rho.len() != algebra_dim
            || d_ops.len() != algebra_dim * algebra_dim
            || theta_ops.len() != algebra_dim * algebra_dim
        {
            return Err(Error::Dim("operator family lengths must match the algebra dimension".into()));
        }
        for m in rho.iter().chain(&d_ops).chain(&theta_ops) {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(Error::Dim(format!(
                    "operators must be {module_dim}x{module_dim}, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { algebra_dim, module_dim, rho, d_ops, theta_ops })
    }

    /// The zero representation on a module of the given dimension.
    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        Representation {
            algebra_dim,
            module_dim,
            rho: vec![Matrix::zero(module_dim, module_dim); algebra_dim],
            d_ops: vec![Matrix::zero(module_dim, module_dim); algebra_dim * algebra_dim],
            theta_ops: vec![Matrix::zero(module_dim, module_dim); algebra_dim * algebra_dim],
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn d(&self, i: usize, j: usize) -> &Matrix {
        &self.d_ops[i * self.algebra_dim + j]
    }

    pub fn theta(&self, i: usize, j: usize) -> &Matrix {
        &self.theta_ops[i * self.algebra_dim + j]
    }

    /// `rho(x)(v)` for coordinate vectors.
    pub fn apply_rho(&self, x: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.module_dim];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = self.rho[i].mul_vec(v);
            for (o, t) in out.iter_mut().zip(w) {
                *o += c * t;
            }
        }
        out
    }

    /// `D(x, y)(v)` by bilinear expansion.
    pub fn apply_d(&self, x: &[Q], y: &[Q], v: &[Q]) -> Vec<Q> {
        self.apply_pair(&self.d_ops, x, y, v)
    }

    /// `theta(x, y)(v)` by bilinear expansion.
    pub fn apply_theta(&self, x: &[Q], y: &[Q], v: &[Q]) -> Vec<Q> {
        self.apply_pair(&self.theta_ops, x, y, v)
    }

    fn apply_pair(&self, ops: &[Matrix], x: &[Q], y: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.module_dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let w = ops[i * self.algebra_dim + j].mul_vec(v);
                let c = a * b;
                for (o, t) in out.iter_mut().zip(w) {
                    *o += &c * t;
                }
            }
        }
        out
    }

    /// Conjugates the representation by a change of basis of the module:
    /// each operator `M` becomes `P^-1 M P` where the columns of `p` are the
    /// new module basis.
    pub fn conjugate_module(&self, p: &Matrix) -> Result<Self> {
        let p_inv =
            p.inverse().ok_or_else(|| Error::invalid("module change of basis (singular)"))?;
        let conj = |m: &Matrix| p_inv.mul(m).mul(p);
        Ok(Representation {
            algebra_dim: self.algebra_dim,
            module_dim: self.module_dim,
            rho: self.rho.iter().map(conj).collect(),
            d_ops: self.d_ops.iter().map(conj).collect(),
            theta_ops: self.theta_ops.iter().map(conj).collect(),
        })
    }

    /// Transports the representation along a change of basis of the algebra
    /// (columns of `p` are the new algebra basis, in old coordinates).
    pub fn change_algebra_basis(&self, p: &Matrix) -> Result<Self> {
        if p.rows() != self.algebra_dim || p.cols() != self.algebra_dim {
            return Err(Error::Dim("algebra change of basis has wrong shape".into()));
        }
        let d = self.algebra_dim;
        let m = self.module_dim;
        let col = |i: usize| p.column(i);
        let mut rho = Vec::with_capacity(d);
        let mut d_ops = Vec::with_capacity(d * d);
        let mut theta_ops = Vec::with_capacity(d * d);
        for i in 0..d {
            let x = col(i);
            rho.push(Matrix::from_fn(m, m, |r, c| {
                self.apply_rho(&x, &unit(m, c))[r].clone()
            }));
        }
        for i in 0..d {
            for j in 0..d {
                let (x, y) = (col(i), col(j));
                d_ops.push(Matrix::from_fn(m, m, |r, c| {
                    self.apply_d(&x, &y, &unit(m, c))[r].clone()
                }));
                theta_ops.push(Matrix::from_fn(m, m, |r, c| {
                    self.apply_theta(&x, &y, &unit(m, c))[r].clone()
                }));
            }
        }
        Representation::new(d, m, rho, d_ops, theta_ops)
    }
}

/// Checks conditions R31-R62 on all required basis tuples (applied to every
/// module basis vector, so witnesses carry a module index as the last tuple
/// entry).
pub fn verify_rep(a: &LYAlgebra, r: &Representation) -> Result<AxiomReport> {
    verify_rep_with(a, r, WitnessMode::First)
}

pub fn verify_rep_with(a: &LYAlgebra, r: &Representation, mode: WitnessMode) -> Result<AxiomReport> {
    if r.algebra_dim() != a.dim() {
        return Err(Error::Dim(format!(
            "representation is over an algebra of dimension {}, expected {}",
            r.algebra_dim(),
            a.dim()
        )));
    }
    let d = a.dim();
    let m = r.module_dim();
    let mut rb = ReportBuilder::new(mode);

    // R31: D(x1,x2) - theta(x2,x1) + theta(x1,x2) + rho([x1,x2]) - [rho x1, rho x2] = 0
    rb.axiom(
        "R31",
        cube_tuples(d, 2).into_iter().flat_map(|t| {
            let (i, j) = (t[0], t[1]);
            (0..m).map(move |v| {
                let uv = &unit(m, v);
                let mut defect = r.d(i, j).mul_vec(uv);
                defect = vec_sub(&defect, &r.theta(j, i).mul_vec(uv));
                defect = vec_add(&defect, &r.theta(i, j).mul_vec(uv));
                defect = vec_add(&defect, &r.apply_rho(a.b2_basis(i, j), uv));
                defect = vec_sub(&defect, &r.rho(i).mul_vec(&r.rho(j).mul_vec(uv)));
                defect = vec_add(&defect, &r.rho(j).mul_vec(&r.rho(i).mul_vec(uv)));
                (vec![i, j, v], defect)
            })
        }),
    );
    // R41: D([x1,x2],x3) + D([x2,x3],x1) + D([x3,x1],x2) = 0
    rb.axiom(
        "R41",
        cube_tuples(d, 3).into_iter().flat_map(|t| {
            (0..m).map(move |v| {
                let uv = &unit(m, v);
                let mut defect = vec![Q::zero(); m];
                for (i, j, k) in cyclic3(t[0], t[1], t[2]) {
                    let uk = unit(d, k);
                    defect = vec_add(&defect, &r.apply_d(a.b2_basis(i, j), &uk, uv));
                }
                let mut tuple = t.clone();
                tuple.push(v);
                (tuple, defect)
            })
        }),
    );
    // R42: theta([x1,x2],x3) = theta(x1,x3) rho(x2) - theta(x2,x3) rho(x1)
    rb.axiom(
        "R42",
        cube_tuples(d, 3).into_iter().flat_map(|t| {
            (0..m).map(move |v| {
                let (i, j, k) = (t[0], t[1], t[2]);
                let uv = &unit(m, v);
                let uk = unit(d, k);
                let mut defect = r.apply_theta(a.b2_basis(i, j), &uk, uv);
                defect = vec_sub(&defect, &r.theta(i, k).mul_vec(&r.rho(j).mul_vec(uv)));
                defect = vec_add(&defect, &r.theta(j, k).mul_vec(&r.rho(i).mul_vec(uv)));
                let mut tuple = t.clone();
                tuple.push(v);
                (tuple, defect)
            })
        }),
    );
    // R51: [D(x1,x2), rho(y2)] = rho([x1,x2,y2])
    rb.axiom(
        "R51",
        cube_tuples(d, 3).into_iter().flat_map(|t| {
            (0..m).map(move |v| {
                let (i, j, k) = (t[0], t[1], t[2]);
                let uv = &unit(m, v);
                let mut defect = r.d(i, j).mul_vec(&r.rho(k).mul_vec(uv));
                defect = vec_sub(&defect, &r.rho(k).mul_vec(&r.d(i, j).mul_vec(uv)));
                defect = vec_sub(&defect, &r.apply_rho(a.b3_basis(i, j, k), uv));
                let mut tuple = t.clone();
                tuple.push(v);
                (tuple, defect)
            })
        }),
    );
    // R52: theta(x1,[y1,y2]) = rho(y1) theta(x1,y2) - rho(y2) theta(x1,y1)
    rb.axiom(
        "R52",
        cube_tuples(d, 3).into_iter().flat_map(|t| {
            (0..m).map(move |v| {
                let (i, j, k) = (t[0], t[1], t[2]);
                let uv = &unit(m, v);
                let ui = unit(d, i);
                let mut defect = r.apply_theta(&ui, a.b2_basis(j, k), uv);
                defect = vec_sub(&defect, &r.rho(j).mul_vec(&r.theta(i, k).mul_vec(uv)));
                defect = vec_add(&defect, &r.rho(k).mul_vec(&r.theta(i, j).mul_vec(uv)));
                let mut tuple = t.clone();
                tuple.push(v);
                (tuple, defect)
            })
        }),
    );
    // R61: [D(x1,x2), theta(y1,y2)] = theta((x1,x2) ∘ (y1,y2))
    rb.axiom(
        "R61",
        cube_tuples(d, 4).into_iter().flat_map(|t| {
            (0..m).map(move |v| {
                let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
                let uv = &unit(m, v);
                let mut defect = r.d(i, j).mul_vec(&r.theta(k, l).mul_vec(uv));
                defect = vec_sub(&defect, &r.theta(k, l).mul_vec(&r.d(i, j).mul_vec(uv)));
                // theta(X∘Y) = theta([x1,x2,y1], y2) + theta(y1, [x1,x2,y2])
                let (uk, ul) = (unit(d, k), unit(d, l));
                defect = vec_sub(&defect, &r.apply_theta(a.b3_basis(i, j, k), &ul, uv));
                defect = vec_sub(&defect, &r.apply_theta(&uk, a.b3_basis(i, j, l), uv));
                let mut tuple = t.clone();
                tuple.push(v);
                (tuple, defect)
            })
        }),
    );
    // R62: theta(x1,[y1,y2,y3]) =
    //   theta(y2,y3) theta(x1,y1) - theta(y1,y3) theta(x1,y2) + D(y1,y2) theta(x1,y3)
    rb.axiom(
        "R62",
        cube_tuples(d, 4).into_iter().flat_map(|t| {
            (0..m).map(move |v| {
                let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
                let uv = &unit(m, v);
                let ui = unit(d, i);
                let mut defect = r.apply_theta(&ui, a.b3_basis(j, k, l), uv);
                defect = vec_sub(&defect, &r.theta(k, l).mul_vec(&r.theta(i, j).mul_vec(uv)));
                defect = vec_add(&defect, &r.theta(j, l).mul_vec(&r.theta(i, k).mul_vec(uv)));
                defect = vec_sub(&defect, &r.d(j, k).mul_vec(&r.theta(i, l).mul_vec(uv)));
                let mut tuple = t.clone();
                tuple.push(v);
                (tuple, defect)
            })
        }),
    );
    Ok(rb.finish())
}

/// Skew-symmetry of `D`, a consequence of R31, checked standalone.
pub fn verify_d_skew(r: &Representation) -> AxiomReport {
    let d = r.algebra_dim();
    let m = r.module_dim();
    let mut rb = ReportBuilder::new(WitnessMode::First);
    rb.axiom(
        "D-skew",
        cube_tuples(d, 2).into_iter().flat_map(|t| {
            (0..m).map(move |v| {
                let uv = unit(m, v);
                let defect =
                    vec_add(&r.d(t[0], t[1]).mul_vec(&uv), &r.d(t[1], t[0]).mul_vec(&uv));
                (vec![t[0], t[1], v], defect)
            })
        }),
    );
    rb.finish()
}

/// The adjoint representation: `rho(x)(y) = [x,y]`, `D(x,y)(z) = [x,y,z]`,
/// `theta(x,y)(z) = [z,x,y]`. Rejects input failing the LY axioms.
pub fn adjoint_rep(a: &LYAlgebra) -> Result<Representation> {
    let rep = verify_ly(a);
    if !rep.all_pass() {
        return Err(Error::invalid_with("LY axioms", rep.summary()));
    }
    let d = a.dim();
    let rho = (0..d)
        .map(|i| Matrix::from_fn(d, d, |r, c| a.b2_basis(i, c)[r].clone()))
        .collect();
    let mut d_ops = Vec::with_capacity(d * d);
    let mut theta_ops = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            d_ops.push(Matrix::from_fn(d, d, |r, c| a.b3_basis(i, j, c)[r].clone()));
            theta_ops.push(Matrix::from_fn(d, d, |r, c| a.b3_basis(c, i, j)[r].clone()));
        }
    }
    Representation::new(d, d, rho, d_ops, theta_ops)
}

/// An action of an algebra on another Lie-Yamaguti algebra `V`: the
/// representation maps plus `V`'s own brackets. Validity is defined by the
/// semidirect product satisfying the LY axioms.
#[derive(Clone, Debug, PartialEq)]
pub struct LYAction {
    rep: Representation,
    target: LYAlgebra,
}

impl LYAction {
    pub fn new(rep: Representation, target: LYAlgebra) -> Result<Self> {
        if rep.module_dim() != target.dim() {
            return Err(Error::Dim(format!(
                "action module dimension {} != target algebra dimension {}",
                rep.module_dim(),
                target.dim()
            )));
        }
        Ok(LYAction { rep, target })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn target(&self) -> &LYAlgebra {
        &self.target
    }
}

/// The semidirect product structure on `T ⊕ V`:
///
/// ```text
/// [x+u, y+v]      = [x,y] + rho(x)v - rho(y)u + [u,v]_V
/// [x+u, y+v, z+w] = [x,y,z] + D(x,y)w + theta(y,z)u - theta(x,z)v + [u,v,w]_V
/// ```
///
/// Fails when the candidate tensors violate the construction-time index
/// skew-symmetry (which happens exactly when `D` is not skew); any deeper
/// invalidity surfaces as `verify_ly` failures on the result.
pub fn semidirect(t: &LYAlgebra, action: &LYAction) -> Result<LYAlgebra> {
    if action.rep.algebra_dim() != t.dim() {
        return Err(Error::Dim("action is over a different algebra dimension".into()));
    }
    let dt = t.dim();
    let dv = action.target.dim();
    let n = dt + dv;
    let r = &action.rep;
    let v_alg = &action.target;
    let mut binary = Tensor::zeros(vec![n, n, n]);
    let mut ternary = Tensor::zeros(vec![n, n, n, n]);

    let set_vec = |tensor: &mut Tensor, idx: &[usize], w: &[Q], off: usize| {
        for (k, val) in w.iter().enumerate() {
            if !val.is_zero() {
                let mut full = idx.to_vec();
                full.push(k + off);
                tensor.add_at(&full, val.clone());
            }
        }
    };

    for i in 0..n {
        for j in 0..n {
            match (i < dt, j < dt) {
                (true, true) => {
                    set_vec(&mut binary, &[i, j], t.b2_basis(i, j), 0);
                }
                (true, false) => {
                    let w = r.rho(i).column(j - dt);
                    set_vec(&mut binary, &[i, j], &w, dt);
                }
                (false, true) => {
                    let w = vec_neg(&r.rho(j).column(i - dt));
                    set_vec(&mut binary, &[i, j], &w, dt);
                }
                (false, false) => {
                    set_vec(&mut binary, &[i, j], v_alg.b2_basis(i - dt, j - dt), dt);
                }
            }
            for k in 0..n {
                match (i < dt, j < dt, k < dt) {
                    (true, true, true) => {
                        set_vec(&mut ternary, &[i, j, k], t.b3_basis(i, j, k), 0);
                    }
                    (true, true, false) => {
                        let w = r.d(i, j).column(k - dt);
                        set_vec(&mut ternary, &[i, j, k], &w, dt);
                    }
                    (false, true, true) => {
                        let w = r.theta(j, k).column(i - dt);
                        set_vec(&mut ternary, &[i, j, k], &w, dt);
                    }
                    (true, false, true) => {
                        let w = vec_neg(&r.theta(i, k).column(j - dt));
                        set_vec(&mut ternary, &[i, j, k], &w, dt);
                    }
                    (false, false, false) => {
                        set_vec(
                            &mut ternary,
                            &[i, j, k],
                            v_alg.b3_basis(i - dt, j - dt, k - dt),
                            dt,
                        );
                    }
                    // mixed tuples with two module slots vanish
                    _ => {}
                }
            }
        }
    }
    LYAlgebra::new(n, binary, ternary)
}

/// Action validity check: builds the semidirect product and runs the LY
/// axioms on it. A `D`-skewness failure (which makes the semidirect tensors
/// unrepresentable) is reported as a failing LY2 entry.
pub fn check_action(t: &LYAlgebra, action: &LYAction) -> Result<AxiomReport> {
    if action.rep.algebra_dim() != t.dim() {
        return Err(Error::Dim("action is over a different algebra dimension".into()));
    }
    let skew = verify_d_skew(action.rep());
    if !skew.all_pass() {
        let mut rb = ReportBuilder::new(WitnessMode::First);
        for mut c in skew.checks {
            c.label = "LY2(semidirect D-skew)".into();
            rb.push(c);
        }
        return Ok(rb.finish());
    }
    let sd = semidirect(t, action)?;
    Ok(verify_ly(&sd))
}
