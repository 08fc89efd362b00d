//! Dense multi-index coefficient arrays over [`Q`].
//!
//! Structure constants and bracket tables are stored as shaped tensors with
//! row-major (last index fastest) layout.

use crate::exactla::{vec_add_scaled, vec_is_zero};
use crate::{Error, Result, Q};
use num_traits::Zero;

/// Dense tensor with an arbitrary shape.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<Q>,
}

impl Tensor {
    pub fn zeros(shape: Vec<usize>) -> Self {
        let len = shape.iter().product();
        Tensor { shape, data: vec![Q::zero(); len] }
    }

    /// Builds a tensor from sparse `(index, value)` entries; omitted entries
    /// are zero. Later entries overwrite earlier ones.
    pub fn from_entries(shape: Vec<usize>, entries: &[(Vec<usize>, Q)]) -> Result<Self> {
        let mut t = Self::zeros(shape);
        for (idx, v) in entries {
            t.check_index(idx)?;
            let off = t.offset(idx);
            t.data[off] = v.clone();
        }
        Ok(t)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    fn check_index(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.shape.len() || idx.iter().zip(&self.shape).any(|(i, s)| i >= s) {
            return Err(Error::Dim(format!(
                "index {idx:?} out of bounds for tensor shape {:?}",
                self.shape
            )));
        }
        Ok(())
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut off = 0;
        for (i, s) in idx.iter().zip(&self.shape) {
            debug_assert!(i < s);
            off = off * s + i;
        }
        off
    }

    pub fn get(&self, idx: &[usize]) -> &Q {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Q) {
        let off = self.offset(idx);
        self.data[off] = v;
    }

    pub fn add_at(&mut self, idx: &[usize], v: Q) {
        let off = self.offset(idx);
        let cur = std::mem::replace(&mut self.data[off], Q::zero());
        self.data[off] = cur + v;
    }

    /// The slice obtained by fixing all indices except the last.
    ///
    /// For a structure-constant tensor `b[i][j][k]` this is the coefficient
    /// vector of the bracket of basis elements `i, j`.
    pub fn fiber(&self, prefix: &[usize]) -> &[Q] {
        debug_assert_eq!(prefix.len() + 1, self.shape.len());
        let last = *self.shape.last().unwrap();
        let mut off = 0;
        for (i, s) in prefix.iter().zip(&self.shape) {
            debug_assert!(i < s);
            off = off * s + i;
        }
        &self.data[off * last..(off + 1) * last]
    }

    /// Multilinear contraction against coordinate vectors on all input axes;
    /// returns the last-axis vector. `args.len()` must be `rank - 1`.
    pub fn contract(&self, args: &[&[Q]]) -> Vec<Q> {
        assert_eq!(args.len() + 1, self.shape.len());
        let last = *self.shape.last().unwrap();
        let mut out = vec![Q::zero(); last];
        self.contract_rec(args, 0, &Q::from_integer(1.into()), &mut out);
        out
    }

    fn contract_rec(&self, args: &[&[Q]], prefix_off: usize, factor: &Q, out: &mut [Q]) {
        if args.is_empty() {
            let last = out.len();
            vec_add_scaled(out, factor, &self.data[prefix_off * last..(prefix_off + 1) * last]);
            return;
        }
        let axis_len = self.shape[self.shape.len() - 1 - args.len()];
        for (i, c) in args[0].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let f = factor * c;
            self.contract_rec(&args[1..], prefix_off * axis_len + i, &f, out);
        }
    }

    /// Checks antisymmetry of the coefficient array in the two given axes,
    /// returning the first violating index if any.
    pub fn skew_violation(&self, axis_a: usize, axis_b: usize) -> Option<Vec<usize>> {
        let rank = self.shape.len();
        assert!(axis_a < rank && axis_b < rank && axis_a != axis_b);
        if self.data.is_empty() {
            return None;
        }
        let mut idx = vec![0usize; rank];
        loop {
            let mut swapped = idx.clone();
            swapped.swap(axis_a, axis_b);
            if !(self.get(&idx).clone() + self.get(&swapped).clone()).is_zero() {
                return Some(idx);
            }
            // advance the odometer
            let mut k = rank;
            loop {
                if k == 0 {
                    return None;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < self.shape[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

/// All index tuples of shape `dims`, in lexicographic order.
pub fn index_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &d in dims {
        let mut next = Vec::with_capacity(out.len() * d);
        for t in &out {
            for i in 0..d {
                let mut t2 = t.clone();
                t2.push(i);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// All tuples of `len` indices below `dim`, in lexicographic order.
pub fn cube_tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    index_tuples(&vec![dim; len])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn contract_matches_manual_expansion() {
        // t[i][j][k]: coefficient of e_k in a product of e_i, e_j
        let t = Tensor::from_entries(
            vec![2, 2, 2],
            &[(vec![0, 1, 0], q(1)), (vec![1, 0, 0], q(-1))],
        )
        .unwrap();
        // bilinear at (2 e0 + e1, 3 e1): 6 * t[0][1] + 3 * t[1][1] = 6 e0
        let x = [q(2), q(1)];
        let y = [q(0), q(3)];
        assert_eq!(t.contract(&[&x, &y]), vec![q(6), q(0)]);
    }

    #[test]
    fn skew_violation_finds_symmetric_entry() {
        let t = Tensor::from_entries(vec![2, 2, 1], &[(vec![0, 1, 0], q(1))]).unwrap();
        assert_eq!(t.skew_violation(0, 1), Some(vec![0, 1, 0]));
        let ok = Tensor::from_entries(
            vec![2, 2, 1],
            &[(vec![0, 1, 0], q(1)), (vec![1, 0, 0], q(-1))],
        )
        .unwrap();
        assert_eq!(ok.skew_violation(0, 1), None);
    }

    #[test]
    fn cube_tuples_are_lexicographic() {
        assert_eq!(
            cube_tuples(2, 2),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
    }
}
