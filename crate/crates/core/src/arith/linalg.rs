//! Linear solving over the coefficient field F.

use super::coeff::CoeffElem;

/// A dense matrix over F, row major.
#[derive(Clone, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<CoeffElem>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![CoeffElem::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<CoeffElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &CoeffElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CoeffElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, v: &[CoeffElem]) -> Vec<CoeffElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = CoeffElem::zero();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc = &acc + &(self.at(i, j) * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Basis of the right nullspace {v : M v = 0}, each vector normalized so
/// its last nonzero entry is 1. The basis is empty when the kernel is {0}.
pub fn solve_nullspace(m: &Matrix) -> Vec<Vec<CoeffElem>> {
    let mut a = m.clone();
    let rows = a.rows;
    let cols = a.cols;
    // forward elimination with column pivoting bookkeeping
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        // find pivot
        let mut piv = None;
        for i in r..rows {
            if !a.at(i, c).is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(p) = piv else { continue };
        // swap rows p, r
        if p != r {
            for j in 0..cols {
                let tmp = a.at(p, j).clone();
                a.set(p, j, a.at(r, j).clone());
                a.set(r, j, tmp);
            }
        }
        // normalize pivot row
        let inv = a.at(r, c).recip().expect("nonzero pivot");
        for j in c..cols {
            let v = a.at(r, j) * &inv;
            a.set(r, j, v);
        }
        // eliminate below and above
        for i in 0..rows {
            if i == r || a.at(i, c).is_zero() {
                continue;
            }
            let f = a.at(i, c).clone();
            for j in c..cols {
                let v = a.at(i, j) - &(&f * a.at(r, j));
                a.set(i, j, v);
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    // free columns give the basis
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![CoeffElem::zero(); cols];
        v[free] = CoeffElem::one();
        for (ri, pc) in pivot_cols.iter().enumerate() {
            v[*pc] = -a.at(ri, free);
        }
        // normalize: last nonzero entry 1
        if let Some(last) = v.iter().rposition(|x| !x.is_zero()) {
            let inv = v[last].recip().expect("nonzero entry");
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ParamPoly;

    fn int(n: i64) -> CoeffElem {
        CoeffElem::from_integer(n)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let mut m = Matrix::new(3, 3);
        for i in 0..3 {
            m.set(i, i, int(1));
        }
        assert!(solve_nullspace(&m).is_empty());
    }

    #[test]
    fn symmetric_pair() {
        // [a, a] with a = x + 1 -> basis {(-1, 1)}
        let a = CoeffElem::from_poly(&ParamPoly::var(0) + &ParamPoly::one());
        let m = Matrix::from_rows(vec![vec![a.clone(), a]]);
        let basis = solve_nullspace(&m);
        assert_eq!(basis, vec![vec![-&int(1), int(1)]]);
    }

    #[test]
    fn rank_nullity_and_kernel_property() {
        // 2x4 rank-2 matrix over Q
        let m = Matrix::from_rows(vec![
            vec![int(1), int(2), int(3), int(4)],
            vec![int(0), int(1), int(1), int(1)],
        ]);
        let basis = solve_nullspace(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }
}
