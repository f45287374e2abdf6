use std::collections::HashMap;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Integer, Rational};

/// Dense matrix over the rationals with exact elimination routines.
///
/// Rank and determinant run fraction-free (Bareiss) after clearing row
/// denominators, so intermediate values stay integral.
#[derive(Clone, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn from_rows(data: Vec<Vec<Rational>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols));
        RationalMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![vec![Rational::zero(); cols]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r][c] = v;
    }

    fn to_integer_rows(&self) -> Vec<Vec<Integer>> {
        self.data
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(Integer::one(), |acc, v| acc.lcm(v.denom()));
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect()
    }

    /// Rank by fraction-free elimination. Basis-independent and invariant
    /// under row scaling.
    pub fn rank(&self) -> usize {
        bareiss_pivots(self.to_integer_rows()).len()
    }

    /// Rank together with the pivot column indices in elimination order.
    pub fn rank_with_pivots(&self) -> (usize, Vec<usize>) {
        let pivots = bareiss_pivots(self.to_integer_rows());
        (pivots.len(), pivots)
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return Rational::one();
        }
        let mut scale = Rational::one();
        let int_rows: Vec<Vec<Integer>> = self
            .data
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(Integer::one(), |acc, v| acc.lcm(v.denom()));
                scale *= Rational::from_integer(lcm.clone());
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect();
        Rational::from_integer(bareiss_det(int_rows)) / scale
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !self.data[r][col].is_zero()) else {
                continue;
            };
            self.data.swap(row, p);
            let inv = self.data[row][col].recip();
            for c in col..self.cols {
                let v = &self.data[row][c] * &inv;
                self.data[row][c] = v;
            }
            for r in 0..self.rows {
                if r != row && !self.data[r][col].is_zero() {
                    let f = self.data[r][col].clone();
                    for c in col..self.cols {
                        let v = &self.data[r][c] - &(&f * &self.data[row][c]);
                        self.data[r][c] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    /// Basis of the right nullspace `{v : M v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.data[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Fraction-free Gaussian elimination (Bareiss), returning pivot columns.
fn bareiss_pivots(mut m: Vec<Vec<Integer>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev = Integer::one();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        // Prefer a small pivot to limit growth.
        let Some(p) = (row..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs())
        else {
            continue;
        };
        m.swap(row, p);
        for r in (row + 1)..rows {
            for c in (col + 1)..cols {
                let v = (&m[row][col] * &m[r][c] - &m[r][col] * &m[row][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = Integer::zero();
        }
        prev = m[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn bareiss_det(mut m: Vec<Vec<Integer>>) -> Integer {
    let n = m.len();
    let mut prev = Integer::one();
    let mut sign = 1i64;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Integer::zero();
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        for r in (k + 1)..n {
            for c in (k + 1)..n {
                let v = (&m[k][k] * &m[r][c] - &m[r][k] * &m[k][c]) / &prev;
                m[r][c] = v;
            }
            m[r][k] = Integer::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Exact rank of a sparse matrix given as rows of `(column, value)` pairs
/// sorted by column. Suited to the large, very sparse systems coming from
/// GKM conditions, where dense fraction-free elimination would blow up.
pub fn sparse_rank(rows: Vec<Vec<(u32, Rational)>>, _ncols: usize) -> usize {
    // echelon[leading column] = normalized row with that leading column
    let mut echelon: HashMap<u32, Vec<(u32, Rational)>> = HashMap::new();
    let mut rank = 0;
    for mut row in rows {
        loop {
            row.retain(|(_, v)| !v.is_zero());
            let Some(&(lead, ref lv)) = row.first() else {
                break;
            };
            match echelon.get(&lead) {
                None => {
                    let inv = lv.recip();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    echelon.insert(lead, row);
                    rank += 1;
                    break;
                }
                Some(er) => {
                    let factor = lv.clone();
                    row = sub_scaled(&row, er, &factor);
                }
            }
        }
    }
    rank
}

/// `a - factor * b` on sparse rows (both sorted by column).
fn sub_scaled(
    a: &[(u32, Rational)],
    b: &[(u32, Rational)],
    factor: &Rational,
) -> Vec<(u32, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ca, ref va)), Some(&(cb, ref vb))) => {
                if ca == cb {
                    let v = va - &(factor * vb);
                    if !v.is_zero() {
                        out.push((ca, v));
                    }
                    i += 1;
                    j += 1;
                } else if ca < cb {
                    out.push((ca, va.clone()));
                    i += 1;
                } else {
                    out.push((cb, -(factor * vb)));
                    j += 1;
                }
            }
            (Some(&(ca, ref va)), None) => {
                out.push((ca, va.clone()));
                i += 1;
            }
            (None, Some(&(cb, ref vb))) => {
                out.push((cb, -(factor * vb)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_det() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.det(), rat(0));
        let b = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(b.rank(), 2);
        assert_eq!(b.det(), rat(1));
        // 3x3 with known determinant -306
        let c = m(&[&[6, 1, 1], &[4, -2, 5], &[2, 8, 7]]);
        assert_eq!(c.det(), rat(-306));
    }

    #[test]
    fn rank_invariant_under_row_scaling() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        let b = RationalMatrix::from_rows(vec![
            vec![rat(1) / rat(7), rat(2) / rat(7), rat(3) / rat(7)],
            vec![rat(-4), rat(-5), rat(-6)],
        ]);
        assert_eq!(a.rank(), b.rank());
    }

    #[test]
    fn nullspace_simple() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        // check A v = 0
        assert!((&v[0] + &v[1]).is_zero());
        assert!((&v[1] + &v[2]).is_zero());
    }

    #[test]
    fn sparse_matches_dense() {
        let dense = m(&[&[1, 0, 2, 0], &[0, 3, 0, 0], &[1, 3, 2, 0], &[0, 0, 0, 0]]);
        let sparse: Vec<Vec<(u32, Rational)>> = (0..4)
            .map(|r| {
                (0..4)
                    .filter(|&c| !dense.get(r, c).is_zero())
                    .map(|c| (c as u32, dense.get(r, c).clone()))
                    .collect()
            })
            .collect();
        assert_eq!(sparse_rank(sparse, 4), dense.rank());
    }
}
