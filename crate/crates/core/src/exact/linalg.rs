//! Dense exact linear algebra over a [`Scalar`] field.

use super::Scalar;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref<T: Scalar>(rows: &mut Vec<Vec<T>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..ncols {
                    let delta = factor.clone() * &rows[r][j];
                    rows[i][j] -= &delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    rref(&mut rows.to_vec()).len()
}

/// Determinant of a square matrix by Gaussian elimination.
pub fn determinant<T: Scalar>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = T::one();
    for c in 0..n {
        debug_assert_eq!(m[c].len(), n);
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return T::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone() / &m[c][c];
            for j in c..n {
                let delta = factor.clone() * &m[c][j];
                m[i][j] -= &delta;
            }
        }
    }
    det
}

/// A nonzero vector orthogonal to every row, when the rows have rank
/// `ncols - 1`.
pub fn normal_vector<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> Option<Vec<T>> {
    let mut reduced = rows.to_vec();
    let pivots = rref(&mut reduced);
    if pivots.len() + 1 != ncols {
        return None;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut normal = vec![T::zero(); ncols];
    normal[free] = T::one();
    for (row, &p) in reduced.iter().zip(&pivots) {
        normal[p] = -row[free].clone();
    }
    Some(normal)
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y)
}

/// Row space built one vector at a time; reports whether each new vector
/// was independent of the previous ones.
#[derive(Debug, Clone)]
pub struct IncrementalSpan<T> {
    ncols: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> IncrementalSpan<T> {
    pub fn new(ncols: usize) -> Self {
        IncrementalSpan {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone() / &row[*pivot];
            for (x, r) in v.iter_mut().zip(row) {
                let delta = factor.clone() * r;
                *x -= &delta;
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn insert(&mut self, v: &[T]) -> bool {
        let reduced = self.reduce(v);
        match reduced.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.rows.push((pivot, reduced));
                true
            }
            None => false,
        }
    }
}
