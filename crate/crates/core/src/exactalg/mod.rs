//! Exact linear algebra over the integers and rationals.
//!
//! Determinant and rank use fraction-free (Bareiss) elimination; null spaces
//! come from a rational reduced row echelon form with first-nonzero pivoting,
//! so bases are reproducible. Nothing here touches floating point.

mod matrix;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use matrix::Matrix;

use crate::scalar::{extended_gcd, ExactInt};

/// A vector of reduced rationals (`Ratio` keeps every entry normalized).
pub type RationalVector<T> = Vec<Ratio<T>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactAlgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}

pub fn determinant<T: ExactInt>(m: &Matrix<T>) -> Result<T, ExactAlgError> {
    if !m.is_square() {
        return Err(ExactAlgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = v / prev.clone();
            }
            a[(i, k)] = T::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Rank over the rationals.
pub fn rank<T: ExactInt>(m: &Matrix<T>) -> usize {
    let mut a = m.clone();
    let mut r = 0;
    let mut prev = T::one();
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        for i in r + 1..a.rows() {
            for j in c + 1..a.cols() {
                let v = a[(r, c)].clone() * a[(i, j)].clone() - a[(i, c)].clone() * a[(r, j)].clone();
                a[(i, j)] = v / prev.clone();
            }
            a[(i, c)] = T::zero();
        }
        prev = a[(r, c)].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form over the rationals. Returns the nonzero rows and
/// the pivot column of each.
pub fn rref<T: ExactInt>(m: &Matrix<T>) -> (Vec<RationalVector<T>>, Vec<usize>) {
    let mut a: Vec<RationalVector<T>> = (0..m.rows())
        .map(|i| m.row(i).iter().cloned().map(Ratio::from_integer).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = x.clone() - p.clone() * f.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

fn free_columns(cols: usize, pivots: &[usize]) -> Vec<usize> {
    (0..cols).filter(|c| !pivots.contains(c)).collect()
}

/// Basis of the right null space. One vector per free column of the RREF,
/// with that free coordinate set to 1 and the other free coordinates 0.
pub fn null_space_basis<T: ExactInt>(m: &Matrix<T>) -> Vec<RationalVector<T>> {
    let (r, pivots) = rref(m);
    free_columns(m.cols(), &pivots)
        .into_iter()
        .map(|f| {
            let mut v = vec![Ratio::zero(); m.cols()];
            v[f] = Ratio::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to the primitive integer vector on its line whose
/// first nonzero entry is positive.
pub fn primitive_integer_vector<T: ExactInt>(v: &[Ratio<T>]) -> Result<Vec<T>, ExactAlgError> {
    if v.iter().all(Zero::is_zero) {
        return Err(ExactAlgError::ZeroVector);
    }
    let lcm = v.iter().fold(T::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<T> = v
        .iter()
        .map(|x| x.numer().clone() * (lcm.clone() / x.denom().clone()))
        .collect();
    Ok(make_primitive(scaled))
}

/// Divides an integer vector by the gcd of its entries and flips it so the
/// first nonzero entry is positive. The zero vector is returned unchanged.
pub fn make_primitive<T: ExactInt>(v: Vec<T>) -> Vec<T> {
    let g = v.iter().fold(T::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let flip = v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
    v.into_iter()
        .map(|x| {
            let q = x / g.clone();
            if flip {
                -q
            } else {
                q
            }
        })
        .collect()
}

/// All nonzero integer vectors `u` with `m*u = 0` and `max |u_i| <= bound`.
///
/// The free coordinates of the RREF parameterize the kernel; they are assigned
/// by backtracking, and each pivot coordinate is checked for integrality and
/// bound as soon as the last free coordinate it depends on is fixed.
pub fn bounded_integer_kernel<T: ExactInt>(m: &Matrix<T>, bound: u64) -> Vec<Vec<T>> {
    let (r, pivots) = rref(m);
    let free = free_columns(m.cols(), &pivots);
    if free.is_empty() {
        return Vec::new();
    }
    // For each free position k, the pivot rows whose last dependency is free[k].
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); free.len()];
    for (row_idx, row) in r.iter().enumerate() {
        if let Some(k) = (0..free.len()).rev().find(|&k| !row[free[k]].is_zero()) {
            checks[k].push(row_idx);
        }
    }
    let bound_t = T::from_unsigned(bound);
    let mut search = KernelSearch {
        rref: &r,
        pivots: &pivots,
        free: &free,
        checks: &checks,
        bound: bound_t,
        assignment: vec![T::zero(); m.cols()],
        out: Vec::new(),
    };
    search.descend(0);
    search.out
}

struct KernelSearch<'a, T> {
    rref: &'a [RationalVector<T>],
    pivots: &'a [usize],
    free: &'a [usize],
    checks: &'a [Vec<usize>],
    bound: T,
    assignment: Vec<T>,
    out: Vec<Vec<T>>,
}

impl<T: ExactInt> KernelSearch<'_, T> {
    fn descend(&mut self, k: usize) {
        if k == self.free.len() {
            if self.assignment.iter().any(|x| !x.is_zero()) {
                self.out.push(self.assignment.clone());
            }
            return;
        }
        let mut value = -self.bound.clone();
        while value <= self.bound {
            self.assignment[self.free[k]] = value.clone();
            if self.settle_pivots(k) {
                self.descend(k + 1);
            }
            value = value + T::one();
        }
        self.assignment[self.free[k]] = T::zero();
    }

    fn settle_pivots(&mut self, k: usize) -> bool {
        for &row_idx in &self.checks[k] {
            let row = &self.rref[row_idx];
            let mut acc = Ratio::zero();
            for &f in &self.free[..=k] {
                if !row[f].is_zero() {
                    acc = acc - row[f].clone() * Ratio::from_integer(self.assignment[f].clone());
                }
            }
            if !acc.is_integer() || acc.numer().abs() > self.bound {
                return false;
            }
            self.assignment[self.pivots[row_idx]] = acc.to_integer();
        }
        true
    }
}

/// A basis of the integer lattice `{u in Z^n : m*u = 0}`.
///
/// Unimodular column operations bring `m` to column echelon form while the same
/// operations are applied to an identity matrix; the transformed identity
/// columns sitting over zero columns span the kernel lattice. The basis is then
/// put in row Hermite form so the result is canonical.
pub fn integer_kernel_basis<T: ExactInt>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let cols = m.cols();
    // Work on transposes so column operations become row operations on Vec rows.
    let mut a: Vec<Vec<T>> = (0..cols).map(|j| m.column(j)).collect();
    let mut u: Vec<Vec<T>> = Matrix::<T>::identity(cols).to_rows();
    let mut piv = 0;
    for row in 0..m.rows() {
        if piv == cols {
            break;
        }
        for j in piv + 1..cols {
            if a[j][row].is_zero() {
                continue;
            }
            if a[piv][row].is_zero() {
                a.swap(piv, j);
                u.swap(piv, j);
                continue;
            }
            let (g, x, y) = extended_gcd(&a[piv][row], &a[j][row]);
            let p = a[piv][row].clone() / g.clone();
            let q = a[j][row].clone() / g;
            combine(&mut a, piv, j, &x, &y, &p, &q);
            combine(&mut u, piv, j, &x, &y, &p, &q);
        }
        if !a[piv][row].is_zero() {
            piv += 1;
        }
    }
    hermite_rows(u.split_off(piv))
}

/// Replaces (r_i, r_j) by (x r_i + y r_j, q r_i - p r_j); unimodular when
/// x p + y q = 1.
fn combine<T: ExactInt>(rows: &mut [Vec<T>], i: usize, j: usize, x: &T, y: &T, p: &T, q: &T) {
    for k in 0..rows[i].len() {
        let ri = rows[i][k].clone();
        let rj = rows[j][k].clone();
        rows[i][k] = x.clone() * ri.clone() + y.clone() * rj.clone();
        rows[j][k] = q.clone() * ri - p.clone() * rj;
    }
}

/// Row Hermite normal form of a full-row-rank integer matrix given as rows.
fn hermite_rows<T: ExactInt>(mut rows: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let (g, x, y) = extended_gcd(&rows[r][c], &rows[i][c]);
            let p = rows[r][c].clone() / g.clone();
            let q = rows[i][c].clone() / g;
            combine(&mut rows, r, i, &x, &y, &p, &q);
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().take(r) {
            let f = row[c].div_floor(&pivot_row[c]);
            if !f.is_zero() {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        r += 1;
    }
    rows
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_integer::Integer;

    use super::*;

    fn q(n: i64, d: i64) -> Ratio<BigInt> {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_determinants() {
        let id = Matrix::<BigInt>::identity(2);
        assert_eq!(determinant(&id).unwrap(), BigInt::from(1));
        let m = Matrix::<BigInt>::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(determinant(&m).unwrap(), BigInt::from(-2));
        let needs_swap = Matrix::<i64>::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&needs_swap).unwrap(), -1);
        let rect = Matrix::<i64>::zeros(2, 3);
        assert_eq!(determinant(&rect), Err(ExactAlgError::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&Matrix::<i64>::zeros(3, 3)), 0);
        assert_eq!(rank(&Matrix::<i64>::identity(4)), 4);
        let m = Matrix::<i64>::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let wide = Matrix::<i64>::from_i64_rows(&[&[0, 0, 1, 2], &[0, 0, 2, 4], &[0, 1, 0, 0]]);
        assert_eq!(rank(&wide), 2);
    }

    #[test]
    fn null_space_of_rank_one() {
        let m = Matrix::<BigInt>::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let basis = null_space_basis(&m);
        assert_eq!(basis, vec![vec![q(-1, 1), q(1, 1)]]);
        assert_eq!(primitive_integer_vector(&basis[0]).unwrap(), ints(&[1, -1]));
        assert!(null_space_basis(&Matrix::<BigInt>::identity(3)).is_empty());
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive_integer_vector(&[q(1, 2), q(-1, 3)]).unwrap(), ints(&[3, -2]));
        assert_eq!(primitive_integer_vector(&[q(2, 1), q(-2, 1)]).unwrap(), ints(&[1, -1]));
        assert_eq!(primitive_integer_vector(&[q(-1, 1), q(4, 1)]).unwrap(), ints(&[1, -4]));
        assert_eq!(
            primitive_integer_vector(&[q(0, 1), q(0, 1)]),
            Err(ExactAlgError::ZeroVector)
        );
    }

    #[test]
    fn bounded_kernel_small() {
        let m = Matrix::<i64>::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let mut k = bounded_integer_kernel(&m, 2);
        k.sort();
        assert_eq!(k, vec![vec![-2, 2], vec![-1, 1], vec![1, -1], vec![2, -2]]);
        assert!(bounded_integer_kernel(&Matrix::<i64>::identity(3), 5).is_empty());
    }

    #[test]
    fn bounded_kernel_respects_fractional_pivots() {
        // x0 = -(x1 + x2)/2, so only assignments with x1 + x2 even survive.
        let m = Matrix::<i64>::from_i64_rows(&[&[2, 1, 1]]);
        let k = bounded_integer_kernel(&m, 1);
        for u in &k {
            assert_eq!(2 * u[0] + u[1] + u[2], 0);
        }
        let mut k = k;
        k.sort();
        assert_eq!(k, vec![vec![-1, 1, 1], vec![0, -1, 1], vec![0, 1, -1], vec![1, -1, -1]]);
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // Rational kernel direction (1, 1, -1) scaled wrongly would miss it; the
        // integer basis must contain a primitive generator.
        let m = Matrix::<i64>::from_i64_rows(&[&[2, 2, 4], &[1, 3, 4]]);
        let b = integer_kernel_basis(&m);
        assert_eq!(b, vec![vec![1, 1, -1]]);
        // Sublattice trap: kernel of [2 4] over Z is generated by (2, -1).
        let m = Matrix::<i64>::from_i64_rows(&[&[2, 4]]);
        assert_eq!(integer_kernel_basis(&m), vec![vec![2, -1]]);
        assert!(integer_kernel_basis(&Matrix::<i64>::identity(3)).is_empty());
    }

    #[test]
    fn integer_kernel_rank_two() {
        let m = Matrix::<i64>::from_i64_rows(&[&[1, 2, 3, 4]]);
        let b = integer_kernel_basis(&m);
        assert_eq!(b.len(), 3);
        for v in &b {
            assert_eq!(m.mul_vec(v).unwrap(), vec![0]);
        }
        // Unimodularity check: the basis together with a vector mapping to 1
        // spans Z^4, i.e. the 3x3 minors of the basis have gcd 1.
        let bm = Matrix::from_rows(b).unwrap();
        let mut g = 0i64;
        for skip in 0..4 {
            let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
            g = g.gcd(&determinant(&bm.select_columns(&cols)).unwrap());
        }
        assert_eq!(g, 1);
    }
}
