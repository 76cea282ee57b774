//! Exact rational scalars, dense matrices and row subspaces.
//!
//! Vectors are row vectors throughout the crate: a matrix acts on the right,
//! `v ↦ v·M`, which matches the right actions used for algebra and module
//! multiplication. [`kernel`] is the one exception and follows the usual
//! column convention `{v | M·v = 0}`; use [`Matrix::left_kernel`] for the row
//! convention.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A dense row vector of rationals.
pub type Vector = Vec<Rational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("invalid rational {0:?}")]
    BadRational(String),
}

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (surrounding whitespace allowed). The result is
/// normalised, so `"2/4"` parses to `1/2`.
pub fn parse_rational(s: &str) -> Result<Rational, LinError> {
    let bad = || LinError::BadRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical string form: `"p/q"` with `q > 0`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `a += c·b`
pub fn axpy(a: &mut [Rational], c: &Rational, b: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Serde adapter storing a rational as its canonical string.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to describe 0-row matrices.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self, LinError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinError::Ragged { row: i, expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Integer literal matrix, mostly for tests and catalog data.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Matrix::from_rows(cols, rows).expect("ragged integer literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [Rational] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "incompatible shapes for product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let src = other.row(k);
                let dst = out.row_mut(i);
                for (d, b) in dst.iter_mut().zip(src) {
                    if !b.is_zero() {
                        *d += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Row vector times matrix: `v·M`.
    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.rows, "vector length must equal row count");
        let mut out = zero_vector(self.cols);
        for (i, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.row(i));
        }
        out
    }

    /// Matrix times column vector: `M·v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for x in m.row_mut(r) {
                *x *= &inv;
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                axpy(m.row_mut(i), &-f, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Null space `{v | M·v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let n = self.cols;
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..n).filter(|&j| !is_pivot[j]) {
            let mut v = zero_vector(n);
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        Subspace::span(n, &basis)
    }

    /// Left null space `{v | v·M = 0}`.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().kernel()
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Rational, LinError> {
        if !self.is_square() {
            return Err(LinError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // Clear denominators row by row: det(M) = det(D·M) / prod(d_i).
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let l = self.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            a.push(self.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect());
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(Rational::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = sign * &a[n - 1][n - 1];
        Ok(Rational::new(d, scale))
    }

    pub fn inverse(&self) -> Result<Matrix, LinError> {
        if !self.is_square() {
            return Err(LinError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| format_vector(self.row(i))).collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Matrix, LinError> {
        let cols = rows.first().map_or(0, Vec::len);
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vector, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(cols, parsed)
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        Matrix::from_strings(&rows).map_err(serde::de::Error::custom)
    }
}

pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}

pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

pub fn det(m: &Matrix) -> Result<Rational, LinError> {
    m.det()
}

/// A linear subspace of `Q^n` stored by its canonical basis (the nonzero rows
/// of a reduced row-echelon matrix). Equality of subspaces is equality of
/// canonical bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient_dim, self.basis)
    }
}

/// Result of [`subspace_relate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceRelation {
    pub contains: bool,
    pub equal: bool,
    pub sum: Subspace,
    pub intersection: Subspace,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::zeros(0, n), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Matrix::identity(n), pivots: (0..n).collect() }
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span(n: usize, vectors: &[Vector]) -> Self {
        let m = Matrix::from_rows(n, vectors.to_vec()).expect("vector length must match ambient dimension");
        Subspace::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let k = pivots.len();
        let rows = (0..k).map(|i| r.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(m.cols(), rows).expect("rref rows");
        Subspace { ambient_dim: m.cols(), basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Re-derives the canonical form; a no-op on valid subspaces.
    pub fn canonicalize(&self) -> Subspace {
        Subspace::row_space(&self.basis)
    }

    /// `v` minus its component along the canonical basis; zero iff `v` lies in
    /// the subspace. The remainder vanishes on every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.ambient_dim);
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if !c.is_zero() {
                axpy(&mut r, &-c, self.basis.row(i));
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinError::AmbientMismatch { left: self.ambient_dim, right: other.ambient_dim });
        }
        Ok(())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinError> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(other.basis.row(i))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_ambient(other)?;
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Ok(Subspace::span(self.ambient_dim, &rows))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_ambient(other)?;
        // (x, y) with x·A + y·B = 0 gives x·A in both row spaces.
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        let stacked = Matrix::from_rows(self.ambient_dim, rows).expect("same ambient");
        let relations = stacked.left_kernel();
        let k = self.dim();
        let vectors: Vec<Vector> =
            relations.basis_vectors().into_iter().map(|rel| self.basis.apply(&rel[..k])).collect();
        Ok(Subspace::span(self.ambient_dim, &vectors))
    }

    /// Image of the subspace under `v ↦ v·M`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::row_space(&self.basis.mul(m))
    }

    /// Vectors perpendicular to the whole subspace for the bilinear form
    /// `⟨u, v⟩ = u·G·vᵀ`.
    pub fn orthogonal_complement(&self, gram: &Matrix) -> Subspace {
        let g_nt = gram.mul(&self.basis.transpose());
        g_nt.left_kernel()
    }
}

pub fn subspace_relate(a: &Subspace, b: &Subspace) -> Result<SubspaceRelation, LinError> {
    let contains = a.contains(b)?;
    let equal = a == b;
    Ok(SubspaceRelation { contains, equal, sum: a.sum(b)?, intersection: a.intersection(b)? })
}

/// Checks that the subspaces have trivial pairwise overlap in the strong sense
/// `dim(Σ S_i) = Σ dim(S_i)`, and returns the sum.
pub fn direct_sum_of(n: usize, parts: &[&Subspace]) -> (bool, Subspace) {
    let mut rows = Vec::new();
    let mut total = 0;
    for p in parts {
        rows.extend(p.basis_vectors());
        total += p.dim();
    }
    let s = Subspace::span(n, &rows);
    (s.dim() == total, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        assert_eq!(rref(&Matrix::from_ints(&[&[1, 2], &[2, 4]])), Matrix::from_ints(&[&[1, 2], &[0, 0]]));
        assert_eq!(rref(&Matrix::identity(3)), Matrix::identity(3));
        assert_eq!(rref(&Matrix::from_ints(&[&[0, 1], &[1, 0]])), Matrix::identity(2));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::zeros(2, 2)).is_full());
        assert!(kernel(&Matrix::identity(3)).is_zero());
        let m = Matrix::from_ints(&[&[1, 1, 1]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(is_zero_vector(&m.mul_vec(&v)));
        }
        assert!(k.contains_vector(&[int(1), int(-1), int(0)]));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&Matrix::identity(4)).unwrap(), int(1));
        assert_eq!(det(&Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap(), int(-1));
        assert_eq!(det(&Matrix::zeros(2, 3)), Err(LinError::NonSquare { rows: 2, cols: 3 }));
        assert_eq!(det(&Matrix::zeros(0, 0)).unwrap(), int(1));
    }

    #[test]
    fn det_with_fractions() {
        // I + (alpha/2)(J - I) on 3 points, alpha = 1/2; cofactor expansion of
        // [[1,q,q],[q,1,q],[q,q,1]] gives 1 - 3q^2 + 2q^3 with q = 1/4.
        let q = rat(1, 4);
        let one = int(1);
        let m = Matrix::from_rows(
            3,
            vec![
                vec![one.clone(), q.clone(), q.clone()],
                vec![q.clone(), one.clone(), q.clone()],
                vec![q.clone(), q.clone(), one.clone()],
            ],
        )
        .unwrap();
        let cofactor = &one - int(3) * &q * &q + int(2) * &q * &q * &q;
        assert_eq!(cofactor, rat(27, 32));
        assert_eq!(det(&m).unwrap(), rat(27, 32));
    }

    #[test]
    fn relate_examples() {
        let e1 = Subspace::span(2, &[vec![int(1), int(0)]]);
        let e2 = Subspace::span(2, &[vec![int(0), int(1)]]);
        let r = subspace_relate(&e1, &e2).unwrap();
        assert!(r.sum.is_full() && r.intersection.is_zero() && !r.contains && !r.equal);

        let r = subspace_relate(&e1, &e1).unwrap();
        assert!(r.contains && r.equal && r.sum == e1 && r.intersection == e1);

        let a = Subspace::span(3, &[vec![int(1), int(1), int(0)]]);
        let b = Subspace::span(3, &[vec![int(0), int(1), int(1)]]);
        let r = subspace_relate(&a, &b).unwrap();
        assert!(r.intersection.is_zero());
        assert_eq!(r.sum.dim(), 2);

        let c = Subspace::zero(4);
        assert_eq!(subspace_relate(&a, &c).unwrap_err(), LinError::AmbientMismatch { left: 3, right: 4 });
    }

    #[test]
    fn intersection_nontrivial() {
        let a = Subspace::span(3, &[vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]]);
        let b = Subspace::span(3, &[vec![int(0), int(1), int(0)], vec![int(0), int(0), int(1)]]);
        let i = a.intersection(&b).unwrap();
        assert_eq!(i, Subspace::span(3, &[vec![int(0), int(1), int(0)]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse(), Err(LinError::Singular));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("2/-4").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(5)), "5");
    }

    #[test]
    fn orthogonal_complement_standard_form() {
        let n = Subspace::span(3, &[vec![int(1), int(1), int(0)]]);
        let c = n.orthogonal_complement(&Matrix::identity(3));
        assert_eq!(c.dim(), 2);
        assert!(c.contains_vector(&[int(1), int(-1), int(0)]));
        assert!(c.contains_vector(&[int(0), int(0), int(1)]));
    }
}
