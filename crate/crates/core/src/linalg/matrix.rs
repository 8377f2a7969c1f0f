use std::fmt;
use std::ops::{Index, IndexMut};

use super::{LinalgError, Rational};

/// A dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Matrix, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                op: "new",
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged integer rows");
            entries.extend(r.as_ref().iter().map(|&v| Rational::from(v)));
        }
        Matrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Entries as `i64`, if every entry is an integer in range.
    pub fn to_int_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Rational::to_i64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "add",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "multiply",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product with panicking dimension check, for internal use where the
    /// shapes are known to agree.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix product shapes")
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    /// Reduced row echelon form; pivots are chosen left to right.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &f * &m[(r, j)];
                    m[(i, j)] -= &v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right null space, one basis vector per column.
    ///
    /// Each basis vector has a 1 in its own free coordinate and 0 in every
    /// other free coordinate, so selecting the free rows gives an identity.
    pub fn nullspace(&self) -> Nullspace {
        let ech = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = Rational::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                basis[(p, k)] = -&ech.reduced[(r, f)];
            }
        }
        Nullspace { basis, free }
    }

    /// Indices of standard basis vectors that extend the column space of
    /// `self` to the whole ambient space, chosen greedily from the left.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let ech = self.hstack(&Matrix::identity(self.rows)).echelon();
        ech.pivots
            .iter()
            .filter(|&&p| p >= self.cols)
            .map(|&p| p - self.cols)
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let ech = self.hstack(&Matrix::identity(n)).echelon();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| ech.reduced[(i, n + j)].clone()))
    }

    /// Leftmost nonzero column of each row, `None` for a zero row.
    pub fn leftmost_profile(&self) -> Vec<Option<usize>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().position(|e| !e.is_zero()))
            .collect()
    }

    /// Writes the plain-text format: `rows cols` then one line per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the plain-text format written by [`Matrix::to_text`].
    pub fn parse_text(text: &str) -> Result<Matrix, LinalgError> {
        let mut tokens = text
            .lines()
            .enumerate()
            .flat_map(|(ln, l)| l.split_whitespace().map(move |t| (ln + 1, t)));
        let mut header = |what: &str| -> Result<usize, LinalgError> {
            let (ln, t) = tokens.next().ok_or_else(|| LinalgError::Parse {
                line: 1,
                message: format!("missing {what}"),
            })?;
            t.parse().map_err(|_| LinalgError::Parse {
                line: ln,
                message: format!("bad {what} {t:?}"),
            })
        };
        let rows = header("row count")?;
        let cols = header("column count")?;
        let mut entries = Vec::with_capacity(rows * cols);
        let mut last_line = 1;
        for (ln, t) in tokens {
            last_line = ln;
            let v: Rational = t.parse().map_err(|_| LinalgError::Parse {
                line: ln,
                message: format!("bad entry {t:?}"),
            })?;
            entries.push(v);
        }
        if entries.len() != rows * cols {
            return Err(LinalgError::Parse {
                line: last_line,
                message: format!("expected {} entries, found {}", rows * cols, entries.len()),
            });
        }
        Matrix::new(rows, cols, entries)
    }

    /// Pretty form with right-aligned columns.
    pub fn to_aligned(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Null space basis with the free coordinates it is normalised on.
#[derive(Debug, Clone)]
pub struct Nullspace {
    pub basis: Matrix,
    pub free: Vec<usize>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self.to_aligned())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_aligned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_int_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        assert_eq!(Matrix::identity(3).mul(&m), m);
        assert_eq!(m.mul(&Matrix::identity(3)), m);
    }

    #[test]
    fn chain_zeta_inverts_to_mobius() {
        let zeta = Matrix::from_int_rows(&[[1, 1, 1], [0, 1, 1], [0, 0, 1]]);
        let mobius = zeta.invert().unwrap();
        assert_eq!(
            mobius,
            Matrix::from_int_rows(&[[1, -1, 0], [0, 1, -1], [0, 0, 1]])
        );
        assert!(zeta.mul(&mobius).is_identity());
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = Matrix::from_int_rows(&[[1, 1], [1, 1]]);
        assert_eq!(m.invert(), Err(LinalgError::Singular));
    }

    #[test]
    fn mismatched_product_is_an_error() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(
            a.try_mul(&a),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn nullspace_is_normalised_on_free_rows() {
        let m = Matrix::from_int_rows(&[[1, 2, 0, 1], [0, 0, 1, 3]]);
        let ns = m.nullspace();
        assert_eq!(ns.free, vec![1, 3]);
        assert!(m.mul(&ns.basis).is_zero());
        assert!(ns.basis.select_rows(&ns.free).is_identity());
    }

    #[test]
    fn complement_spans_with_column_space() {
        let m = Matrix::from_int_rows(&[[1], [1], [0]]);
        let comp = m.complement_coordinates();
        assert_eq!(comp, vec![0, 2]);
    }

    #[test]
    fn text_format_roundtrips() {
        let m = Matrix::new(
            2,
            2,
            vec![
                Rational::from(-3),
                Rational::new(1, 2),
                Rational::zero(),
                Rational::from(7),
            ],
        )
        .unwrap();
        let text = m.to_text();
        assert_eq!(text, "2 2\n-3 1/2\n0 7\n");
        assert_eq!(Matrix::parse_text(&text).unwrap(), m);
    }

    #[test]
    fn text_parse_reports_line() {
        let err = Matrix::parse_text("2 2\n1 2\n3 x\n").unwrap_err();
        assert_eq!(
            err,
            LinalgError::Parse {
                line: 3,
                message: "bad entry \"x\"".into()
            }
        );
    }
}
