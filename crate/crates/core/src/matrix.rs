//! Dense matrices over an arbitrary semiring.

use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{ElementText, Semiring};

/// A dense row-major matrix with entries in `ring`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S: Semiring> {
    ring: S,
    rows: usize,
    cols: usize,
    data: Vec<S::Elem>,
}

impl<S: Semiring> Matrix<S> {
    pub fn new(ring: S, rows: usize, cols: usize, data: Vec<S::Elem>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!(
                "matrix dimensions must be positive, got {rows}×{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}×{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        for x in &data {
            ring.check(x)?;
        }
        Ok(Self {
            ring,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(ring: S, rows: Vec<Vec<S::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::Shape(format!(
                "row {bad} has {} entries, expected {c}",
                rows[bad].len()
            )));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn filled(ring: S, rows: usize, cols: usize, value: S::Elem) -> Result<Self> {
        let data = vec![value; rows * cols];
        Self::new(ring, rows, cols, data)
    }

    /// All entries `0̸`.
    pub fn zeros(ring: S, rows: usize, cols: usize) -> Result<Self> {
        let z = ring.zero();
        Self::filled(ring, rows, cols, z)
    }

    /// `1̄` on the diagonal, `0̸` elsewhere.
    pub fn identity(ring: S, n: usize) -> Result<Self> {
        let mut m = Self::zeros(ring, n, n)?;
        let one = m.ring.one();
        for i in 0..n {
            m.data[i * n + i] = one.clone();
        }
        Ok(m)
    }

    /// Builds a matrix by evaluating `f(i, j)`; entries are carrier-checked.
    pub fn from_fn(
        ring: S,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> S::Elem,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(ring, rows, cols, data)
    }

    pub fn ring(&self) -> &S {
        &self.ring
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

    pub fn get(&self, i: usize, j: usize) -> &S::Elem {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S::Elem) -> Result<()> {
        if i >= self.rows || j >= self.cols {
            return Err(Error::Shape(format!(
                "index ({i}, {j}) out of bounds for {}×{}",
                self.rows, self.cols
            )));
        }
        self.ring.check(&value)?;
        self.data[i * self.cols + j] = value;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[S::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S::Elem>> {
        self.data.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[S::Elem] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.data[i * self.cols + j].clone());
            }
        }
        Self {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Entrywise image under `f` into another ring. `f` must map carrier
    /// elements to carrier elements.
    pub fn map<T: Semiring>(&self, ring: T, f: impl Fn(&S::Elem) -> T::Elem) -> Matrix<T> {
        let data: Vec<T::Elem> = self.data.iter().map(f).collect();
        debug_assert!(data.iter().all(|x| ring.contains(x)));
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// First entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    fn ensure_compatible(&self, other: &Self) -> Result<()> {
        self.ring.ensure_same(&other.ring)
    }

    /// Entrywise `⊕`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot add {}×{} and {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// `C[i][j] = ⊕_k A[i][k] ⊙ B[k][j]`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ensure_compatible(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        let (n, m) = (self.rows, other.cols);
        let mut data = vec![ring.zero(); n * m];
        for i in 0..n {
            let out = &mut data[i * m..(i + 1) * m];
            for (k, a) in self.row(i).iter().enumerate() {
                if ring.is_zero(a) {
                    continue;
                }
                for (c, b) in out.iter_mut().zip(other.row(k)) {
                    *c = ring.add(c, &ring.mul(a, b));
                }
            }
        }
        Ok(Self {
            ring: ring.clone(),
            rows: n,
            cols: m,
            data,
        })
    }

    /// Kleene star `H* = I ⊕ H ⊕ H² ⊕ …`.
    ///
    /// Partial sums are accumulated as `S_{k+1} = I ⊕ H ⊙ S_k`. If they have
    /// not settled by exponent `n − 1`, the term `S_n` is the certificate:
    /// any entry where `S_n ≠ S_{n−1}` is reported as a divergence.
    pub fn star(&self) -> Result<Self> {
        self.star_counted().map(|(m, _)| m)
    }

    /// [`Matrix::star`] together with the number of products formed.
    pub fn star_counted(&self) -> Result<(Self, usize)> {
        self.ring.require_idempotent("Kleene star")?;
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "Kleene star needs a square matrix, got {}×{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let identity = Self::identity(self.ring.clone(), n)?;
        let mut acc = identity.clone();
        for k in 1..=n {
            let next = identity.add(&self.mul(&acc)?)?;
            if next == acc {
                return Ok((acc, k));
            }
            if k == n {
                let (row, col) = next
                    .first_difference(&acc)
                    .expect("matrices differ");
                return Err(Error::Divergence {
                    row,
                    col,
                    bound: None,
                });
            }
            acc = next;
        }
        unreachable!("loop returns at k == n")
    }
}

impl<S: ElementText> Matrix<S> {
    /// Parses rows of whitespace-separated entries. Bracketed entries such
    /// as `[1, 3]` count as one token. Blank lines and `#` comments are
    /// skipped.
    pub fn parse(ring: S, text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = split_tokens(line)
                .map_err(|m| Error::parse(idx + 1, m))?
                .into_iter()
                .map(|tok| {
                    ring.parse_elem(tok)
                        .map_err(|e| Error::parse(idx + 1, e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(first) = rows.first().map(Vec::len) {
                if row.len() != first {
                    return Err(Error::parse(
                        idx + 1,
                        format!("expected {first} entries, found {}", row.len()),
                    ));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::parse(0, "empty matrix"));
        }
        Self::from_rows(ring, rows)
    }
}

/// Whitespace tokenizer that keeps `[...]` groups together.
pub(crate) fn split_tokens(line: &str) -> std::result::Result<Vec<&str>, String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match ch {
            '[' => {
                depth += 1;
                start.get_or_insert(i);
            }
            ']' => {
                depth = depth.checked_sub(1).ok_or("unbalanced ']'")?;
            }
            c if c.is_whitespace() && depth == 0 => {
                if let Some(s) = start.take() {
                    out.push(&line[s..i]);
                }
            }
            _ => {
                start.get_or_insert(i);
            }
        }
    }
    if depth != 0 {
        return Err("unbalanced '['".into());
    }
    if let Some(s) = start {
        out.push(&line[s..]);
    }
    Ok(out)
}

impl<S: ElementText> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.data.chunks(self.cols) {
            let cells: Vec<String> = row.iter().map(|x| self.ring.format_elem(x)).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::IntervalSemiring;
    use crate::semiring::ScalarRing::{self, *};

    const INF: f64 = f64::INFINITY;

    fn m(ring: ScalarRing, rows: &[&[f64]]) -> Matrix<ScalarRing> {
        Matrix::from_rows(ring, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn add_examples() {
        let a = m(MaxPlus, &[&[1.0, 2.0], &[3.0, 4.0]]);
        let b = m(MaxPlus, &[&[4.0, 3.0], &[2.0, 1.0]]);
        assert_eq!(a.add(&b).unwrap(), m(MaxPlus, &[&[4.0, 3.0], &[3.0, 4.0]]));
        assert_eq!(a.add(&a).unwrap(), a);
        assert_eq!(a.add(&Matrix::zeros(MaxPlus, 2, 2).unwrap()).unwrap(), a);
    }

    #[test]
    fn mul_examples() {
        let a = m(MinPlus, &[&[0.0, 1.0], &[INF, 0.0]]);
        let b = m(MinPlus, &[&[0.0, INF], &[2.0, 0.0]]);
        // [[min(0+0, 1+2), min(∞, 1+0)], [min(∞, 0+2), min(∞, 0+0)]]
        assert_eq!(a.mul(&b).unwrap(), m(MinPlus, &[&[0.0, 1.0], &[2.0, 0.0]]));
        assert_eq!(a.mul(&Matrix::identity(MinPlus, 2).unwrap()).unwrap(), a);
    }

    #[test]
    fn boolean_product_is_one_step_reachability() {
        // 0 → 1 → 2
        let adj = m(Boolean, &[&[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0], &[0.0, 0.0, 0.0]]);
        let two = adj.mul(&adj).unwrap();
        assert_eq!(two, m(Boolean, &[&[0.0, 0.0, 1.0], &[0.0; 3], &[0.0; 3]]));
    }

    #[test]
    fn shape_and_ring_errors() {
        let a = Matrix::zeros(MaxPlus, 2, 3).unwrap();
        let b = Matrix::zeros(MaxPlus, 2, 3).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::Shape(_))));
        let c = Matrix::zeros(MinPlus, 2, 3).unwrap();
        assert!(matches!(a.add(&c), Err(Error::RingMismatch { .. })));
        assert!(Matrix::zeros(MaxPlus, 0, 3).is_err());
        assert!(Matrix::from_rows(MaxPlus, vec![vec![1.0], vec![1.0, 2.0]]).is_err());
        assert!(Matrix::from_rows(MaxPlus, vec![vec![INF]]).is_err());
    }

    #[test]
    fn star_examples() {
        let h = m(MinPlus, &[&[INF, 1.0], &[2.0, INF]]);
        assert_eq!(h.star().unwrap(), m(MinPlus, &[&[0.0, 1.0], &[2.0, 0.0]]));
        let z = Matrix::zeros(MaxMin, 3, 3).unwrap();
        assert_eq!(z.star().unwrap(), Matrix::identity(MaxMin, 3).unwrap());
    }

    #[test]
    fn negative_cycle_diverges() {
        let h = m(MinPlus, &[&[INF, 1.0], &[-2.0, INF]]);
        match h.star() {
            Err(Error::Divergence { bound: None, .. }) => {}
            other => panic!("expected divergence, got {other:?}"),
        }
        // the partial sums keep decreasing: S_2, S_3, S_4 strictly lower (0, 0)
        let i = Matrix::identity(MinPlus, 2).unwrap();
        let mut acc = i.clone();
        let mut prev = *acc.get(0, 0);
        for _ in 0..6 {
            acc = i.add(&h.mul(&acc).unwrap()).unwrap();
            assert!(*acc.get(0, 0) <= prev);
            prev = *acc.get(0, 0);
        }
        assert!(prev < -2.0);
    }

    #[test]
    fn self_loop_divergence_on_single_node() {
        let h = m(MaxPlus, &[&[1.0]]);
        assert!(matches!(
            h.star(),
            Err(Error::Divergence { row: 0, col: 0, .. })
        ));
        assert_eq!(m(MaxPlus, &[&[-1.0]]).star().unwrap(), m(MaxPlus, &[&[0.0]]));
    }

    #[test]
    fn star_rejects_arith_and_rectangles() {
        assert!(matches!(
            Matrix::zeros(Arith, 2, 2).unwrap().star(),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            Matrix::zeros(MaxPlus, 2, 3).unwrap().star(),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn text_format() {
        let a = Matrix::parse(MinPlus, "0 1\n_ inf  # comment\n\n").unwrap();
        assert_eq!(a, m(MinPlus, &[&[0.0, 1.0], &[INF, INF]]));
        assert_eq!(a.to_string(), "0 1\ninf inf\n");
        assert_eq!(Matrix::parse(MinPlus, &a.to_string()).unwrap(), a);
        let err = Matrix::parse(MinPlus, "0 1\n2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(matches!(
            Matrix::parse(MinPlus, "0 -inf").unwrap_err(),
            Error::Parse { line: 1, .. }
        ));
    }

    #[test]
    fn interval_text_format() {
        let i = IntervalSemiring::new(MinPlus).unwrap();
        let a = Matrix::parse(i.clone(), "inf [3, 1]\n[2, 2] _").unwrap();
        assert_eq!(a.get(0, 1), &i.interval(3.0, 1.0).unwrap());
        assert_eq!(a.get(1, 1), &i.zero());
        assert_eq!(a.to_string(), "[inf, inf] [3, 1]\n[2, 2] [inf, inf]\n");
        assert!(Matrix::parse(i, "[1, 2").is_err());
    }
}
