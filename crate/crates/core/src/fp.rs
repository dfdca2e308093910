//! Dense exact linear algebra over a prime field F_p.
//!
//! Every graded-piece computation in the crate (catalecticant kernels,
//! syzygy steps, Hilbert functions) reduces to `rank`, `rref`,
//! `kernel_basis` or `solve` on a [`FpMatrix`]. Elimination is fully
//! deterministic: the pivot is always the first nonzero entry in row
//! order, so kernel bases and echelon forms are reproducible across
//! runs and platforms.

use std::fmt;

/// A prime modulus `p < 2^31`, so products of two reduced elements fit in
/// a `u64` without overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// The default modulus used by the seeded "generic" experiments.
    pub const DEFAULT_PRIME: u32 = 32003;

    pub fn new(p: u32) -> Result<Self, crate::Error> {
        if p < 2 || p >= 1 << 31 {
            return Err(crate::Error::Config(format!(
                "modulus {p} out of range (need 2 <= p < 2^31)"
            )));
        }
        if !is_prime(p) {
            return Err(crate::Error::Config(format!("modulus {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn default_field() -> Self {
        PrimeField {
            p: Self::DEFAULT_PRIME,
        }
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, x: i64) -> u32 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        if s >= p {
            (s - p) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero (elimination never divides by
    /// a zero pivot).
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "division by zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    let n64 = n as u64;
    while d * d <= n64 {
        if n64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense row-major matrix over F_p. Immutable after construction: all
/// operations return new matrices, so values can be shared read-only
/// between threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Entries are reduced mod p on construction.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &x in row {
                data.push(field.reduce_i64(x));
            }
        }
        FpMatrix {
            rows: r,
            cols: c,
            field,
            data,
        }
    }

    pub fn from_flat(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < field.modulus()));
        FpMatrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Builds the matrix whose columns are the given coordinate vectors.
    pub fn from_columns(field: PrimeField, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Self::zero(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < self.field.modulus());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mat_mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mat_mul");
        let p = self.field.modulus() as u64;
        let mut out = Self::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.data[i * other.cols + j] as u64;
                    out.data[i * other.cols + j] = ((cur + a * other.get(k, j) as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc: u64 = 0;
                for j in 0..self.cols {
                    acc += self.get(i, j) as u64 * v[j] as u64;
                    // p^2 < 2^62, so ~4 terms fit before reduction is forced;
                    // reduce eagerly enough to stay safe for any length.
                    if acc >= 1 << 62 {
                        acc %= p;
                    }
                }
                (acc % p) as u32
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Reduced row echelon form together with the pivot column list.
    /// Pivot selection is the first nonzero entry in row order.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        rank_only(&mut m)
    }

    /// Basis of the right null space `{v : M v = 0}`, in the standard
    /// pivot/free-variable form derived from the RREF. Vectors are listed
    /// by increasing free column, each with a 1 in its free coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let (r, pivots) = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `M x = b` if the system is consistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>, crate::Error> {
        if b.len() != self.rows {
            return Err(crate::Error::Input(format!(
                "solve: rhs length {} does not match row count {}",
                b.len(),
                self.rows
            )));
        }
        // Eliminate on the augmented matrix [M | b].
        let mut aug = FpMatrix::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols);
        }
        Ok(Some(x))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = FpMatrix::zero(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j));
            }
        }
        m
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

fn rref_in_place(m: &mut FpMatrix) -> Vec<usize> {
    let f = m.field;
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // First nonzero entry in row order, no pivot heuristics.
        let mut piv = None;
        for i in r..rows {
            if m.get(i, c) != 0 {
                piv = Some(i);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        m.data.swap_unchecked_rows(piv, r, cols);
        let inv = f.inv(m.get(r, c));
        if inv != 1 {
            for j in c..cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c);
            if factor == 0 {
                continue;
            }
            let neg = f.neg(factor);
            for j in c..cols {
                let v = f.add(m.get(i, j), f.mul(neg, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Forward elimination only; cheaper than full RREF when just the rank is
/// needed.
fn rank_only(m: &mut FpMatrix) -> usize {
    let f = m.field;
    let (rows, cols) = (m.rows, m.cols);
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut piv = None;
        for i in r..rows {
            if m.get(i, c) != 0 {
                piv = Some(i);
                break;
            }
        }
        let Some(piv) = piv else { continue };
        m.data.swap_unchecked_rows(piv, r, cols);
        let inv = f.inv(m.get(r, c));
        for i in (r + 1)..rows {
            let factor = m.get(i, c);
            if factor == 0 {
                continue;
            }
            let scale = f.mul(factor, inv);
            let neg = f.neg(scale);
            for j in c..cols {
                let v = f.add(m.get(i, j), f.mul(neg, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        r += 1;
    }
    r
}

trait SwapRows {
    fn swap_unchecked_rows(&mut self, a: usize, b: usize, cols: usize);
}

impl SwapRows for Vec<u32> {
    fn swap_unchecked_rows(&mut self, a: usize, b: usize, cols: usize) {
        if a == b {
            return;
        }
        for j in 0..cols {
            self.swap(a * cols + j, b * cols + j);
        }
    }
}

/// Incremental row-echelon span with full back-substitution, used for
/// deterministic "new generator" extraction: vectors reduce to a canonical
/// remainder against the rows inserted so far.
#[derive(Debug, Clone)]
pub struct EchelonSpan {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonSpan {
    pub fn new(field: PrimeField, width: usize) -> Self {
        EchelonSpan {
            field,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Canonical remainder of `v` modulo the current span.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.width);
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(self.pivots.iter()) {
            let c = w[pc];
            if c != 0 {
                let neg = f.neg(c);
                for j in pc..self.width {
                    w[j] = f.add(w[j], f.mul(neg, row[j]));
                }
            }
        }
        w
    }

    /// Inserts `v`; returns the normalized remainder if it enlarged the
    /// span, `None` if `v` was already in it.
    pub fn insert(&mut self, v: &[u32]) -> Option<Vec<u32>> {
        let f = self.field;
        let mut w = self.reduce(v);
        let pivot = w.iter().position(|&x| x != 0)?;
        let inv = f.inv(w[pivot]);
        if inv != 1 {
            for x in w.iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        // Back-substitute into existing rows so the span stays in RREF.
        for (row, &pc) in self.rows.iter_mut().zip(self.pivots.iter()) {
            debug_assert!(pc != pivot);
            let c = row[pivot];
            if c != 0 {
                let neg = f.neg(c);
                for j in 0..self.width {
                    row[j] = f.add(row[j], f.mul(neg, w[j]));
                }
            }
        }
        let pos = self
            .pivots
            .iter()
            .position(|&pc| pc > pivot)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, w.clone());
        Some(w)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// The span rows, in pivot order (an RREF basis of the row space).
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn primality_check() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32001).is_err()); // 3 * 10667
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(FpMatrix::identity(f5(), 3).rank(), 3);
        assert_eq!(FpMatrix::zero(f5(), 4, 7).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        // row 2 = 2 * row 1
        let m = FpMatrix::from_rows(f5(), &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_injective_map_is_empty() {
        assert!(FpMatrix::identity(f7(), 2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = FpMatrix::zero(f7(), 1, 3);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn kernel_of_sum_constraint() {
        // x + y = 0 over F_7 => basis {(-1, 1)} = {(6, 1)}
        let m = FpMatrix::from_rows(f7(), &[vec![1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![6, 1]]);
    }

    #[test]
    fn rref_examples() {
        let id = FpMatrix::identity(f5(), 3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);

        let z = FpMatrix::zero(f5(), 2, 3);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());

        let m = FpMatrix::from_rows(f5(), &[vec![2, 4], vec![1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, FpMatrix::from_rows(f5(), &[vec![1, 2], vec![0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn solve_examples() {
        let id = FpMatrix::identity(f5(), 2);
        assert_eq!(id.solve(&[3, 4]).unwrap(), Some(vec![3, 4]));

        let z = FpMatrix::zero(f5(), 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);

        // x + y = 3, y = 5 over F_7 => x = -2 = 5
        let m = FpMatrix::from_rows(f7(), &[vec![1, 1], vec![0, 1]]);
        assert_eq!(m.solve(&[3, 5]).unwrap(), Some(vec![5, 5]));

        assert!(m.solve(&[1, 2, 3]).is_err());
    }

    #[test]
    fn echelon_span_completion() {
        let f = f7();
        let mut span = EchelonSpan::new(f, 3);
        assert!(span.insert(&[1, 2, 3]).is_some());
        assert!(span.insert(&[2, 4, 6]).is_none());
        let rem = span.insert(&[0, 1, 0]).unwrap();
        assert_eq!(span.rank(), 2);
        assert!(span.contains(&[1, 2, 3]));
        assert!(span.contains(&rem));
        assert!(!span.contains(&[0, 0, 1]));
    }

    fn arb_matrix() -> impl Strategy<Value = FpMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0i64..7, r * c).prop_map(move |data| {
                let rows: Vec<Vec<i64>> = data.chunks(c).map(|ch| ch.to_vec()).collect();
                FpMatrix::from_rows(PrimeField::new(7).unwrap(), &rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rank_plus_nullity_is_cols(m in arb_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn kernel_vectors_are_killed(m in arb_matrix()) {
            for k in m.kernel_basis() {
                prop_assert!(m.mul_vec(&k).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn rref_is_idempotent(m in arb_matrix()) {
            let (r1, p1) = m.rref();
            let (r2, p2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn solve_solutions_are_exact(m in arb_matrix(), seed in proptest::collection::vec(0u32..7, 1..6)) {
            // Build a consistent rhs from a known preimage.
            let x: Vec<u32> = (0..m.cols()).map(|i| seed[i % seed.len()]).collect();
            let b = m.mul_vec(&x);
            let sol = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&sol), b);
        }
    }
}
