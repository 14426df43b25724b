//! Exact linear algebra over the integers and prime fields: Smith normal
//! form with unimodular transforms, ranks, kernels and images.
//!
//! Integer matrices are stored sparsely by coordinate; the Smith reduction
//! falls back to a dense working copy below 64x64 where that is simpler.
//! All arithmetic is arbitrary precision.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

const DENSE_LIMIT: usize = 64;

/// Sparse integer matrix with arbitrary-precision entries.
/// No explicit zeros are ever stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::one());
        }
        m
    }

    /// Test/driver helper: build from dense rows of machine integers.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                if *v != 0 {
                    m.entries.insert((i, j), BigInt::from(*v));
                }
            }
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if !v.is_zero() {
                    m.entries.insert((i, j), v);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "coordinate out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigInt) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for (&(r, c), v) in &self.entries {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        // index rhs by row for sparse traversal
        let mut rhs_rows: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (&(r, c), v) in &other.entries {
            rhs_rows[r].push((c, v));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for (&(r, k), a) in &self.entries {
            for &(c, b) in &rhs_rows[k] {
                out.add_to(r, c, &(a * b));
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        let mut col = vec![BigInt::zero(); self.rows];
        for (&(r, c), v) in &self.entries {
            if c == j {
                col[r] = v.clone();
            }
        }
        col
    }

    pub fn mat_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![BigInt::zero(); self.rows];
        for (&(r, c), a) in &self.entries {
            if !v[c].is_zero() {
                out[r] += a * &v[c];
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            d[r][c] = v.clone();
        }
        d
    }
}

/// U * M * V = D with U, V unimodular and D diagonal with a divisibility
/// chain d_1 | d_2 | ... | d_r followed by zeros.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    /// The positive diagonal entries d_1 | ... | d_r.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

enum Work {
    Dense(Vec<Vec<BigInt>>),
    Sparse(Vec<BTreeMap<usize, BigInt>>),
}

impl Work {
    fn new(m: &IntMatrix) -> Work {
        if m.rows < DENSE_LIMIT && m.cols < DENSE_LIMIT {
            Work::Dense(m.to_dense())
        } else {
            let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); m.rows];
            for (&(r, c), v) in &m.entries {
                rows[r].insert(c, v.clone());
            }
            Work::Sparse(rows)
        }
    }

    fn get(&self, r: usize, c: usize) -> BigInt {
        match self {
            Work::Dense(d) => d[r][c].clone(),
            Work::Sparse(rows) => rows[r].get(&c).cloned().unwrap_or_else(BigInt::zero),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        match self {
            Work::Dense(d) => d.swap(i, j),
            Work::Sparse(rows) => rows.swap(i, j),
        }
    }

    fn swap_cols(&mut self, nrows: usize, i: usize, j: usize) {
        if i == j {
            return;
        }
        match self {
            Work::Dense(d) => {
                for row in d.iter_mut() {
                    row.swap(i, j);
                }
            }
            Work::Sparse(rows) => {
                for r in 0..nrows {
                    let a = rows[r].remove(&i);
                    let b = rows[r].remove(&j);
                    if let Some(a) = a {
                        rows[r].insert(j, a);
                    }
                    if let Some(b) = b {
                        rows[r].insert(i, b);
                    }
                }
            }
        }
    }

    /// row_dst += q * row_src
    fn row_axpy(&mut self, ncols: usize, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        match self {
            Work::Dense(d) => {
                for c in 0..ncols {
                    if !d[src][c].is_zero() {
                        let add = q * &d[src][c];
                        d[dst][c] += add;
                    }
                }
            }
            Work::Sparse(rows) => {
                let src_row: Vec<(usize, BigInt)> =
                    rows[src].iter().map(|(&c, v)| (c, v.clone())).collect();
                for (c, v) in src_row {
                    let cur = rows[dst].get(&c).cloned().unwrap_or_else(BigInt::zero);
                    let nv = cur + q * v;
                    if nv.is_zero() {
                        rows[dst].remove(&c);
                    } else {
                        rows[dst].insert(c, nv);
                    }
                }
            }
        }
    }

    /// col_dst += q * col_src
    fn col_axpy(&mut self, nrows: usize, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        match self {
            Work::Dense(d) => {
                for r in 0..nrows {
                    if !d[r][src].is_zero() {
                        let add = q * &d[r][src];
                        d[r][dst] += add;
                    }
                }
            }
            Work::Sparse(rows) => {
                for r in 0..nrows {
                    let sv = rows[r].get(&src).cloned();
                    if let Some(sv) = sv {
                        let cur = rows[r].get(&dst).cloned().unwrap_or_else(BigInt::zero);
                        let nv = cur + q * sv;
                        if nv.is_zero() {
                            rows[r].remove(&dst);
                        } else {
                            rows[r].insert(dst, nv);
                        }
                    }
                }
            }
        }
    }

    fn negate_row(&mut self, ncols: usize, r: usize) {
        match self {
            Work::Dense(d) => {
                for c in 0..ncols {
                    if !d[r][c].is_zero() {
                        d[r][c] = -d[r][c].clone();
                    }
                }
            }
            Work::Sparse(rows) => {
                for (_, v) in rows[r].iter_mut() {
                    *v = -v.clone();
                }
            }
        }
    }

    fn negate_col(&mut self, nrows: usize, c: usize) {
        match self {
            Work::Dense(d) => {
                for row in d.iter_mut().take(nrows) {
                    if !row[c].is_zero() {
                        row[c] = -row[c].clone();
                    }
                }
            }
            Work::Sparse(rows) => {
                for row in rows.iter_mut().take(nrows) {
                    if let Some(v) = row.get_mut(&c) {
                        *v = -v.clone();
                    }
                }
            }
        }
    }

    /// Entry of minimal absolute value in the submatrix [t.., t..],
    /// ties broken by lowest row then lowest column.
    fn find_pivot(&self, nrows: usize, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        match self {
            Work::Dense(d) => {
                for r in t..nrows {
                    for (c, v) in d[r].iter().enumerate().skip(t) {
                        if v.is_zero() {
                            continue;
                        }
                        let a = v.abs();
                        if best.as_ref().map_or(true, |(b, _, _)| a < *b) {
                            best = Some((a, r, c));
                        }
                    }
                }
            }
            Work::Sparse(rows) => {
                for (r, row) in rows.iter().enumerate().take(nrows).skip(t) {
                    for (&c, v) in row.range(t..) {
                        let a = v.abs();
                        if best.as_ref().map_or(true, |(b, _, _)| a < *b) {
                            best = Some((a, r, c));
                        }
                    }
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    /// First non-divisible entry by `p` in the submatrix [t.., t..], row-major.
    fn find_non_divisible(&self, nrows: usize, t: usize, p: &BigInt) -> Option<(usize, usize)> {
        match self {
            Work::Dense(d) => {
                for r in t..nrows {
                    for (c, v) in d[r].iter().enumerate().skip(t) {
                        if !v.is_zero() && !(v % p).is_zero() {
                            return Some((r, c));
                        }
                    }
                }
                None
            }
            Work::Sparse(rows) => {
                for (r, row) in rows.iter().enumerate().take(nrows).skip(t) {
                    for (&c, v) in row.range(t..) {
                        if !(v % p).is_zero() {
                            return Some((r, c));
                        }
                    }
                }
                None
            }
        }
    }

    /// Nonzero coordinates in column c at rows > t.
    fn col_nonzeros_below(&self, nrows: usize, t: usize, c: usize) -> Vec<usize> {
        let mut out = Vec::new();
        match self {
            Work::Dense(d) => {
                for (r, row) in d.iter().enumerate().take(nrows).skip(t + 1) {
                    if !row[c].is_zero() {
                        out.push(r);
                    }
                }
            }
            Work::Sparse(rows) => {
                for (r, row) in rows.iter().enumerate().take(nrows).skip(t + 1) {
                    if row.contains_key(&c) {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    /// Nonzero coordinates in row r at cols > t.
    fn row_nonzeros_right(&self, ncols: usize, t: usize, r: usize) -> Vec<usize> {
        let mut out = Vec::new();
        match self {
            Work::Dense(d) => {
                for (c, v) in d[r].iter().enumerate().take(ncols).skip(t + 1) {
                    if !v.is_zero() {
                        out.push(c);
                    }
                }
            }
            Work::Sparse(rows) => {
                for (&c, _) in rows[r].range(t + 1..) {
                    out.push(c);
                }
            }
        }
        out
    }

    fn into_matrix(self, rows: usize, cols: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(rows, cols);
        match self {
            Work::Dense(d) => {
                for (r, row) in d.into_iter().enumerate() {
                    for (c, v) in row.into_iter().enumerate() {
                        if !v.is_zero() {
                            m.entries.insert((r, c), v);
                        }
                    }
                }
            }
            Work::Sparse(rs) => {
                for (r, row) in rs.into_iter().enumerate() {
                    for (c, v) in row {
                        m.entries.insert((r, c), v);
                    }
                }
            }
        }
        m
    }
}

/// Smith normal form with full transform bookkeeping. Deterministic:
/// the pivot is always the nonzero entry of minimal absolute value,
/// ties broken by lowest row then lowest column.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (nr, nc) = (m.rows, m.cols);
    let mut d = Work::new(m);
    let mut u = Work::Dense(IntMatrix::identity(nr).to_dense());
    let mut u_inv = Work::Dense(IntMatrix::identity(nr).to_dense());
    let mut v = Work::Dense(IntMatrix::identity(nc).to_dense());
    let mut v_inv = Work::Dense(IntMatrix::identity(nc).to_dense());

    // row op on d mirrored into u, inverse op into u_inv (as a column op)
    macro_rules! swap_rows {
        ($i:expr, $j:expr) => {
            d.swap_rows($i, $j);
            u.swap_rows($i, $j);
            u_inv.swap_cols(nr, $i, $j);
        };
    }
    macro_rules! swap_cols {
        ($i:expr, $j:expr) => {
            d.swap_cols(nr, $i, $j);
            v.swap_cols(nc, $i, $j);
            v_inv.swap_rows($i, $j);
        };
    }
    macro_rules! row_axpy {
        // row_dst += q * row_src
        ($dst:expr, $src:expr, $q:expr) => {
            d.row_axpy(nc, $dst, $src, $q);
            u.row_axpy(nr, $dst, $src, $q);
            let nq = -($q).clone();
            u_inv.col_axpy(nr, $src, $dst, &nq);
        };
    }
    macro_rules! col_axpy {
        // col_dst += q * col_src
        ($dst:expr, $src:expr, $q:expr) => {
            d.col_axpy(nr, $dst, $src, $q);
            v.col_axpy(nc, $dst, $src, $q);
            let nq = -($q).clone();
            v_inv.row_axpy(nc, $src, $dst, &nq);
        };
    }

    let mut t = 0usize;
    while let Some((pr, pc)) = d.find_pivot(nr, t) {
        swap_rows!(t, pr);
        swap_cols!(t, pc);
        'reduce: loop {
            let pivot = d.get(t, t);
            debug_assert!(!pivot.is_zero());
            // clear the pivot column
            for i in d.col_nonzeros_below(nr, t, t) {
                let e = d.get(i, t);
                let q = -(&e / &pivot);
                row_axpy!(i, t, &q);
                if !d.get(i, t).is_zero() {
                    // remainder is strictly smaller; promote it to pivot
                    swap_rows!(t, i);
                    continue 'reduce;
                }
            }
            // clear the pivot row
            for j in d.row_nonzeros_right(nc, t, t) {
                let e = d.get(t, j);
                let q = -(&e / &pivot);
                col_axpy!(j, t, &q);
                if !d.get(t, j).is_zero() {
                    swap_cols!(t, j);
                    continue 'reduce;
                }
            }
            // pivot must divide everything that remains
            if let Some((i, _)) = d.find_non_divisible(nr, t + 1, &pivot) {
                let one = BigInt::one();
                row_axpy!(t, i, &one);
                continue 'reduce;
            }
            break;
        }
        if d.get(t, t).is_negative() {
            d.negate_row(nc, t);
            u.negate_row(nr, t);
            u_inv.negate_col(nr, t);
        }
        t += 1;
        if t >= nr.min(nc) {
            break;
        }
    }

    let d = d.into_matrix(nr, nc);
    let u = u.into_matrix(nr, nr);
    let v = v.into_matrix(nc, nc);
    let u_inv = u_inv.into_matrix(nr, nr);
    let v_inv = v_inv.into_matrix(nc, nc);

    let mut invariant_factors = Vec::new();
    for i in 0..nr.min(nc) {
        let e = d.get(i, i);
        if e.is_zero() {
            break;
        }
        invariant_factors.push(e);
    }
    debug_assert!(invariant_factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    debug_assert_eq!(u.mul(m).mul(&v), d, "SNF transform check failed");
    debug_assert_eq!(u.mul(&u_inv), IntMatrix::identity(nr));
    debug_assert_eq!(v.mul(&v_inv), IntMatrix::identity(nc));

    SmithDecomposition { d, u, v, u_inv, v_inv, invariant_factors }
}

/// Fraction-free determinant (Bareiss). Test and verification helper.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_dense();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

// ---------------------------------------------------------------------------
// field abstraction
// ---------------------------------------------------------------------------

/// Runtime field descriptor. `E` is the element representation.
pub trait Field: Clone {
    type E: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn from_bigint(&self, n: &BigInt) -> Self::E;
    fn display(&self, a: &Self::E) -> String;
    fn name(&self) -> String;
}

/// The rational numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type E = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn display(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.to_integer().to_string()
        } else {
            a.to_string()
        }
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
}

/// The field with p elements, p prime. Elements are residues in 0..p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let p = self.p as u128;
        let mut acc: u128 = 1;
        let mut b = base as u128 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u64
    }
}

impl Field for PrimeField {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        use num_traits::ToPrimitive;
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        r.to_u64().expect("reduced residue fits u64")
    }
    fn display(&self, a: &u64) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        format!("F{}", self.p)
    }
}

// ---------------------------------------------------------------------------
// dense matrices over a field
// ---------------------------------------------------------------------------

pub fn f_zeros<F: Field>(f: &F, r: usize, c: usize) -> Vec<Vec<F::E>> {
    vec![vec![f.zero(); c]; r]
}

pub fn f_identity<F: Field>(f: &F, n: usize) -> Vec<Vec<F::E>> {
    let mut m = f_zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn f_from_int<F: Field>(f: &F, m: &IntMatrix) -> Vec<Vec<F::E>> {
    let mut out = f_zeros(f, m.rows(), m.cols());
    for (r, c, v) in m.iter() {
        out[r][c] = f.from_bigint(v);
    }
    out
}

pub fn f_transpose<F: Field>(f: &F, m: &[Vec<F::E>]) -> Vec<Vec<F::E>> {
    let r = m.len();
    let c = m.first().map_or(0, |row| row.len());
    let mut out = f_zeros(f, c, r);
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out[j][i] = v.clone();
        }
    }
    out
}

pub fn f_mul<F: Field>(f: &F, a: &[Vec<F::E>], b: &[Vec<F::E>]) -> Vec<Vec<F::E>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |row| row.len());
    let mut out = f_zeros(f, n, m);
    for (i, arow) in a.iter().enumerate() {
        assert_eq!(arow.len(), k);
        for (l, av) in arow.iter().enumerate() {
            if f.is_zero(av) {
                continue;
            }
            for (j, bv) in b[l].iter().enumerate() {
                if !f.is_zero(bv) {
                    out[i][j] = f.add(&out[i][j], &f.mul(av, bv));
                }
            }
        }
    }
    out
}

pub fn f_mat_vec<F: Field>(f: &F, a: &[Vec<F::E>], v: &[F::E]) -> Vec<F::E> {
    a.iter()
        .map(|row| {
            let mut acc = f.zero();
            for (x, y) in row.iter().zip(v) {
                if !f.is_zero(x) && !f.is_zero(y) {
                    acc = f.add(&acc, &f.mul(x, y));
                }
            }
            acc
        })
        .collect()
}

pub fn f_dot<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> F::E {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        if !f.is_zero(x) && !f.is_zero(y) {
            acc = f.add(&acc, &f.mul(x, y));
        }
    }
    acc
}

pub fn f_trace<F: Field>(f: &F, a: &[Vec<F::E>]) -> F::E {
    let mut acc = f.zero();
    for (i, row) in a.iter().enumerate() {
        acc = f.add(&acc, &row[i]);
    }
    acc
}

pub fn f_scale<F: Field>(f: &F, v: &[F::E], s: &F::E) -> Vec<F::E> {
    v.iter().map(|x| f.mul(x, s)).collect()
}

pub fn f_vec_add<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> Vec<F::E> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn f_vec_is_zero<F: Field>(f: &F, a: &[F::E]) -> bool {
    a.iter().all(|x| f.is_zero(x))
}

/// Reduced row echelon form in place; returns the pivot columns.
/// Deterministic: pivots are chosen top-down, leftmost first.
pub fn f_rref<F: Field>(f: &F, m: &mut Vec<Vec<F::E>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let pivot_row = (r..rows).find(|&i| !f.is_zero(&m[i][c]));
        let Some(pr) = pivot_row else { continue };
        m.swap(r, pr);
        let inv = f.inv(&m[r][c]).expect("nonzero pivot");
        for j in c..cols {
            m[r][j] = f.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i != r && !f.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let sub = f.mul(&factor, &m[r][j]);
                    m[i][j] = f.sub(&m[i][j], &sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn f_rank<F: Field>(f: &F, m: &[Vec<F::E>]) -> usize {
    let mut copy = m.to_vec();
    f_rref(f, &mut copy).len()
}

/// Basis of the right kernel (column kernel), one vector per free column.
pub fn f_kernel<F: Field>(f: &F, m: &[Vec<F::E>]) -> Vec<Vec<F::E>> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut copy = m.to_vec();
    let pivots = f_rref(f, &mut copy);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (ri, &pc) in pivots.iter().enumerate() {
            // row ri reads: x_pc + sum coeff * x_free = 0
            v[pc] = f.neg(&copy[ri][free]);
        }
        basis.push(v);
    }
    basis
}

/// One solution of A x = b with all free variables set to zero.
pub fn f_solve<F: Field>(f: &F, a: &[Vec<F::E>], b: &[F::E]) -> Option<Vec<F::E>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    assert_eq!(b.len(), rows);
    let mut aug: Vec<Vec<F::E>> = a
        .iter()
        .zip(b)
        .map(|(row, bv)| {
            let mut r = row.clone();
            r.push(bv.clone());
            r
        })
        .collect();
    let pivots = f_rref(f, &mut aug);
    // inconsistent if a pivot lands in the augmented column
    if pivots.iter().any(|&c| c == cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[ri][cols].clone();
    }
    Some(x)
}

/// Solutions of A x = b for several right-hand sides sharing one
/// elimination. Returns None if any system is inconsistent.
pub fn f_solve_multi<F: Field>(
    f: &F,
    a: &[Vec<F::E>],
    rhs: &[Vec<F::E>],
) -> Option<Vec<Vec<F::E>>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let k = rhs.len();
    let mut aug: Vec<Vec<F::E>> = Vec::with_capacity(rows);
    for (i, row) in a.iter().enumerate() {
        let mut r = row.clone();
        for b in rhs {
            assert_eq!(b.len(), rows);
            r.push(b[i].clone());
        }
        aug.push(r);
    }
    let pivots = f_rref(f, &mut aug);
    if pivots.iter().any(|&c| c >= cols) {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let mut x = vec![f.zero(); cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[ri][cols + j].clone();
        }
        out.push(x);
    }
    Some(out)
}

/// Prime power factorization by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0);
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn bigint_to_u64(b: &BigInt) -> Result<u64> {
    use num_traits::ToPrimitive;
    b.to_u64()
        .ok_or_else(|| Error::RangeError(format!("{} does not fit in 64 bits", b)))
}

/// Incremental span with membership queries, kept in reduced echelon form.
pub struct Span<F: Field> {
    f: F,
    dim: usize,
    rows: Vec<Vec<F::E>>,
    pivots: Vec<usize>,
}

impl<F: Field> Span<F> {
    pub fn new(f: &F, ambient_dim: usize) -> Self {
        Span { f: f.clone(), dim: ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of v after reduction by the current span.
    pub fn reduce(&self, v: &[F::E]) -> Vec<F::E> {
        assert_eq!(v.len(), self.dim);
        let f = &self.f;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[p]) {
                let factor = v[p].clone();
                for j in 0..self.dim {
                    let sub = f.mul(&factor, &row[j]);
                    v[j] = f.sub(&v[j], &sub);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::E]) -> bool {
        f_vec_is_zero(&self.f, &self.reduce(v))
    }

    /// Insert v; returns true if the rank grew.
    pub fn insert(&mut self, v: &[F::E]) -> bool {
        let f = self.f.clone();
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero");
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // keep earlier rows reduced against the new one
        for row in self.rows.iter_mut() {
            if !f.is_zero(&row[p]) {
                let factor = row[p].clone();
                for j in 0..self.dim {
                    let sub = f.mul(&factor, &r[j]);
                    row[j] = f.sub(&row[j], &sub);
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }
}

// ---------------------------------------------------------------------------
// public rank/kernel/image API over Z, Q and F_p
// ---------------------------------------------------------------------------

/// Rank over Q (char 0) or over F_p (char p prime).
pub fn rank_over_field(m: &IntMatrix, ch: u64) -> Result<usize> {
    if ch == 0 {
        let f = Rationals;
        Ok(f_rank(&f, &f_from_int(&f, m)))
    } else {
        let f = PrimeField::new(ch)?;
        Ok(f_rank(&f, &f_from_int(&f, m)))
    }
}

/// Kernel basis. Over char 0 the basis is integral and saturated: it is a
/// lattice basis of ker(M) over Z (columns of the SNF transform V past the
/// rank). Over char p the vectors are residues lifted to 0..p.
pub fn kernel_basis(m: &IntMatrix, ch: u64) -> Result<Vec<Vec<BigInt>>> {
    if ch == 0 {
        let snf = smith_normal_form(m);
        let r = snf.rank();
        let mut out = Vec::new();
        for j in r..m.cols() {
            out.push(snf.v.column(j));
        }
        Ok(out)
    } else {
        let f = PrimeField::new(ch)?;
        let fm = f_from_int(&f, m);
        Ok(f_kernel(&f, &fm)
            .into_iter()
            .map(|v| v.into_iter().map(BigInt::from).collect())
            .collect())
    }
}

/// Image basis. Over char 0 this is a lattice basis of the image (the
/// nonzero columns of M*V). Over char p, a column-space basis mod p.
pub fn image_basis(m: &IntMatrix, ch: u64) -> Result<Vec<Vec<BigInt>>> {
    if ch == 0 {
        let snf = smith_normal_form(m);
        let mv = m.mul(&snf.v);
        let mut out = Vec::new();
        for j in 0..snf.rank() {
            out.push(mv.column(j));
        }
        Ok(out)
    } else {
        let f = PrimeField::new(ch)?;
        let fm = f_from_int(&f, m);
        let rows = f_transpose(&f, &fm);
        let mut copy = rows.clone();
        f_rref(&f, &mut copy);
        Ok(copy
            .into_iter()
            .filter(|row| row.iter().any(|x| *x != 0))
            .map(|row| row.into_iter().map(BigInt::from).collect())
            .collect())
    }
}
