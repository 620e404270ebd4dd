//! Matrices over Z4: family check matrices, the Howell canonical form,
//! kernels and row-module generators.
//!
//! Two matrices with the same number of columns span the same row module
//! exactly when their Howell forms coincide, which is how
//! [`matrices_equivalent`] decides equivalence without enumerating anything.
//! Kernels are computed by a standard-form reduction (unit pivots first, then
//! pivots equal to 2) with column swaps tracked and undone, yielding an
//! independent generating set of type 4^k1 2^k2.
//!
//! # Text format
//!
//! A matrix is written one row per line as digit strings over 0..3. Blank
//! lines and lines starting with `#` are ignored when parsing:
//!
//! ```text
//! # length 4
//! 1111
//! 0022
//! 0202
//! ```

use std::fmt;

use crate::error::{malformed, Error, Result};
use crate::packed;
use crate::words::{Parity, Z4Word};
use crate::Limits;

/// A matrix over Z4 with at least one column; rows may be absent.
#[derive(Clone, PartialEq, Eq)]
pub struct Z4Matrix {
    cols: usize,
    rows: Vec<Z4Word>,
}

impl Z4Matrix {
    /// A matrix with `cols` columns and no rows.
    pub fn empty(cols: usize) -> Result<Self> {
        if cols == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(Z4Matrix { cols, rows: vec![] })
    }

    pub fn from_rows(rows: Vec<Z4Word>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyMatrix)?;
        let cols = first.len();
        for row in &rows {
            if row.len() != cols {
                return Err(Error::RaggedRows {
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        Ok(Z4Matrix { cols, rows })
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &Z4Word {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Z4Word] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.rows[r].digit(c)
    }

    pub fn push_row(&mut self, row: Z4Word) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::RaggedRows {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// The digits of column `j`, top to bottom.
    pub fn column_digits(&self, j: usize) -> Vec<u8> {
        self.rows.iter().map(|r| r.digit(j)).collect()
    }

    /// Parses the one-row-per-line text format, skipping blank and `#` lines.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            rows.push(line.parse::<Z4Word>()?);
        }
        Z4Matrix::from_rows(rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Z4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Z4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Matrix[{}x{}]", self.rows.len(), self.cols)?;
        for row in &self.rows {
            write!(f, " {row}")?;
        }
        Ok(())
    }
}

/// A check matrix: rows are the dual constraints of a code.
///
/// The last `half_rows` rows have every digit in {0, 2} and contribute
/// order-2 constraints; the `full_rows` rows before them contribute order-4
/// constraints. When read from text the split is inferred as the maximal
/// trailing block of rows with all digits in {0, 2}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckMatrix {
    mat: Z4Matrix,
    full_rows: usize,
    half_rows: usize,
}

impl CheckMatrix {
    pub fn from_matrix(mat: Z4Matrix) -> Self {
        let mut half = 0;
        for row in mat.rows().iter().rev() {
            if row.all_digits_even() {
                half += 1;
            } else {
                break;
            }
        }
        let full = mat.row_count() - half;
        CheckMatrix {
            mat,
            full_rows: full,
            half_rows: half,
        }
    }

    pub fn with_split(mat: Z4Matrix, full_rows: usize, half_rows: usize) -> Result<Self> {
        if full_rows + half_rows != mat.row_count() {
            return Err(malformed(format!(
                "row split {full_rows}+{half_rows} does not cover {} rows",
                mat.row_count()
            )));
        }
        for i in full_rows..mat.row_count() {
            if !mat.row(i).all_digits_even() {
                return Err(malformed(format!(
                    "row {i} is declared order-2 but contains an odd digit"
                )));
            }
        }
        Ok(CheckMatrix {
            mat,
            full_rows,
            half_rows,
        })
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        Ok(CheckMatrix::from_matrix(Z4Matrix::parse_text(text)?))
    }

    pub fn matrix(&self) -> &Z4Matrix {
        &self.mat
    }

    pub fn cols(&self) -> usize {
        self.mat.cols()
    }

    pub fn full_rows(&self) -> usize {
        self.full_rows
    }

    pub fn half_rows(&self) -> usize {
        self.half_rows
    }

    pub fn to_text(&self) -> String {
        self.mat.to_text()
    }
}

impl fmt::Display for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.mat.to_text())
    }
}

/// An independent generating set for a code of type 4^k1 2^k2.
///
/// The first `k1` rows generate order-4 directions; the last `k2` rows are
/// stored already doubled, with every digit in {0, 2}, and are combined with
/// coefficients in {0, 1} only. The generated set then has exactly
/// `4^k1 * 2^k2` distinct elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorMatrix {
    mat: Z4Matrix,
    k1: usize,
    k2: usize,
}

impl GeneratorMatrix {
    pub fn new(mat: Z4Matrix, k1: usize, k2: usize) -> Result<Self> {
        if k1 + k2 != mat.row_count() {
            return Err(malformed(format!(
                "type split {k1}+{k2} does not cover {} rows",
                mat.row_count()
            )));
        }
        for i in 0..k1 {
            if !mat.row(i).has_odd_digit() {
                return Err(malformed(format!(
                    "generator row {i} is declared order 4 but has no odd digit"
                )));
            }
        }
        for i in k1..mat.row_count() {
            if !mat.row(i).all_digits_even() {
                return Err(malformed(format!(
                    "generator row {i} is declared doubled but contains an odd digit"
                )));
            }
        }
        Ok(GeneratorMatrix { mat, k1, k2 })
    }

    /// A generator of the trivial code {0} of length `cols`.
    pub fn trivial(cols: usize) -> Result<Self> {
        Ok(GeneratorMatrix {
            mat: Z4Matrix::empty(cols)?,
            k1: 0,
            k2: 0,
        })
    }

    pub fn matrix(&self) -> &Z4Matrix {
        &self.mat
    }

    pub fn cols(&self) -> usize {
        self.mat.cols()
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k2
    }

    pub fn log2_cardinality(&self) -> u32 {
        (2 * self.k1 + self.k2) as u32
    }

    pub fn cardinality(&self) -> Option<u128> {
        let log2 = self.log2_cardinality();
        (log2 < 128).then(|| 1u128 << log2)
    }
}

/// Builds the family check matrix for parameters `(r1, r2)`.
///
/// Its `1 + r1 + r2` rows are read off from the column set: every column is
/// `1`, then `r1` arbitrary digits, then `r2` digits in {0, 2}, and columns
/// appear in lexicographic order (top digit most significant, 0 < 1 < 2 < 3).
/// The matrix has `4^r1 * 2^r2` columns.
pub fn build_check_matrix(r1: u32, r2: u32, limits: &Limits) -> Result<CheckMatrix> {
    let log2_cols = 2 * r1 + r2;
    if log2_cols >= 64 || (1u128 << log2_cols) > limits.max_columns as u128 {
        return Err(Error::ColumnCapExceeded {
            required: 1u128
                .checked_shl(log2_cols)
                .unwrap_or(u128::MAX),
            cap: limits.max_columns,
        });
    }
    let n = 1usize << log2_cols;
    let mut rows = Vec::with_capacity(1 + (r1 + r2) as usize);
    rows.push(Z4Word::repeated(n, 1)?);
    for i in 0..r1 {
        let shift = 2 * (r1 - 1 - i) + r2;
        let mut row = Z4Word::zero(n)?;
        for j in 0..n {
            row.set_digit(j, ((j >> shift) & 3) as u8);
        }
        rows.push(row);
    }
    for t in 0..r2 {
        let shift = r2 - 1 - t;
        let mut row = Z4Word::zero(n)?;
        for j in 0..n {
            row.set_digit(j, 2 * ((j >> shift) & 1) as u8);
        }
        rows.push(row);
    }
    CheckMatrix::with_split(Z4Matrix::from_rows(rows)?, 1 + r1 as usize, r2 as usize)
}

/// Keeps the even- or odd-indexed columns.
pub fn column_split(m: &Z4Matrix, parity: Parity) -> Result<Z4Matrix> {
    if m.cols() % 2 != 0 {
        return Err(Error::OddLength { len: m.cols() });
    }
    let mut out = Z4Matrix::empty(m.cols() / 2)?;
    for row in m.rows() {
        let (even, odd) = row.split_even_odd()?;
        out.push_row(match parity {
            Parity::Even => even,
            Parity::Odd => odd,
        })?;
    }
    Ok(out)
}

/// Reorders columns: column `i` of the result is column `perm[i]` of `m`.
pub fn permute_columns(m: &Z4Matrix, perm: &[usize]) -> Result<Z4Matrix> {
    validate_permutation(perm, m.cols())?;
    let mut out = Z4Matrix::empty(m.cols())?;
    for row in m.rows() {
        let mut new_row = Z4Word::zero(m.cols())?;
        for (i, &src) in perm.iter().enumerate() {
            new_row.set_digit(i, row.digit(src));
        }
        out.push_row(new_row)?;
    }
    Ok(out)
}

/// Negates the columns where `mask` is true.
pub fn negate_columns(m: &Z4Matrix, mask: &[bool]) -> Result<Z4Matrix> {
    if mask.len() != m.cols() {
        return Err(Error::LengthMismatch {
            left: mask.len(),
            right: m.cols(),
        });
    }
    let mut out = Z4Matrix::empty(m.cols())?;
    for row in m.rows() {
        let mut new_row = row.clone();
        for (j, &flip) in mask.iter().enumerate() {
            if flip {
                let d = new_row.digit(j);
                new_row.set_digit(j, (4 - d) % 4);
            }
        }
        out.push_row(new_row)?;
    }
    Ok(out)
}

fn validate_permutation(perm: &[usize], len: usize) -> Result<()> {
    if perm.len() != len {
        return Err(Error::InvalidPermutation { len });
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || seen[p] {
            return Err(Error::InvalidPermutation { len });
        }
        seen[p] = true;
    }
    Ok(())
}

/// Whether all columns are pairwise distinct.
pub fn columns_distinct(m: &Z4Matrix) -> bool {
    let mut keys = column_sort_keys(m);
    match &mut keys {
        ColumnKeys::Packed(v) => {
            v.sort_unstable();
            v.windows(2).all(|w| w[0].0 != w[1].0)
        }
        ColumnKeys::Wide(v) => {
            v.sort_unstable();
            v.windows(2).all(|w| w[0].0 != w[1].0)
        }
    }
}

/// Column indices ordered so the columns read lexicographically
/// (top digit most significant, digit order 0 < 1 < 2 < 3).
pub fn lex_column_order(m: &Z4Matrix) -> Vec<usize> {
    match column_sort_keys(m) {
        ColumnKeys::Packed(mut v) => {
            v.sort();
            v.into_iter().map(|(_, j)| j).collect()
        }
        ColumnKeys::Wide(mut v) => {
            v.sort();
            v.into_iter().map(|(_, j)| j).collect()
        }
    }
}

enum ColumnKeys {
    /// Big-endian 2-bit packing; integer order equals column lex order.
    Packed(Vec<(u64, usize)>),
    Wide(Vec<(Vec<u8>, usize)>),
}

fn column_sort_keys(m: &Z4Matrix) -> ColumnKeys {
    let h = m.row_count();
    if h <= 32 {
        let keys = (0..m.cols())
            .map(|j| {
                let mut key = 0u64;
                for row in m.rows() {
                    key = (key << 2) | u64::from(row.digit(j));
                }
                (key, j)
            })
            .collect();
        ColumnKeys::Packed(keys)
    } else {
        let keys = (0..m.cols())
            .map(|j| (m.column_digits(j), j))
            .collect();
        ColumnKeys::Wide(keys)
    }
}

/// The Howell canonical form of the row module of `m`.
///
/// The result has strictly increasing pivot positions with pivots in {1, 2},
/// zero entries above pivots equal to 1, entries in {0, 1} above pivots equal
/// to 2, no zero rows, and one extra property beyond echelon shape: whenever
/// the row module contains an element vanishing on the first `j` coordinates,
/// that element is a combination of the rows with pivot at or beyond `j`.
/// Two matrices span the same row module exactly when their forms are equal.
pub fn howell_form(m: &Z4Matrix) -> Z4Matrix {
    let cols = m.cols();
    let mut work: Vec<Z4Word> = m.rows().iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut result: Vec<Z4Word> = Vec::new();
    let mut pivots: Vec<(usize, u8)> = Vec::new();

    for j in 0..cols {
        // Prefer a unit pivot; a matrix with no unit in this column but some
        // entry 2 gets a pivot of 2.
        let unit_at = work.iter().position(|r| r.digit(j) % 2 == 1);
        let two_at = work.iter().position(|r| r.digit(j) == 2);
        if let Some(ri) = unit_at {
            let mut pivot = work.swap_remove(ri);
            if pivot.digit(j) == 3 {
                pivot = pivot.negated();
            }
            for r in work.iter_mut() {
                let e = r.digit(j);
                if e != 0 {
                    *r = r.add(&pivot.scaled((4 - e) % 4).unwrap()).unwrap();
                }
            }
            work.retain(|r| !r.is_zero());
            pivots.push((j, 1));
            result.push(pivot);
        } else if let Some(ri) = two_at {
            let pivot = work.swap_remove(ri);
            for r in work.iter_mut() {
                if r.digit(j) == 2 {
                    *r = r.sub(&pivot).unwrap();
                }
            }
            // The doubled pivot vanishes at j; it may still be needed to the
            // right, which is what separates the Howell form from a plain
            // echelon form.
            let shadow = pivot.scaled(2).unwrap();
            if !shadow.is_zero() {
                work.push(shadow);
            }
            work.retain(|r| !r.is_zero());
            pivots.push((j, 2));
            result.push(pivot);
        }
    }

    // Reduce entries above pivots, scanning each row left to right so that a
    // subtraction never disturbs an already-reduced column.
    for i in 0..result.len() {
        for k in i + 1..result.len() {
            let (jk, pk) = pivots[k];
            let e = result[i].digit(jk);
            if pk == 1 && e != 0 {
                let scaled = result[k].scaled((4 - e) % 4).unwrap();
                result[i] = result[i].add(&scaled).unwrap();
            } else if pk == 2 && e >= 2 {
                result[i] = result[i].sub(&result[k]).unwrap();
            }
        }
    }

    if result.is_empty() {
        Z4Matrix::empty(cols).unwrap()
    } else {
        Z4Matrix::from_rows(result).unwrap()
    }
}

/// Whether two matrices span the same row module.
pub fn matrices_equivalent(a: &Z4Matrix, b: &Z4Matrix) -> Result<bool> {
    if a.cols() != b.cols() {
        return Err(Error::ColumnCountMismatch {
            left: a.cols(),
            right: b.cols(),
        });
    }
    Ok(howell_form(a) == howell_form(b))
}

/// Row-reduced data shared by the kernel and row-module computations.
///
/// Row operations bring the matrix to the shape
///
/// ```text
/// [ I_a   X   Y  ]
/// [  0  2I_b 2Z  ]
/// ```
///
/// after a column permutation, with `a` unit pivots and `b` pivots equal
/// to 2. `col_perm[p]` is the original index of working column `p`.
struct StandardForm {
    rows: Vec<Z4Word>,
    col_perm: Vec<usize>,
    unit_pivots: usize,
    two_pivots: usize,
}

fn swap_columns(rows: &mut [Z4Word], x: usize, y: usize) {
    if x == y {
        return;
    }
    for row in rows.iter_mut() {
        let (dx, dy) = (row.digit(x), row.digit(y));
        row.set_digit(x, dy);
        row.set_digit(y, dx);
    }
}

fn standard_form(m: &Z4Matrix) -> StandardForm {
    let cols = m.cols();
    let mut rows: Vec<Z4Word> = m.rows().to_vec();
    let mut col_perm: Vec<usize> = (0..cols).collect();
    let mut a = 0;

    // Phase 1: unit pivots.
    loop {
        let Some((ri, cj)) = rows
            .iter()
            .enumerate()
            .skip(a)
            .find_map(|(ri, row)| {
                packed::first_odd_digit(row.limbs(), a, cols).map(|cj| (ri, cj))
            })
        else {
            break;
        };
        rows.swap(a, ri);
        swap_columns(&mut rows, a, cj);
        col_perm.swap(a, cj);
        if rows[a].digit(a) == 3 {
            rows[a] = rows[a].negated();
        }
        let pivot = rows[a].clone();
        for (ri, row) in rows.iter_mut().enumerate() {
            if ri == a {
                continue;
            }
            let e = row.digit(a);
            if e != 0 {
                *row = row.add(&pivot.scaled((4 - e) % 4).unwrap()).unwrap();
            }
        }
        a += 1;
    }

    // Phase 2: pivots equal to 2. All remaining rows now have digits in
    // {0, 2} only.
    let mut b = 0;
    loop {
        let q = a + b;
        let Some((ri, cj)) = rows
            .iter()
            .enumerate()
            .skip(q)
            .find_map(|(ri, row)| {
                packed::first_nonzero_digit(row.limbs(), q, cols).map(|cj| (ri, cj))
            })
        else {
            break;
        };
        rows.swap(q, ri);
        swap_columns(&mut rows, q, cj);
        col_perm.swap(q, cj);
        let pivot = rows[q].clone();
        // Clear the pivot column in every other doubled row so the 2I block
        // is exact; the unit rows above keep their entries.
        for (ri, row) in rows.iter_mut().enumerate().skip(a) {
            if ri == q {
                continue;
            }
            if row.digit(q) == 2 {
                *row = row.sub(&pivot).unwrap();
            }
        }
        b += 1;
    }

    rows.truncate(a + b);
    StandardForm {
        rows,
        col_perm,
        unit_pivots: a,
        two_pivots: b,
    }
}

fn unpermute(working: &Z4Word, col_perm: &[usize]) -> Z4Word {
    let mut out = Z4Word::zero(working.len()).unwrap();
    for (p, &orig) in col_perm.iter().enumerate() {
        out.set_digit(orig, working.digit(p));
    }
    out
}

/// An independent generating set for the kernel {c : m c^T = 0}.
///
/// A matrix of zero rows yields the full space; a matrix whose row module is
/// everything yields the trivial code. Every returned row satisfies
/// `m row^T = 0` (checked in debug builds), and the set generates exactly
/// `4^k1 * 2^k2` codewords.
pub fn kernel_generators(m: &Z4Matrix) -> GeneratorMatrix {
    let n = m.cols();
    let sf = standard_form(m);
    let (a, b) = (sf.unit_pivots, sf.two_pivots);
    let f = n - a - b;

    let mut gens: Vec<Z4Word> = Vec::with_capacity(f + b);
    for p in (a + b)..n {
        let mut g = Z4Word::zero(n).unwrap();
        g.set_digit(p, 1);
        for t in 0..b {
            if sf.rows[a + t].digit(p) == 2 {
                g.set_digit(a + t, 1);
            }
        }
        for s in 0..a {
            let mut acc = u32::from(sf.rows[s].digit(p));
            for t in 0..b {
                acc += u32::from(sf.rows[s].digit(a + t)) * u32::from(g.digit(a + t));
            }
            g.set_digit(s, ((4 - acc % 4) % 4) as u8);
        }
        gens.push(unpermute(&g, &sf.col_perm));
    }
    for t in 0..b {
        let mut g = Z4Word::zero(n).unwrap();
        g.set_digit(a + t, 2);
        for s in 0..a {
            g.set_digit(s, (2 * sf.rows[s].digit(a + t)) % 4);
        }
        gens.push(unpermute(&g, &sf.col_perm));
    }

    #[cfg(debug_assertions)]
    for gen in &gens {
        for row in m.rows() {
            debug_assert_eq!(row.dot(gen).unwrap(), 0, "kernel generator fails {row}");
        }
    }

    if gens.is_empty() {
        GeneratorMatrix::trivial(n).unwrap()
    } else {
        GeneratorMatrix::new(Z4Matrix::from_rows(gens).unwrap(), f, b).unwrap()
    }
}

/// An independent generating set for the row module of `m`.
///
/// Unlike the rows of the Howell form, these rows are independent: their
/// combinations hit each module element exactly once, so the module has
/// exactly `4^k1 * 2^k2` elements.
pub fn module_generators(m: &Z4Matrix) -> GeneratorMatrix {
    let sf = standard_form(m);
    let (a, b) = (sf.unit_pivots, sf.two_pivots);
    let rows: Vec<Z4Word> = sf
        .rows
        .iter()
        .map(|r| unpermute(r, &sf.col_perm))
        .collect();
    if rows.is_empty() {
        GeneratorMatrix::trivial(m.cols()).unwrap()
    } else {
        GeneratorMatrix::new(Z4Matrix::from_rows(rows).unwrap(), a, b).unwrap()
    }
}
