//! Combining two perfect codes into a perfect code of product length.
//!
//! A word of length `n1 * n2` can be read as an `n1 x n2` array.  Summing
//! each row gives a word of length `n1`, summing each column a word of
//! length `n2`, and the product of two codes collects the arrays whose
//! row-sum word lies in the left factor and whose column-sum word lies in
//! the right factor.  When both factors are perfect, so is the product,
//! and its family parameters are the coordinate-wise sums of the
//! factors': starting from the two smallest members, iterated products
//! reach every member of the family.
//!
//! The construction works on check matrices: a check row of the left
//! factor becomes a constraint on row sums by repeating each digit across
//! a block of `n2` positions, and a check row of the right factor becomes
//! a constraint on column sums by tiling it `n1` times.  Both factors
//! contribute an all-ones constraint; the duplicate is dropped so the
//! stacked matrix has the family's row count.

use crate::codes::{CheckPolicy, QuaternaryCode};
use crate::error::not_perfect;
use crate::linalg::{CheckMatrix, Z4Matrix};
use crate::words::Z4Word;
use crate::{Error, Limits, Result};

/// Row sums and column sums of `c` read as an `n1 x n2` array in
/// row-major order: entry `(i, j)` is coordinate `i * n2 + j`.
pub fn row_col_sums(c: &Z4Word, n1: usize, n2: usize) -> Result<(Z4Word, Z4Word)> {
    let expected = n1
        .checked_mul(n2)
        .ok_or(Error::LengthMismatch { left: c.len(), right: usize::MAX })?;
    if c.len() != expected {
        return Err(Error::LengthMismatch {
            left: c.len(),
            right: expected,
        });
    }
    let mut rows = vec![0u8; n1];
    let mut cols = vec![0u8; n2];
    for (pos, d) in c.iter().enumerate() {
        rows[pos / n2] = (rows[pos / n2] + d) % 4;
        cols[pos % n2] = (cols[pos % n2] + d) % 4;
    }
    Ok((Z4Word::from_digits(&rows)?, Z4Word::from_digits(&cols)?))
}

/// Each digit of `row` repeated across a block of `n2` consecutive
/// positions, turning a length-`n1` check row into a row-sum constraint.
fn expanded_row(row: &Z4Word, n2: usize) -> Result<Z4Word> {
    let mut digits = Vec::with_capacity(row.len() * n2);
    for d in row.iter() {
        digits.extend(std::iter::repeat_n(d, n2));
    }
    Z4Word::from_digits(&digits)
}

/// `row` tiled `n1` times, turning a length-`n2` check row into a
/// column-sum constraint.
fn tiled_row(row: &Z4Word, n1: usize) -> Result<Z4Word> {
    let mut digits = Vec::with_capacity(row.len() * n1);
    for _ in 0..n1 {
        digits.extend(row.iter());
    }
    Z4Word::from_digits(&digits)
}

/// The product of two perfect codes.
///
/// Both factors must carry check matrices and pass the perfectness
/// check (exhaustively when their kernels fit under `limits`, otherwise
/// structurally).  The result's check matrix stacks the expanded left
/// rows and the tiled right rows, keeps one copy of any repeated row,
/// and lists rows of order four before rows of order two.
pub fn product_code(
    left: &QuaternaryCode,
    right: &QuaternaryCode,
    limits: &Limits,
) -> Result<QuaternaryCode> {
    let left_check = left.check().ok_or(Error::MissingCheckMatrix)?;
    let right_check = right.check().ok_or(Error::MissingCheckMatrix)?;
    if !left.is_perfect(CheckPolicy::Auto, limits)?.perfect {
        return Err(not_perfect("the left factor is not a perfect code"));
    }
    if !right.is_perfect(CheckPolicy::Auto, limits)?.perfect {
        return Err(not_perfect("the right factor is not a perfect code"));
    }

    let n1 = left.len();
    let n2 = right.len();
    let required = (n1 as u128) * (n2 as u128);
    if required > limits.max_columns as u128 {
        return Err(Error::ColumnCapExceeded {
            required,
            cap: limits.max_columns,
        });
    }

    let mut rows: Vec<Z4Word> = Vec::new();
    for row in left_check.matrix().rows() {
        let expanded = expanded_row(row, n2)?;
        if !rows.contains(&expanded) {
            rows.push(expanded);
        }
    }
    for row in right_check.matrix().rows() {
        let tiled = tiled_row(row, n1)?;
        if !rows.contains(&tiled) {
            rows.push(tiled);
        }
    }
    let (odd, even): (Vec<Z4Word>, Vec<Z4Word>) =
        rows.into_iter().partition(|row| row.has_odd_digit());
    let mut ordered = odd;
    ordered.extend(even);

    let check = CheckMatrix::from_matrix(Z4Matrix::from_rows(ordered)?);
    Ok(QuaternaryCode::from_check(check))
}
