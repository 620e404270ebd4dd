//! Recognition of perfect check matrices up to monomial equivalence.
//!
//! Two quaternary codes are equivalent when one is carried onto the other
//! by negating some coordinates and permuting them.  Every perfect
//! quaternary code is equivalent to exactly one family member, and the
//! proof of that fact is effective: it reads the parameters `(r1, r2)`
//! off the check matrix and produces the coordinate transformation
//! explicitly.  [`canonicalize`] runs that procedure and returns the
//! transformation as a replayable transcript.
//!
//! The procedure, given a check matrix `A`:
//!
//! 1. sort the rows so that rows of order four (those containing an odd
//!    digit) come first; their count determines `r1`, the remaining rows
//!    `r2`, and the column count must be `4^r1 * 2^r2`;
//! 2. solve, over GF(2), for a subset of the order-four rows whose
//!    doubles have binary images summing to the all-ones word — if no
//!    subset works the kernel cannot be perfect;
//! 3. replace the first row (after swapping the subset's smallest member
//!    into position 0) by the subset's sum, a row with every digit odd;
//! 4. negate every column showing 3 in the new first row, making that
//!    row all-ones; a repeated column at this point exhibits a kernel
//!    word of Lee weight 2, so the code is rejected as not perfect;
//! 5. sort the columns lexicographically.  The distinct columns then
//!    exhaust the admissible shapes, so the result is the family matrix
//!    itself; the transcript records the signs and the sort order.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::codes::{CheckPolicy, QuaternaryCode};
use crate::error::{malformed, not_perfect};
use crate::linalg::{
    build_check_matrix, columns_distinct, lex_column_order, negate_columns, permute_columns,
    CheckMatrix, Z4Matrix,
};
use crate::words::{BinaryWord, Z4Word};
use crate::{Limits, Result};

/// Per-coordinate sign of the transformation: `Minus` marks a negated
/// coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// The outcome of canonicalization: the family parameters together with
/// the row replacement, coordinate signs, and column permutation that
/// carry the input matrix onto the family matrix.
///
/// Serializes as `{"r1": …, "r2": …, "signs": "+-+…", "permutation":
/// […]}`; the row bookkeeping is internal and only used to replay the
/// transformation via [`CanonicalForm::apply`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    r1: u32,
    r2: u32,
    signs: Vec<Sign>,
    permutation: Vec<usize>,
    row_order: Vec<usize>,
    alphas: Vec<bool>,
}

impl CanonicalForm {
    pub fn r1(&self) -> u32 {
        self.r1
    }

    pub fn r2(&self) -> u32 {
        self.r2
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// The signs as a `+`/`-` string, one character per coordinate.
    pub fn signs_string(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }

    /// `permutation[i]` is the input column placed at position `i`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// The family matrix this transcript normalizes to.
    pub fn canonical_matrix(&self, limits: &Limits) -> Result<CheckMatrix> {
        build_check_matrix(self.r1, self.r2, limits)
    }

    /// Replays the transcript on `input`: reorder the rows, replace the
    /// first by the recorded combination, negate the marked columns, and
    /// apply the column permutation.  Applied to the matrix the
    /// transcript was derived from, this reproduces the family matrix
    /// exactly.
    pub fn apply(&self, input: &CheckMatrix) -> Result<Z4Matrix> {
        let m = input.matrix();
        if m.row_count() != self.row_order.len() {
            return Err(malformed(format!(
                "transcript covers {} rows but the input has {}",
                self.row_order.len(),
                m.row_count()
            )));
        }
        let staged = replayed_rows(m, &self.row_order, &self.alphas)?;
        let flips: Vec<bool> = self.signs.iter().map(|s| *s == Sign::Minus).collect();
        let signed = negate_columns(&staged, &flips)?;
        permute_columns(&signed, &self.permutation)
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CanonicalForm", 4)?;
        st.serialize_field("r1", &self.r1)?;
        st.serialize_field("r2", &self.r2)?;
        st.serialize_field("signs", &self.signs_string())?;
        st.serialize_field("permutation", &self.permutation)?;
        st.end()
    }
}

/// Rows in transcript order with the first slot replaced by the recorded
/// combination of the order-four rows.
fn replayed_rows(m: &Z4Matrix, row_order: &[usize], alphas: &[bool]) -> Result<Z4Matrix> {
    if row_order.iter().any(|&i| i >= m.row_count()) {
        return Err(malformed("transcript row index out of range"));
    }
    let mut rows: Vec<Z4Word> = row_order.iter().map(|&i| m.row(i).clone()).collect();
    let mut first = Z4Word::zero(m.cols())?;
    for (slot, &selected) in alphas.iter().enumerate() {
        if selected {
            first = first.add(&rows[slot])?;
        }
    }
    rows[0] = first;
    Z4Matrix::from_rows(rows)
}

/// Solves `xor of chosen words = target` over GF(2), returning the
/// chosen indices as a bit mask.  Free choices are resolved to zero, so
/// the answer is deterministic.
fn solve_combination(words: &[BinaryWord], target: &BinaryWord) -> Result<Option<u128>> {
    debug_assert!(words.len() <= 128);
    let mut pivots: Vec<(BinaryWord, u128, usize)> = Vec::new();
    for (i, w) in words.iter().enumerate() {
        let mut row = w.clone();
        let mut mask = 1u128 << i;
        for (p, m, lead) in &pivots {
            if row.get(*lead)? == 1 {
                row = row.xor(p)?;
                mask ^= m;
            }
        }
        let lead = row.iter().position(|b| b == 1);
        if let Some(lead) = lead {
            pivots.push((row, mask, lead));
        }
    }
    let mut rest = target.clone();
    let mut mask = 0u128;
    for (p, m, lead) in &pivots {
        if rest.get(*lead)? == 1 {
            rest = rest.xor(p)?;
            mask ^= m;
        }
    }
    Ok(if rest.is_zero() { Some(mask) } else { None })
}

/// Normalizes a perfect check matrix onto the family, returning the
/// parameters and the transformation as a transcript.
///
/// Structural rejections are errors: a matrix whose kernel cannot be
/// perfect fails with a not-perfect error (no odd combination covering
/// every coordinate, or a repeated column), and a matrix whose shape
/// cannot match any family member fails as malformed.  When the kernel
/// is small enough to enumerate under `limits`, its minimum Lee weight
/// is additionally verified exhaustively.
pub fn canonicalize(check: &CheckMatrix, limits: &Limits) -> Result<CanonicalForm> {
    let m = check.matrix();
    let n = m.cols();
    let total = m.row_count();

    let mut row_order: Vec<usize> = (0..total).filter(|&i| m.row(i).has_odd_digit()).collect();
    let r0 = row_order.len();
    row_order.extend((0..total).filter(|&i| m.row(i).all_digits_even()));
    if r0 == 0 {
        return Err(not_perfect("no check row contains an odd digit"));
    }
    let r1 = (r0 - 1) as u32;
    let r2 = (total - r0) as u32;
    let log2_cols = 2 * r1 + r2;
    if log2_cols >= 64 || n as u128 != 1u128 << log2_cols {
        return Err(malformed(format!(
            "{n} columns cannot carry {r0} rows of order four and {r2} rows of order two"
        )));
    }

    let doubled: Vec<BinaryWord> = row_order[..r0]
        .iter()
        .map(|&i| Ok(m.row(i).scaled(2)?.gray()))
        .collect::<Result<_>>()?;
    let target = BinaryWord::all_ones(2 * n)?;
    let mask = match solve_combination(&doubled, &target)? {
        Some(mask) if mask != 0 => mask,
        _ => {
            return Err(not_perfect(
                "no combination of the order-four rows is odd in every coordinate",
            ))
        }
    };

    let j = (0..r0).position(|i| mask >> i & 1 == 1).unwrap();
    let mut alphas: Vec<bool> = (0..r0).map(|i| mask >> i & 1 == 1).collect();
    row_order.swap(0, j);
    alphas.swap(0, j);

    let staged = replayed_rows(m, &row_order, &alphas)?;
    let first = staged.row(0);
    if first.iter().any(|d| d % 2 == 0) {
        return Err(malformed("combined first row is not odd in every coordinate"));
    }
    let signs: Vec<Sign> = first
        .iter()
        .map(|d| if d == 3 { Sign::Minus } else { Sign::Plus })
        .collect();
    let flips: Vec<bool> = signs.iter().map(|s| *s == Sign::Minus).collect();
    let signed = negate_columns(&staged, &flips)?;

    if !columns_distinct(&signed) {
        return Err(not_perfect(
            "two columns coincide, giving a kernel word of Lee weight 2",
        ));
    }
    let permutation = lex_column_order(&signed);
    let canonical = permute_columns(&signed, &permutation)?;
    let expected = build_check_matrix(r1, r2, limits)?;
    if canonical != *expected.matrix() {
        return Err(malformed("columns do not exhaust the admissible shapes"));
    }

    let code = QuaternaryCode::from_check(check.clone());
    if limits.allows_enumeration(code.log2_cardinality()) {
        let status = code.is_perfect(CheckPolicy::Exhaustive, limits)?;
        if !status.perfect {
            return Err(not_perfect("enumeration found a word of Lee weight below 4"));
        }
    }

    Ok(CanonicalForm {
        r1,
        r2,
        signs,
        permutation,
        row_order,
        alphas,
    })
}

/// Whether two check matrices define equivalent perfect codes: both
/// canonicalize, and to the same family member.
pub fn equivalent_via_canonical(a: &CheckMatrix, b: &CheckMatrix, limits: &Limits) -> Result<bool> {
    let fa = canonicalize(a, limits)?;
    let fb = canonicalize(b, limits)?;
    Ok(fa.r1() == fb.r1() && fa.r2() == fb.r2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn limits() -> Limits {
        Limits::default()
    }

    /// Keeps exhaustive verification to kernels of at most 2^12 words so
    /// the unit tests stay fast; the full-cap path is exercised
    /// separately.
    fn quick_limits() -> Limits {
        Limits {
            max_enumeration: 1 << 12,
            ..Limits::default()
        }
    }

    fn small_members() -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for r1 in 0..=3u32 {
            for r2 in 0..=6u32 {
                if 2 * r1 + r2 >= 1 && 2 * r1 + r2 <= 6 {
                    out.push((r1, r2));
                }
            }
        }
        out
    }

    fn scramble(
        m: &Z4Matrix,
        rng: &mut ChaCha8Rng,
        shuffle_rows: bool,
    ) -> (CheckMatrix, Vec<bool>, Vec<usize>) {
        let n = m.cols();
        let flips: Vec<bool> = (0..n).map(|_| rng.random_range(0..2) == 1).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut out = permute_columns(&negate_columns(m, &flips).unwrap(), &perm).unwrap();
        if shuffle_rows {
            let mut rows: Vec<Z4Word> = out.rows().to_vec();
            rows.shuffle(rng);
            out = Z4Matrix::from_rows(rows).unwrap();
        }
        (CheckMatrix::from_matrix(out), flips, perm)
    }

    #[test]
    fn family_matrices_already_canonical() {
        for (r1, r2) in small_members() {
            let check = build_check_matrix(r1, r2, &limits()).unwrap();
            let form = canonicalize(&check, &quick_limits()).unwrap();
            assert_eq!((form.r1(), form.r2()), (r1, r2));
            assert!(form.signs().iter().all(|s| *s == Sign::Plus));
            let n = check.matrix().cols();
            assert_eq!(form.permutation(), (0..n).collect::<Vec<_>>());
            assert_eq!(form.apply(&check).unwrap(), *check.matrix());
            assert_eq!(
                form.canonical_matrix(&limits()).unwrap(),
                check
            );
        }
    }

    #[test]
    fn full_cap_verification_path() {
        // Within the default cap the kernel is enumerated as part of
        // canonicalization; 2^11 words here.
        let check = build_check_matrix(1, 1, &limits()).unwrap();
        let form = canonicalize(&check, &limits()).unwrap();
        assert_eq!((form.r1(), form.r2()), (1, 1));
    }

    #[test]
    fn scrambles_recover_parameters_and_transcripts() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for (r1, r2) in small_members() {
            if 2 * r1 + r2 > 4 {
                continue;
            }
            let check = build_check_matrix(r1, r2, &limits()).unwrap();
            for trial in 0..10 {
                let (scrambled, _, _) = scramble(check.matrix(), &mut rng, trial % 2 == 1);
                let form = canonicalize(&scrambled, &quick_limits()).unwrap();
                assert_eq!((form.r1(), form.r2()), (r1, r2), "member ({r1},{r2})");
                assert_eq!(
                    form.apply(&scrambled).unwrap(),
                    *check.matrix(),
                    "member ({r1},{r2}) trial {trial}"
                );
            }
        }
    }

    #[test]
    fn binary_images_match_after_induced_transform() {
        // A sign flip at coordinate i swaps bits i and i+n of the image;
        // the column permutation moves both halves in step.  Under that
        // induced map the scrambled code's image must equal the family
        // member's image.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for (r1, r2) in [(0u32, 2u32), (1, 1)] {
            let check = build_check_matrix(r1, r2, &limits()).unwrap();
            let n = check.matrix().cols();
            let (scrambled, _, _) = scramble(check.matrix(), &mut rng, false);
            let form = canonicalize(&scrambled, &limits()).unwrap();

            let family: BTreeSet<BinaryWord> = QuaternaryCode::from_check(check)
                .binary_image()
                .collect();
            let transformed: BTreeSet<BinaryWord> = QuaternaryCode::from_check(scrambled)
                .binary_image()
                .map(|y| {
                    let mut bits: Vec<u8> = y.iter().collect();
                    for (i, s) in form.signs().iter().enumerate() {
                        if *s == Sign::Minus {
                            bits.swap(i, i + n);
                        }
                    }
                    let moved: Vec<u8> = (0..2 * n)
                        .map(|i| {
                            let (half, pos) = (i / n, i % n);
                            bits[form.permutation()[pos] + half * n]
                        })
                        .collect();
                    BinaryWord::from_bits(&moved).unwrap()
                })
                .collect();
            assert_eq!(transformed, family, "member ({r1},{r2})");
        }
    }

    #[test]
    fn repeated_column_is_rejected() {
        // Copying column 2 over column 5 leaves a kernel word of Lee
        // weight 2, which canonicalization must refuse.
        let check = build_check_matrix(1, 1, &limits()).unwrap();
        let rows: Vec<Z4Word> = check
            .matrix()
            .rows()
            .iter()
            .map(|row| {
                let mut digits = row.to_digits();
                digits[5] = digits[2];
                Z4Word::from_digits(&digits).unwrap()
            })
            .collect();
        let broken = CheckMatrix::from_matrix(Z4Matrix::from_rows(rows).unwrap());
        match canonicalize(&broken, &limits()) {
            Err(crate::Error::NotPerfect { .. }) => {}
            other => panic!("expected a not-perfect error, got {other:?}"),
        }
        let kernel = QuaternaryCode::from_check(broken);
        assert_eq!(kernel.min_lee_weight(&limits()).unwrap(), Some(2));
    }

    #[test]
    fn all_even_matrix_is_rejected() {
        let check = CheckMatrix::parse_text("02\n20\n").unwrap();
        assert!(matches!(
            canonicalize(&check, &limits()),
            Err(crate::Error::NotPerfect { .. })
        ));
    }

    #[test]
    fn wrong_shape_is_malformed() {
        // Two order-four rows over 8 columns would need 4 columns.
        let check = CheckMatrix::parse_text("11111111\n00112233\n").unwrap();
        assert!(matches!(
            canonicalize(&check, &limits()),
            Err(crate::Error::MalformedCheckMatrix { .. })
        ));
    }

    #[test]
    fn uncoverable_coordinates_are_rejected() {
        // The only order-four row is even in the last two coordinates,
        // so no combination is odd everywhere.
        let check = CheckMatrix::parse_text("1100\n0202\n0022\n").unwrap();
        match canonicalize(&check, &limits()) {
            Err(crate::Error::NotPerfect { reason }) => {
                assert!(reason.contains("combination"), "{reason}");
            }
            other => panic!("expected a not-perfect error, got {other:?}"),
        }
    }

    #[test]
    fn equivalence_matches_parameter_equality() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let a11 = build_check_matrix(1, 1, &limits()).unwrap();
        let a03 = build_check_matrix(0, 3, &limits()).unwrap();
        let (scrambled, _, _) = scramble(a11.matrix(), &mut rng, true);
        assert!(equivalent_via_canonical(&scrambled, &a11, &limits()).unwrap());
        assert!(equivalent_via_canonical(&a11, &a11, &limits()).unwrap());
        assert!(!equivalent_via_canonical(&a03, &a11, &limits()).unwrap());
    }

    #[test]
    fn transcript_serialization_layout() {
        let check = build_check_matrix(0, 2, &limits()).unwrap();
        let form = canonicalize(&check, &limits()).unwrap();
        let json = serde_json::to_string(&form).unwrap();
        assert_eq!(
            json,
            r#"{"r1":0,"r2":2,"signs":"++++","permutation":[0,1,2,3]}"#
        );
    }

    #[test]
    fn apply_rejects_mismatched_input() {
        let check = build_check_matrix(0, 2, &limits()).unwrap();
        let form = canonicalize(&check, &limits()).unwrap();
        let other = build_check_matrix(1, 1, &limits()).unwrap();
        assert!(form.apply(&other).is_err());
    }
}
