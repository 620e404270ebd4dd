//! Quaternary codes: additive subgroups of Z4^n described by a check matrix
//! or a generating set.
//!
//! A code of type 4^k1 2^k2 is enumerated by ranging a coefficient vector
//! over Z4^k1 x Z2^k2 in a fixed lexicographic order, so every run visits
//! codewords in the same sequence. Full enumeration is what the exhaustive
//! minimum-weight and perfectness checks use; beyond the configured cap they
//! either refuse or fall back to a structural argument on the check matrix.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::linalg::{
    column_split, columns_distinct, kernel_generators, module_generators, CheckMatrix,
    GeneratorMatrix,
};
use crate::words::{BinaryWord, Parity, Z4Word};
use crate::{Limits, Method};

/// How perfectness should be established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CheckPolicy {
    /// Enumerate when the code fits under the cap, otherwise fall back to the
    /// structural argument on the check matrix.
    #[default]
    Auto,
    /// Enumerate or fail with a resource error.
    Exhaustive,
    /// Use only the structural argument; requires a check matrix.
    Structural,
}

/// The outcome of a perfectness check, together with the path that produced
/// it.
///
/// With [`Method::Structural`], `perfect == false` means the structural
/// sufficient condition did not apply (for example after sign changes the
/// first check row is no longer all ones); it does not by itself prove the
/// code imperfect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Perfectness {
    pub perfect: bool,
    pub method: Method,
}

/// An additive code over Z4 with an independent generating set and an
/// optional check matrix.
#[derive(Clone, Debug)]
pub struct QuaternaryCode {
    n: usize,
    generator: GeneratorMatrix,
    check: Option<CheckMatrix>,
}

impl QuaternaryCode {
    /// The kernel {c : A c^T = 0} of a check matrix.
    pub fn from_check(check: CheckMatrix) -> Self {
        let generator = kernel_generators(check.matrix());
        QuaternaryCode {
            n: check.cols(),
            generator,
            check: Some(check),
        }
    }

    /// A code given directly by generators, with no check matrix attached.
    pub fn from_generators(generator: GeneratorMatrix) -> Self {
        QuaternaryCode {
            n: generator.cols(),
            generator,
            check: None,
        }
    }

    /// The family member with parameters `(r1, r2)`: the kernel of the check
    /// matrix whose columns are all of {1} x Z4^r1 x {0,2}^r2 in
    /// lexicographic order.
    pub fn family(r1: u32, r2: u32, limits: &Limits) -> Result<Self> {
        let check = crate::linalg::build_check_matrix(r1, r2, limits)?;
        Ok(QuaternaryCode::from_check(check))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn generator(&self) -> &GeneratorMatrix {
        &self.generator
    }

    pub fn check(&self) -> Option<&CheckMatrix> {
        self.check.as_ref()
    }

    pub fn k1(&self) -> usize {
        self.generator.k1()
    }

    pub fn k2(&self) -> usize {
        self.generator.k2()
    }

    pub fn log2_cardinality(&self) -> u32 {
        self.generator.log2_cardinality()
    }

    pub fn cardinality(&self) -> Option<u128> {
        self.generator.cardinality()
    }

    /// One-line JSON descriptor `{"n":..,"k1":..,"k2":..}`.
    pub fn descriptor(&self) -> String {
        serde_json::json!({"n": self.n, "k1": self.k1(), "k2": self.k2()}).to_string()
    }

    /// Streams every codeword exactly once, in coefficient order: the order-4
    /// coefficients range lexicographically in the outer positions, the
    /// order-2 coefficients inside them, last coefficient fastest.
    pub fn codewords(&self) -> CodewordIter<'_> {
        CodewordIter::new(&self.generator)
    }

    /// Streams `count` codewords starting at coefficient index `start`
    /// (clamped to the end of the code), for partitioned consumption.
    pub fn codewords_range(&self, start: u128, count: u128) -> CodewordIter<'_> {
        CodewordIter::with_range(&self.generator, start, count)
    }

    /// Runs `visit` over every codeword without per-word allocation; the
    /// reference is to a buffer reused between calls.
    pub fn scan_codewords<F: FnMut(&Z4Word)>(&self, visit: F) {
        CodewordIter::new(&self.generator).scan_remaining(visit);
    }

    /// Streams the binary image of every codeword.
    pub fn binary_image(&self) -> impl Iterator<Item = BinaryWord> + '_ {
        self.codewords().map(|w| w.gray())
    }

    /// Minimum Lee weight over nonzero codewords by full enumeration, `None`
    /// for the trivial code {0}.
    pub fn min_lee_weight(&self, limits: &Limits) -> Result<Option<u64>> {
        let log2 = self.log2_cardinality();
        if !limits.allows_enumeration(log2) {
            return Err(Error::EnumerationCapExceeded {
                log2_size: log2,
                cap: limits.max_enumeration,
            });
        }
        let mut min: Option<u64> = None;
        self.scan_codewords(|w| {
            if !w.is_zero() {
                let wt = w.lee_weight();
                if min.is_none_or(|m| wt < m) {
                    min = Some(wt);
                }
            }
        });
        Ok(min)
    }

    /// Whether the code is an (n, 4^n/4n, 4) code under the Lee metric.
    ///
    /// The cardinality condition is decided exactly from the type exponents.
    /// The distance condition is checked exhaustively when the code fits
    /// under the enumeration cap, otherwise structurally on the check matrix
    /// (first row all ones, columns pairwise distinct), per `policy`.
    pub fn is_perfect(&self, policy: CheckPolicy, limits: &Limits) -> Result<Perfectness> {
        if !self.has_perfect_cardinality() {
            return Ok(Perfectness {
                perfect: false,
                method: Method::Structural,
            });
        }
        let log2 = self.log2_cardinality();
        let use_exhaustive = match policy {
            CheckPolicy::Exhaustive => true,
            CheckPolicy::Structural => false,
            CheckPolicy::Auto => limits.allows_enumeration(log2),
        };
        if use_exhaustive {
            let min = self.min_lee_weight(limits)?;
            Ok(Perfectness {
                perfect: min.is_none_or(|m| m >= 4),
                method: Method::Exhaustive,
            })
        } else {
            let check = self.check.as_ref().ok_or(Error::MissingCheckMatrix)?;
            Ok(Perfectness {
                perfect: structural_distance_check(check),
                method: Method::Structural,
            })
        }
    }

    /// True when the type exponents give exactly 4^n/(4n) codewords; requires
    /// n to be a power of two.
    fn has_perfect_cardinality(&self) -> bool {
        if !self.n.is_power_of_two() {
            return false;
        }
        let log2_n = self.n.trailing_zeros();
        self.log2_cardinality() == 2 * self.n as u32 - 2 - log2_n
    }

    /// The subcode of words supported only on the even- or odd-indexed
    /// coordinates, restricted to those coordinates; computed by splitting
    /// the check matrix's columns.
    pub fn halve_subcode(&self, parity: Parity) -> Result<QuaternaryCode> {
        let check = self.check.as_ref().ok_or(Error::MissingCheckMatrix)?;
        let split = column_split(check.matrix(), parity)?;
        Ok(QuaternaryCode::from_check(CheckMatrix::from_matrix(split)))
    }

    /// The dual code: all words orthogonal mod 4 to every codeword. It is
    /// generated by the check matrix's rows, and its own check matrix is this
    /// code's generator matrix; |C| * |dual| = 4^n.
    pub fn dual_code(&self) -> Result<QuaternaryCode> {
        let check = self.check.as_ref().ok_or(Error::MissingCheckMatrix)?;
        let generator = module_generators(check.matrix());
        let dual_check = CheckMatrix::with_split(
            self.generator.matrix().clone(),
            self.generator.k1(),
            self.generator.k2(),
        )?;
        Ok(QuaternaryCode {
            n: self.n,
            generator,
            check: Some(dual_check),
        })
    }

    /// Collects the full codeword set; intended for small codes in tests and
    /// set comparisons.
    pub fn codeword_set(&self, limits: &Limits) -> Result<BTreeSet<Z4Word>> {
        let log2 = self.log2_cardinality();
        if !limits.allows_enumeration(log2) {
            return Err(Error::EnumerationCapExceeded {
                log2_size: log2,
                cap: limits.max_enumeration,
            });
        }
        let mut set = BTreeSet::new();
        self.scan_codewords(|w| {
            set.insert(w.clone());
        });
        Ok(set)
    }
}

/// The structural distance argument: when the first row of the check matrix
/// is all ones and the columns are pairwise distinct, the kernel has minimum
/// Lee weight at least 4.
///
/// The first row rules out weights 1, 2 and 3 realized with odd digits (their
/// digit sum would be a unit or +-1 +- 1 cannot reach 0 mod 4 with total Lee
/// weight < 4 while summing to 0), and distinct columns rule out a word of
/// shape 2 at one position or 2,2 at two positions. This is a sufficient
/// condition only; it is what makes verification possible at lengths far
/// beyond enumeration.
pub fn structural_distance_check(check: &CheckMatrix) -> bool {
    let m = check.matrix();
    let Some(first) = m.rows().first() else {
        return false;
    };
    first.iter().all(|d| d == 1) && columns_distinct(m)
}

/// Streaming codeword enumerator; see [`QuaternaryCode::codewords`] for the
/// order.
pub struct CodewordIter<'a> {
    rows: &'a [Z4Word],
    k1: usize,
    digits: Vec<u8>,
    current: Z4Word,
    exhausted: bool,
    remaining: Option<u128>,
}

impl<'a> CodewordIter<'a> {
    fn new(gens: &'a GeneratorMatrix) -> Self {
        CodewordIter {
            rows: gens.matrix().rows(),
            k1: gens.k1(),
            digits: vec![0; gens.matrix().row_count()],
            current: Z4Word::zero(gens.cols()).unwrap(),
            exhausted: false,
            remaining: None,
        }
    }

    fn with_range(gens: &'a GeneratorMatrix, start: u128, count: u128) -> Self {
        let mut iter = CodewordIter::new(gens);
        iter.remaining = Some(count);
        // Mixed-radix decomposition of the start index, last position
        // fastest; a leftover means the start lies past the end.
        let mut rest = start;
        for pos in (0..iter.digits.len()).rev() {
            let base = iter.base(pos) as u128;
            iter.digits[pos] = (rest % base) as u8;
            rest /= base;
        }
        if rest > 0 {
            iter.exhausted = true;
            return iter;
        }
        for (pos, &d) in iter.digits.iter().enumerate() {
            if d > 0 {
                let scaled = iter.rows[pos].scaled(d).unwrap();
                iter.current.add_assign(&scaled);
            }
        }
        iter
    }

    fn base(&self, pos: usize) -> u8 {
        if pos < self.k1 {
            4
        } else {
            2
        }
    }

    /// Visits every remaining codeword through a reused buffer, with no
    /// per-word allocation.
    pub fn scan_remaining<F: FnMut(&Z4Word)>(mut self, mut visit: F) {
        while !self.exhausted {
            if let Some(r) = self.remaining.as_mut() {
                if *r == 0 {
                    return;
                }
                *r -= 1;
            }
            visit(&self.current);
            self.advance();
        }
    }

    /// Pushes the odometer one step. Each wrapped position has had its row
    /// added `base` times in total, which is zero mod 4, so the running word
    /// stays consistent with the coefficients.
    fn advance(&mut self) {
        for pos in (0..self.digits.len()).rev() {
            self.digits[pos] += 1;
            self.current.add_assign(&self.rows[pos]);
            if self.digits[pos] == self.base(pos) {
                self.digits[pos] = 0;
            } else {
                return;
            }
        }
        self.exhausted = true;
    }
}

impl Iterator for CodewordIter<'_> {
    type Item = Z4Word;

    fn next(&mut self) -> Option<Z4Word> {
        if self.exhausted {
            return None;
        }
        if let Some(r) = self.remaining.as_mut() {
            if *r == 0 {
                return None;
            }
            *r -= 1;
        }
        let out = self.current.clone();
        self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::build_check_matrix;
    use std::collections::BTreeSet;

    fn limits() -> Limits {
        Limits::default()
    }

    fn family(r1: u32, r2: u32) -> QuaternaryCode {
        QuaternaryCode::family(r1, r2, &limits()).unwrap()
    }

    fn w(s: &str) -> Z4Word {
        s.parse().unwrap()
    }

    #[test]
    fn kernel_codes_from_small_checks() {
        let c = family(0, 1);
        let words: Vec<Z4Word> = c.codewords().collect();
        assert_eq!(words, vec![w("00"), w("22")]);

        let c = family(1, 1);
        assert_eq!(c.cardinality(), Some(2048));
        assert_eq!((c.k1(), c.k2()), (5, 1));

        // A zero-row check constrains nothing.
        let full = QuaternaryCode::from_check(CheckMatrix::parse_text("00\n").unwrap());
        assert_eq!(full.cardinality(), Some(16));
    }

    #[test]
    fn enumeration_is_deterministic_and_exact() {
        // The length-4 member with two doubled generators, in the frozen
        // coefficient order.
        let c = family(0, 2);
        let got: Vec<String> = c.codewords().map(|w| w.to_string()).collect();
        assert_eq!(
            got,
            [
                "0000", "2200", "2020", "0220", "1111", "3311", "3131", "1331",
                "2222", "0022", "0202", "2002", "3333", "1133", "1313", "3113",
            ]
        );

        // Trivial code yields exactly the zero word.
        let c = family(0, 0);
        let got: Vec<Z4Word> = c.codewords().collect();
        assert_eq!(got, vec![w("0")]);
    }

    #[test]
    fn enumeration_matches_brute_force_kernel() {
        let c = family(1, 1);
        let check = build_check_matrix(1, 1, &limits()).unwrap();
        let mut seen = BTreeSet::new();
        c.scan_codewords(|word| {
            for row in check.matrix().rows() {
                assert_eq!(row.dot(word).unwrap(), 0);
            }
            assert!(seen.insert(word.clone()), "duplicate {word}");
        });
        assert_eq!(seen.len(), 2048);
    }

    #[test]
    fn range_partitions_cover_the_stream() {
        let c = family(0, 2);
        let full: Vec<Z4Word> = c.codewords().collect();
        assert_eq!(full.len(), 16);
        let mut pieces: Vec<Z4Word> = c.codewords_range(0, 5).collect();
        pieces.extend(c.codewords_range(5, 11));
        assert_eq!(pieces, full);

        assert_eq!(c.codewords_range(6, 2).count(), 2);
        assert_eq!(c.codewords_range(12, 10).count(), 4);
        assert_eq!(c.codewords_range(16, 3).count(), 0);
        assert_eq!(c.codewords_range(100, 1).count(), 0);

        let mut scanned = Vec::new();
        c.codewords_range(3, 4)
            .scan_remaining(|w| scanned.push(w.clone()));
        assert_eq!(scanned, full[3..7].to_vec());
    }

    #[test]
    fn min_weight_values() {
        assert_eq!(family(0, 1).min_lee_weight(&limits()).unwrap(), Some(4));
        assert_eq!(family(0, 0).min_lee_weight(&limits()).unwrap(), None);
        assert_eq!(family(1, 1).min_lee_weight(&limits()).unwrap(), Some(4));

        let full = QuaternaryCode::from_check(CheckMatrix::parse_text("00\n").unwrap());
        assert_eq!(full.min_lee_weight(&limits()).unwrap(), Some(1));

        let tight = Limits {
            max_enumeration: 4,
            ..Limits::default()
        };
        assert!(matches!(
            family(1, 1).min_lee_weight(&tight),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn structural_check_conditions() {
        assert!(structural_distance_check(
            &build_check_matrix(1, 1, &limits()).unwrap()
        ));
        // Duplicated column: the membership argument breaks, and indeed a
        // weight-2 word slips in.
        let dup = CheckMatrix::parse_text("1111\n0033\n").unwrap();
        assert!(!structural_distance_check(&dup));
        // First row not all ones.
        let bad = CheckMatrix::parse_text("12\n").unwrap();
        assert!(!structural_distance_check(&bad));
    }

    #[test]
    fn perfectness_decisions() {
        let report = family(1, 1).is_perfect(CheckPolicy::Auto, &limits()).unwrap();
        assert!(report.perfect);
        assert_eq!(report.method, Method::Exhaustive);

        let report = family(1, 1)
            .is_perfect(CheckPolicy::Structural, &limits())
            .unwrap();
        assert!(report.perfect);
        assert_eq!(report.method, Method::Structural);

        // Trivial code: cardinality 1 = 4^1/4, no nonzero words.
        assert!(family(0, 0)
            .is_perfect(CheckPolicy::Auto, &limits())
            .unwrap()
            .perfect);

        // Full space fails the cardinality count.
        let full = QuaternaryCode::from_check(CheckMatrix::parse_text("00\n").unwrap());
        assert!(!full.is_perfect(CheckPolicy::Auto, &limits()).unwrap().perfect);

        // Length not a power of two.
        let c3 = QuaternaryCode::from_check(CheckMatrix::parse_text("111\n").unwrap());
        assert!(!c3.is_perfect(CheckPolicy::Auto, &limits()).unwrap().perfect);

        // Auto over a tight cap falls back to the structural path.
        let tight = Limits {
            max_enumeration: 4,
            ..Limits::default()
        };
        let report = family(1, 1).is_perfect(CheckPolicy::Auto, &tight).unwrap();
        assert!(report.perfect);
        assert_eq!(report.method, Method::Structural);
        assert!(matches!(
            family(1, 1).is_perfect(CheckPolicy::Exhaustive, &tight),
            Err(Error::EnumerationCapExceeded { .. })
        ));

        // Structural policy with no check matrix is unanswerable.
        let bare = QuaternaryCode::from_generators(
            family(0, 1).generator().clone(),
        );
        assert!(matches!(
            bare.is_perfect(CheckPolicy::Structural, &limits()),
            Err(Error::MissingCheckMatrix)
        ));
    }

    #[test]
    fn binary_images() {
        let images: BTreeSet<String> = family(0, 1)
            .binary_image()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(
            images,
            BTreeSet::from(["0000".to_string(), "1111".to_string()])
        );

        assert_eq!(family(1, 1).binary_image().collect::<BTreeSet<_>>().len(), 2048);

        let trivial: Vec<String> = family(0, 0).binary_image().map(|b| b.to_string()).collect();
        assert_eq!(trivial, vec!["00"]);
    }

    #[test]
    fn halved_subcodes_equal_smaller_members() {
        let even = family(1, 1).halve_subcode(Parity::Even).unwrap();
        let odd = family(1, 1).halve_subcode(Parity::Odd).unwrap();
        let smaller = family(1, 0).codeword_set(&limits()).unwrap();
        assert_eq!(even.codeword_set(&limits()).unwrap(), smaller);
        assert_eq!(odd.codeword_set(&limits()).unwrap(), smaller);

        let odd = family(1, 0).halve_subcode(Parity::Odd).unwrap();
        assert_eq!(
            odd.codeword_set(&limits()).unwrap(),
            family(0, 1).codeword_set(&limits()).unwrap()
        );

        // Full space halves to the full space of half length.
        let full = QuaternaryCode::from_check(CheckMatrix::parse_text("00\n").unwrap());
        let half = full.halve_subcode(Parity::Even).unwrap();
        assert_eq!(half.cardinality(), Some(4));

        assert!(family(0, 0).halve_subcode(Parity::Even).is_err());
        let bare = QuaternaryCode::from_generators(family(0, 1).generator().clone());
        assert!(matches!(
            bare.halve_subcode(Parity::Even),
            Err(Error::MissingCheckMatrix)
        ));
    }

    /// The subcode definition applied directly: keep codewords vanishing off
    /// the selected coordinates, restricted to them.
    fn direct_subcode(c: &QuaternaryCode, parity: Parity) -> BTreeSet<Z4Word> {
        let keep_odd = matches!(parity, Parity::Odd);
        let mut out = BTreeSet::new();
        c.scan_codewords(|word| {
            let digits = word.to_digits();
            let supported = digits
                .iter()
                .enumerate()
                .all(|(i, &d)| (i % 2 == 1) == keep_odd || d == 0);
            if supported {
                let kept: Vec<u8> = digits
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (i % 2 == 1) == keep_odd)
                    .map(|(_, &d)| d)
                    .collect();
                out.insert(Z4Word::from_digits(&kept).unwrap());
            }
        });
        out
    }

    #[test]
    fn halving_agrees_with_direct_definition() {
        for (r1, r2) in [(0, 1), (1, 0), (0, 2), (1, 1), (0, 3)] {
            let c = family(r1, r2);
            for parity in [Parity::Even, Parity::Odd] {
                let via_check = c
                    .halve_subcode(parity)
                    .unwrap()
                    .codeword_set(&limits())
                    .unwrap();
                assert_eq!(via_check, direct_subcode(&c, parity), "({r1},{r2})");
            }
        }
    }

    /// Binary subcode under the image layout: quaternary coordinate i owns
    /// binary coordinates i and i+n.
    fn direct_binary_subcode(c: &QuaternaryCode, parity: Parity) -> BTreeSet<BinaryWord> {
        let keep_odd = matches!(parity, Parity::Odd);
        let n = c.len();
        let mut out = BTreeSet::new();
        for img in c.binary_image() {
            let bits: Vec<u8> = img.iter().collect();
            let supported = (0..n).all(|i| {
                (i % 2 == 1) == keep_odd || (bits[i] == 0 && bits[i + n] == 0)
            });
            if supported {
                let mut kept_first = Vec::new();
                let mut kept_second = Vec::new();
                for i in 0..n {
                    if (i % 2 == 1) == keep_odd {
                        kept_first.push(bits[i]);
                        kept_second.push(bits[i + n]);
                    }
                }
                kept_first.extend(kept_second);
                out.insert(BinaryWord::from_bits(&kept_first).unwrap());
            }
        }
        out
    }

    #[test]
    fn halving_commutes_with_the_binary_image() {
        for (r1, r2) in [(0, 2), (1, 0), (1, 1)] {
            let c = family(r1, r2);
            for parity in [Parity::Even, Parity::Odd] {
                let quaternary_side: BTreeSet<BinaryWord> = c
                    .halve_subcode(parity)
                    .unwrap()
                    .binary_image()
                    .collect();
                assert_eq!(
                    quaternary_side,
                    direct_binary_subcode(&c, parity),
                    "({r1},{r2})"
                );
            }
        }
    }

    #[test]
    fn duals_have_complementary_size() {
        let c = family(1, 1);
        let dual = c.dual_code().unwrap();
        assert_eq!((dual.k1(), dual.k2()), (2, 1));
        assert_eq!(dual.cardinality(), Some(32));
        assert_eq!(
            c.log2_cardinality() + dual.log2_cardinality(),
            2 * c.len() as u32
        );

        // All cross pairs orthogonal for the length-4 member.
        let c = family(0, 2);
        let dual = c.dual_code().unwrap();
        let dual_words: Vec<Z4Word> = dual.codewords().collect();
        c.scan_codewords(|cw| {
            for dw in &dual_words {
                assert_eq!(cw.dot(dw).unwrap(), 0);
            }
        });

        // The dual's check is the original generator, so dualizing twice
        // returns the original code as a set.
        let again = dual.dual_code().unwrap();
        assert_eq!(
            again.codeword_set(&limits()).unwrap(),
            c.codeword_set(&limits()).unwrap()
        );

        // Dual of the full space is trivial.
        let full = QuaternaryCode::from_check(CheckMatrix::parse_text("00\n").unwrap());
        let dual = full.dual_code().unwrap();
        assert_eq!(dual.cardinality(), Some(1));
    }

    #[test]
    fn orthogonality_of_even_words_transfers_to_images() {
        // For a word x with all digits even, orthogonality mod 4 to the code
        // is the same as binary orthogonality of the images.
        let c = family(0, 2);
        let images: Vec<BinaryWord> = c.binary_image().collect();
        let codewords: Vec<Z4Word> = c.codewords().collect();
        for mask in 0..16u32 {
            let digits: Vec<u8> = (0..4).map(|i| 2 * ((mask >> i) & 1) as u8).collect();
            let x = Z4Word::from_digits(&digits).unwrap();
            let quaternary_dual = codewords.iter().all(|cw| x.dot(cw).unwrap() == 0);
            let gx = x.gray();
            let binary_dual = images.iter().all(|img| gx.dot(img).unwrap() == 0);
            assert_eq!(quaternary_dual, binary_dual, "x = {x}");
        }
    }

    #[test]
    fn descriptors_serialize_type_exponents() {
        assert_eq!(family(0, 1).descriptor(), r#"{"k1":0,"k2":1,"n":2}"#);
        assert_eq!(family(1, 1).descriptor(), r#"{"k1":5,"k2":1,"n":8}"#);
    }

    #[test]
    fn desk_scale_members_are_perfect_with_exact_minimum() {
        // Quaternary length up to 8 here; the length-16 members are covered
        // by the acceptance suite to keep unit runs quick.
        for (r1, r2) in [(0u32, 1u32), (1, 0), (0, 2), (1, 1), (0, 3), (2, 0)] {
            let c = family(r1, r2);
            let n = c.len() as u128;
            assert_eq!(c.cardinality(), Some((1u128 << (2 * n)) / (4 * n)), "({r1},{r2})");
            assert_eq!(c.min_lee_weight(&limits()).unwrap(), Some(4), "({r1},{r2})");
        }
    }
}
