//! Binary-side invariants of code images: GF(2) spans and ranks, dual
//! spaces, the repetitive-dual dimension, linearity, and the classification
//! table separating the family's equivalence classes.
//!
//! Ranks can be computed two ways. The streaming strategy folds the whole
//! binary image through an incremental echelon basis and is exact but bounded
//! by the enumeration cap. The span-generator shortcut uses the fact that the
//! GF(2) span of the image is generated by the images of the generators, of
//! their doubles, and of the doubled pairwise products (the additivity defect
//! of the binary map); it touches only O(k1^2) vectors and reaches lengths
//! enumeration cannot. The test suite checks the two against each other on
//! every code small enough to stream before the shortcut is trusted further
//! out.

use std::borrow::Borrow;

use serde::{Deserialize, Serialize};

use crate::codes::QuaternaryCode;
use crate::error::{Error, Result};
use crate::packed;
use crate::words::{BinaryWord, Z4Word};
use crate::{Limits, Method};

const NO_ROW: u32 = u32::MAX;

/// An incremental GF(2) row-echelon basis.
///
/// Insertion reduces the candidate against the rows collected so far and
/// keeps it when a nonzero remainder survives, so the rank is available at
/// any point of a stream without storing the stream.
pub struct Gf2Basis {
    bits: usize,
    rows: Vec<Vec<u64>>,
    leads: Vec<usize>,
    by_lead: Vec<u32>,
    scratch: Vec<u64>,
}

impl Gf2Basis {
    pub fn new(bits: usize) -> Result<Self> {
        if bits == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(Gf2Basis {
            bits,
            rows: Vec::new(),
            leads: Vec::new(),
            by_lead: vec![NO_ROW; bits],
            scratch: vec![0; packed::limbs_for_bits(bits)],
        })
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `w` against the basis and keeps the remainder if nonzero;
    /// returns whether the rank grew.
    pub fn insert(&mut self, w: &BinaryWord) -> Result<bool> {
        if w.len() != self.bits {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: self.bits,
            });
        }
        self.scratch.copy_from_slice(w.limbs());
        Ok(self.insert_scratch())
    }

    fn insert_scratch(&mut self) -> bool {
        while let Some(lead) = packed::first_set_bit(&self.scratch) {
            let row = self.by_lead[lead];
            if row == NO_ROW {
                self.rows.push(self.scratch.clone());
                self.leads.push(lead);
                self.by_lead[lead] = (self.rows.len() - 1) as u32;
                return true;
            }
            packed::xor_assign(&mut self.scratch, &self.rows[row as usize]);
        }
        false
    }

    /// Whether `w` lies in the span.
    pub fn contains(&self, w: &BinaryWord) -> Result<bool> {
        if w.len() != self.bits {
            return Err(Error::LengthMismatch {
                left: w.len(),
                right: self.bits,
            });
        }
        let mut rem: Vec<u64> = w.limbs().to_vec();
        while let Some(lead) = packed::first_set_bit(&rem) {
            let row = self.by_lead[lead];
            if row == NO_ROW {
                return Ok(false);
            }
            packed::xor_assign(&mut rem, &self.rows[row as usize]);
        }
        Ok(true)
    }

    /// A GF(2) basis of the orthogonal complement of the span; its size is
    /// always `bits - rank`. Deterministic: vectors come out ordered by
    /// their free coordinate.
    pub fn nullspace(&self) -> Vec<BinaryWord> {
        // Fully reduce a copy so each lead column is zero in every other row.
        let mut rows = self.rows.clone();
        for i in 0..rows.len() {
            for j in 0..rows.len() {
                if i != j && bit_at(&rows[j], self.leads[i]) {
                    let (a, b) = if i < j {
                        let (lo, hi) = rows.split_at_mut(j);
                        (&lo[i], &mut hi[0])
                    } else {
                        let (lo, hi) = rows.split_at_mut(i);
                        (&hi[0], &mut lo[j])
                    };
                    packed::xor_assign(b, a);
                }
            }
        }
        let mut is_lead = vec![false; self.bits];
        for &l in &self.leads {
            is_lead[l] = true;
        }
        let mut out = Vec::with_capacity(self.bits - self.rows.len());
        for f in 0..self.bits {
            if is_lead[f] {
                continue;
            }
            let mut v = BinaryWord::zero(self.bits).unwrap();
            v.set_bit(f, 1);
            for (row, &lead) in rows.iter().zip(&self.leads) {
                if bit_at(row, f) {
                    v.set_bit(lead, 1);
                }
            }
            out.push(v);
        }
        out
    }
}

fn bit_at(limbs: &[u64], i: usize) -> bool {
    (limbs[i / 64] >> (i % 64)) & 1 == 1
}

/// Dimension of the GF(2) span of a stream of equal-length words.
pub fn gf2_rank<I, B>(words: I) -> Result<usize>
where
    I: IntoIterator<Item = B>,
    B: Borrow<BinaryWord>,
{
    let mut basis: Option<Gf2Basis> = None;
    for w in words {
        let w = w.borrow();
        let b = match &mut basis {
            Some(b) => b,
            None => {
                basis = Some(Gf2Basis::new(w.len())?);
                basis.as_mut().unwrap()
            }
        };
        b.insert(w)?;
    }
    Ok(basis.map_or(0, |b| b.rank()))
}

/// A coordinate at which every word of the stream is zero, or `None`.
pub fn common_zero_coordinate<I, B>(words: I) -> Result<Option<usize>>
where
    I: IntoIterator<Item = B>,
    B: Borrow<BinaryWord>,
{
    let mut mask: Option<(usize, Vec<u64>)> = None;
    for w in words {
        let w = w.borrow();
        match &mut mask {
            None => {
                let mut m = vec![!0u64; packed::limbs_for_bits(w.len())];
                *m.last_mut().unwrap() = packed::bit_tail_mask(w.len());
                for (m, &l) in m.iter_mut().zip(w.limbs()) {
                    *m &= !l;
                }
                mask = Some((w.len(), m));
            }
            Some((len, m)) => {
                if w.len() != *len {
                    return Err(Error::LengthMismatch {
                        left: w.len(),
                        right: *len,
                    });
                }
                for (m, &l) in m.iter_mut().zip(w.limbs()) {
                    *m &= !l;
                }
            }
        }
    }
    let (_, m) = mask.ok_or(Error::EmptyInput)?;
    Ok(packed::first_set_bit(&m))
}

/// Writes the digit-parity word of `w` (bit i = lowest bit of digit i),
/// which equals the XOR of the two halves of the binary image.
fn parity_fold(w: &Z4Word, out: &mut BinaryWord) {
    debug_assert_eq!(out.len(), w.len());
    out.limbs_mut().fill(0);
    let n = w.len();
    for (l, &limb) in w.limbs().iter().enumerate() {
        let t = (n - l * 32).min(32);
        packed::or_bits_at(out.limbs_mut(), l * 32, packed::compact_even_bits(limb), t);
    }
}

/// How a rank should be computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RankStrategy {
    /// Stream within the enumeration cap, shortcut beyond it.
    #[default]
    Auto,
    /// Stream the full binary image; refuses above the cap.
    Stream,
    /// Span-generator shortcut; no size limit.
    Shortcut,
}

fn enumeration_gate(code: &QuaternaryCode, limits: &Limits) -> Result<()> {
    let log2 = code.log2_cardinality();
    if !limits.allows_enumeration(log2) {
        return Err(Error::EnumerationCapExceeded {
            log2_size: log2,
            cap: limits.max_enumeration,
        });
    }
    Ok(())
}

/// Streams the image once, building the span basis and (optionally) the
/// basis of half-fold words used for the repetitive-dual dimension.
fn stream_bases(
    code: &QuaternaryCode,
    limits: &Limits,
    with_fold: bool,
) -> Result<(Gf2Basis, Option<Gf2Basis>)> {
    enumeration_gate(code, limits)?;
    let n = code.len();
    let mut span = Gf2Basis::new(2 * n)?;
    let mut fold = if with_fold {
        Some(Gf2Basis::new(n)?)
    } else {
        None
    };
    let mut img = BinaryWord::zero(2 * n)?;
    let mut fold_buf = BinaryWord::zero(n)?;
    code.scan_codewords(|w| {
        w.gray_write(&mut img);
        let _ = span.insert(&img);
        if let Some(f) = fold.as_mut() {
            parity_fold(w, &mut fold_buf);
            let _ = f.insert(&fold_buf);
        }
    });
    Ok((span, fold))
}

/// A GF(2) generating set for the span of the binary image, derived from the
/// generator matrix alone: images of the generators, of their doubles, and
/// of the doubled coordinatewise products of generator pairs. Its size is
/// 2*k1 + k2 + k1*(k1-1)/2 regardless of the code's cardinality.
pub fn image_span_generators(code: &QuaternaryCode) -> Vec<BinaryWord> {
    let gens = code.generator();
    let rows = gens.matrix().rows();
    let k1 = gens.k1();
    let mut out = Vec::with_capacity(2 * k1 + gens.k2() + k1 * k1.saturating_sub(1) / 2);
    for (i, row) in rows.iter().enumerate() {
        out.push(row.gray());
        if i < k1 {
            out.push(row.scaled(2).unwrap().gray());
        }
    }
    // Doubled products involving an all-even generator vanish, so only
    // order-4 pairs contribute.
    for i in 0..k1 {
        for j in i + 1..k1 {
            out.push(rows[i].doubled_product(&rows[j]).unwrap().gray());
        }
    }
    out
}

fn resolve_strategy(
    strategy: RankStrategy,
    code: &QuaternaryCode,
    limits: &Limits,
) -> RankStrategy {
    match strategy {
        RankStrategy::Auto => {
            if limits.allows_enumeration(code.log2_cardinality()) {
                RankStrategy::Stream
            } else {
                RankStrategy::Shortcut
            }
        }
        fixed => fixed,
    }
}

/// Rank of the binary image (dimension of its GF(2) span) and the method
/// that produced it.
pub fn code_rank(
    code: &QuaternaryCode,
    strategy: RankStrategy,
    limits: &Limits,
) -> Result<(usize, Method)> {
    match resolve_strategy(strategy, code, limits) {
        RankStrategy::Stream => {
            let (span, _) = stream_bases(code, limits, false)?;
            Ok((span.rank(), Method::Exhaustive))
        }
        RankStrategy::Shortcut => {
            let mut basis = Gf2Basis::new(2 * code.len())?;
            for w in image_span_generators(code) {
                basis.insert(&w)?;
            }
            Ok((basis.rank(), Method::ShortcutValidated))
        }
        RankStrategy::Auto => unreachable!("resolved above"),
    }
}

/// Dimension of the subspace of repetitive words dual to the binary image.
///
/// A repetitive word (r, r) is orthogonal to an image word exactly when r is
/// orthogonal to the XOR of that word's halves, so the dimension equals
/// n minus the rank of the folded image.
pub fn repetitive_dual_dimension(
    code: &QuaternaryCode,
    strategy: RankStrategy,
    limits: &Limits,
) -> Result<usize> {
    let fold_rank = match resolve_strategy(strategy, code, limits) {
        RankStrategy::Stream => {
            let (_, fold) = stream_bases(code, limits, true)?;
            fold.unwrap().rank()
        }
        RankStrategy::Shortcut => {
            let mut basis = Gf2Basis::new(code.len())?;
            for w in image_span_generators(code) {
                let (first, second) = w.halves()?;
                basis.insert(&first.xor(&second)?)?;
            }
            basis.rank()
        }
        RankStrategy::Auto => unreachable!("resolved above"),
    };
    Ok(code.len() - fold_rank)
}

/// A GF(2) basis of all binary words orthogonal to the whole image; its size
/// is the binary length minus the rank.
pub fn binary_dual_basis(code: &QuaternaryCode, limits: &Limits) -> Result<Vec<BinaryWord>> {
    let (span, _) = stream_bases(code, limits, false)?;
    Ok(span.nullspace())
}

/// Whether the binary image is closed under XOR, decided by comparing the
/// streamed rank with the cardinality exponent.
pub fn is_linear_image(code: &QuaternaryCode, limits: &Limits) -> Result<bool> {
    let (span, _) = stream_bases(code, limits, false)?;
    Ok(span.rank() as u32 == code.log2_cardinality())
}

/// One family member's invariants inside a classification table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationEntry {
    pub r1: u32,
    pub r2: u32,
    /// Binary length 2^k.
    pub length: u64,
    pub rank: usize,
    pub rep_dual_dim: usize,
    pub linear: bool,
}

/// The table of pairwise nonequivalent codes of one binary length 2^k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub k: u32,
    pub count: usize,
    pub entries: Vec<ClassificationEntry>,
}

/// Enumerates every family member of binary length 2^k and its separating
/// invariants. There are exactly floor((k+1)/2) members, pairwise
/// distinguished by rank.
///
/// All members of one k share a cardinality, so one method covers the whole
/// report: streaming when that cardinality fits under the cap, the validated
/// shortcut otherwise.
pub fn classify(k: u32, limits: &Limits) -> Result<(ClassificationReport, Method)> {
    if k < 4 {
        return Err(Error::UnsupportedExponent { k });
    }
    let mut entries = Vec::new();
    let mut method = Method::Exhaustive;
    for r1 in 0..=((k - 1) / 2) {
        let r2 = k - 1 - 2 * r1;
        let code = QuaternaryCode::family(r1, r2, limits)?;
        let strategy = resolve_strategy(RankStrategy::Auto, &code, limits);
        let (rank, fold_rank) = match strategy {
            RankStrategy::Stream => {
                let (span, fold) = stream_bases(&code, limits, true)?;
                (span.rank(), fold.unwrap().rank())
            }
            _ => {
                method = Method::ShortcutValidated;
                let mut span = Gf2Basis::new(2 * code.len())?;
                let mut fold = Gf2Basis::new(code.len())?;
                for w in image_span_generators(&code) {
                    span.insert(&w)?;
                    let (first, second) = w.halves()?;
                    fold.insert(&first.xor(&second)?)?;
                }
                (span.rank(), fold.rank())
            }
        };
        entries.push(ClassificationEntry {
            r1,
            r2,
            length: 1u64 << k,
            rank,
            rep_dual_dim: code.len() - fold_rank,
            linear: rank as u32 == code.log2_cardinality(),
        });
    }
    Ok((
        ClassificationReport {
            k,
            count: entries.len(),
            entries,
        },
        method,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::build_check_matrix;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn limits() -> Limits {
        Limits::default()
    }

    fn family(r1: u32, r2: u32) -> QuaternaryCode {
        QuaternaryCode::family(r1, r2, &limits()).unwrap()
    }

    fn b(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    /// Five check rows of the extended Hamming code of length 16.
    fn hamming_check_rows() -> Vec<BinaryWord> {
        [
            "1111111111111111",
            "0000000011111111",
            "0000111100001111",
            "0011001100110011",
            "0101010101010101",
        ]
        .iter()
        .map(|s| b(s))
        .collect()
    }

    /// Thirteen independent image words of the length-8 member with
    /// r1 = r2 = 1, paired with their quaternary preimages.
    fn thirteen_vectors() -> Vec<(Z4Word, BinaryWord)> {
        [
            ("22000000", "1100000011000000"),
            ("00002200", "0000110000001100"),
            ("20002000", "1000100010001000"),
            ("11001100", "0000000011001100"),
            ("00220000", "0011000000110000"),
            ("00000022", "0000001100000011"),
            ("00200020", "0010001000100010"),
            ("00110011", "0000000000110011"),
            ("00001313", "0000010100001010"),
            ("01010303", "0000010101010000"),
            ("01013030", "0000101001010000"),
            ("10000111", "0000000010000111"),
            ("01000102", "0000000101000101"),
        ]
        .iter()
        .map(|(q, img)| (q.parse().unwrap(), b(img)))
        .collect()
    }

    #[test]
    fn rank_of_fixture_sets() {
        assert_eq!(gf2_rank(&hamming_check_rows()).unwrap(), 5);

        let vecs: Vec<BinaryWord> = thirteen_vectors().into_iter().map(|(_, b)| b).collect();
        assert_eq!(gf2_rank(&vecs).unwrap(), 13);

        let zeros = vec![BinaryWord::zero(4).unwrap(); 3];
        assert_eq!(gf2_rank(&zeros).unwrap(), 0);
        assert_eq!(gf2_rank(Vec::<BinaryWord>::new()).unwrap(), 0);

        let bad = vec![b("01"), b("0111")];
        assert!(matches!(
            gf2_rank(&bad),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn thirteen_vectors_are_codewords_with_correct_images() {
        let check = build_check_matrix(1, 1, &limits()).unwrap();
        for (q, img) in thirteen_vectors() {
            for row in check.matrix().rows() {
                assert_eq!(row.dot(&q).unwrap(), 0, "{q} not in the kernel");
            }
            assert_eq!(q.gray(), img, "image mismatch for {q}");
        }
    }

    #[test]
    fn thirteen_vectors_split_against_the_hamming_check() {
        // The first eleven lie in the Hamming code; the twelfth fails only
        // its third check row, the thirteenth fails the second.
        let rows = hamming_check_rows();
        let vecs: Vec<BinaryWord> = thirteen_vectors().into_iter().map(|(_, b)| b).collect();
        for (i, v) in vecs.iter().take(11).enumerate() {
            for (j, r) in rows.iter().enumerate() {
                assert_eq!(v.dot(r).unwrap(), 0, "b{} vs check row {}", i + 1, j);
            }
        }
        let twelfth = &vecs[11];
        let failing: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| twelfth.dot(r).unwrap() == 1)
            .map(|(j, _)| j)
            .collect();
        assert_eq!(failing, vec![2]);
        assert_eq!(vecs[12].dot(&rows[1]).unwrap(), 1);
    }

    #[test]
    fn streamed_ranks_of_small_members() {
        let cases = [
            ((0, 1), 1),
            ((1, 0), 4),
            ((0, 2), 4),
            ((1, 1), 13),
            ((0, 3), 11),
        ];
        for ((r1, r2), expected) in cases {
            let code = family(r1, r2);
            let (rank, method) = code_rank(&code, RankStrategy::Stream, &limits()).unwrap();
            assert_eq!(rank, expected, "({r1},{r2})");
            assert_eq!(method, Method::Exhaustive);
        }
    }

    #[test]
    fn shortcut_agrees_with_streaming_at_small_lengths() {
        for (r1, r2) in [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (0, 3)] {
            let code = family(r1, r2);
            let (streamed, _) = code_rank(&code, RankStrategy::Stream, &limits()).unwrap();
            let (shortcut, method) = code_rank(&code, RankStrategy::Shortcut, &limits()).unwrap();
            assert_eq!(streamed, shortcut, "({r1},{r2})");
            assert_eq!(method, Method::ShortcutValidated);

            let rep_s =
                repetitive_dual_dimension(&code, RankStrategy::Stream, &limits()).unwrap();
            let rep_g =
                repetitive_dual_dimension(&code, RankStrategy::Shortcut, &limits()).unwrap();
            assert_eq!(rep_s, rep_g, "({r1},{r2})");
        }
    }

    #[test]
    fn shortcut_reproduces_the_length32_rank_ladder() {
        // The three members of binary length 32 in rank order; the streaming
        // cross-check of the same numbers runs in the acceptance suite.
        let expected = [((0, 4), 27), ((1, 2), 28), ((2, 0), 29)];
        for ((r1, r2), rank) in expected {
            let code = family(r1, r2);
            let (got, _) = code_rank(&code, RankStrategy::Shortcut, &limits()).unwrap();
            assert_eq!(got, rank, "({r1},{r2})");
        }
    }

    #[test]
    fn rank_respects_the_generator_count_bound() {
        // rank <= binary length - r1 - r2 - 1, with equality except for the
        // linear members; those have rank equal to the cardinality exponent.
        for (r1, r2) in [(0u32, 1u32), (1, 0), (0, 2), (1, 1), (0, 3)] {
            let code = family(r1, r2);
            let (rank, _) = code_rank(&code, RankStrategy::Stream, &limits()).unwrap();
            let upper = 2 * code.len() - (r1 + r2 + 1) as usize;
            assert!(rank <= upper, "({r1},{r2})");
            let expect_equality = r1 >= 1 && 2 * r1 + r2 >= 3;
            if expect_equality {
                assert_eq!(rank, upper, "({r1},{r2})");
            }
        }
        // At length 32 equality holds for every member, including r1 = 0.
        for (r1, r2) in [(0u32, 4u32), (1, 2), (2, 0)] {
            let code = family(r1, r2);
            let (rank, _) = code_rank(&code, RankStrategy::Shortcut, &limits()).unwrap();
            assert_eq!(rank, 2 * code.len() - (r1 + r2 + 1) as usize, "({r1},{r2})");
        }
    }

    #[test]
    fn repetitive_dual_dimension_of_family_members() {
        for (r1, r2) in [(0u32, 0u32), (0, 1), (1, 0), (0, 2), (1, 1), (0, 3)] {
            let code = family(r1, r2);
            let dim =
                repetitive_dual_dimension(&code, RankStrategy::Stream, &limits()).unwrap();
            assert_eq!(dim, (r1 + r2 + 1) as usize, "({r1},{r2})");
        }
        for (r1, r2) in [(0u32, 4u32), (1, 2), (2, 0)] {
            let code = family(r1, r2);
            let dim =
                repetitive_dual_dimension(&code, RankStrategy::Shortcut, &limits()).unwrap();
            assert_eq!(dim, (r1 + r2 + 1) as usize, "({r1},{r2})");
        }
    }

    #[test]
    fn parity_fold_equals_half_xor() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let n = rng.random_range(1..80);
            let digits: Vec<u8> = (0..n).map(|_| rng.random_range(0..4)).collect();
            let w = Z4Word::from_digits(&digits).unwrap();
            let mut fast = BinaryWord::zero(n).unwrap();
            parity_fold(&w, &mut fast);
            let (first, second) = w.gray().halves().unwrap();
            assert_eq!(fast, first.xor(&second).unwrap());
        }
    }

    #[test]
    fn dual_basis_of_the_length8_member() {
        let code = family(1, 1);
        let basis = binary_dual_basis(&code, &limits()).unwrap();
        assert_eq!(basis.len(), 3);
        let (rank, _) = code_rank(&code, RankStrategy::Stream, &limits()).unwrap();
        assert_eq!(basis.len() + rank, 2 * code.len());
        for v in &basis {
            assert!(v.is_repetitive().unwrap(), "{v}");
        }

        // Every combination keeps weight 0, n/2 or n, and stays orthogonal
        // to the whole image.
        let images: Vec<BinaryWord> = code.binary_image().collect();
        for mask in 0u32..8 {
            let mut y = BinaryWord::zero(16).unwrap();
            for (i, v) in basis.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    y = y.xor(v).unwrap();
                }
            }
            assert!([0, 8, 16].contains(&y.weight()), "weight {}", y.weight());
            for img in &images {
                assert_eq!(y.dot(img).unwrap(), 0);
            }
        }
    }

    #[test]
    fn dual_basis_sizes_and_edge_cases() {
        let code = family(0, 2);
        let basis = binary_dual_basis(&code, &limits()).unwrap();
        assert_eq!(basis.len(), 4);

        // The image of the full space Z4^2 is all of E^4: empty dual basis.
        let full = QuaternaryCode::from_check(
            crate::linalg::CheckMatrix::parse_text("00\n").unwrap(),
        );
        assert!(binary_dual_basis(&full, &limits()).unwrap().is_empty());

        let tight = Limits {
            max_enumeration: 4,
            ..Limits::default()
        };
        assert!(matches!(
            binary_dual_basis(&family(1, 1), &tight),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn dual_words_restrict_to_dual_words_of_the_halves() {
        // Restricting a dual word to the coordinate pairs of the even (odd)
        // positions gives a word dual to the even (odd) subcode image.
        let code = family(1, 1);
        let n = code.len();
        let basis = binary_dual_basis(&code, &limits()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for parity in [crate::words::Parity::Even, crate::words::Parity::Odd] {
            let keep_odd = matches!(parity, crate::words::Parity::Odd);
            let sub_images: Vec<BinaryWord> =
                code.halve_subcode(parity).unwrap().binary_image().collect();
            for _ in 0..20 {
                let mut y = BinaryWord::zero(2 * n).unwrap();
                for v in &basis {
                    if rng.random_range(0..2) == 1 {
                        y = y.xor(v).unwrap();
                    }
                }
                let bits: Vec<u8> = y.iter().collect();
                let mut first = Vec::new();
                let mut second = Vec::new();
                for i in 0..n {
                    if (i % 2 == 1) == keep_odd {
                        first.push(bits[i]);
                        second.push(bits[i + n]);
                    }
                }
                first.extend(second);
                let restricted = BinaryWord::from_bits(&first).unwrap();
                for img in &sub_images {
                    assert_eq!(restricted.dot(img).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn linearity_of_images() {
        assert!(is_linear_image(&family(0, 1), &limits()).unwrap());
        assert!(is_linear_image(&family(0, 3), &limits()).unwrap());
        assert!(!is_linear_image(&family(1, 1), &limits()).unwrap());

        // Direct closure cross-check at length 4.
        let code = family(0, 2);
        let images: std::collections::BTreeSet<BinaryWord> =
            code.binary_image().collect();
        let closed = images.iter().all(|a| {
            images
                .iter()
                .all(|b| images.contains(&a.xor(b).unwrap()))
        });
        assert_eq!(closed, is_linear_image(&code, &limits()).unwrap());
    }

    #[test]
    fn common_zero_examples() {
        assert_eq!(
            common_zero_coordinate([b("00"), b("01")]).unwrap(),
            Some(0)
        );
        assert_eq!(
            common_zero_coordinate([b("0101"), b("0011"), b("0110")]).unwrap(),
            Some(0)
        );
        assert_eq!(
            common_zero_coordinate([b("0101"), b("1111")]).unwrap(),
            None
        );
        assert!(matches!(
            common_zero_coordinate(Vec::<BinaryWord>::new()),
            Err(Error::EmptyInput)
        ));
        assert!(matches!(
            common_zero_coordinate([b("01"), b("0111")]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn classification_table_for_exponent_four() {
        let (report, method) = classify(4, &limits()).unwrap();
        assert_eq!(method, Method::Exhaustive);
        assert_eq!(report.k, 4);
        assert_eq!(report.count, 2);
        assert_eq!(
            report.entries,
            vec![
                ClassificationEntry {
                    r1: 0,
                    r2: 3,
                    length: 16,
                    rank: 11,
                    rep_dual_dim: 4,
                    linear: true,
                },
                ClassificationEntry {
                    r1: 1,
                    r2: 1,
                    length: 16,
                    rank: 13,
                    rep_dual_dim: 3,
                    linear: false,
                },
            ]
        );
    }

    #[test]
    fn classification_beyond_the_cap_uses_the_shortcut() {
        for k in [6u32, 7, 8] {
            let (report, method) = classify(k, &limits()).unwrap();
            assert_eq!(method, Method::ShortcutValidated);
            assert_eq!(report.count, ((k + 1) / 2) as usize);
            let n = 1usize << (k - 1);
            for (i, e) in report.entries.iter().enumerate() {
                assert_eq!(e.r1, i as u32);
                assert_eq!(e.r2, k - 1 - 2 * e.r1);
                assert_eq!(e.length, 1 << k);
                assert_eq!(e.rank, 2 * n - (e.r1 + e.r2 + 1) as usize, "k={k} r1={}", e.r1);
                assert_eq!(e.rep_dual_dim, (e.r1 + e.r2 + 1) as usize);
                assert!(!e.linear);
            }
            // Ranks strictly increase with r1.
            let ranks: Vec<usize> = report.entries.iter().map(|e| e.rank).collect();
            assert!(ranks.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn classification_rejects_small_exponents() {
        for k in [0u32, 1, 2, 3] {
            assert!(matches!(
                classify(k, &limits()),
                Err(Error::UnsupportedExponent { .. })
            ));
        }
    }

    #[test]
    fn classification_report_serializes_in_schema_order() {
        let (report, _) = classify(4, &limits()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with(r#"{"k":4,"count":2,"entries":[{"r1":0,"r2":3,"length":16,"rank":11,"#));
        let parsed: ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, report);
    }

    #[test]
    fn basis_nullspace_and_contains() {
        let mut basis = Gf2Basis::new(4).unwrap();
        assert!(basis.insert(&b("1100")).unwrap());
        assert!(basis.insert(&b("0110")).unwrap());
        assert!(!basis.insert(&b("1010")).unwrap());
        assert_eq!(basis.rank(), 2);
        assert!(basis.contains(&b("1010")).unwrap());
        assert!(!basis.contains(&b("1000")).unwrap());

        let null = basis.nullspace();
        assert_eq!(null.len(), 2);
        for v in &null {
            assert_eq!(v.dot(&b("1100")).unwrap(), 0);
            assert_eq!(v.dot(&b("0110")).unwrap(), 0);
        }
        // The two nullspace vectors are themselves independent.
        assert_eq!(gf2_rank(&null).unwrap(), 2);
    }
}
