//! Limb-level helpers for bit-packed words.
//!
//! Quaternary digits are stored two bits per digit, 32 digits per `u64` limb;
//! digit `i` occupies bits `2*(i % 32)` and `2*(i % 32) + 1` of limb `i / 32`.
//! Binary coordinates are stored one bit per coordinate, 64 per limb. Every
//! routine here assumes the unused high bits of the last limb are zero and
//! preserves that invariant, so words can be compared and hashed as plain limb
//! slices.

/// Mask selecting the low bit of every 2-bit lane.
pub const LANE_LO: u64 = 0x5555_5555_5555_5555;

pub const DIGITS_PER_LIMB: usize = 32;
pub const BITS_PER_LIMB: usize = 64;

pub fn limbs_for_digits(n: usize) -> usize {
    n.div_ceil(DIGITS_PER_LIMB)
}

pub fn limbs_for_bits(n: usize) -> usize {
    n.div_ceil(BITS_PER_LIMB)
}

/// Mask for the last limb of an `n`-digit word (all ones when `n` fills it).
pub fn digit_tail_mask(n: usize) -> u64 {
    let used = n % DIGITS_PER_LIMB;
    if used == 0 {
        !0
    } else {
        (1u64 << (2 * used)) - 1
    }
}

pub fn bit_tail_mask(n: usize) -> u64 {
    let used = n % BITS_PER_LIMB;
    if used == 0 {
        !0
    } else {
        (1u64 << used) - 1
    }
}

pub fn digit_get(limbs: &[u64], i: usize) -> u8 {
    ((limbs[i / DIGITS_PER_LIMB] >> (2 * (i % DIGITS_PER_LIMB))) & 3) as u8
}

pub fn digit_set(limbs: &mut [u64], i: usize, d: u8) {
    debug_assert!(d < 4);
    let limb = i / DIGITS_PER_LIMB;
    let shift = 2 * (i % DIGITS_PER_LIMB);
    limbs[limb] = (limbs[limb] & !(3u64 << shift)) | (u64::from(d) << shift);
}

pub fn bit_get(limbs: &[u64], i: usize) -> u8 {
    ((limbs[i / BITS_PER_LIMB] >> (i % BITS_PER_LIMB)) & 1) as u8
}

pub fn bit_set(limbs: &mut [u64], i: usize, b: u8) {
    debug_assert!(b < 2);
    let limb = i / BITS_PER_LIMB;
    let shift = i % BITS_PER_LIMB;
    limbs[limb] = (limbs[limb] & !(1u64 << shift)) | (u64::from(b) << shift);
}

/// Lane-wise sum of two packed quaternary limbs, mod 4 per lane.
#[inline(always)]
pub fn limb_add_mod4(a: u64, b: u64) -> u64 {
    let carry = (a & b & LANE_LO) << 1;
    a ^ b ^ carry
}

/// `acc += rhs` lane-wise mod 4.
#[inline(always)]
pub fn add_assign_mod4(acc: &mut [u64], rhs: &[u64]) {
    debug_assert_eq!(acc.len(), rhs.len());
    for (a, r) in acc.iter_mut().zip(rhs) {
        *a = limb_add_mod4(*a, *r);
    }
}

/// Lane-wise doubling mod 4: digit `d` becomes `2*d mod 4`.
#[inline(always)]
pub fn limb_double_mod4(a: u64) -> u64 {
    (a & LANE_LO) << 1
}

/// Lane-wise negation mod 4. The tail mask keeps slack lanes at zero.
#[inline(always)]
pub fn limb_neg_mod4(a: u64, tail: u64) -> u64 {
    limb_add_mod4(!a & tail, LANE_LO & tail)
}

/// Sum of Lee weights of all lanes: wt(0)=0, wt(1)=wt(3)=1, wt(2)=2.
#[inline(always)]
pub fn limb_lee_weight(a: u64) -> u32 {
    let lo = a & LANE_LO;
    let hi = (a >> 1) & LANE_LO;
    lo.count_ones() + 2 * (hi & !lo).count_ones()
}

pub fn lee_weight(limbs: &[u64]) -> u64 {
    limbs.iter().map(|&l| u64::from(limb_lee_weight(l))).sum()
}

/// Dot product of two packed quaternary words, mod 4.
///
/// Per lane `(2a1+a0)(2b1+b0) = 2(a1 b0 + a0 b1) + a0 b0 (mod 4)`, so the
/// total reduces to two popcounts.
pub fn dot_mod4(a: &[u64], b: &[u64]) -> u8 {
    debug_assert_eq!(a.len(), b.len());
    let mut units: u64 = 0;
    let mut twos: u64 = 0;
    for (&x, &y) in a.iter().zip(b) {
        let x0 = x & LANE_LO;
        let x1 = (x >> 1) & LANE_LO;
        let y0 = y & LANE_LO;
        let y1 = (y >> 1) & LANE_LO;
        units += (x0 & y0).count_ones() as u64;
        twos += ((x0 & y1) ^ (x1 & y0)).count_ones() as u64;
    }
    ((units + 2 * twos) % 4) as u8
}

/// Coordinatewise product doubled: digit `2*(a_i * b_i) mod 4`.
///
/// Only the parities of the inputs matter, so each lane is `2*(a0 & b0)`.
#[inline(always)]
pub fn limb_doubled_product(a: u64, b: u64) -> u64 {
    (a & b & LANE_LO) << 1
}

pub fn xor_assign(acc: &mut [u64], rhs: &[u64]) {
    debug_assert_eq!(acc.len(), rhs.len());
    for (a, r) in acc.iter_mut().zip(rhs) {
        *a ^= *r;
    }
}

pub fn is_zero(limbs: &[u64]) -> bool {
    limbs.iter().all(|&l| l == 0)
}

/// Index of the first set bit, if any.
pub fn first_set_bit(limbs: &[u64]) -> Option<usize> {
    for (i, &l) in limbs.iter().enumerate() {
        if l != 0 {
            return Some(i * BITS_PER_LIMB + l.trailing_zeros() as usize);
        }
    }
    None
}

/// First position `>= from` holding an odd digit (1 or 3), if any.
pub fn first_odd_digit(limbs: &[u64], from: usize, n: usize) -> Option<usize> {
    first_matching_digit(limbs, from, n, |l| l & LANE_LO)
}

/// First position `>= from` holding a nonzero digit, if any.
pub fn first_nonzero_digit(limbs: &[u64], from: usize, n: usize) -> Option<usize> {
    first_matching_digit(limbs, from, n, |l| (l | (l >> 1)) & LANE_LO)
}

fn first_matching_digit(
    limbs: &[u64],
    from: usize,
    n: usize,
    marker: impl Fn(u64) -> u64,
) -> Option<usize> {
    if from >= n {
        return None;
    }
    let mut limb = from / DIGITS_PER_LIMB;
    let mut skip_mask = !0u64 << (2 * (from % DIGITS_PER_LIMB));
    while limb < limbs.len() {
        let marked = marker(limbs[limb]) & skip_mask;
        if marked != 0 {
            let pos = limb * DIGITS_PER_LIMB + marked.trailing_zeros() as usize / 2;
            return (pos < n).then_some(pos);
        }
        skip_mask = !0;
        limb += 1;
    }
    None
}

/// Whether any digit is odd.
pub fn has_odd_digit(limbs: &[u64]) -> bool {
    limbs.iter().any(|&l| l & LANE_LO != 0)
}

/// Gathers the bits at even positions of `x` into the low 32 bits.
pub fn compact_even_bits(mut x: u64) -> u64 {
    x &= 0x5555_5555_5555_5555;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0f0f_0f0f_0f0f_0f0f;
    x = (x | (x >> 4)) & 0x00ff_00ff_00ff_00ff;
    x = (x | (x >> 8)) & 0x0000_ffff_0000_ffff;
    x = (x | (x >> 16)) & 0x0000_0000_ffff_ffff;
    x
}

/// Spreads the low 32 bits of `x` onto even positions (inverse of
/// [`compact_even_bits`]).
pub fn spread_to_even_bits(mut x: u64) -> u64 {
    x &= 0x0000_0000_ffff_ffff;
    x = (x | (x << 16)) & 0x0000_ffff_0000_ffff;
    x = (x | (x << 8)) & 0x00ff_00ff_00ff_00ff;
    x = (x | (x << 4)) & 0x0f0f_0f0f_0f0f_0f0f;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// ORs the low `width` bits of `chunk` into `out` starting at bit `offset`.
pub fn or_bits_at(out: &mut [u64], offset: usize, chunk: u64, width: usize) {
    debug_assert!(width <= 64);
    let chunk = if width == 64 {
        chunk
    } else {
        chunk & ((1u64 << width) - 1)
    };
    let limb = offset / BITS_PER_LIMB;
    let shift = offset % BITS_PER_LIMB;
    out[limb] |= chunk << shift;
    if shift != 0 && shift + width > BITS_PER_LIMB {
        out[limb + 1] |= chunk >> (BITS_PER_LIMB - shift);
    }
}

/// Reads `width <= 64` bits of `src` starting at bit `offset`.
pub fn read_bits_at(src: &[u64], offset: usize, width: usize) -> u64 {
    debug_assert!(width <= 64);
    let limb = offset / BITS_PER_LIMB;
    let shift = offset % BITS_PER_LIMB;
    let mut chunk = src[limb] >> shift;
    if shift != 0 && shift + width > BITS_PER_LIMB {
        chunk |= src[limb + 1] << (BITS_PER_LIMB - shift);
    }
    if width == 64 {
        chunk
    } else {
        chunk & ((1u64 << width) - 1)
    }
}

/// Writes the binary image of an `n`-digit packed quaternary word into `out`.
///
/// The image has `2n` bits: the first block holds one bit per digit
/// (0,1 -> 0; 2,3 -> 1), the second block holds one bit per digit
/// (0,3 -> 0; 1,2 -> 1). Digit `i` maps to bits `i` and `n + i`. `out` must
/// hold `limbs_for_bits(2n)` limbs and is cleared first.
pub fn gray_into(digits: &[u64], n: usize, out: &mut [u64]) {
    debug_assert_eq!(digits.len(), limbs_for_digits(n));
    debug_assert_eq!(out.len(), limbs_for_bits(2 * n));
    out.fill(0);
    for (l, &w) in digits.iter().enumerate() {
        let t = (n - l * DIGITS_PER_LIMB).min(DIGITS_PER_LIMB);
        let lo = compact_even_bits(w);
        let hi = compact_even_bits(w >> 1);
        let first = hi;
        let second = lo ^ hi;
        or_bits_at(out, l * DIGITS_PER_LIMB, first, t);
        or_bits_at(out, n + l * DIGITS_PER_LIMB, second, t);
    }
}

/// Inverse of [`gray_into`]: reads a `2n`-bit word and writes `n` digits.
pub fn gray_inverse_into(bits: &[u64], n: usize, out: &mut [u64]) {
    debug_assert_eq!(bits.len(), limbs_for_bits(2 * n));
    debug_assert_eq!(out.len(), limbs_for_digits(n));
    out.fill(0);
    let mut pos = 0;
    let mut limb = 0;
    while pos < n {
        let t = (n - pos).min(DIGITS_PER_LIMB);
        let first = read_bits_at(bits, pos, t);
        let second = read_bits_at(bits, n + pos, t);
        let hi = first;
        let lo = first ^ second;
        out[limb] = spread_to_even_bits(lo) | (spread_to_even_bits(hi) << 1);
        pos += t;
        limb += 1;
    }
}
