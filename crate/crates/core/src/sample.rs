//! Seeded random operands for randomized suites and benchmarks.

use num_bigint::{BigInt, BigUint, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::GInt;

/// A uniformly random integer of exactly `bits` bits (top bit set) with a
/// random sign.
pub fn random_coordinate<R: Rng + ?Sized>(rng: &mut R, bits: u64) -> BigInt {
    assert!(bits >= 1, "coordinates need at least one bit");
    let mut bytes = vec![0u8; bits.div_ceil(8) as usize];
    rng.fill(bytes.as_mut_slice());
    let mut mag = BigUint::from_bytes_le(&bytes);
    let excess = bytes.len() as u64 * 8 - bits;
    mag >>= excess;
    mag.set_bit(bits - 1, true);
    let sign = if rng.gen::<bool>() { Sign::Minus } else { Sign::Plus };
    BigInt::from_biguint(sign, mag)
}

/// A Gaussian integer with two `bits`-bit coordinates; never zero.
pub fn random_gint<R: Rng + ?Sized>(rng: &mut R, bits: u64) -> GInt {
    GInt { x: random_coordinate(rng, bits), y: random_coordinate(rng, bits) }
}

/// `count` pairs of `bits`-bit operands, fully determined by `seed`.
pub fn random_pairs(count: usize, bits: u64, seed: u64) -> Vec<(GInt, GInt)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (random_gint(&mut rng, bits), random_gint(&mut rng, bits))).collect()
}
