//! Arithmetic in binary fields GF(2^n) with a polynomial-basis representation.
//!
//! Field elements are plain unsigned integers below `2^n`, read as coordinate
//! vectors over F2: bit `i` is the coefficient of `x^i`. A [`FieldSpec`] pins
//! the degree and the irreducible modulus; all arithmetic goes through it.

use crate::error::{Error, Result};

/// Largest supported field degree. Keeps every full-table computation inside
/// 64-bit signed arithmetic.
pub const MAX_DEGREE: u32 = 16;

/// A concrete representation of GF(2^n): degree plus irreducible modulus.
///
/// The modulus is an (n+1)-bit integer with bit `i` holding the coefficient
/// of `x^i`; bit `n` is always set. Construction verifies irreducibility by
/// trial division, so a valid `FieldSpec` is a proof that the arithmetic
/// below is field arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    n: u32,
    modulus: u32,
}

impl FieldSpec {
    /// Builds a field from an explicit modulus, validating degree and
    /// irreducibility.
    pub fn new(n: u32, modulus: u32) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(n));
        }
        let degree_ok = modulus >> n == 1;
        if !degree_ok || modulus & 1 == 0 || !is_irreducible(modulus, n) {
            return Err(Error::InvalidModulus { modulus, degree: n });
        }
        Ok(FieldSpec { n, modulus })
    }

    /// Builds GF(2^n) with the smallest irreducible modulus of degree `n`
    /// (smallest in the integer encoding).
    pub fn with_default_modulus(n: u32) -> Result<Self> {
        Ok(FieldSpec {
            n,
            modulus: default_modulus(n)?,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, `2^n`.
    pub fn order(&self) -> u32 {
        1 << self.n
    }

    /// Product in GF(2^n): carry-less multiply with interleaved reduction.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.order() && b < self.order());
        let mut a = a;
        let mut b = b;
        let mut acc = 0;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.n != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    /// `a^d` by square-and-multiply, with `pow(0, 0) = 1`.
    pub fn pow(&self, a: u32, d: u64) -> u32 {
        let mut base = a;
        let mut d = d;
        let mut acc = 1;
        while d != 0 {
            if d & 1 != 0 {
                acc = self.mul(acc, base);
            }
            d >>= 1;
            if d != 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// Multiplicative inverse as `a^(2^n - 2)`, extended with `inv(0) = 0`.
    pub fn inv(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        self.pow(a, (1u64 << self.n) - 2)
    }

    /// Absolute trace `Tr(a) = a + a^2 + a^4 + ... + a^(2^(n-1))`, in {0, 1}.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut t = a;
        for _ in 0..self.n {
            acc ^= t;
            t = self.mul(t, t);
        }
        debug_assert!(acc <= 1, "trace landed outside the prime subfield");
        acc
    }

    /// Kloosterman sum `K(a) = sum over nonzero x of (-1)^Tr(1/x + a*x)`,
    /// by direct summation.
    pub fn kloosterman(&self, a: u32) -> i64 {
        let mut sum = 0i64;
        for x in 1..self.order() {
            let e = self.trace(self.inv(x)) ^ self.trace(self.mul(a, x));
            sum += 1 - 2 * e as i64;
        }
        sum
    }

    /// The mask `w` with `Tr(v * y) = dot(w, y)` for every `y`, where `dot`
    /// is the parity of the bitwise AND. Bit `i` of `w` is `Tr(v * x^i)`.
    ///
    /// This is the coordinate change that lets trace-form character sums be
    /// computed with the plain Walsh-Hadamard butterflies.
    pub fn dual_mask(&self, v: u32) -> u32 {
        let mut w = 0;
        for i in 0..self.n {
            w |= self.trace(self.mul(v, 1 << i)) << i;
        }
        w
    }
}

/// Smallest irreducible polynomial of degree `n` in the integer encoding.
pub fn default_modulus(n: u32) -> Result<u32> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::DegreeOutOfRange(n));
    }
    // Odd candidates only: a polynomial with zero constant term is divisible
    // by x (we also exclude x itself as a field modulus).
    ((1u32 << n) + 1..1u32 << (n + 1))
        .step_by(2)
        .find(|&p| is_irreducible(p, n))
        .ok_or(Error::DegreeOutOfRange(n))
}

/// Remainder of the carry-less division of `a` by `b` (leading bit of `b`
/// at `deg_b`).
fn poly_rem(mut a: u64, b: u64, deg_b: u32) -> u64 {
    while a >> deg_b != 0 {
        let shift = 63 - a.leading_zeros() - deg_b;
        a ^= b << shift;
    }
    a
}

/// Trial division by every polynomial of degree 1..=n/2.
fn is_irreducible(p: u32, n: u32) -> bool {
    if n == 1 {
        return true;
    }
    for d in 1..=n / 2 {
        for q in 1u64 << d..1u64 << (d + 1) {
            if poly_rem(p as u64, q, d) == 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent irreducibility route: sieve out every product of two
    /// lower-degree polynomials, then take the smallest odd survivor.
    fn default_modulus_by_sieve(n: u32) -> u32 {
        let mut reducible = vec![false; 1 << (n + 1)];
        for d1 in 1..n {
            let d2 = n - d1;
            if d2 < d1 {
                break;
            }
            for p in 1u64 << d1..1u64 << (d1 + 1) {
                for q in 1u64 << d2..1u64 << (d2 + 1) {
                    let mut prod = 0u64;
                    for bit in 0..=d1 {
                        if p >> bit & 1 != 0 {
                            prod ^= q << bit;
                        }
                    }
                    reducible[prod as usize] = true;
                }
            }
        }
        ((1u32 << n) + 1..1u32 << (n + 1))
            .step_by(2)
            .find(|&p| !reducible[p as usize])
            .unwrap()
    }

    #[test]
    fn default_modulus_small_degrees() {
        assert_eq!(default_modulus(1).unwrap(), 0b11);
        assert_eq!(default_modulus(2).unwrap(), 0b111);
        assert_eq!(default_modulus(3).unwrap(), 0b1011);
        // The AES polynomial x^8 + x^4 + x^3 + x + 1 happens to be the
        // smallest irreducible octic.
        assert_eq!(default_modulus(8).unwrap(), 0x11b);
    }

    #[test]
    fn default_modulus_matches_sieve() {
        for n in 1..=12 {
            assert_eq!(
                default_modulus(n).unwrap(),
                default_modulus_by_sieve(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn degree_out_of_range_rejected() {
        assert_eq!(default_modulus(0), Err(Error::DegreeOutOfRange(0)));
        assert_eq!(default_modulus(17), Err(Error::DegreeOutOfRange(17)));
        assert!(FieldSpec::new(4, 0b10101).is_err()); // x^4 + x^2 + 1 = (x^2+x+1)^2
        assert!(FieldSpec::new(4, 0b1011).is_err()); // degree 3 modulus for n=4
    }

    #[test]
    fn mul_identities_and_small_case() {
        let f = FieldSpec::with_default_modulus(3).unwrap();
        for a in 0..f.order() {
            assert_eq!(f.mul(a, 0), 0);
            assert_eq!(f.mul(a, 1), a);
        }
        // (x+1)^2 = x^2 + 1 mod x^3 + x + 1
        assert_eq!(f.mul(3, 3), 5);
    }

    #[test]
    fn mul_is_commutative_and_associative() {
        let f = FieldSpec::with_default_modulus(8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let (a, b, c): (u32, u32, u32) = (
                rng.random_range(0..f.order()),
                rng.random_range(0..f.order()),
                rng.random_range(0..f.order()),
            );
            assert_eq!(f.mul(a, b), f.mul(b, a));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
        }
    }

    #[test]
    fn inv_is_exhaustively_correct() {
        for n in 1..=12 {
            let f = FieldSpec::with_default_modulus(n).unwrap();
            assert_eq!(f.inv(0), 0);
            for a in 1..f.order() {
                assert_eq!(f.mul(a, f.inv(a)), 1, "n={n}, a={a}");
            }
        }
    }

    #[test]
    fn pow_conventions() {
        let f = FieldSpec::with_default_modulus(6).unwrap();
        assert_eq!(f.pow(0, 0), 1);
        for a in 0..f.order() {
            assert_eq!(f.pow(a, 1), a);
            assert_eq!(f.pow(a, 2), f.mul(a, a));
            if a != 0 {
                assert_eq!(f.pow(a, f.order() as u64 - 1), 1);
            } else {
                assert_eq!(f.pow(0, 5), 0);
            }
        }
    }

    #[test]
    fn trace_is_linear_and_balanced() {
        for n in [3, 4, 7, 8] {
            let f = FieldSpec::with_default_modulus(n).unwrap();
            assert_eq!(f.trace(0), 0);
            assert_eq!(f.trace(1), n % 2);
            let zeros = (0..f.order()).filter(|&a| f.trace(a) == 0).count();
            assert_eq!(zeros as u32, f.order() / 2);
            let mut rng = ChaCha8Rng::seed_from_u64(2);
            for _ in 0..100 {
                let a = rng.random_range(0..f.order());
                let b = rng.random_range(0..f.order());
                assert_eq!(f.trace(a ^ b), f.trace(a) ^ f.trace(b));
            }
        }
    }

    #[test]
    fn dual_mask_realizes_trace_pairing() {
        for n in [3, 5, 8] {
            let f = FieldSpec::with_default_modulus(n).unwrap();
            for v in 0..f.order() {
                let w = f.dual_mask(v);
                for y in 0..f.order() {
                    assert_eq!(f.trace(f.mul(v, y)), (w & y).count_ones() & 1);
                }
            }
        }
    }

    #[test]
    fn kloosterman_basics() {
        // K(0) sums a balanced trace over the 2^n - 1 nonzero elements.
        for n in 2..=8 {
            let f = FieldSpec::with_default_modulus(n).unwrap();
            assert_eq!(f.kloosterman(0), -1, "n={n}");
        }
        // Weil bound at n=4.
        let f = FieldSpec::with_default_modulus(4).unwrap();
        let k1 = f.kloosterman(1);
        assert!(k1.abs() <= 8, "K(1)={k1}");
    }

    #[test]
    fn kloosterman_is_minus_one_mod_four() {
        for n in 2..=10 {
            let f = FieldSpec::with_default_modulus(n).unwrap();
            for a in 0..f.order() {
                assert_eq!(f.kloosterman(a).rem_euclid(4), 3, "n={n}, a={a}");
            }
        }
    }
}
