//! Truth-table representation of (n,m)-functions and the elementary
//! operations on them: components, derivatives, algebraic normal form,
//! permutation tests and image indicators.

use crate::error::{Error, Result};
use crate::gf2n::FieldSpec;

/// Memory guard: a function table plus any of its 2^n x 2^m analysis tables
/// must stay desk-sized.
pub const MAX_TOTAL_BITS: u32 = 28;

/// Inner product used when a mask is paired with a function value.
///
/// `Dot` is the parity of the bitwise AND. `Trace` pairs field elements as
/// `Tr(v * y)`; it requires n = m = field degree. Multiset-level results
/// (spectra, indicators) are identical under both; entry positions differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    Dot,
    Trace(FieldSpec),
}

impl Convention {
    /// `<a, b>` in {0, 1}.
    pub fn pair(&self, a: u32, b: u32) -> u32 {
        match self {
            Convention::Dot => (a & b).count_ones() & 1,
            Convention::Trace(f) => f.trace(f.mul(a, b)),
        }
    }

    /// The mask `w` with `<v, y> = dot(w, y)` for all `y`.
    pub fn dual_mask(&self, v: u32) -> u32 {
        match self {
            Convention::Dot => v,
            Convention::Trace(f) => f.dual_mask(v),
        }
    }

    pub(crate) fn check_dims(&self, n: u32, m: u32) -> Result<()> {
        match self {
            Convention::Dot => Ok(()),
            Convention::Trace(f) if n == m && n == f.n() => Ok(()),
            Convention::Trace(f) => Err(Error::TraceDimensionMismatch { n, m, field: f.n() }),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Convention::Dot => "dot",
            Convention::Trace(_) => "trace",
        }
    }
}

/// An (n,m)-function stored as a full table of 2^n output words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vbf {
    n: u32,
    m: u32,
    table: Vec<u32>,
}

impl Vbf {
    pub fn new(n: u32, m: u32, table: Vec<u32>) -> Result<Self> {
        if n == 0 || m == 0 || n + m > MAX_TOTAL_BITS {
            return Err(Error::DimensionOutOfRange { n, m });
        }
        let expected = 1usize << n;
        if table.len() != expected {
            return Err(Error::WrongTableLength {
                expected,
                got: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&y| y >> m != 0) {
            return Err(Error::EntryOutOfRange {
                value: bad as u64,
                m,
            });
        }
        Ok(Vbf { n, m, table })
    }

    /// Builds from a bare table, inferring n from the length and m from the
    /// widest entry.
    pub fn from_table(table: Vec<u32>) -> Result<Self> {
        if table.len() < 2 || !table.len().is_power_of_two() {
            return Err(Error::LengthNotPowerOfTwo(table.len()));
        }
        let n = table.len().trailing_zeros();
        let widest = table.iter().copied().max().unwrap_or(0);
        let m = (32 - widest.leading_zeros()).max(1);
        Vbf::new(n, m, table)
    }

    /// Parses a whitespace- or comma-separated list of decimal or 0x-hex
    /// entries; `#` starts a comment that runs to end of line. Dimensions
    /// are inferred when not given.
    pub fn parse(text: &str, n: Option<u32>, m: Option<u32>) -> Result<Self> {
        let mut table = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("");
            for tok in line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                let value = match tok.strip_prefix("0x").or_else(|| tok.strip_prefix("0X")) {
                    Some(hex) => u64::from_str_radix(hex, 16),
                    None => tok.parse::<u64>(),
                }
                .map_err(|_| Error::MalformedToken(tok.to_string()))?;
                if value >> MAX_TOTAL_BITS != 0 {
                    return Err(Error::EntryOutOfRange {
                        value,
                        m: m.unwrap_or(MAX_TOTAL_BITS),
                    });
                }
                table.push(value as u32);
            }
        }
        if let Some(n) = n {
            let expected = 1usize
                .checked_shl(n)
                .filter(|_| n <= MAX_TOTAL_BITS)
                .ok_or(Error::DimensionOutOfRange {
                    n,
                    m: m.unwrap_or(1),
                })?;
            if table.len() != expected {
                return Err(Error::WrongTableLength {
                    expected,
                    got: table.len(),
                });
            }
            match m {
                Some(m) => Vbf::new(n, m, table),
                None => {
                    let widest = table.iter().copied().max().unwrap_or(0);
                    Vbf::new(n, (32 - widest.leading_zeros()).max(1), table)
                }
            }
        } else if let Some(m) = m {
            let f = Vbf::from_table(table)?;
            Vbf::new(f.n, m, f.table)
        } else {
            Vbf::from_table(table)
        }
    }

    pub fn identity(n: u32) -> Self {
        Vbf {
            n,
            m: n,
            table: (0..1u32 << n).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// 2^n, the number of inputs.
    pub fn input_count(&self) -> usize {
        1 << self.n
    }

    /// 2^m, the number of possible outputs.
    pub fn output_count(&self) -> usize {
        1 << self.m
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    /// The component Boolean function `x -> <v, F(x)>`.
    pub fn component(&self, v: u32, conv: &Convention) -> Result<BooleanFunction> {
        assert!(v >> self.m == 0, "mask v out of range");
        conv.check_dims(self.n, self.m)?;
        let dv = conv.dual_mask(v);
        let bits = self
            .table
            .iter()
            .map(|&y| ((dv & y).count_ones() & 1) as u8)
            .collect();
        Ok(BooleanFunction { n: self.n, bits })
    }

    /// The derivative `x -> F(x) + F(x + u)`.
    pub fn derivative(&self, u: u32) -> Vbf {
        assert!(u >> self.n == 0, "direction u out of range");
        let table = (0..self.input_count())
            .map(|x| self.table[x] ^ self.table[x ^ u as usize])
            .collect();
        Vbf {
            n: self.n,
            m: self.m,
            table,
        }
    }

    /// The order-two derivative `D_u D_w F`.
    pub fn second_derivative(&self, u: u32, w: u32) -> Vbf {
        self.derivative(w).derivative(u)
    }

    /// Algebraic normal form via the binary Mobius transform.
    pub fn anf(&self) -> Anf {
        let mut coeffs = self.table.clone();
        binary_mobius(&mut coeffs);
        Anf {
            n: self.n,
            m: self.m,
            coeffs,
        }
    }

    pub fn algebraic_degree(&self) -> u32 {
        self.anf().degree()
    }

    pub fn is_permutation(&self) -> bool {
        if self.n != self.m {
            return false;
        }
        let mut seen = vec![false; self.input_count()];
        for &y in &self.table {
            if std::mem::replace(&mut seen[y as usize], true) {
                return false;
            }
        }
        true
    }

    /// Compositional inverse of a permutation.
    pub fn inverse(&self) -> Result<Vbf> {
        if !self.is_permutation() {
            return Err(Error::NotAPermutation);
        }
        let mut table = vec![0u32; self.input_count()];
        for (x, &y) in self.table.iter().enumerate() {
            table[y as usize] = x as u32;
        }
        Ok(Vbf {
            n: self.n,
            m: self.m,
            table,
        })
    }

    /// Indicator of the image set, as a Boolean function of m variables.
    pub fn image_indicator(&self) -> BooleanFunction {
        let mut bits = vec![0u8; self.output_count()];
        for &y in &self.table {
            bits[y as usize] = 1;
        }
        BooleanFunction { n: self.m, bits }
    }
}

/// An n-variable Boolean function as a 2^n bit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    n: u32,
    bits: Vec<u8>,
}

impl BooleanFunction {
    pub fn new(n: u32, bits: Vec<u8>) -> Result<Self> {
        if bits.len() != 1 << n {
            return Err(Error::WrongTableLength {
                expected: 1 << n,
                got: bits.len(),
            });
        }
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Ok(BooleanFunction { n, bits })
    }

    pub fn from_fn(n: u32, f: impl Fn(u32) -> u32) -> Self {
        BooleanFunction {
            n,
            bits: (0..1u32 << n).map(|x| (f(x) & 1) as u8).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn get(&self, x: u32) -> u8 {
        self.bits[x as usize]
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.weight() == self.bits.len()
    }

    /// The +-1 sequence `(-1)^f(x)`.
    pub fn signs(&self) -> Vec<i64> {
        self.bits.iter().map(|&b| 1 - 2 * b as i64).collect()
    }

    pub fn xor(&self, other: &BooleanFunction) -> BooleanFunction {
        assert_eq!(self.n, other.n);
        BooleanFunction {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a ^ b)
                .collect(),
        }
    }
}

/// Algebraic normal form of an (n,m)-function: the m-bit coefficient of the
/// monomial with support mask `s` sits at index `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anf {
    n: u32,
    m: u32,
    coeffs: Vec<u32>,
}

impl Anf {
    pub fn new(n: u32, m: u32, coeffs: Vec<u32>) -> Result<Self> {
        // Same shape constraints as a truth table; the Mobius transform is
        // an involution between the two.
        let table = Vbf::new(n, m, coeffs)?;
        Ok(Anf {
            n,
            m,
            coeffs: table.table,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coefficient(&self, mask: u32) -> u32 {
        self.coeffs[mask as usize]
    }

    /// Inverse Mobius transform back to the truth table.
    pub fn truth_table(&self) -> Vbf {
        let mut table = self.coeffs.clone();
        binary_mobius(&mut table);
        Vbf {
            n: self.n,
            m: self.m,
            table,
        }
    }

    /// Largest monomial support size with a nonzero coefficient; 0 for the
    /// zero function.
    pub fn degree(&self) -> u32 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(mask, _)| mask.count_ones())
            .max()
            .unwrap_or(0)
    }
}

/// In-place binary Mobius (zeta) transform on word-valued tables; an
/// involution, so it converts truth tables to ANF coefficients and back.
fn binary_mobius(words: &mut [u32]) {
    let k = words.len().trailing_zeros();
    for i in 0..k {
        let bit = 1usize << i;
        for x in 0..words.len() {
            if x & bit != 0 {
                words[x] ^= words[x ^ bit];
            }
        }
    }
}
