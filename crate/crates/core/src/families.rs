//! Constructors for the classical power-map families over GF(2^n) and
//! closed-form spectrum oracles for them: Kloosterman values for the
//! inverse map, the Gold-Walsh route to Kasami autocorrelations, the
//! quadratic two-value law, the Bracken-Leander three-value law, and the
//! hyperplane permutation attached to crooked functions.
//!
//! Field-defined families pair masks with the trace form; every oracle here
//! is checked against the generic table pipeline in the verification suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2n::FieldSpec;
use crate::tables::{act_from_ddt, SpectrumMultiset};
use crate::transforms::{fwht_in_place, walsh_table, SignedTable, TableKind};
use crate::vbf::{Convention, Vbf};

/// The supported function families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// `x^d` for an arbitrary exponent.
    Monomial { exponent: u64 },
    /// `x^(2^i + 1)`.
    Gold { i: u32 },
    /// `x^(4^i - 2^i + 1)`.
    Kasami { i: u32 },
    /// `x^(2^((n-1)/2) + 3)`, n odd.
    Welch,
    /// `x^(2^n - 2)`, with 0 mapped to 0.
    Inverse,
    /// `x^(q^2 + q + 1)` over GF(q^4), q = 2^k.
    BrackenLeander { k: u32 },
    /// `sum a_ij x^(2^i + 2^j)` with seeded random coefficients.
    RandomQuadratic { seed: u64 },
}

impl FamilyKind {
    /// Monomial exponent for the power-map kinds, given the field degree.
    pub fn exponent(&self, n: u32) -> Option<u64> {
        match *self {
            FamilyKind::Monomial { exponent } => Some(exponent),
            FamilyKind::Gold { i } => Some((1 << i) + 1),
            FamilyKind::Kasami { i } => Some((1 << (2 * i)) - (1 << i) + 1),
            FamilyKind::Welch => Some((1 << ((n - 1) / 2)) + 3),
            FamilyKind::Inverse => Some((1 << n) - 2),
            FamilyKind::BrackenLeander { k } => {
                let q = 1u64 << k;
                Some(q * q + q + 1)
            }
            FamilyKind::RandomQuadratic { .. } => None,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            FamilyKind::Monomial { exponent } => format!("monomial:d={exponent}"),
            FamilyKind::Gold { i } => format!("gold:i={i}"),
            FamilyKind::Kasami { i } => format!("kasami:i={i}"),
            FamilyKind::Welch => "welch".into(),
            FamilyKind::Inverse => "inverse".into(),
            FamilyKind::BrackenLeander { k } => format!("bl:k={k}"),
            FamilyKind::RandomQuadratic { seed } => format!("quad:seed={seed}"),
        }
    }
}

/// A family instance bound to a concrete field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    kind: FamilyKind,
    field: FieldSpec,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, field: FieldSpec) -> Result<Self> {
        let n = field.n();
        let bad = |msg: String| Err(Error::InvalidFamilyParameter(msg));
        match kind {
            FamilyKind::Gold { i } | FamilyKind::Kasami { i } => {
                if i == 0 || i >= n {
                    return bad(format!("exponent parameter i={i} must satisfy 0 < i < {n}"));
                }
            }
            FamilyKind::Welch => {
                if n % 2 == 0 {
                    return bad(format!("Welch exponent needs odd n, got {n}"));
                }
            }
            FamilyKind::BrackenLeander { k } => {
                if k == 0 || 4 * k != n {
                    return bad(format!("Bracken-Leander needs n = 4k, got n={n}, k={k}"));
                }
            }
            _ => {}
        }
        Ok(FamilySpec { kind, field })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// The trace pairing over this instance's field.
    pub fn convention(&self) -> Convention {
        Convention::Trace(self.field)
    }

    pub fn build(&self) -> Vbf {
        let n = self.field.n();
        let table: Vec<u32> = match self.kind {
            FamilyKind::RandomQuadratic { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let coeffs: Vec<(u32, u32, u32)> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .map(|(i, j)| (i, j, rng.random_range(0..self.field.order())))
                    .collect();
                (0..self.field.order())
                    .map(|x| {
                        // Frobenius powers x^(2^i), accumulated once per x.
                        let mut frob = vec![x; n as usize];
                        for i in 1..n as usize {
                            frob[i] = self.field.mul(frob[i - 1], frob[i - 1]);
                        }
                        coeffs.iter().fold(0, |acc, &(i, j, a)| {
                            acc ^ self
                                .field
                                .mul(a, self.field.mul(frob[i as usize], frob[j as usize]))
                        })
                    })
                    .collect()
            }
            _ => {
                let d = self.kind.exponent(n).expect("power-map family");
                (0..self.field.order())
                    .map(|x| self.field.pow(x, d))
                    .collect()
            }
        };
        Vbf::new(n, n, table).expect("family tables are well-formed")
    }
}

/// Inverse of `d` modulo `m` by the extended Euclidean algorithm.
pub fn mod_inverse(d: u64, modulus: u64) -> Result<u64> {
    let (mut r0, mut r1) = (modulus as i128, (d % modulus) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::ExponentNotInvertible {
            exponent: d,
            modulus,
        });
    }
    Ok(s0.rem_euclid(modulus as i128) as u64)
}

/// Autocorrelation row u=1 of `x^d` under the trace pairing, as a multiset
/// over v != 0. For a monomial this already carries every distinct
/// spectrum value.
pub fn monomial_row_spectrum(d: u64, field: &FieldSpec) -> SpectrumMultiset {
    let row = monomial_first_row(d, field);
    (1..field.order()).map(|v| row[v as usize]).collect()
}

fn monomial_first_row(d: u64, field: &FieldSpec) -> Vec<i64> {
    let order = field.order();
    let mut counts = vec![0i64; order as usize];
    for x in 0..order {
        counts[(field.pow(x, d) ^ field.pow(x ^ 1, d)) as usize] += 1;
    }
    fwht_in_place(&mut counts);
    (0..order)
        .map(|v| counts[field.dual_mask(v) as usize])
        .collect()
}

/// Full autocorrelation spectrum of `x^d` rebuilt from row u=1 through the
/// scaling `AC(u,v) = AC(1, v*u^d)`, iterating every row.
pub fn monomial_spectrum_fast(d: u64, field: &FieldSpec) -> SpectrumMultiset {
    let row = monomial_first_row(d, field);
    let order = field.order();
    let mut spectrum = SpectrumMultiset::new();
    for u in 1..order {
        let ud = field.pow(u, d);
        for v in 1..order {
            spectrum.insert(row[field.mul(v, ud) as usize]);
        }
    }
    spectrum
}

/// Column v=1 of the autocorrelation of `x^d` as a multiset over u != 0.
/// When gcd(d, 2^n - 1) = 1 this equals the row u=1 multiset.
pub fn monomial_spectrum_via_column(d: u64, field: &FieldSpec) -> Result<SpectrumMultiset> {
    let order = field.order();
    mod_inverse(d, order as u64 - 1)?;
    let powers: Vec<u32> = (0..order).map(|x| field.pow(x, d)).collect();
    let trace_sign: Vec<i64> = (0..order).map(|y| 1 - 2 * field.trace(y) as i64).collect();
    Ok((1..order)
        .map(|u| {
            (0..order)
                .map(|x| trace_sign[(powers[x as usize] ^ powers[(x ^ u) as usize]) as usize])
                .sum()
        })
        .collect())
}

/// Predicted autocorrelation spectrum of the inverse map: the value
/// `K(v) - 1 + 2*(-1)^Tr(v)` for every nonzero v, each counted once per
/// nonzero row.
pub fn expected_inverse_spectrum(field: &FieldSpec) -> SpectrumMultiset {
    let per_row: SpectrumMultiset = (1..field.order())
        .map(|v| {
            let sign = 1 - 2 * field.trace(v) as i64;
            field.kloosterman(v) - 1 + 2 * sign
        })
        .collect();
    per_row.scaled(field.order() as u64 - 1)
}

/// Autocorrelation table of the Kasami map `x^(4^i - 2^i + 1)` computed as
/// negated Walsh values of the Gold component `Tr(x^(2^i + 1))`:
/// entry (u,v) is `-W_g(u * v^(1/d))` for nonzero u, v. Needs n odd, not
/// divisible by 3, and `3i = +-1 (mod n)`.
pub fn kasami_act_via_gold(i: u32, field: &FieldSpec) -> Result<SignedTable> {
    let n = field.n();
    let congruence = (3 * i) % n;
    if n % 2 == 0 || n % 3 == 0 || (congruence != 1 && congruence != n - 1) {
        return Err(Error::InvalidFamilyParameter(format!(
            "Kasami-Gold route needs odd n not divisible by 3 and 3i = +-1 mod n (n={n}, i={i})"
        )));
    }
    let order = field.order() as usize;
    let d = FamilyKind::Kasami { i }.exponent(n).unwrap();
    let d_inv = mod_inverse(d, order as u64 - 1)?;

    let gold_exp = (1u64 << i) + 1;
    let mut signs: Vec<i64> = (0..order as u32)
        .map(|x| 1 - 2 * field.trace(field.pow(x, gold_exp)) as i64)
        .collect();
    fwht_in_place(&mut signs);
    let gold_walsh: Vec<i64> = (0..order as u32)
        .map(|a| signs[field.dual_mask(a) as usize])
        .collect();

    let full = 1i64 << n;
    let mut data = vec![full; order * order];
    for v in 1..order as u32 {
        let root = field.pow(v, d_inv);
        for u in 1..order as u32 {
            data[u as usize * order + v as usize] = -gold_walsh[field.mul(u, root) as usize];
        }
    }
    Ok(SignedTable::new(
        TableKind::Act,
        n,
        n,
        Convention::Trace(*field),
        data,
    ))
}

/// Checks the quadratic autocorrelation law: every value in {0, +-2^n} and
/// absolute indicator exactly 2^n.
pub fn quadratic_kernel_check(f: &Vbf) -> bool {
    let a = act_from_ddt(f, &Convention::Dot).expect("dot convention always applies");
    let full = 1i64 << f.n();
    let mut max = 0;
    for u in 1..a.rows() as u32 {
        for &x in &a.row(u)[1..] {
            if x != 0 && x.abs() != full {
                return false;
            }
            max = max.max(x.abs());
        }
    }
    max == full
}

/// Checks the Bracken-Leander law over GF(2^(4k)): autocorrelation values
/// inside {-q^3, 0, q^3} with absolute indicator q^3, q = 2^k.
pub fn bracken_leander_check(k: u32) -> Result<bool> {
    if k == 0 || k > 3 {
        return Err(Error::InvalidFamilyParameter(format!(
            "full-table Bracken-Leander check supports 1 <= k <= 3, got {k}"
        )));
    }
    let field = FieldSpec::with_default_modulus(4 * k)?;
    let f = FamilySpec::new(FamilyKind::BrackenLeander { k }, field)?.build();
    let spectrum = SpectrumMultiset::from_table(&act_from_ddt(&f, &Convention::Dot)?);
    let q3 = 1i64 << (3 * k);
    let values_ok = spectrum
        .value_set()
        .iter()
        .all(|&x| x == 0 || x.abs() == q3);
    Ok(values_ok && spectrum.max_abs() == q3)
}

/// The hyperplane permutation of a crooked function: `pi(u)` is the field
/// element whose trace-orthogonal hyperplane is the complement of
/// `Im(D_u F)`, with `pi(0) = 0`. Validates that the autocorrelation of
/// `F^-1` equals the negated Walsh table of `pi` with swapped mask roles.
pub fn crooked_pi(f: &Vbf, field: &FieldSpec) -> Result<Vbf> {
    let n = f.n();
    if n != field.n() || n % 2 == 0 || f.algebraic_degree() != 2 {
        return Err(Error::InvalidFamilyParameter(
            "crooked extraction needs a quadratic function over its field, n odd".into(),
        ));
    }
    if !f.is_permutation() {
        return Err(Error::NotAPermutation);
    }
    if !crate::properties::is_apn(f) {
        return Err(Error::NotApn);
    }

    let order = field.order();
    // Invert the dual-mask coordinate change once.
    let mut undual = vec![0u32; order as usize];
    for v in 0..order {
        undual[field.dual_mask(v) as usize] = v;
    }

    let mut table = vec![0u32; order as usize];
    for u in 1..order {
        let image = f.derivative(u).image_indicator();
        // The non-image must be a linear hyperplane; collect a basis.
        let mut basis: Vec<u32> = Vec::with_capacity(n as usize - 1);
        let mut outside = 0usize;
        for y in 0..order {
            if image.get(y) == 0 {
                outside += 1;
                let mut r = y;
                for &b in &basis {
                    r = r.min(r ^ b);
                }
                if r != 0 {
                    basis.push(r);
                }
            }
        }
        if outside != order as usize / 2 || basis.len() != n as usize - 1 {
            return Err(Error::NotCrooked { u });
        }
        // One-dimensional null space of the basis rows.
        let h = hyperplane_normal(&basis, n).ok_or(Error::NotCrooked { u })?;
        table[u as usize] = undual[h as usize];
    }
    let pi = Vbf::new(n, n, table)?;
    if !pi.is_permutation() {
        return Err(Error::NotCrooked { u: 0 });
    }

    // Transport law: AC_{F^-1}(u,v) = -W_pi(v,u) on nonzero masks.
    let conv = Convention::Trace(*field);
    let act_inv = act_from_ddt(&f.inverse()?, &conv)?;
    let w_pi = walsh_table(&pi, &conv)?;
    for u in 1..order {
        for v in 1..order {
            if act_inv.get(u, v) != -w_pi.get(v, u) {
                return Err(Error::NotCrooked { u });
            }
        }
    }
    Ok(pi)
}

/// Reduces the basis rows and extracts the unique nonzero vector orthogonal
/// to all of them under the dot pairing.
fn hyperplane_normal(basis: &[u32], n: u32) -> Option<u32> {
    let mut rows = basis.to_vec();
    let mut pivots = Vec::new();
    for bit in (0..n).rev() {
        if let Some(idx) = (pivots.len()..rows.len()).find(|&r| rows[r] >> bit & 1 != 0) {
            rows.swap(pivots.len(), idx);
            let pivot = rows[pivots.len()];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != pivots.len() && *row >> bit & 1 != 0 {
                    *row ^= pivot;
                }
            }
            pivots.push(bit);
        }
    }
    let free_bit = (0..n).rev().find(|b| !pivots.contains(b))?;
    let mut h = 1u32 << free_bit;
    for (row, &pivot_bit) in rows.iter().zip(&pivots) {
        if row >> free_bit & 1 != 0 {
            h |= 1 << pivot_bit;
        }
    }
    Some(h)
}

/// Upper bounds on the absolute indicator of the Welch map (`2^((n+5)/2)`,
/// n odd) and the Kasami map (`(4^i - 2^(i+1)) * 2^(n/2)`).
pub fn welch_kasami_bounds(n: u32, i: u32) -> Result<(f64, f64)> {
    if n % 2 == 0 {
        return Err(Error::InvalidFamilyParameter(format!(
            "Welch bound needs odd n, got {n}"
        )));
    }
    let welch = (1u64 << ((n + 5) / 2)) as f64;
    let kasami = ((1u64 << (2 * i)) - (1u64 << (i + 1))) as f64 * (n as f64 / 2.0).exp2();
    Ok((welch, kasami))
}

/// Exact form of the Welch bound check, `delta <= 2^((n+5)/2)`.
pub fn welch_bound_holds(delta: i64, n: u32) -> bool {
    n % 2 == 1 && delta <= 1i64 << ((n + 5) / 2)
}

/// Exact form of the Kasami bound check,
/// `delta^2 <= (4^i - 2^(i+1))^2 * 2^n`.
pub fn kasami_bound_holds(delta: i64, n: u32, i: u32) -> bool {
    let factor = (1u128 << (2 * i)) - (1u128 << (i + 1));
    (delta as u128).pow(2) <= factor * factor * (1u128 << n)
}

/// Distinct autocorrelation values of `x^(2^i+1)`, split by n' = n/gcd(i,n):
/// `{0, 2^n}` for n' even, `{-2^n, 0}` for n' odd with gcd 1, and all three
/// otherwise.
pub fn gold_expected_value_set(n: u32, i: u32) -> Vec<i64> {
    let mut a = i;
    let mut b = n;
    while b != 0 {
        (a, b) = (b, a % b);
    }
    let n_prime = n / a;
    let full = 1i64 << n;
    if n_prime % 2 == 0 {
        vec![0, full]
    } else if a == 1 {
        vec![-full, 0]
    } else {
        vec![-full, 0, full]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::autocorrelation_spectrum;

    fn field(n: u32) -> FieldSpec {
        FieldSpec::with_default_modulus(n).unwrap()
    }

    fn build(kind: FamilyKind, n: u32) -> Vbf {
        FamilySpec::new(kind, field(n)).unwrap().build()
    }

    #[test]
    fn build_validations() {
        assert!(FamilySpec::new(FamilyKind::Gold { i: 0 }, field(5)).is_err());
        assert!(FamilySpec::new(FamilyKind::Kasami { i: 5 }, field(5)).is_err());
        assert!(FamilySpec::new(FamilyKind::Welch, field(6)).is_err());
        assert!(FamilySpec::new(FamilyKind::BrackenLeander { k: 2 }, field(6)).is_err());
        assert!(FamilySpec::new(FamilyKind::BrackenLeander { k: 2 }, field(8)).is_ok());
    }

    #[test]
    fn built_tables_match_power_evaluation() {
        let f3 = field(3);
        let gold = build(FamilyKind::Gold { i: 1 }, 3);
        for x in 0..8 {
            assert_eq!(gold.eval(x), f3.pow(x, 3));
        }
        assert!(gold.is_permutation());

        let inv = build(FamilyKind::Inverse, 4);
        assert_eq!(inv.eval(0), 0);
        assert_eq!(inv.eval(1), 1);
        assert!(inv.is_permutation());

        // q = 2 turns the Bracken-Leander exponent into 7.
        let bl = build(FamilyKind::BrackenLeander { k: 1 }, 4);
        let f4 = field(4);
        for x in 0..16 {
            assert_eq!(bl.eval(x), f4.pow(x, 7));
        }

        let quad = build(FamilyKind::RandomQuadratic { seed: 9 }, 6);
        assert_eq!(quad.algebraic_degree(), 2);
        assert_eq!(
            quad,
            build(FamilyKind::RandomQuadratic { seed: 9 }, 6),
            "seeded construction is reproducible"
        );
    }

    #[test]
    fn mod_inverse_edge_cases() {
        assert_eq!(mod_inverse(3, 31).unwrap(), 21);
        assert_eq!(mod_inverse(21, 31).unwrap(), 3);
        assert!(mod_inverse(3, 63).is_err());
    }

    #[test]
    fn monomial_row_carries_all_spectrum_values() {
        let f5 = field(5);
        let full = autocorrelation_spectrum(&build(FamilyKind::Gold { i: 1 }, 5));
        let row = monomial_row_spectrum(3, &f5);
        assert_eq!(row.value_set(), full.value_set());
        assert_eq!(monomial_spectrum_fast(3, &f5), full);

        // Bijective exponent: the v=1 column carries the same multiset.
        let col = monomial_spectrum_via_column(3, &f5).unwrap();
        assert_eq!(col, row);

        // gcd(21, 63) > 1 has no column reduction.
        assert!(monomial_spectrum_via_column(21, &field(6)).is_err());
    }

    #[test]
    fn inverse_spectrum_from_kloosterman_sums() {
        for n in 4..=8 {
            let fld = field(n);
            let predicted = expected_inverse_spectrum(&fld);
            let actual = autocorrelation_spectrum(&build(FamilyKind::Inverse, n));
            assert_eq!(predicted, actual, "n={n}");
        }
        // Seven-bit value set from the Kloosterman route.
        let seven = expected_inverse_spectrum(&field(7));
        assert_eq!(seven.value_set(), vec![-24, -16, -8, 0, 8, 16]);
    }

    #[test]
    fn kasami_table_matches_gold_walsh_route() {
        let fld = field(7);
        for i in [2u32, 5] {
            let via_gold = kasami_act_via_gold(i, &fld).unwrap();
            let spec = FamilySpec::new(FamilyKind::Kasami { i }, fld).unwrap();
            let direct = act_from_ddt(&spec.build(), &spec.convention()).unwrap();
            assert_eq!(via_gold.data(), direct.data(), "i={i}");
            assert_eq!(via_gold.max_abs_nontrivial(), 16);
        }
        // 3*3 = 2 mod 7 fails the congruence; n=9 is divisible by 3.
        assert!(kasami_act_via_gold(3, &fld).is_err());
        assert!(kasami_act_via_gold(2, &field(9)).is_err());
    }

    #[test]
    fn gold_walsh_support_is_the_gold_trace_set() {
        // The Walsh support of Tr(x^d), d the Kasami exponent, is exactly
        // {x : Tr(x^(2^i+1)) = 1}.
        let fld = field(7);
        for i in [2u32, 5] {
            let kasami = build(FamilyKind::Kasami { i }, 7);
            let comp = kasami.component(1, &Convention::Trace(fld)).unwrap();
            let w = crate::transforms::walsh_spectrum(&comp, &Convention::Trace(fld)).unwrap();
            let gold_exp = (1u64 << i) + 1;
            for x in 0..fld.order() {
                let in_support = w[x as usize] != 0;
                assert_eq!(
                    in_support,
                    fld.trace(fld.pow(x, gold_exp)) == 1,
                    "i={i} x={x}"
                );
            }
        }
    }

    #[test]
    fn quadratic_law_and_negative_control() {
        assert!(quadratic_kernel_check(&build(FamilyKind::Gold { i: 1 }, 6)));
        assert!(quadratic_kernel_check(&build(
            FamilyKind::RandomQuadratic { seed: 3 },
            7
        )));
        // Cubic control must fail the two-value law.
        assert!(!quadratic_kernel_check(&build(
            FamilyKind::Kasami { i: 2 },
            7
        )));
    }

    #[test]
    fn bracken_leander_three_values() {
        assert!(bracken_leander_check(1).unwrap());
        assert!(bracken_leander_check(2).unwrap());
        assert!(bracken_leander_check(4).is_err());
    }

    #[test]
    fn crooked_pi_recovers_the_power_form() {
        let fld = field(5);
        let gold = build(FamilyKind::Gold { i: 1 }, 5);
        let pi = crooked_pi(&gold, &fld).unwrap();
        // pi(x) = x^(2^n - 2^i - 2) = x^28 for n=5, i=1.
        for x in 0..32 {
            assert_eq!(pi.eval(x), fld.pow(x, 28));
        }
        // The inverse of a Gold permutation over GF(2^5) stays at 8.
        let inv_act = act_from_ddt(&gold.inverse().unwrap(), &Convention::Dot).unwrap();
        assert_eq!(inv_act.max_abs_nontrivial(), 8);

        assert!(crooked_pi(&build(FamilyKind::Kasami { i: 2 }, 7), &field(7)).is_err());
        assert!(crooked_pi(&build(FamilyKind::Gold { i: 2 }, 6), &field(6)).is_err());
    }

    #[test]
    fn bounds_for_welch_and_kasami() {
        let (w, k) = welch_kasami_bounds(7, 2).unwrap();
        assert_eq!(w, 64.0);
        assert_eq!(k, 8.0 * 2f64.powf(3.5));
        assert!(welch_kasami_bounds(8, 2).is_err());
        assert!(welch_bound_holds(64, 7));
        assert!(!welch_bound_holds(65, 7));
        assert!(kasami_bound_holds(16, 7, 2));
        // Bounds grow with i for fixed n.
        let (_, k3) = welch_kasami_bounds(7, 3).unwrap();
        assert!(k3 > k);
    }

    #[test]
    fn gold_walsh_values_are_three_valued() {
        // An AB instance: every nonzero LAT column takes values in {0, +-8}.
        let gold = build(FamilyKind::Gold { i: 1 }, 5);
        let lat = walsh_table(&gold, &Convention::Dot).unwrap();
        for v in 1..32u32 {
            for u in 0..32u32 {
                let w = lat.get(u, v);
                assert!(w == 0 || w.abs() == 8, "u={u} v={v}: {w}");
            }
        }
    }

    #[test]
    fn kasami_second_derivatives_are_affine() {
        let kasami = build(FamilyKind::Kasami { i: 2 }, 7);
        assert_eq!(kasami.algebraic_degree(), 3);
        for (u, w) in [(1u32, 2u32), (5, 9), (77, 100), (127, 1)] {
            assert!(kasami.second_derivative(u, w).algebraic_degree() <= 1);
        }
    }

    #[test]
    fn gold_value_sets_follow_the_three_cases() {
        for (n, i) in [(5u32, 1u32), (6, 2), (6, 3), (4, 2), (7, 3), (9, 3)] {
            let spec = autocorrelation_spectrum(&build(FamilyKind::Gold { i }, n));
            assert_eq!(
                spec.value_set(),
                gold_expected_value_set(n, i),
                "n={n} i={i}"
            );
        }
    }
}
