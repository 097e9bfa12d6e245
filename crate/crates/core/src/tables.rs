//! The four cryptanalytic tables (DDT, LAT, ACT, DLCT), spectra and scalar
//! indicators.
//!
//! The autocorrelation table is computable along three independent routes:
//! straight from the definition ([`act_direct`]), per-row from the DDT
//! ([`act_from_ddt`], the production path), and per-column from squared
//! Walsh coefficients ([`act_from_walsh`]). Cross-checking the three is a
//! product feature, not test-only code.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::Result;
use crate::transforms::{fwht_in_place, walsh_table, SignedTable, TableKind};
use crate::vbf::{Convention, Vbf};

/// A value -> count map for spectra such as the autocorrelation spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpectrumMultiset {
    entries: BTreeMap<i64, u64>,
}

impl SpectrumMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, value: i64) {
        *self.entries.entry(value).or_insert(0) += 1;
    }

    pub fn insert_count(&mut self, value: i64, count: u64) {
        if count > 0 {
            *self.entries.entry(value).or_insert(0) += count;
        }
    }

    /// Entries of a table over u != 0, v != 0.
    pub fn from_table(t: &SignedTable) -> Self {
        Self::collect_table(t, |x| x)
    }

    /// Absolute values of a table over u != 0, v != 0 (the extended
    /// spectrum).
    pub fn from_table_abs(t: &SignedTable) -> Self {
        Self::collect_table(t, |x| x.abs())
    }

    /// Histogram pass over the nontrivial grid; table values are bounded,
    /// so a flat counter beats per-entry map updates on big tables.
    fn collect_table(t: &SignedTable, map: impl Fn(i64) -> i64) -> Self {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for u in 1..t.rows() {
            for &x in &t.row(u as u32)[1..] {
                let x = map(x);
                lo = lo.min(x);
                hi = hi.max(x);
            }
        }
        if lo > hi {
            return SpectrumMultiset::new();
        }
        let mut histogram = vec![0u64; (hi - lo + 1) as usize];
        for u in 1..t.rows() {
            for &x in &t.row(u as u32)[1..] {
                histogram[(map(x) - lo) as usize] += 1;
            }
        }
        SpectrumMultiset {
            entries: histogram
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c > 0)
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }

    pub fn counts(&self) -> &BTreeMap<i64, u64> {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn count_of(&self, value: i64) -> u64 {
        self.entries.get(&value).copied().unwrap_or(0)
    }

    /// Distinct values, ascending.
    pub fn value_set(&self) -> Vec<i64> {
        self.entries.keys().copied().collect()
    }

    pub fn max_abs(&self) -> i64 {
        self.entries.keys().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn contains_value(&self, value: i64) -> bool {
        self.entries.contains_key(&value)
    }

    /// Multiplies every count, e.g. to extend a one-row spectrum to all rows.
    pub fn scaled(&self, k: u64) -> SpectrumMultiset {
        SpectrumMultiset {
            entries: self.entries.iter().map(|(&v, &c)| (v, c * k)).collect(),
        }
    }

    /// Sorted `[value, count]` pairs, the stable serialization order.
    pub fn to_pairs(&self) -> Vec<(i64, u64)> {
        self.entries.iter().map(|(&v, &c)| (v, c)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(
            self.to_pairs()
                .into_iter()
                .map(|(v, c)| serde_json::Value::from(vec![v, c as i64]))
                .collect::<Vec<_>>(),
        )
    }
}

impl FromIterator<i64> for SpectrumMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut s = SpectrumMultiset::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}^{c}")?;
        }
        write!(f, "}}")
    }
}

/// The scalar criteria read off the tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct IndicatorReport {
    pub differential_uniformity: i64,
    pub linearity: i64,
    pub nonlinearity: i64,
    pub absolute_indicator: i64,
    pub max_dlct: i64,
}

/// Differential distribution table: entry (u,v) counts solutions of
/// `F(x) + F(x+u) = v`.
pub fn ddt(f: &Vbf) -> SignedTable {
    let cols = f.output_count();
    let table = f.table();
    let data: Vec<i64> = (0..f.input_count())
        .into_par_iter()
        .flat_map_iter(|u| {
            let mut row = vec![0i64; cols];
            for x in 0..table.len() {
                row[(table[x] ^ table[x ^ u]) as usize] += 1;
            }
            row
        })
        .collect();
    SignedTable::new(TableKind::Ddt, f.n(), f.m(), Convention::Dot, data)
}

/// Autocorrelation table from the definition: entry (u,v) is
/// `sum_x (-1)^(v.(F(x) + F(x+u)))`. The slow reference route.
pub fn act_direct(f: &Vbf, conv: &Convention) -> Result<SignedTable> {
    conv.check_dims(f.n(), f.m())?;
    let cols = f.output_count();
    let duals: Vec<u32> = (0..cols as u32).map(|v| conv.dual_mask(v)).collect();
    let data: Vec<i64> = (0..f.input_count() as u32)
        .into_par_iter()
        .flat_map_iter(|u| {
            let deriv = f.derivative(u);
            duals
                .iter()
                .map(|&dv| {
                    deriv
                        .table()
                        .iter()
                        .map(|&y| 1 - 2 * ((dv & y).count_ones() & 1) as i64)
                        .sum()
                })
                .collect::<Vec<i64>>()
        })
        .collect();
    Ok(SignedTable::new(TableKind::Act, f.n(), f.m(), *conv, data))
}

/// Autocorrelation table with each row obtained as the Walsh-Hadamard
/// transform of the matching DDT row. Production path.
pub fn act_from_ddt(f: &Vbf, conv: &Convention) -> Result<SignedTable> {
    conv.check_dims(f.n(), f.m())?;
    let cols = f.output_count();
    let duals: Vec<usize> = (0..cols as u32)
        .map(|v| conv.dual_mask(v) as usize)
        .collect();
    let d = ddt(f);
    let data: Vec<i64> = d
        .data()
        .par_chunks_exact(cols)
        .flat_map_iter(|row| {
            let mut t = row.to_vec();
            fwht_in_place(&mut t);
            duals.iter().map(|&dv| t[dv]).collect::<Vec<i64>>()
        })
        .collect();
    Ok(SignedTable::new(TableKind::Act, f.n(), f.m(), *conv, data))
}

/// Shorthand for the production autocorrelation path.
pub fn act(f: &Vbf, conv: &Convention) -> Result<SignedTable> {
    act_from_ddt(f, conv)
}

/// Autocorrelation table with each column obtained as the scaled transform
/// of the squared Walsh column: `AC(u,v) = 2^-n sum_w (-1)^(u.w) W(w,v)^2`.
pub fn act_from_walsh(f: &Vbf, conv: &Convention) -> Result<SignedTable> {
    let lat = walsh_table(f, conv)?;
    let rows = f.input_count();
    let cols = f.output_count();
    let row_duals: Vec<usize> = (0..rows as u32)
        .map(|u| conv.dual_mask(u) as usize)
        .collect();
    let scale = 1i64 << f.n();
    let columns: Vec<Vec<i64>> = (0..cols as u32)
        .into_par_iter()
        .map(|v| {
            let mut t: Vec<i64> = (0..rows as u32).map(|w| lat.get(w, v).pow(2)).collect();
            fwht_in_place(&mut t);
            row_duals
                .iter()
                .map(|&du| {
                    let x = t[du];
                    assert!(
                        x % scale == 0,
                        "squared Walsh column must transform to multiples of 2^n"
                    );
                    x / scale
                })
                .collect()
        })
        .collect();
    let mut data = vec![0i64; rows * cols];
    for (v, col) in columns.iter().enumerate() {
        for u in 0..rows {
            data[u * cols + v] = col[u];
        }
    }
    Ok(SignedTable::new(TableKind::Act, f.n(), f.m(), *conv, data))
}

/// Differential-linear connectivity table, as half the autocorrelation.
pub fn dlct(f: &Vbf, conv: &Convention) -> Result<SignedTable> {
    let a = act_from_ddt(f, conv)?;
    let data = a
        .data()
        .iter()
        .map(|&x| {
            debug_assert!(x % 2 == 0);
            x / 2
        })
        .collect();
    Ok(SignedTable::new(TableKind::Dlct, f.n(), f.m(), *conv, data))
}

/// Differential-linear connectivity table by direct counting:
/// `#{x : v.F(x) = v.F(x+u)} - 2^(n-1)`. Reference route for [`dlct`].
pub fn dlct_direct(f: &Vbf, conv: &Convention) -> Result<SignedTable> {
    conv.check_dims(f.n(), f.m())?;
    let cols = f.output_count();
    let duals: Vec<u32> = (0..cols as u32).map(|v| conv.dual_mask(v)).collect();
    let half = (f.input_count() / 2) as i64;
    let data: Vec<i64> = (0..f.input_count() as u32)
        .into_par_iter()
        .flat_map_iter(|u| {
            let deriv = f.derivative(u);
            duals
                .iter()
                .map(|&dv| {
                    let agree = deriv
                        .table()
                        .iter()
                        .filter(|&&y| (dv & y).count_ones() & 1 == 0)
                        .count() as i64;
                    agree - half
                })
                .collect::<Vec<i64>>()
        })
        .collect();
    Ok(SignedTable::new(TableKind::Dlct, f.n(), f.m(), *conv, data))
}

/// Multiset of autocorrelation values over u != 0, v != 0. Convention-free.
pub fn autocorrelation_spectrum(f: &Vbf) -> SpectrumMultiset {
    let a = act_from_ddt(f, &Convention::Dot).expect("dot convention always applies");
    SpectrumMultiset::from_table(&a)
}

/// Row and column sum criterion for being a permutation (n = m): every
/// nonzero autocorrelation row sums to zero over all v (the row sum is
/// `2^m * DDT(u,0)`, zero exactly when nothing collides in direction u),
/// and every nonzero column sums to zero over all u (the column sum is
/// `W(0,v)^2`, zero exactly when component v is balanced).
pub fn permutation_zero_sum_criterion(f: &Vbf) -> (bool, bool) {
    let a = act_from_ddt(f, &Convention::Dot).expect("dot convention always applies");
    let rows_zero = (1..a.rows()).all(|u| a.row(u as u32).iter().sum::<i64>() == 0);
    let cols_zero = (1..a.cols()).all(|v| {
        (0..a.rows())
            .map(|u| a.get(u as u32, v as u32))
            .sum::<i64>()
            == 0
    });
    (rows_zero, cols_zero)
}

/// Differential uniformity, linearity, nonlinearity, absolute indicator and
/// the DLCT maximum, all from one pass over the tables.
pub fn indicators(f: &Vbf) -> IndicatorReport {
    let d = ddt(f);
    let mut delta = 0;
    for u in 1..d.rows() {
        for &x in d.row(u as u32) {
            delta = delta.max(x);
        }
    }

    let lat = walsh_table(f, &Convention::Dot).expect("dot convention always applies");
    let mut linearity = 0i64;
    for u in 0..lat.rows() {
        for &x in &lat.row(u as u32)[1..] {
            linearity = linearity.max(x.abs());
        }
    }
    debug_assert!(linearity % 2 == 0);

    let a = act_from_ddt(f, &Convention::Dot).expect("dot convention always applies");
    let abs_indicator = a.max_abs_nontrivial();

    IndicatorReport {
        differential_uniformity: delta,
        linearity,
        nonlinearity: (1i64 << (f.n() - 1)) - linearity / 2,
        absolute_indicator: abs_indicator,
        max_dlct: abs_indicator / 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2n::FieldSpec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vbf(n: u32, m: u32, rng: &mut ChaCha8Rng) -> Vbf {
        let table = (0..1u32 << n)
            .map(|_| rng.random_range(0..1u32 << m))
            .collect();
        Vbf::new(n, m, table).unwrap()
    }

    const F0: [u32; 16] = [0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 12, 9, 3, 14, 10, 5];

    #[test]
    fn ddt_of_linear_function_is_diagonal() {
        let id = Vbf::identity(2);
        let d = ddt(&id);
        for u in 0..4u32 {
            for v in 0..4u32 {
                assert_eq!(d.get(u, v), if u == v { 4 } else { 0 });
            }
        }
    }

    #[test]
    fn ddt_rows_are_even_and_sum_to_input_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let f = random_vbf(6, 4, &mut rng);
        let d = ddt(&f);
        for u in 1..d.rows() as u32 {
            assert_eq!(d.row(u).iter().sum::<i64>(), 64);
            assert!(d.row(u).iter().all(|&x| x % 2 == 0));
        }
        assert_eq!(d.get(0, 0), 64);
    }

    #[test]
    fn act_direct_borders_and_linear_case() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let f = random_vbf(5, 3, &mut rng);
        let a = act_direct(&f, &Convention::Dot).unwrap();
        for v in 0..8u32 {
            assert_eq!(a.get(0, v), 32);
        }
        for u in 0..32u32 {
            assert_eq!(a.get(u, 0), 32);
        }

        let id = Vbf::identity(3);
        let a = act_direct(&id, &Convention::Dot).unwrap();
        for u in 0..8u32 {
            for v in 0..8u32 {
                let sign = 1 - 2 * ((u & v).count_ones() & 1) as i64;
                assert_eq!(a.get(u, v), 8 * sign);
            }
        }
    }

    #[test]
    fn three_act_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let field = FieldSpec::with_default_modulus(5).unwrap();
        for (n, m) in [(4, 4), (5, 3), (3, 6), (5, 5), (6, 6)] {
            let f = random_vbf(n, m, &mut rng);
            let mut convs = vec![Convention::Dot];
            if n == 5 && m == 5 {
                convs.push(Convention::Trace(field));
            }
            for conv in convs {
                let a = act_direct(&f, &conv).unwrap();
                let b = act_from_ddt(&f, &conv).unwrap();
                let c = act_from_walsh(&f, &conv).unwrap();
                assert_eq!(a.data(), b.data(), "n={n} m={m} {}", conv.label());
                assert_eq!(a.data(), c.data(), "n={n} m={m} {}", conv.label());
            }
        }
    }

    #[test]
    fn transform_identities_between_tables() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let f = random_vbf(6, 5, &mut rng);
        let d = ddt(&f);
        let a = act_from_ddt(&f, &Convention::Dot).unwrap();
        let lat = walsh_table(&f, &Convention::Dot).unwrap();

        // Row recovery: DDT row = 2^-m * FWHT of ACT row.
        for u in 0..a.rows() as u32 {
            let mut t = a.row(u).to_vec();
            fwht_in_place(&mut t);
            for v in 0..a.cols() as u32 {
                assert_eq!(t[v as usize] % 32, 0);
                assert_eq!(t[v as usize] / 32, d.get(u, v));
            }
        }

        // Column sum and energy against the Walsh side.
        for v in 0..a.cols() as u32 {
            let sum: i64 = (0..a.rows() as u32).map(|u| a.get(u, v)).sum();
            assert_eq!(sum, lat.get(0, v).pow(2));
            let energy: i64 = (0..a.rows() as u32).map(|u| a.get(u, v).pow(2)).sum();
            let quartic: i64 = (0..a.rows() as u32).map(|u| lat.get(u, v).pow(4)).sum();
            assert_eq!(energy, quartic >> f.n());
        }

        // Row sum and energy against the DDT side.
        let mut grand = 0i64;
        let mut zero_column = 0i64;
        for u in 0..a.rows() as u32 {
            let sum: i64 = a.row(u).iter().sum();
            assert_eq!(sum, (1 << f.m()) * d.get(u, 0));
            grand += sum;
            zero_column += d.get(u, 0);
            let energy: i64 = a.row(u).iter().map(|x| x * x).sum();
            let ddt_energy: i64 = d.row(u).iter().map(|x| x * x).sum();
            assert_eq!(energy, ddt_energy << f.m());
        }
        assert_eq!(grand, zero_column << f.m());

        // For an injective function the zero DDT column is a single spike,
        // so the grand total collapses to 2^(n+m).
        let f0 = Vbf::new(4, 4, F0.to_vec()).unwrap();
        let a = act_from_ddt(&f0, &Convention::Dot).unwrap();
        let grand: i64 = a.data().iter().sum();
        assert_eq!(grand, 1 << 8);
    }

    #[test]
    fn dlct_is_half_act_and_matches_counting() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let f = random_vbf(5, 4, &mut rng);
        let h = dlct(&f, &Convention::Dot).unwrap();
        let c = dlct_direct(&f, &Convention::Dot).unwrap();
        assert_eq!(h.data(), c.data());
        let a = act_direct(&f, &Convention::Dot).unwrap();
        for u in 0..h.rows() as u32 {
            for v in 0..h.cols() as u32 {
                assert_eq!(2 * h.get(u, v), a.get(u, v));
            }
        }
        for v in 0..16u32 {
            assert_eq!(h.get(0, v), 16);
        }

        // Permutation entries are multiples of 4.
        let f0 = Vbf::new(4, 4, F0.to_vec()).unwrap();
        let h = dlct(&f0, &Convention::Dot).unwrap();
        for u in 1..16u32 {
            for v in 1..16u32 {
                assert_eq!(h.get(u, v) % 4, 0, "u={u} v={v}");
            }
        }
        assert_eq!(h.max_abs_nontrivial(), 8);
    }

    #[test]
    fn four_bit_representative_spectrum_and_indicators() {
        let f0 = Vbf::new(4, 4, F0.to_vec()).unwrap();
        let spec = autocorrelation_spectrum(&f0);
        let expected: Vec<(i64, u64)> = vec![(-16, 6), (-8, 48), (0, 144), (8, 24), (16, 3)];
        assert_eq!(spec.to_pairs(), expected);
        assert_eq!(spec.total(), 225);
        assert_eq!(format!("{spec}"), "{-16^6, -8^48, 0^144, 8^24, 16^3}");

        let ind = indicators(&f0);
        assert_eq!(ind.differential_uniformity, 4);
        assert_eq!(ind.linearity, 8);
        assert_eq!(ind.nonlinearity, 4);
        assert_eq!(ind.absolute_indicator, 16);
        assert_eq!(ind.max_dlct, 8);
    }

    #[test]
    fn zero_sum_criterion_separates_permutations() {
        let f0 = Vbf::new(4, 4, F0.to_vec()).unwrap();
        assert_eq!(permutation_zero_sum_criterion(&f0), (true, true));
        assert_eq!(
            permutation_zero_sum_criterion(&Vbf::identity(5)),
            (true, true)
        );
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        for _ in 0..10 {
            let f = random_vbf(5, 5, &mut rng);
            if !f.is_permutation() {
                let (rows, cols) = permutation_zero_sum_criterion(&f);
                assert!(!rows && !cols);
            }
        }
    }

    #[test]
    fn spectrum_is_convention_independent() {
        let field = FieldSpec::with_default_modulus(6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        let f = random_vbf(6, 6, &mut rng);
        let dot = SpectrumMultiset::from_table(&act_from_ddt(&f, &Convention::Dot).unwrap());
        let tr =
            SpectrumMultiset::from_table(&act_from_ddt(&f, &Convention::Trace(field)).unwrap());
        assert_eq!(dot, tr);
    }

    #[test]
    fn spectrum_multiset_helpers() {
        let s: SpectrumMultiset = [4i64, -4, 0, 0, 4].into_iter().collect();
        assert_eq!(s.value_set(), vec![-4, 0, 4]);
        assert_eq!(s.count_of(0), 2);
        assert_eq!(s.max_abs(), 4);
        assert_eq!(s.scaled(3).total(), 15);
        assert_eq!(s.to_json().to_string(), "[[-4,1],[0,2],[4,2]]");
    }
}
