//! Affine maps over F2 vector spaces, extended-affine transforms of
//! functions, invariance checks for autocorrelation spectra, and the
//! compositional-inverse autocorrelation computed without inverting the
//! function.

use rand::Rng;

use crate::error::{Error, Result};
use crate::tables::act_from_ddt;
use crate::transforms::{fourier_2d, SignedTable, TableKind};
use crate::vbf::{Convention, Vbf};

/// An affine map `x -> Mx + c` between F2 vector spaces. `rows[j]` is row
/// `j` of the matrix as an `in_dim`-bit mask acting on column bit-vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    in_dim: u32,
    out_dim: u32,
    rows: Vec<u32>,
    constant: u32,
}

impl AffineMap {
    pub fn new(in_dim: u32, out_dim: u32, rows: Vec<u32>, constant: u32) -> Result<Self> {
        if in_dim == 0 || out_dim == 0 || in_dim > 16 || out_dim > 16 {
            return Err(Error::MapDimensionMismatch(format!(
                "dimensions {in_dim}x{out_dim} unsupported"
            )));
        }
        if rows.len() != out_dim as usize {
            return Err(Error::MapDimensionMismatch(format!(
                "expected {out_dim} rows, got {}",
                rows.len()
            )));
        }
        if rows.iter().any(|&r| r >> in_dim != 0) || constant >> out_dim != 0 {
            return Err(Error::MapDimensionMismatch(
                "row or constant mask exceeds the dimension".into(),
            ));
        }
        Ok(AffineMap {
            in_dim,
            out_dim,
            rows,
            constant,
        })
    }

    pub fn identity(n: u32) -> Self {
        AffineMap {
            in_dim: n,
            out_dim: n,
            rows: (0..n).map(|i| 1 << i).collect(),
            constant: 0,
        }
    }

    pub fn in_dim(&self) -> u32 {
        self.in_dim
    }

    pub fn out_dim(&self) -> u32 {
        self.out_dim
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn constant(&self) -> u32 {
        self.constant
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.apply_linear(x) ^ self.constant
    }

    /// The linear part only, `Mx`.
    pub fn apply_linear(&self, x: u32) -> u32 {
        let mut y = 0;
        for (j, &row) in self.rows.iter().enumerate() {
            y |= ((row & x).count_ones() & 1) << j;
        }
        y
    }

    /// Drops the constant.
    pub fn linear_part(&self) -> AffineMap {
        AffineMap {
            constant: 0,
            ..self.clone()
        }
    }

    /// Transposed linear part, which swaps the bilinear roles:
    /// `dot(transpose(M)(v), x) = dot(v, M(x))` for all `v`, `x`.
    pub fn transpose(&self) -> AffineMap {
        let rows = (0..self.in_dim)
            .map(|i| {
                let mut r = 0;
                for (j, &row) in self.rows.iter().enumerate() {
                    r |= (row >> i & 1) << j;
                }
                r
            })
            .collect();
        AffineMap {
            in_dim: self.out_dim,
            out_dim: self.in_dim,
            rows,
            constant: 0,
        }
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        if self.in_dim != other.out_dim {
            return Err(Error::MapDimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.out_dim, self.in_dim, other.out_dim, other.in_dim
            )));
        }
        let columns: Vec<u32> = (0..other.in_dim)
            .map(|i| self.apply_linear(other.apply_linear(1 << i)))
            .collect();
        let rows = (0..self.out_dim)
            .map(|j| {
                let mut r = 0;
                for (i, &col) in columns.iter().enumerate() {
                    r |= (col >> j & 1) << i;
                }
                r
            })
            .collect();
        AffineMap::new(other.in_dim, self.out_dim, rows, self.apply(other.constant))
    }

    /// Rank of the linear part over F2.
    pub fn rank(&self) -> u32 {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for bit in 0..self.in_dim {
            if let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 != 0) {
                rows.swap(rank, p);
                let pivot = rows[rank];
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && *row >> bit & 1 != 0 {
                        *row ^= pivot;
                    }
                }
                rank += 1;
            }
        }
        rank as u32
    }

    pub fn is_invertible(&self) -> bool {
        self.in_dim == self.out_dim && self.rank() == self.in_dim
    }

    /// Inverse affine map `y -> M^-1 y + M^-1 c`.
    pub fn invert(&self) -> Result<AffineMap> {
        if self.in_dim != self.out_dim {
            return Err(Error::SingularMatrix);
        }
        let n = self.in_dim;
        // Gauss-Jordan on [M | I] packed into u64 rows.
        let mut aug: Vec<u64> = self
            .rows
            .iter()
            .enumerate()
            .map(|(j, &r)| r as u64 | 1u64 << (n + j as u32))
            .collect();
        let mut pivot_row = 0usize;
        for bit in 0..n {
            let Some(p) = (pivot_row..aug.len()).find(|&r| aug[r] >> bit & 1 != 0) else {
                return Err(Error::SingularMatrix);
            };
            aug.swap(pivot_row, p);
            let pivot = aug[pivot_row];
            for (r, row) in aug.iter_mut().enumerate() {
                if r != pivot_row && *row >> bit & 1 != 0 {
                    *row ^= pivot;
                }
            }
            pivot_row += 1;
        }
        // After full elimination, row j holds the solution for input bit j.
        let inv_rows: Vec<u32> = (0..n).map(|j| (aug[j as usize] >> n) as u32).collect();
        let inverse = AffineMap {
            in_dim: n,
            out_dim: n,
            rows: inv_rows,
            constant: 0,
        };
        let constant = inverse.apply_linear(self.constant);
        Ok(AffineMap {
            constant,
            ..inverse
        })
    }

    /// Uniform random affine map from the caller's generator.
    pub fn random(in_dim: u32, out_dim: u32, rng: &mut impl Rng) -> AffineMap {
        AffineMap {
            in_dim,
            out_dim,
            rows: (0..out_dim)
                .map(|_| rng.random_range(0..1u32 << in_dim))
                .collect(),
            constant: rng.random_range(0..1u32 << out_dim),
        }
    }

    /// Random invertible affine map by rejection sampling.
    pub fn random_invertible(n: u32, rng: &mut impl Rng) -> AffineMap {
        loop {
            let m = AffineMap::random(n, n, rng);
            if m.is_invertible() {
                return m;
            }
        }
    }

    /// JSON form: hex-encoded row masks plus constant.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "in_dim": self.in_dim,
            "out_dim": self.out_dim,
            "rows": self.rows.iter().map(|r| format!("{r:#x}")).collect::<Vec<_>>(),
            "constant": format!("{:#x}", self.constant),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<AffineMap> {
        let bad = || Error::MapDimensionMismatch("malformed affine map JSON".into());
        let dim = |key: &str| v[key].as_u64().ok_or_else(bad).map(|d| d as u32);
        let hex = |x: &serde_json::Value| {
            x.as_str()
                .and_then(|s| s.strip_prefix("0x"))
                .and_then(|s| u32::from_str_radix(s, 16).ok())
                .ok_or_else(bad)
        };
        let rows = v["rows"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(hex)
            .collect::<Result<Vec<u32>>>()?;
        AffineMap::new(dim("in_dim")?, dim("out_dim")?, rows, hex(&v["constant"])?)
    }
}

/// The extended-affine transform `A1 o F o A2 + A` as a truth table.
pub fn ea_transform(f: &Vbf, a1: &AffineMap, a2: &AffineMap, a: &AffineMap) -> Result<Vbf> {
    let dims_ok = a2.in_dim == f.n()
        && a2.out_dim == f.n()
        && a1.in_dim == f.m()
        && a1.out_dim == f.m()
        && a.in_dim == f.n()
        && a.out_dim == f.m();
    if !dims_ok {
        return Err(Error::MapDimensionMismatch(
            "EA maps do not match the function dimensions".into(),
        ));
    }
    if !a1.is_invertible() || !a2.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let table = (0..f.input_count() as u32)
        .map(|x| a1.apply(f.eval(a2.apply(x))) ^ a.apply(x))
        .collect();
    Vbf::new(f.n(), f.m(), table)
}

/// First position where the EA autocorrelation transport law fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EaMismatch {
    pub u: u32,
    pub v: u32,
    pub expected: i64,
    pub actual: i64,
}

/// Checks `AC_{F'}(u,v) = (-1)^(v.L(u)) * AC_F(L2(u), L1^T(v))` at every
/// nonzero (u,v), where `F' = A1 o F o A2 + A` and `L, L1, L2` are the
/// linear parts. Returns the first counterexample, or `None` if the law
/// holds everywhere.
pub fn ea_act_pointwise_check(
    f: &Vbf,
    a1: &AffineMap,
    a2: &AffineMap,
    a: &AffineMap,
) -> Result<Option<EaMismatch>> {
    let fprime = ea_transform(f, a1, a2, a)?;
    let act_f = act_from_ddt(f, &Convention::Dot)?;
    let act_fp = act_from_ddt(&fprime, &Convention::Dot)?;
    let l1t = a1.transpose();
    for u in 1..f.input_count() as u32 {
        let lu = a.apply_linear(u);
        let l2u = a2.apply_linear(u);
        for v in 1..f.output_count() as u32 {
            let sign = 1 - 2 * ((v & lu).count_ones() & 1) as i64;
            let expected = sign * act_f.get(l2u, l1t.apply_linear(v));
            let actual = act_fp.get(u, v);
            if expected != actual {
                return Ok(Some(EaMismatch {
                    u,
                    v,
                    expected,
                    actual,
                }));
            }
        }
    }
    Ok(None)
}

/// Autocorrelation table of the compositional inverse, computed from the
/// table of `F` alone: transform then swap the mask roles,
/// `AC_{F^-1}(u,v) = 2^-n * sum_{a,b} (-1)^(u.b + v.a) AC_F(a,b)`.
pub fn inverse_act(f: &Vbf) -> Result<SignedTable> {
    if !f.is_permutation() {
        return Err(Error::NotAPermutation);
    }
    let a = act_from_ddt(f, &Convention::Dot)?;
    Ok(fourier_2d(&a)?.transpose().retag(TableKind::Act))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::SpectrumMultiset;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_vbf(n: u32, m: u32, rng: &mut ChaCha8Rng) -> Vbf {
        let table = (0..1u32 << n)
            .map(|_| rng.random_range(0..1u32 << m))
            .collect();
        Vbf::new(n, m, table).unwrap()
    }

    fn random_permutation(n: u32, rng: &mut ChaCha8Rng) -> Vbf {
        let mut table: Vec<u32> = (0..1u32 << n).collect();
        for i in (1..table.len()).rev() {
            table.swap(i, rng.random_range(0..=i));
        }
        Vbf::new(n, n, table).unwrap()
    }

    #[test]
    fn apply_transpose_invert_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        for n in [2u32, 4, 6, 8] {
            let id = AffineMap::identity(n);
            for x in 0..1u32 << n {
                assert_eq!(id.apply(x), x);
            }
            let m = AffineMap::random_invertible(n, &mut rng);
            assert_eq!(m.transpose().transpose(), m.linear_part());
            let inv = m.invert().unwrap();
            for x in 0..1u32 << n {
                assert_eq!(inv.apply(m.apply(x)), x);
                assert_eq!(m.apply(inv.apply(x)), x);
            }
            // Bilinear role swap.
            for _ in 0..50 {
                let v = rng.random_range(0..1u32 << n);
                let x = rng.random_range(0..1u32 << n);
                let lhs = (m.transpose().apply_linear(v) & x).count_ones() & 1;
                let rhs = (v & m.apply_linear(x)).count_ones() & 1;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn compose_matches_sequential_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let a = AffineMap::random(5, 3, &mut rng);
        let b = AffineMap::random(4, 5, &mut rng);
        let ab = a.compose(&b).unwrap();
        for x in 0..16 {
            assert_eq!(ab.apply(x), a.apply(b.apply(x)));
        }
        assert!(b.compose(&a).is_err());
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = AffineMap::new(3, 3, vec![0b011, 0b110, 0b101], 0).unwrap();
        assert_eq!(m.rank(), 2);
        assert!(!m.is_invertible());
        assert_eq!(m.invert(), Err(Error::SingularMatrix));
    }

    #[test]
    fn ea_transform_with_identity_maps_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let f = random_vbf(4, 4, &mut rng);
        let id = AffineMap::identity(4);
        let zero = AffineMap::new(4, 4, vec![0; 4], 0).unwrap();
        assert_eq!(ea_transform(&f, &id, &id, &zero).unwrap(), f);
        // Dimension and invertibility failures.
        let id3 = AffineMap::identity(3);
        assert!(matches!(
            ea_transform(&f, &id3, &id, &zero),
            Err(Error::MapDimensionMismatch(_))
        ));
        assert!(matches!(
            ea_transform(&f, &zero, &id, &zero),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn affine_transform_preserves_signed_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let f = random_vbf(5, 5, &mut rng);
        let before = SpectrumMultiset::from_table(&act_from_ddt(&f, &Convention::Dot).unwrap());
        for _ in 0..20 {
            let a1 = AffineMap::random_invertible(5, &mut rng);
            let a2 = AffineMap::random_invertible(5, &mut rng);
            let zero = AffineMap::new(5, 5, vec![0; 5], 0).unwrap();
            let g = ea_transform(&f, &a1, &a2, &zero).unwrap();
            let after = SpectrumMultiset::from_table(&act_from_ddt(&g, &Convention::Dot).unwrap());
            assert_eq!(before, after);
        }
    }

    #[test]
    fn ea_transform_preserves_extended_spectrum() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let f = random_vbf(5, 5, &mut rng);
        let before = SpectrumMultiset::from_table_abs(&act_from_ddt(&f, &Convention::Dot).unwrap());
        for _ in 0..20 {
            let a1 = AffineMap::random_invertible(5, &mut rng);
            let a2 = AffineMap::random_invertible(5, &mut rng);
            let a = AffineMap::random(5, 5, &mut rng);
            let g = ea_transform(&f, &a1, &a2, &a).unwrap();
            let after =
                SpectrumMultiset::from_table_abs(&act_from_ddt(&g, &Convention::Dot).unwrap());
            assert_eq!(before, after);
        }
    }

    #[test]
    fn ea_pointwise_law_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for _ in 0..10 {
            let n = rng.random_range(3..=6);
            let f = random_vbf(n, n, &mut rng);
            let a1 = AffineMap::random_invertible(n, &mut rng);
            let a2 = AffineMap::random_invertible(n, &mut rng);
            let a = AffineMap::random(n, n, &mut rng);
            assert_eq!(ea_act_pointwise_check(&f, &a1, &a2, &a).unwrap(), None);
        }
        // Identity transform trivially satisfies the law.
        let f = random_vbf(4, 4, &mut rng);
        let id = AffineMap::identity(4);
        let zero = AffineMap::new(4, 4, vec![0; 4], 0).unwrap();
        assert_eq!(ea_act_pointwise_check(&f, &id, &id, &zero).unwrap(), None);
    }

    #[test]
    fn inverse_act_matches_direct_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        for n in 3..=8 {
            let p = random_permutation(n, &mut rng);
            let via_transform = inverse_act(&p).unwrap();
            let direct = act_from_ddt(&p.inverse().unwrap(), &Convention::Dot).unwrap();
            assert_eq!(via_transform.data(), direct.data(), "n={n}");
        }
        // Involutions keep their table.
        let mut table: Vec<u32> = (0..32).collect();
        table.swap(3, 17);
        table.swap(9, 22);
        let invol = Vbf::new(5, 5, table).unwrap();
        let a = act_from_ddt(&invol, &Convention::Dot).unwrap();
        assert_eq!(inverse_act(&invol).unwrap().data(), a.data());

        let not_perm = Vbf::new(3, 3, vec![0; 8]).unwrap();
        assert_eq!(inverse_act(&not_perm), Err(Error::NotAPermutation));
    }

    #[test]
    fn inversion_changes_the_absolute_indicator() {
        // EA transforms preserve the maximum magnitude; composition inverse
        // does not. The 9-bit quadratic permutation drops from 512 to 56.
        let field = crate::gf2n::FieldSpec::with_default_modulus(9).unwrap();
        let cube = Vbf::new(9, 9, (0..512).map(|x| field.pow(x, 3)).collect()).unwrap();
        let before = act_from_ddt(&cube, &Convention::Dot)
            .unwrap()
            .max_abs_nontrivial();
        let after = inverse_act(&cube).unwrap().max_abs_nontrivial();
        assert_eq!(before, 512);
        assert_eq!(after, 56);
    }

    #[test]
    fn affine_map_json_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let m = AffineMap::random(6, 4, &mut rng);
        let j = m.to_json();
        assert_eq!(AffineMap::from_json(&j).unwrap(), m);
        assert!(AffineMap::from_json(&serde_json::json!({"rows": 3})).is_err());
    }
}
