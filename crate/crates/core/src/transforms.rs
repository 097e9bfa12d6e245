//! Walsh-Hadamard machinery: the 1-D fast transform, full LAT computation,
//! and the 2-D transform over the product of the input and output spaces.
//!
//! Every transform here is unnormalized; divisions happen once at the end
//! and are checked, so a non-integral result surfaces as a hard error
//! instead of silent rounding.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::vbf::{BooleanFunction, Convention, Vbf};

/// What a [`SignedTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Ddt,
    Lat,
    Act,
    Dlct,
    Generic,
}

impl TableKind {
    pub fn label(&self) -> &'static str {
        match self {
            TableKind::Ddt => "DDT",
            TableKind::Lat => "LAT",
            TableKind::Act => "ACT",
            TableKind::Dlct => "DLCT",
            TableKind::Generic => "GENERIC",
        }
    }
}

/// A 2^n x 2^m grid of signed integers (DDT counts, LAT/ACT/DLCT values),
/// tagged with its kind and the inner-product convention it was computed
/// under. Row index is the input-side mask `u`, column index the
/// output-side mask `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedTable {
    kind: TableKind,
    n: u32,
    m: u32,
    convention: Convention,
    data: Vec<i64>,
}

impl SignedTable {
    pub fn new(kind: TableKind, n: u32, m: u32, convention: Convention, data: Vec<i64>) -> Self {
        assert_eq!(data.len(), 1 << (n + m));
        SignedTable {
            kind,
            n,
            m,
            convention,
            data,
        }
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn convention(&self) -> &Convention {
        &self.convention
    }

    pub fn rows(&self) -> usize {
        1 << self.n
    }

    pub fn cols(&self) -> usize {
        1 << self.m
    }

    pub fn get(&self, u: u32, v: u32) -> i64 {
        self.data[((u as usize) << self.m) | v as usize]
    }

    pub fn row(&self, u: u32) -> &[i64] {
        let cols = self.cols();
        &self.data[u as usize * cols..(u as usize + 1) * cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[i64]> {
        self.data.chunks_exact(self.cols())
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> SignedTable {
        let mut data = vec![0i64; self.data.len()];
        for u in 0..self.rows() {
            for v in 0..self.cols() {
                data[v * self.rows() + u] = self.data[u * self.cols() + v];
            }
        }
        SignedTable {
            kind: self.kind,
            n: self.m,
            m: self.n,
            convention: self.convention,
            data,
        }
    }

    /// Largest absolute entry over u != 0, v != 0; 0 if that range is empty.
    pub fn max_abs_nontrivial(&self) -> i64 {
        let mut best = 0;
        for u in 1..self.rows() {
            for &x in &self.row(u as u32)[1..] {
                best = best.max(x.abs());
            }
        }
        best
    }

    pub(crate) fn retag(mut self, kind: TableKind) -> SignedTable {
        self.kind = kind;
        self
    }

    /// Row-major CSV: a `kind,n,m` header block, then one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,n,m\n");
        out.push_str(&format!("{},{},{}\n", self.kind.label(), self.n, self.m));
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .row_iter()
            .map(|row| serde_json::Value::from(row.to_vec()))
            .collect();
        serde_json::json!({
            "kind": self.kind.label(),
            "n": self.n,
            "m": self.m,
            "rows": rows,
        })
    }
}

/// Unnormalized fast Walsh-Hadamard transform under the dot pairing:
/// `out[a] = sum_b (-1)^(a.b) in[b]`.
pub fn fwht(data: &mut [i64]) -> Result<()> {
    if !data.len().is_power_of_two() {
        return Err(Error::LengthNotPowerOfTwo(data.len()));
    }
    fwht_in_place(data);
    Ok(())
}

pub(crate) fn fwht_in_place(data: &mut [i64]) {
    debug_assert!(data.len().is_power_of_two());
    let mut h = 1;
    while h < data.len() {
        for chunk in data.chunks_exact_mut(2 * h) {
            let (lo, hi) = chunk.split_at_mut(h);
            for i in 0..h {
                let (x, y) = (lo[i], hi[i]);
                lo[i] = x + y;
                hi[i] = x - y;
            }
        }
        h *= 2;
    }
}

/// Walsh spectrum `W_f(w)` of a Boolean function at every point, under the
/// given convention.
pub fn walsh_spectrum(f: &BooleanFunction, conv: &Convention) -> Result<Vec<i64>> {
    conv.check_dims(f.n(), f.n())?;
    let mut t = f.signs();
    fwht_in_place(&mut t);
    Ok((0..1u32 << f.n())
        .map(|w| t[conv.dual_mask(w) as usize])
        .collect())
}

/// Full linear approximation table: entry (u,v) is
/// `W_F(u,v) = sum_x (-1)^(u.x + v.F(x))`, one FWHT per column.
pub fn walsh_table(f: &Vbf, conv: &Convention) -> Result<SignedTable> {
    conv.check_dims(f.n(), f.m())?;
    let rows = f.input_count();
    let cols = f.output_count();
    let row_dual: Vec<u32> = (0..rows as u32).map(|u| conv.dual_mask(u)).collect();

    let columns: Vec<Vec<i64>> = (0..cols as u32)
        .into_par_iter()
        .map(|v| {
            let dv = conv.dual_mask(v);
            let mut t: Vec<i64> = f
                .table()
                .iter()
                .map(|&y| 1 - 2 * ((dv & y).count_ones() & 1) as i64)
                .collect();
            fwht_in_place(&mut t);
            (0..rows).map(|u| t[row_dual[u] as usize]).collect()
        })
        .collect();

    let mut data = vec![0i64; rows * cols];
    for (v, col) in columns.iter().enumerate() {
        for u in 0..rows {
            data[u * cols + v] = col[u];
        }
    }
    Ok(SignedTable::new(TableKind::Lat, f.n(), f.m(), *conv, data))
}

/// 2-D transform under the dot pairing on both axes:
/// `out(u,v) = 2^-n * sum_{a,b} (-1)^(u.a + v.b) in(a,b)`.
///
/// Errors if any entry fails the final division, which signals an input
/// that is not in the transform's integral range (e.g. not the ACT of a
/// permutation when used for compositional inversion).
pub fn fourier_2d(t: &SignedTable) -> Result<SignedTable> {
    let rows = t.rows();
    let cols = t.cols();
    let mut data = t.data().to_vec();
    data.par_chunks_exact_mut(cols).for_each(fwht_in_place);

    // Column pass via transpose so the butterflies stay contiguous.
    let mut tr = vec![0i64; data.len()];
    for u in 0..rows {
        for v in 0..cols {
            tr[v * rows + u] = data[u * cols + v];
        }
    }
    tr.par_chunks_exact_mut(rows).for_each(fwht_in_place);

    let scale = 1i64 << t.n();
    let mut out = vec![0i64; data.len()];
    for v in 0..cols {
        for u in 0..rows {
            let x = tr[v * rows + u];
            if x % scale != 0 {
                return Err(Error::NonIntegralTransform(x, scale));
            }
            out[u * cols + v] = x / scale;
        }
    }
    Ok(SignedTable::new(
        TableKind::Generic,
        t.n(),
        t.m(),
        *t.convention(),
        out,
    ))
}
