//! The sixteen affine-equivalence class representatives of optimal 4-bit
//! S-boxes (differential uniformity 4, nonlinearity 4) together with their
//! known autocorrelation spectra, embedded as golden data.

use crate::error::{Error, Result};
use crate::tables::SpectrumMultiset;
use crate::vbf::Vbf;

/// Class representatives, indexed 0..=15.
const TABLES: [[u32; 16]; 16] = [
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 12, 9, 3, 14, 10, 5],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 5, 9, 10, 12],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 10, 12, 5, 9],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 5, 3, 10, 14, 11, 9],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 9, 11, 10, 14, 5, 3],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 3, 5],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 5, 3],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 14, 11, 10, 9, 3, 5],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 9, 5, 10, 11, 3, 12],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 3, 5, 9, 10, 12],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 5, 10, 9, 3, 12],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 5, 9, 12, 3],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 9, 3, 12, 5],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 9, 5, 11, 10, 3],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 3, 9, 5, 10],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 9, 3, 10, 5],
];

/// The three spectrum shapes that occur, as (value, count) pairs over the
/// 15 x 15 nonzero grid.
const SPECTRUM_FLAT: [(i64, u64); 3] = [(-8, 60), (0, 135), (8, 30)];
const SPECTRUM_WIDE: [(i64, u64); 5] = [(-16, 6), (-8, 48), (0, 144), (8, 24), (16, 3)];
const SPECTRUM_NARROW: [(i64, u64); 5] = [(-16, 2), (-8, 56), (0, 138), (8, 28), (16, 1)];

fn expected_pairs(index: usize) -> &'static [(i64, u64)] {
    match index {
        3 | 4 | 5 | 6 | 7 | 11 | 12 | 13 => &SPECTRUM_FLAT,
        0 | 1 | 2 | 8 => &SPECTRUM_WIDE,
        _ => &SPECTRUM_NARROW,
    }
}

/// One catalog row: the representative and its known spectrum.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub index: usize,
    pub table: Vbf,
    pub expected_spectrum: SpectrumMultiset,
}

/// Fetches representative `i`, 0 <= i <= 15.
pub fn get(index: usize) -> Result<CatalogEntry> {
    if index > 15 {
        return Err(Error::CatalogIndexOutOfRange(index));
    }
    let table = Vbf::new(4, 4, TABLES[index].to_vec()).expect("catalog data is well-formed");
    let mut expected_spectrum = SpectrumMultiset::new();
    for &(value, count) in expected_pairs(index) {
        expected_spectrum.insert_count(value, count);
    }
    Ok(CatalogEntry {
        index,
        table,
        expected_spectrum,
    })
}

/// All sixteen entries in order.
pub fn entries() -> impl Iterator<Item = CatalogEntry> {
    (0..16).map(|i| get(i).expect("index in range"))
}
