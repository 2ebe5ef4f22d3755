//! Shared fixtures for the benchmarks in `benches/`.

use std::path::PathBuf;

use pksums_core::ZeroTable;

/// The bundled zero table, or `PKSUMS_ZEROS` if set.
pub fn zero_table() -> ZeroTable {
    let path = std::env::var_os("PKSUMS_ZEROS")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros_1e4.txt"));
    ZeroTable::from_path(&path).unwrap_or_else(|e| panic!("loading {}: {e}", path.display()))
}
