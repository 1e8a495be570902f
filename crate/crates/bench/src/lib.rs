//! Benchmark fixtures.

use pbm_core::verify::bundled;
use pbm_core::{BlockCode, Pomset, SpaceConfig};

pub use bundled::{z10_code, z5_code, z5_config};

/// Chain over `Z_5` with `π = (2, 2, 2, 1)` (78 125 vectors) and a
/// systematic code with the lowest block as parity.
pub fn chain_code() -> BlockCode {
    let cfg = SpaceConfig::new(5, vec![2, 2, 2, 1], Pomset::chain(4, 2).unwrap()).unwrap();
    let rows = (2..7)
        .map(|j| {
            let mut v = vec![0; 7];
            v[j] = 1;
            v[0] = j as u32 % 5;
            v[1] = (j as u32 * 3) % 5;
            v
        })
        .collect();
    BlockCode::span(cfg, rows, 1_000_000).unwrap()
}
