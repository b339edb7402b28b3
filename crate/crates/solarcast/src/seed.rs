//! Seed derivation for nested deterministic RNG streams.

/// Mixes a base seed with a stream index (splitmix64 finalizer).
///
/// Sub-seeds for trees, folds and rows are pre-assigned with this so results
/// never depend on execution order.
pub fn mix(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
