//! Size caps that keep every exhaustive computation at desk scale.

/// Caps for the three kinds of exhaustive work.
///
/// `enumerate` bounds the number of codewords produced by closure,
/// `ambient` bounds scans over all of Z2^alpha x Z4^beta (duals),
/// and `search` bounds the number of permutation pairs alpha! * beta!.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub enumerate: u128,
    pub ambient: u128,
    pub search: u128,
}

impl Limits {
    pub const DEFAULT_ENUMERATE: u128 = 1 << 20;
    pub const DEFAULT_AMBIENT: u128 = 1 << 24;
    /// 6! * 6!
    pub const DEFAULT_SEARCH: u128 = 518_400;

    /// The same cap applied to every kind of work.
    pub fn uniform(limit: u128) -> Self {
        Limits {
            enumerate: limit,
            ambient: limit,
            search: limit,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumerate: Self::DEFAULT_ENUMERATE,
            ambient: Self::DEFAULT_AMBIENT,
            search: Self::DEFAULT_SEARCH,
        }
    }
}
