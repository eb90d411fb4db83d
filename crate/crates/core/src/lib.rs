//! Linear-time, in-place perfect shuffles.
//!
//! The in-shuffle of `2n` elements sends 1-based position `i` to
//! `2i mod (2n + 1)`. [`shuffle::in_shuffle`] performs it in `O(n)` time
//! with a constant number of auxiliary slots, by splitting the array into
//! blocks of size `3^k - 1` whose cycle structure is known in advance.
//! Out-shuffles, inverses and small k-way shuffles are built on the same
//! machinery.
//!
//! ```
//! use inshuffle::{in_shuffle, un_shuffle, NoMeter};
//!
//! let mut deck = [1, 2, 3, 4, 5, 6];
//! in_shuffle(&mut deck[..], &mut NoMeter).unwrap();
//! assert_eq!(deck, [4, 1, 5, 2, 6, 3]);
//! un_shuffle(&mut deck[..], &mut NoMeter).unwrap();
//! assert_eq!(deck, [1, 2, 3, 4, 5, 6]);
//! ```

pub mod buffer;
pub mod cli;
pub mod error;
pub mod kway;
pub mod meter;
pub mod numtheory;
pub mod oracle;
pub mod permcore;
pub mod rotate;
pub mod shuffle;

pub use buffer::{RecordBuffer, SubBuffer, SwapBuffer};
pub use error::{Error, Result};
pub use kway::{find_base, k_shuffle, k_unshuffle, KwayBase};
pub use meter::{Instrumentation, Meter, NoMeter};
pub use permcore::{cycle_decomposition, permutation_order, CycleDecomposition, ShuffleKind};
pub use shuffle::{
    in_shuffle, out_shuffle, out_unshuffle, plan_blocks, shuffle, un_shuffle, unshuffle, Block,
    BlockPlan,
};
