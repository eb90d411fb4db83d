//! Operation counting for the in-place paths.
//!
//! Algorithms report element moves and the auxiliary slots they hold
//! (element temporaries and index words) through [`Meter`]. [`NoMeter`]
//! compiles the bookkeeping away.

/// Sink for operation counts.
pub trait Meter {
    /// `n` elements were written to a new position.
    fn moves(&mut self, n: u64);
    /// `words` auxiliary slots became live.
    fn acquire(&mut self, words: u64);
    /// `words` auxiliary slots were released.
    fn release(&mut self, words: u64);
}

/// Discards every count.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoMeter;

impl Meter for NoMeter {
    #[inline(always)]
    fn moves(&mut self, _: u64) {}
    #[inline(always)]
    fn acquire(&mut self, _: u64) {}
    #[inline(always)]
    fn release(&mut self, _: u64) {}
}

/// Counts element moves and the peak number of live auxiliary slots.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Instrumentation {
    pub moves: u64,
    pub aux_words_peak: u64,
    live: u64,
}

impl Instrumentation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Auxiliary slots currently held; zero between operations.
    pub fn aux_words_live(&self) -> u64 {
        self.live
    }
}

impl Meter for Instrumentation {
    #[inline]
    fn moves(&mut self, n: u64) {
        self.moves += n;
    }

    #[inline]
    fn acquire(&mut self, words: u64) {
        self.live += words;
        self.aux_words_peak = self.aux_words_peak.max(self.live);
    }

    #[inline]
    fn release(&mut self, words: u64) {
        debug_assert!(
            self.live >= words,
            "released more auxiliary slots than held"
        );
        self.live -= words;
    }
}
