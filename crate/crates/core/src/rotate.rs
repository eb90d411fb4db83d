//! Range reversal and cyclic rotation by triple reversal.
//!
//! Ranges are 0-based and half-open. A swap is counted as two element
//! moves through one temporary slot.

use crate::buffer::SwapBuffer;
use crate::error::{Error, Result};
use crate::meter::Meter;

fn range_error(lo: usize, hi: usize, dist: usize, len: usize) -> Error {
    Error::InvalidRange { lo, hi, dist, len }
}

/// Reverses `buf[lo..hi]` with `(hi - lo) / 2` swaps.
pub fn reverse_range<B, M>(buf: &mut B, lo: usize, hi: usize, meter: &mut M) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    if lo > hi || hi > buf.len() {
        return Err(range_error(lo, hi, 0, buf.len()));
    }
    reverse_unchecked(buf, lo, hi, meter);
    Ok(())
}

// i, j and the element temporary
const REVERSE_WORDS: u64 = 3;

#[inline]
pub(crate) fn reverse_unchecked<B, M>(buf: &mut B, lo: usize, hi: usize, meter: &mut M)
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    if hi - lo < 2 {
        return;
    }
    meter.acquire(REVERSE_WORDS);
    let (mut i, mut j) = (lo, hi - 1);
    while i < j {
        buf.swap(i, j);
        i += 1;
        j -= 1;
    }
    meter.moves(2 * ((hi - lo) / 2) as u64);
    meter.release(REVERSE_WORDS);
}

/// Rotates `buf[lo..hi]` right by `dist`: the element at `p` moves to
/// `lo + (p - lo + dist) mod (hi - lo)`.
pub fn rotate_right<B, M>(
    buf: &mut B,
    lo: usize,
    hi: usize,
    dist: usize,
    meter: &mut M,
) -> Result<()>
where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    if lo > hi || hi > buf.len() || dist > hi - lo {
        return Err(range_error(lo, hi, dist, buf.len()));
    }
    rotate_right_unchecked(buf, lo, hi, dist, meter);
    Ok(())
}

// lo, hi, dist
const ROTATE_WORDS: u64 = 3;

pub(crate) fn rotate_right_unchecked<B, M>(
    buf: &mut B,
    lo: usize,
    hi: usize,
    dist: usize,
    meter: &mut M,
) where
    B: SwapBuffer + ?Sized,
    M: Meter,
{
    if dist == 0 || dist == hi - lo {
        return;
    }
    meter.acquire(ROTATE_WORDS);
    reverse_unchecked(buf, lo, hi, meter);
    reverse_unchecked(buf, lo, lo + dist, meter);
    reverse_unchecked(buf, lo + dist, hi, meter);
    meter.release(ROTATE_WORDS);
}
